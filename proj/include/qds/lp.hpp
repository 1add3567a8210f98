#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enumerators.hpp"
#include "krawtchouk.hpp"

// Linear-programming feasibility for the existence of [[n,k,d:r]] DS codes:
// the split weight enumerators are relaxed to nonnegative rationals and the
// constraint families (fixed values, distance exclusion, the B-perp/B
// equalities and inequalities, MacWilliams, totals) are checked for
// consistency with an exact phase-I simplex.
//
// The relaxation can only over-admit: "infeasible" is a valid nonexistence
// proof, "feasible" is a necessary-condition pass only.

namespace qds {

/// One enumerator cell, on either side of the duality.
struct LPVar {
    bool dual = false;
    int i = 0;
    int j = 0;
    friend bool operator<(const LPVar& a, const LPVar& b) {
        return std::tie(a.dual, a.i, a.j) < std::tie(b.dual, b.i, b.j);
    }
    std::string name() const {
        return std::string(dual ? "Bperp" : "B") + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
};

/// Exact-rational constraint system over the enumerator cells.  Variables
/// are implicitly nonnegative; fixed cells are substituted out up front.
class RationalTableau {
  public:
    RationalTableau(int n, int k, int d, int r)
        : n_(n), k_(k), d_(d), r_(r), m_(n - k), mr_(n - k + r) {
        if (d < 1 || d > n || k < 0 || k > n || r < 0)
            throw std::invalid_argument("RationalTableau: bad parameters");
        build();
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int mr() const { return mr_; }

    /// Free (non-substituted) variables, in column order.
    const std::vector<LPVar>& variables() const { return vars_; }
    /// Fixed cells and their values.
    const std::map<LPVar, mpq_class>& fixed() const { return fixed_; }

    struct Row {
        std::vector<mpq_class> a;  // one coefficient per free variable
        mpq_class rhs = 0;
        bool equality = true;  // otherwise sum >= rhs
        std::string label;
    };
    const std::vector<Row>& rows() const { return rows_; }

    /// Value of a cell under a candidate assignment of the free variables.
    mpq_class cell_value(const LPVar& v, const std::vector<mpq_class>& x) const {
        auto f = fixed_.find(v);
        if (f != fixed_.end()) return f->second;
        return x[static_cast<std::size_t>(col_.at(v))];
    }

    /// Checks a full assignment (by cell) against every constraint exactly.
    bool satisfied_by(const std::vector<mpq_class>& x) const {
        for (const auto& row : rows_) {
            mpq_class lhs = 0;
            for (std::size_t c = 0; c < row.a.size(); ++c) lhs += row.a[c] * x[c];
            if (row.equality ? lhs != row.rhs : lhs < row.rhs) return false;
        }
        for (const auto& v : x)
            if (v < 0) return false;
        return true;
    }

  private:
    void fix(LPVar v, mpq_class val) { fixed_.emplace(v, std::move(val)); }

    void build() {
        // Substituted cells: the two unit entries, the zero code-side
        // column, and the distance-exclusion region of the dual side.
        fix({false, 0, 0}, 1);
        fix({true, 0, 0}, 1);
        for (int i = 1; i <= n_; ++i) fix({false, i, 0}, 0);
        for (int i = 0; i <= n_; ++i)
            for (int j = 1; j <= mr_; ++j)
                if (i + j <= d_ - 1) fix({true, i, j}, 0);

        for (int side = 0; side < 2; ++side)
            for (int i = 0; i <= n_; ++i)
                for (int j = 0; j <= mr_; ++j) {
                    LPVar v{side == 1, i, j};
                    if (!fixed_.count(v)) {
                        col_[v] = static_cast<int>(vars_.size());
                        vars_.push_back(v);
                    }
                }

        // equalities B^perp_{i,0} = sum_j B_{i,j} for 1 <= i <= d-1
        for (int i = 1; i <= d_ - 1; ++i) {
            Row row = blank("dual-mass equality i=" + std::to_string(i));
            add(row, {true, i, 0}, 1);
            for (int j = 0; j <= mr_; ++j) add(row, {false, i, j}, -1);
            rows_.push_back(std::move(row));
        }
        // inequalities B^perp_{i,0} >= sum_{j>=1} B_{i,j} for i >= d
        for (int i = d_; i <= n_; ++i) {
            Row row = blank("dual-mass inequality i=" + std::to_string(i));
            row.equality = false;
            add(row, {true, i, 0}, 1);
            for (int j = 1; j <= mr_; ++j) add(row, {false, i, j}, -1);
            rows_.push_back(std::move(row));
        }
        // MacWilliams: 4^n B_{x,y} = sum_{i,j} B^perp_{i,j} K_x(i;n,4) K_y(j;mr,2)
        KrawTable k4(n_, 4), k2(mr_, 2);
        for (int x = 0; x <= n_; ++x)
            for (int y = 0; y <= mr_; ++y) {
                Row row = blank("macwilliams (" + std::to_string(x) + "," + std::to_string(y) + ")");
                add(row, {false, x, y}, mpq_class(-pow_int(4, n_)));
                for (int i = 0; i <= n_; ++i)
                    for (int j = 0; j <= mr_; ++j) add(row, {true, i, j}, mpq_class(k4(x, i) * k2(y, j)));
                rows_.push_back(std::move(row));
            }
        // totals
        {
            Row row = blank("code total");
            for (int i = 0; i <= n_; ++i)
                for (int j = 0; j <= mr_; ++j) add(row, {false, i, j}, 1);
            row.rhs += mpq_class(pow_int(2, mr_));
            rows_.push_back(std::move(row));
        }
        {
            Row row = blank("dual total");
            for (int i = 0; i <= n_; ++i)
                for (int j = 0; j <= mr_; ++j) add(row, {true, i, j}, 1);
            row.rhs += mpq_class(pow_int(2, 2 * n_));
            rows_.push_back(std::move(row));
        }
    }

    Row blank(std::string label) const {
        Row r;
        r.a.assign(vars_.size(), 0);
        r.label = std::move(label);
        return r;
    }

    /// Adds coeff * cell to a row, folding fixed cells into the RHS.
    void add(Row& row, LPVar v, mpq_class coeff) const {
        auto f = fixed_.find(v);
        if (f != fixed_.end()) {
            row.rhs -= coeff * f->second;
            return;
        }
        row.a[static_cast<std::size_t>(col_.at(v))] += coeff;
    }

    int n_, k_, d_, r_, m_, mr_;
    std::vector<LPVar> vars_;
    std::map<LPVar, int> col_;
    std::map<LPVar, mpq_class> fixed_;
    std::vector<Row> rows_;
};

enum class LPStatus { feasible, infeasible };

struct FeasibilityVerdict {
    LPStatus status = LPStatus::infeasible;
    std::vector<mpq_class> witness;      // free-variable values, if feasible
    std::vector<mpq_class> certificate;  // Farkas multipliers per row, if not
};

namespace detail {

/// One constraint in phase-I form: a.x = rhs or a.x >= rhs, x >= 0.
struct LPRow {
    std::vector<mpq_class> a;
    mpq_class rhs = 0;
    bool equality = true;
};

/// Phase-I simplex over exact rationals.  Returns either a feasible point
/// (witness of length nvar) or a Farkas certificate: row multipliers y with
/// y^T A <= 0 componentwise, y^T b > 0, and y >= 0 on inequality rows.
///
/// The tableau is held in integer-pivoting form (Edmonds): every entry is
/// an integer and the represented rational value is entry / D, where D > 0
/// is the previous pivot element (initially 1).  Each pivot step updates
/// rows as (a*p - b*c) / D, an exact integer division, so no per-element
/// gcd reduction is ever needed.  Inequality rows with rhs <= 0 start with
/// their slack in the basis, so only the remaining rows need artificials.
inline FeasibilityVerdict phase1_simplex(const std::vector<LPRow>& rows, const std::size_t nvar) {
    const std::size_t m = rows.size();
    std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
    std::size_t total = nvar;
    for (std::size_t i = 0; i < m; ++i)
        if (!rows[i].equality) slack_col[i] = total++;
    const std::size_t art_begin = total;
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].equality || rows[i].rhs > 0) art_col[i] = total++;

    // tableau: m rows x (total + 1), last column = RHS; all RHS >= 0.
    // Rows are scaled by the lcm of their denominators up front (scaling a
    // constraint by a positive integer changes nothing), so the tableau is
    // integral with global denominator D = 1.
    std::vector<std::vector<mpz_class>> T(m, std::vector<mpz_class>(total + 1, 0));
    mpz_class D = 1;
    std::vector<std::size_t> basis(m);
    std::vector<int> row_sign(m, 1);
    std::vector<mpz_class> row_scale(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class scale = rows[i].rhs.get_den();
        for (std::size_t c = 0; c < nvar; ++c)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rows[i].a[c].get_den().get_mpz_t());
        row_scale[i] = scale;
        for (std::size_t c = 0; c < nvar; ++c) {
            mpq_class v = rows[i].a[c] * scale;
            T[i][c] = v.get_num();
        }
        // a.x - s = rhs; the slack stays at unit coefficient (scaling it
        // along with the row would merely rescale the slack variable, so
        // keeping it at -1 is an equivalent reformulation)
        if (!rows[i].equality) T[i][slack_col[i]] = -1;
        T[i][total] = mpq_class(rows[i].rhs * scale).get_num();
        // normalize to RHS >= 0; flip zero-RHS inequalities too so their
        // slack entry turns positive and can seed the basis
        if (T[i][total] < 0 || (!rows[i].equality && T[i][total] == 0)) {
            row_sign[i] = -1;
            for (auto& v : T[i]) v = -v;
        }
        if (art_col[i] != SIZE_MAX) {
            T[i][art_col[i]] = 1;
            basis[i] = art_col[i];
        } else {
            basis[i] = slack_col[i];  // flipped slack column is +1
        }
    }

    // objective: minimize sum of artificials; maintain reduced-cost row z
    // (same shared denominator D): z[c] = cost_c - sum over artificial-basic
    // rows of T[i][c]
    std::vector<mpz_class> z(total + 1, 0);
    for (std::size_t c = 0; c <= total; ++c) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (art_col[i] != SIZE_MAX) acc += T[i][c];
        z[c] = (c >= art_begin && c < total ? mpz_class(1) : mpz_class(0)) - acc;
    }

    // Dantzig entering rule with a lexicographic ratio test.  The lex rule
    // compares tied rows column by column in a fixed order whose prefix
    // (RHS, then the initial basis identity block) makes every initial row
    // lexicographically positive, which rules out cycling without giving up
    // the fast entering rule.  Since D > 0 throughout, sign tests and
    // comparisons can use the integer entries directly.
    std::vector<std::size_t> lex_order;
    lex_order.reserve(total + 1);
    lex_order.push_back(total);
    {
        std::vector<char> in_basis(total, 0);
        for (std::size_t i = 0; i < m; ++i) {
            lex_order.push_back(basis[i]);
            in_basis[basis[i]] = 1;
        }
        for (std::size_t c = 0; c < total; ++c)
            if (!in_basis[c]) lex_order.push_back(c);
    }
    mpz_class t1, t2;  // scratch
    while (true) {
        // entering = most negative reduced cost
        std::size_t enter = total;
        for (std::size_t c = 0; c < total; ++c)
            if (z[c] < 0 && (enter == total || z[c] < z[enter])) enter = c;
        if (enter == total) break;  // optimal

        // lexicographic ratio test: minimize row / pivot-column entry in the
        // lex order, comparing via cross-multiplication (both entries > 0)
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            for (std::size_t c : lex_order) {
                t1 = T[i][c] * T[leave][enter];
                t2 = T[leave][c] * T[i][enter];
                if (t1 != t2) {
                    if (t1 < t2) leave = i;
                    break;
                }
            }
        }
        if (leave == m) throw std::logic_error("solve_feasibility: phase-I objective unbounded");

        // integer pivot: the pivot row is kept verbatim and becomes the new
        // denominator source; every other row (and z) maps through
        // (a*p - b*c) / D, which divides exactly.
        const mpz_class p = T[leave][enter];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const mpz_class& f = T[i][enter];
            if (f == 0) {
                for (std::size_t c = 0; c <= total; ++c) {
                    if (T[i][c] == 0) continue;
                    T[i][c] *= p;
                    mpz_divexact(T[i][c].get_mpz_t(), T[i][c].get_mpz_t(), D.get_mpz_t());
                }
            } else {
                const mpz_class fc = f;  // f aliases T[i][enter], copy first
                for (std::size_t c = 0; c <= total; ++c) {
                    mpz_class& v = T[i][c];
                    if (T[leave][c] == 0) {
                        if (v == 0) continue;
                        v *= p;
                    } else {
                        v *= p;
                        t1 = fc * T[leave][c];
                        v -= t1;
                        if (v == 0) continue;
                    }
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), D.get_mpz_t());
                }
            }
        }
        {
            const mpz_class fc = z[enter];
            for (std::size_t c = 0; c <= total; ++c) {
                mpz_class& v = z[c];
                if (fc != 0 && T[leave][c] != 0) {
                    v *= p;
                    t1 = fc * T[leave][c];
                    v -= t1;
                } else {
                    if (v == 0) continue;
                    v *= p;
                }
                if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), D.get_mpz_t());
            }
        }
        D = p;
        basis[leave] = static_cast<int>(enter);
#ifdef QDS_LP_INSTRUMENT2
        {
            static int npiv = 0;
            ++npiv;
            if (npiv % 25 == 0) {
                std::size_t mx = 0;
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t c = 0; c <= total; ++c)
                        mx = std::max(mx, mpz_sizeinbase(T[i][c].get_mpz_t(), 2));
                std::fprintf(stderr, "pivot %d: D bits=%zu max entry bits=%zu\n", npiv,
                             mpz_sizeinbase(D.get_mpz_t(), 2), mx);
            }
        }
#endif
    }

    FeasibilityVerdict verdict;
    if (z[total] == 0) {  // objective value = -z[total] / D
        verdict.status = LPStatus::feasible;
        verdict.witness.assign(nvar, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < nvar) {
                mpq_class v(T[i][total], D);
                v.canonicalize();
                verdict.witness[basis[i]] = v;
            }
        return verdict;
    }

    // Farkas certificate from the optimal reduced costs: for the tableau
    // row multipliers y = c_B B^{-1}, y_i = 1 - z[artificial_i] when the
    // row has an artificial column, and y_i = -z[slack_i] otherwise (the
    // slack has cost 0 and unit coefficient).  Undo the sign flip and the
    // row scaling to express the multipliers against the caller's rows.
    verdict.status = LPStatus::infeasible;
    verdict.certificate.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class y = art_col[i] != SIZE_MAX ? mpq_class(D - z[art_col[i]], D)
                                             : mpq_class(-z[slack_col[i]], D);
        y.canonicalize();
        verdict.certificate[i] = mpq_class(row_sign[i]) * row_scale[i] * y;
    }
    return verdict;
}

}  // namespace detail

/// Feasibility of the exact constraint system.  The code-side enumerator
/// cells are first eliminated through their defining MacWilliams equality
/// rows (each such row contains exactly one code-side cell), which shrinks
/// the simplex to the dual-side cells plus one nonnegativity inequality per
/// eliminated cell.  The witness and the Farkas certificate are mapped back
/// to the original variables and rows, and the certificate is re-verified
/// exactly against the original system before being returned.
inline FeasibilityVerdict solve_feasibility(const RationalTableau& t) {
    const auto& orig = t.rows();
    const auto& vars = t.variables();
    const std::size_t N = vars.size();
    const std::size_t M = orig.size();

    // pick the defining row of each eliminable column: an equality row whose
    // only code-side entry is that column
    std::vector<std::size_t> def_row(N, SIZE_MAX);
    std::vector<char> is_def_row(M, 0);
    for (std::size_t i = 0; i < M; ++i) {
        if (!orig[i].equality) continue;
        std::size_t codecol = SIZE_MAX;
        int cnt = 0;
        for (std::size_t c = 0; c < N && cnt < 2; ++c)
            if (!vars[c].dual && orig[i].a[c] != 0) {
                ++cnt;
                codecol = c;
            }
        if (cnt == 1 && def_row[codecol] == SIZE_MAX) {
            def_row[codecol] = i;
            is_def_row[i] = 1;
        }
    }

    // column compression: kept columns in original order, then one
    // nonnegativity row per eliminated column
    std::vector<std::size_t> newcol(N, SIZE_MAX), kept_cols, elim_cols;
    for (std::size_t c = 0; c < N; ++c) {
        if (def_row[c] == SIZE_MAX) {
            newcol[c] = kept_cols.size();
            kept_cols.push_back(c);
        } else {
            elim_cols.push_back(c);
        }
    }
    const std::size_t nkeep = kept_cols.size();

    std::vector<detail::LPRow> red;
    std::vector<std::size_t> red_of_row(M, SIZE_MAX);   // original row -> reduced index
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> lam_of_def(M);
    // lam_of_def[i] = (reduced row index j', lambda) pairs meaning reduced
    // row j' = original row j - sum lambda * original def rows i
    for (std::size_t j = 0; j < M; ++j) {
        if (is_def_row[j]) continue;
        detail::LPRow r;
        r.equality = orig[j].equality;
        r.rhs = orig[j].rhs;
        r.a.assign(nkeep, 0);
        for (std::size_t c = 0; c < N; ++c)
            if (newcol[c] != SIZE_MAX) r.a[newcol[c]] = orig[j].a[c];
        for (std::size_t c : elim_cols) {
            const mpq_class& b = orig[j].a[c];
            if (b == 0) continue;
            const std::size_t i = def_row[c];
            mpq_class lam = b / orig[i].a[c];
            lam.canonicalize();
            r.rhs -= lam * orig[i].rhs;
            for (std::size_t c2 = 0; c2 < N; ++c2)
                if (newcol[c2] != SIZE_MAX && orig[i].a[c2] != 0) r.a[newcol[c2]] -= lam * orig[i].a[c2];
            lam_of_def[i].emplace_back(red.size(), lam);
        }
        red_of_row[j] = red.size();
        red.push_back(std::move(r));
    }
    // nonnegativity of each eliminated cell x_c = (rhs_i - sum a x) / a_c:
    // -sign(a_c) * (def row without x_c) >= -sign(a_c) * rhs_i
    std::vector<std::size_t> nonneg_of_col(N, SIZE_MAX);
    std::vector<int> def_sign(N, 1);
    for (std::size_t c : elim_cols) {
        const std::size_t i = def_row[c];
        const int s = orig[i].a[c] > 0 ? 1 : -1;
        def_sign[c] = s;
        detail::LPRow r;
        r.equality = false;
        r.rhs = mpq_class(-s) * orig[i].rhs;
        r.a.assign(nkeep, 0);
        for (std::size_t c2 = 0; c2 < N; ++c2)
            if (newcol[c2] != SIZE_MAX) r.a[newcol[c2]] = mpq_class(-s) * orig[i].a[c2];
        nonneg_of_col[c] = red.size();
        red.push_back(std::move(r));
    }

    FeasibilityVerdict sub = detail::phase1_simplex(red, nkeep);

    FeasibilityVerdict verdict;
    verdict.status = sub.status;
    if (sub.status == LPStatus::feasible) {
        verdict.witness.assign(N, 0);
        for (std::size_t c : kept_cols) verdict.witness[c] = sub.witness[newcol[c]];
        for (std::size_t c : elim_cols) {
            const std::size_t i = def_row[c];
            mpq_class v = orig[i].rhs;
            for (std::size_t c2 : kept_cols) v -= orig[i].a[c2] * verdict.witness[c2];
            v /= orig[i].a[c];
            v.canonicalize();
            verdict.witness[c] = v;
        }
        return verdict;
    }

    // map the reduced certificate back: kept rows carry their multiplier
    // over; a defining row i additionally absorbs the substitutions made
    // with it and the multiplier of its nonnegativity row
    verdict.certificate.assign(M, 0);
    for (std::size_t j = 0; j < M; ++j)
        if (red_of_row[j] != SIZE_MAX) verdict.certificate[j] = sub.certificate[red_of_row[j]];
    for (std::size_t c : elim_cols) {
        const std::size_t i = def_row[c];
        mpq_class y = mpq_class(-def_sign[c]) * sub.certificate[nonneg_of_col[c]];
        for (const auto& [jr, lam] : lam_of_def[i]) y -= lam * sub.certificate[jr];
        y.canonicalize();
        verdict.certificate[i] = y;
    }
    // verify exactly: y^T A <= 0 on every structural column, y^T b > 0,
    // and y >= 0 on inequality rows
    mpq_class yb = 0;
    for (std::size_t i = 0; i < M; ++i) yb += verdict.certificate[i] * orig[i].rhs;
    if (yb <= 0) throw std::logic_error("solve_feasibility: invalid certificate (y.b <= 0)");
    for (std::size_t c = 0; c < N; ++c) {
        mpq_class ya = 0;
        for (std::size_t i = 0; i < M; ++i) ya += verdict.certificate[i] * orig[i].a[c];
        if (ya > 0) throw std::logic_error("solve_feasibility: invalid certificate (y.A > 0)");
    }
    for (std::size_t i = 0; i < M; ++i)
        if (!orig[i].equality && verdict.certificate[i] < 0)
            throw std::logic_error("solve_feasibility: invalid certificate (negative inequality multiplier)");
    return verdict;
}

inline RationalTableau build_lp(int n, int k, int d, int r) { return RationalTableau(n, k, d, r); }

/// Largest d whose LP is feasible, by descending scan.  k = n has no
/// stabilizers and is reported as 1 by convention.
inline int verdict_to_distance_bound(int n, int k, int r) {
    if (k == n) return 1;
    for (int d = n; d >= 1; --d) {
        RationalTableau t(n, k, d, r);
        if (solve_feasibility(t).status == LPStatus::feasible) return d;
    }
    return 0;
}

/// Packs the exact enumerators of a constructed code into the tableau's
/// free-variable order (for testing codes as feasible points).
inline std::vector<mpq_class> enumerators_as_point(const RationalTableau& t,
                                                   const SplitWeightEnumerator& B,
                                                   const SplitWeightEnumerator& Bp) {
    std::vector<mpq_class> x;
    for (const auto& v : t.variables())
        x.push_back(mpq_class(v.dual ? Bp.at(v.i, v.j) : B.at(v.i, v.j)));
    return x;
}

}  // namespace qds
