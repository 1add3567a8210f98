#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"
#include "gf4.hpp"

// Code constructions: stabilizer check matrices, syndrome-measurement (SM)
// codes, the joint data-syndrome parity-check matrix
//
//   H_DS = [ H  I_m  0  ]
//          [ 0  A^T  I_r],
//
// symplectic completions, and the simplex/cyclic CSS families.

namespace qds {

/// Thrown when a construction would have k < 0 information qubits.
struct negative_dimension_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// m = n-k rows over GF(4), pairwise orthogonal under the trace inner
/// product and F2-independent in the 2n-bit symplectic representation.
class StabilizerCheckMatrix {
  public:
    StabilizerCheckMatrix(int n, std::vector<PauliVector> rows) : n_(n), rows_(std::move(rows)) {
        F2Basis basis(2 * n);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].n != n) throw std::invalid_argument("check matrix: row length mismatch");
            if (!basis.insert(rows_[i].symplectic_bits()))
                throw std::invalid_argument("check matrix: rows not F2-independent");
            for (std::size_t j = 0; j <= i; ++j)
                if (trace_inner(rows_[i], rows_[j]) != 0)
                    throw std::invalid_argument("check matrix: rows not self-orthogonal");
        }
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(rows_.size()); }
    int k() const { return n_ - m(); }
    const std::vector<PauliVector>& rows() const { return rows_; }
    const PauliVector& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  private:
    int n_;
    std::vector<PauliVector> rows_;
};

/// The m x r binary matrix A from the systematic SM-code generator
/// G_C = [I_m A].  Rows are stored as r-bit words.
class SMCode {
  public:
    SMCode(int m, int r, std::vector<std::uint64_t> rows) : m_(m), r_(r), rows_(std::move(rows)) {
        if (m < 0 || r < 0 || m + r > kMaxLen) throw std::invalid_argument("SMCode: bad dimensions");
        if (rows_.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("SMCode: wrong row count");
        std::uint64_t mask = r == 64 ? ~0ull : ((1ull << r) - 1);
        for (auto& row : rows_) row &= mask;
    }
    static SMCode empty(int m) { return SMCode(m, 0, std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0)); }

    /// l-fold repeated measurement: A = [I_m ... I_m] with l-1 blocks.
    static SMCode repetition(int m, int l) {
        if (l < 1) throw std::invalid_argument("SMCode::repetition: need l >= 1");
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < l - 1; ++c) rows[static_cast<std::size_t>(i)] |= 1ull << (c * m + i);
        return SMCode(m, (l - 1) * m, std::move(rows));
    }

    int m() const { return m_; }
    int r() const { return r_; }
    std::uint64_t row_bits(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int at(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1; }

    /// Column j of A as an m-bit word.
    std::uint64_t column_bits(int j) const {
        std::uint64_t c = 0;
        for (int i = 0; i < m_; ++i) c |= std::uint64_t(at(i, j)) << i;
        return c;
    }

    bool full_column_rank() const {
        std::vector<std::uint64_t> cols;
        for (int j = 0; j < r_; ++j) cols.push_back(column_bits(j));
        return f2_rank(cols, m_) == r_;
    }

    /// Block-diagonal combination (used for per-half CSS syndrome coding).
    static SMCode block_diag(const SMCode& a, const SMCode& b) {
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < a.m(); ++i) rows.push_back(a.row_bits(i));
        for (int i = 0; i < b.m(); ++i) rows.push_back(b.row_bits(i) << a.r());
        return SMCode(a.m() + b.m(), a.r() + b.r(), std::move(rows));
    }

  private:
    int m_, r_;
    std::vector<std::uint64_t> rows_;
};

/// A quantum data-syndrome code: stabilizer matrix H plus SM matrix A,
/// with the assembled rows of H_DS.
class DSCode {
  public:
    DSCode(StabilizerCheckMatrix H, SMCode A) : H_(std::move(H)), A_(std::move(A)) {
        if (A_.m() != H_.m()) throw std::invalid_argument("DSCode: A row count must equal m");
    }

    int n() const { return H_.n(); }
    int k() const { return H_.k(); }
    int m() const { return H_.m(); }
    int r() const { return A_.r(); }
    int mr() const { return m() + r(); }
    const StabilizerCheckMatrix& H() const { return H_; }
    const SMCode& A() const { return A_; }

    /// Row i of H_DS.  Top block: (g_i, e_i, 0).  Bottom block row j:
    /// (0, column_j(A), e_j).
    DSVector ds_row(int i) const {
        if (i < m()) return DSVector(H_.row(i), BitVec(mr(), 1ull << i));
        int j = i - m();
        return DSVector(PauliVector(n()), BitVec(mr(), A_.column_bits(j) | (1ull << (m() + j))));
    }
    int ds_rows() const { return mr(); }

    /// Extended syndrome of a data error: (s(e), A^T s(e)) where
    /// s_i(e) = g_i * e.
    BitVec extended_syndrome(const PauliVector& e) const {
        std::uint64_t s = 0;
        for (int i = 0; i < m(); ++i) s |= std::uint64_t(trace_inner(H_.row(i), e)) << i;
        std::uint64_t z = 0;
        for (int j = 0; j < r(); ++j) z |= std::uint64_t(parity64(A_.column_bits(j) & s)) << j;
        return BitVec(mr(), s | (z << m()));
    }

  private:
    StabilizerCheckMatrix H_;
    SMCode A_;
};

/// Builds H_DS from a stabilizer matrix and an SM matrix; validates shapes
/// and self-orthogonality (the latter is enforced by StabilizerCheckMatrix).
inline DSCode build_hds(StabilizerCheckMatrix H, SMCode A) { return DSCode(std::move(H), std::move(A)); }

/// The r redundant stabilizers f_j = sum_i a_{i,j} g_i.
inline std::vector<PauliVector> sm_stabilizers(const StabilizerCheckMatrix& H, const SMCode& A) {
    if (A.m() != H.m()) throw std::invalid_argument("sm_stabilizers: dimension mismatch");
    std::vector<PauliVector> f;
    for (int j = 0; j < A.r(); ++j) {
        PauliVector v(H.n());
        for (int i = 0; i < H.m(); ++i)
            if (A.at(i, j)) v = v + H.row(i);
        f.push_back(v);
    }
    return f;
}

/// Hyperbolic completion of the isotropic row space of H: vectors
/// g_1..g_n, h_1..h_n over GF(4) with g_i*g_j = 0, g_i*h_j = 0 for i != j
/// and g_i*h_i = 1, where g_1..g_m are the rows of H.
struct SymplecticCompletion {
    std::vector<PauliVector> g;  // n vectors, first m = rows of H
    std::vector<PauliVector> h;  // n vectors
};

inline SymplecticCompletion symplectic_complete(const StabilizerCheckMatrix& H) {
    const int n = H.n();
    const int m = H.m();
    const int w = 2 * n;
    auto to_vec = [n](std::uint64_t bits) {
        return PauliVector(n, bits & ((n == 64) ? ~0ull : ((1ull << n) - 1)), bits >> n);
    };
    auto form = [n](std::uint64_t a, std::uint64_t b) {
        std::uint64_t ax = a, az = a >> n, bx = b, bz = b >> n;
        if (n < 64) {
            std::uint64_t mk = (1ull << n) - 1;
            ax &= mk; bx &= mk;
        }
        return parity64((ax & bz) ^ (az & bx));
    };

    std::vector<std::uint64_t> g, h;
    for (int i = 0; i < m; ++i) g.push_back(H.row(i).symplectic_bits());

    // Pair each prescribed generator with a conjugate partner, constraining
    // against everything found so far and all remaining g's.
    F2Basis span(w);  // span of all chosen g and h vectors
    for (auto v : g) span.insert(v);
    for (int i = 0; i < n; ++i) {
        if (i >= m) {
            // pick a new g_i in the symplectic complement of all pairs so far
            std::vector<std::uint64_t> coeffs;
            std::vector<int> rhs;
            for (int j = 0; j < i; ++j) {
                coeffs.push_back(g[static_cast<std::size_t>(j)]);
                rhs.push_back(0);
                coeffs.push_back(h[static_cast<std::size_t>(j)]);
                rhs.push_back(0);
            }
            // symplectic-form constraints are linear in the *other* argument;
            // build functional masks: form(a, x) as <M a, x> with M swapping planes
            std::vector<std::uint64_t> fcoeffs;
            for (auto c : coeffs) {
                std::uint64_t cx = c & ((n == 64) ? ~0ull : ((1ull << n) - 1)), cz = c >> n;
                fcoeffs.push_back(cz | (cx << n));
            }
            auto sol = f2_solve(fcoeffs, rhs, w);
            if (!sol) throw std::logic_error("symplectic_complete: no complement");
            bool found = false;
            // particular solution is 0; search the null space for a vector
            // independent of the current span
            for (std::size_t a = 0; a < sol->nullspace.size() && !found; ++a) {
                std::uint64_t cand = sol->nullspace[a];
                if (!span.contains(cand)) {
                    g.push_back(cand);
                    span.insert(cand);
                    found = true;
                }
            }
            if (!found) throw std::logic_error("symplectic_complete: span exhausted early");
        }
        // solve for h_i: form(g_j, h_i) = delta_ij for all chosen g_j (incl.
        // future prescribed ones), form(h_j, h_i) = 0 for j < i
        std::vector<std::uint64_t> coeffs;
        std::vector<int> rhs;
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::uint64_t c = g[j];
            std::uint64_t cx = c & ((n == 64) ? ~0ull : ((1ull << n) - 1)), cz = c >> n;
            coeffs.push_back(cz | (cx << n));
            rhs.push_back(j == static_cast<std::size_t>(i) ? 1 : 0);
        }
        for (std::size_t j = 0; j < h.size(); ++j) {
            std::uint64_t c = h[j];
            std::uint64_t cx = c & ((n == 64) ? ~0ull : ((1ull << n) - 1)), cz = c >> n;
            coeffs.push_back(cz | (cx << n));
            rhs.push_back(0);
        }
        auto sol = f2_solve(coeffs, rhs, w);
        if (!sol) throw std::logic_error("symplectic_complete: pairing system inconsistent");
        h.push_back(sol->particular);
        span.insert(sol->particular);
        (void)form;
    }

    SymplecticCompletion out;
    for (auto v : g) out.g.push_back(to_vec(v));
    for (auto v : h) out.h.push_back(to_vec(v));
    return out;
}

/// Generator matrix of C_DS^perp assembled from a completion:
///   [ G  0 0 ; H1 0 0 ; H2 I_m A ].
inline std::vector<DSVector> dual_generator_matrix(const DSCode& code, const SymplecticCompletion& sc) {
    const int n = code.n(), m = code.m(), mr = code.mr();
    std::vector<DSVector> rows;
    for (int i = 0; i < n; ++i) rows.emplace_back(sc.g[static_cast<std::size_t>(i)], BitVec(mr));
    for (int i = m; i < n; ++i) rows.emplace_back(sc.h[static_cast<std::size_t>(i)], BitVec(mr));
    for (int i = 0; i < m; ++i) {
        std::uint64_t syn = 1ull << i;  // I_m block
        for (int j = 0; j < code.r(); ++j)
            if (code.A().at(i, j)) syn |= 1ull << (m + j);
        rows.emplace_back(sc.h[static_cast<std::size_t>(i)], BitVec(mr, syn));
    }
    return rows;
}

/// Circulant-style matrix of the first `rows` cyclic shifts of c.
inline std::vector<std::uint64_t> css_cyclic_hprime(BitVec c, int rows) {
    const int n = c.len;
    if (c.bits == 0) throw std::invalid_argument("css_cyclic_hprime: zero seed");
    if (rows < 1 || rows > n) throw std::invalid_argument("css_cyclic_hprime: bad row count");
    std::vector<std::uint64_t> out;
    std::uint64_t v = c.bits;
    std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (int i = 0; i < rows; ++i) {
        out.push_back(v);
        v = ((v << 1) | (v >> (n - 1))) & mask;  // cyclic left shift
    }
    return out;
}

/// The dual-containing seed of a CSS code: binary block Hb with Hb Hb^T = 0.
struct CSSSeed {
    int n = 0;
    std::vector<std::uint64_t> Hb;  // ((n-k)/2) x n

    void validate() const {
        for (std::size_t i = 0; i < Hb.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (parity64(Hb[i] & Hb[j]))
                    throw std::invalid_argument("CSSSeed: Hb Hb^T != 0");
    }

    /// The [[n, n-2*rows, .]] stabilizer matrix (X-type rows then Z-type).
    StabilizerCheckMatrix stabilizers() const {
        std::vector<PauliVector> rows;
        for (auto b : Hb) rows.emplace_back(n, b, 0);        // X-type: entries 1
        for (auto b : Hb) rows.emplace_back(n, 0, b);        // Z-type: entries w
        return StabilizerCheckMatrix(n, std::move(rows));
    }
};

/// Generator matrix of the [2^a-1, a, 2^(a-1)] simplex code: column i+1 is
/// the binary expansion of i+1.
inline std::vector<std::uint64_t> simplex_generator(int a) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(a), 0);
    int n = (1 << a) - 1;
    for (int col = 0; col < n; ++col)
        for (int bit = 0; bit < a; ++bit)
            if (((col + 1) >> bit) & 1) rows[static_cast<std::size_t>(bit)] |= 1ull << col;
    return rows;
}

/// The [[2^a-1, 2^a-1-2a, 3]] CSS construction from two simplex blocks.
/// a = 2 gives k = -1 and is rejected.
inline CSSSeed simplex_css(int a) {
    if (a < 2) throw std::invalid_argument("simplex_css: need a >= 2");
    int n = (1 << a) - 1;
    if (n - 2 * a < 0)
        throw negative_dimension_error("simplex_css: k = " + std::to_string(n - 2 * a) + " < 0");
    CSSSeed seed{n, simplex_generator(a)};
    seed.validate();
    return seed;
}

/// The [15,3] SM code from the simplex-CSS discussion; A is the last 12
/// columns of the systematic generator matrix.
inline SMCode builtin_sm_15_3() {
    static const char* rows[3] = {
        "100001111111000",
        "010010011110110",
        "001101100110111",
    };
    std::vector<std::uint64_t> a(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 12; ++j)
            if (rows[i][3 + j] == '1') a[static_cast<std::size_t>(i)] |= 1ull << j;
    return SMCode(3, 12, std::move(a));
}

/// Full systematic generator of the [15,3] SM code (identity then A).
inline std::vector<std::uint64_t> sm_generator(const SMCode& A) {
    std::vector<std::uint64_t> g;
    for (int i = 0; i < A.m(); ++i)
        g.push_back((1ull << i) | (A.row_bits(i) << A.m()));
    return g;
}

}  // namespace qds
