#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bounds_asymptotic.hpp"
#include "code.hpp"
#include "enumerators.hpp"
#include "krawtchouk.hpp"

// The random ensemble of DS codes: matrices [H I_m 0; 0 A^T I_r] with H a
// uniformly random self-orthogonal full-rank check matrix and A a uniform
// full-column-rank binary matrix.  Closed-form average split weight
// enumerators, the counting lemmas, asymptotic exponents, and sampling.

namespace qds {

struct EnsembleParams {
    int n = 0, k = 0, r = 0;
    EnsembleParams(int n_, int k_, int r_) : n(n_), k(k_), r(r_) {
        if (n < 1 || k < 0 || k > n || r < 0) throw std::invalid_argument("EnsembleParams: bad shape");
        if (m() < 1) throw std::invalid_argument("EnsembleParams: need at least one stabilizer");
        if (r > m()) throw std::invalid_argument("EnsembleParams: need r <= n-k");
    }
    int m() const { return n - k; }
    int mr() const { return n - k + r; }
};

struct EnsembleCounts {
    mpz_class E;  // |E_{n,m}|: matrices [H I_m]
    mpz_class L;  // codes of E_{n,m} containing a given (a,b), a,b nonzero
    mpz_class F;  // |F_{m,r}|: matrices [A I_r], rank(A) = r
    mpz_class N;  // |E_{n,k,r}| = E * F
};

/// The counting lemmas: E = prod_{u<m} (2^(2(n-u))-1)(2^m-2^u)/(2^(u+1)-1),
/// L = prod_{1<=u<m} (2^(2(n-u))-1)(2^m-2^u)/(2^u-1), F = prod_{u<r} (2^m-2^u).
inline EnsembleCounts ensemble_counts(const EnsembleParams& p) {
    const int m = p.m();
    EnsembleCounts c;
    mpz_class num = 1, den = 1;
    for (int u = 0; u < m; ++u) {
        num *= (pow_int(2, 2 * (p.n - u)) - 1) * (pow_int(2, m) - pow_int(2, u));
        den *= pow_int(2, u + 1) - 1;
    }
    if (num % den != 0) throw std::logic_error("ensemble_counts: non-integer |E|");
    c.E = num / den;
    num = 1;
    den = 1;
    for (int u = 1; u < m; ++u) {
        num *= (pow_int(2, 2 * (p.n - u)) - 1) * (pow_int(2, m) - pow_int(2, u));
        den *= pow_int(2, u) - 1;
    }
    if (num % den != 0) throw std::logic_error("ensemble_counts: non-integer L");
    c.L = num / den;
    c.F = 1;
    for (int u = 0; u < p.r; ++u) c.F *= pow_int(2, m) - pow_int(2, u);
    c.N = c.E * c.F;
    return c;
}

/// Average enumerators as exact rational grids, (n+1) x (m+r+1).
struct AvgEnumerator {
    int n = 0, m = 0, r = 0;
    QGrid B;
    QGrid Bperp;
};

/// The closed forms of the average-weight-distribution theorem; the r = 0
/// reduction falls out of the C(a,b) = 0 convention.
inline AvgEnumerator avg_enumerators(const EnsembleParams& p) {
    const int n = p.n, m = p.m(), r = p.r, mr = p.mr();
    AvgEnumerator a;
    a.n = n;
    a.m = m;
    a.r = r;
    a.B = make_grid(n + 1, mr + 1);
    a.Bperp = make_grid(n + 1, mr + 1);

    mpz_class two_m = pow_int(2, m), two_r = pow_int(2, r), four_n = pow_int(4, n);
    mpq_class denom((four_n - 1) * (two_m - 1));

    a.B[0][0] = 1;
    a.Bperp[0][0] = 1;
    for (int j = 1; j <= mr; ++j) {
        mpq_class v(binom(mr, j) - binom(m, j) - binom(r, j), two_m - 1);
        v.canonicalize();
        a.B[0][static_cast<std::size_t>(j)] = v;
        a.Bperp[0][static_cast<std::size_t>(j)] = 0;
    }
    for (int i = 1; i <= n; ++i) {
        mpz_class front = binom(n, i) * pow_int(3, i);
        // B^perp_{i,0} = C(n,i) 3^i (4^n - 2^m + 1 - 4^n/2^m) / ((4^n-1)(2^m-1))
        mpq_class bi0 =
            mpq_class(front) * (mpq_class(four_n - two_m + 1) - mpq_class(four_n, two_m)) / denom;
        bi0.canonicalize();
        a.Bperp[static_cast<std::size_t>(i)][0] = bi0;
        a.B[static_cast<std::size_t>(i)][0] = 0;
        for (int j = 1; j <= mr; ++j) {
            mpq_class bij = mpq_class(front * ((two_m - 2) * binom(mr, j) + binom(m, j) + binom(r, j))) / denom;
            bij.canonicalize();
            a.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bij;
            mpq_class bpij =
                mpq_class(four_n * front * (binom(mr, j) * two_m - binom(r, j) * two_m - binom(m, j) * two_r)) /
                (denom * mpq_class(pow_int(2, mr)));
            bpij.canonicalize();
            a.Bperp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bpij;
        }
    }
    return a;
}

/// MacWilliams transform of a rational grid; `from_dual` selects the
/// normalization (4^-n for dual -> code, 2^-(m+r) for code -> dual).
inline QGrid macwilliams_grid(const QGrid& g, int n, int mr, bool from_dual) {
    KrawTable k4(n, 4), k2(mr, 2);
    mpq_class norm(from_dual ? pow_int(4, n) : pow_int(2, mr));
    QGrid out = make_grid(n + 1, mr + 1);
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= mr; ++y) {
            mpq_class acc = 0;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= mr; ++j)
                    acc += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                           mpq_class(k4(x, i) * k2(y, j));
            acc /= norm;
            acc.canonicalize();
            out[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = acc;
        }
    return out;
}

/// The MacWilliams identity must hold between the two closed-form averages.
inline bool consistency_check(const EnsembleParams& p) {
    AvgEnumerator a = avg_enumerators(p);
    QGrid back = macwilliams_grid(a.Bperp, p.n, p.mr(), /*from_dual=*/true);
    return back == a.B;
}

/// Uniform sample from E_{n,m}: rows extended one at a time, each drawn
/// uniformly from the trace-orthogonal complement of the previous rows and
/// rejected if F2-dependent.  The candidate count 2^(2n-i) - 2^i does not
/// depend on the prefix, so the ordered-basis distribution is uniform.
inline StabilizerCheckMatrix sample_check_matrix(int n, int m, std::mt19937_64& rng) {
    auto mask_n = n == 64 ? ~0ull : ((1ull << n) - 1);
    std::vector<std::uint64_t> rows;
    F2Basis span(2 * n);
    while (static_cast<int>(rows.size()) < m) {
        // functional masks: trace_inner(row, x) = <swap_planes(row), x>
        std::vector<std::uint64_t> coeffs;
        for (auto rbits : rows) {
            std::uint64_t rx = rbits & mask_n, rz = rbits >> n;
            coeffs.push_back(rz | (rx << n));
        }
        auto sol = f2_solve(coeffs, std::vector<int>(coeffs.size(), 0), 2 * n);
        std::uint64_t cand = 0;
        for (auto basis_vec : sol->nullspace)
            if (rng() & 1) cand ^= basis_vec;
        if (span.contains(cand)) continue;  // includes the zero vector
        span.insert(cand);
        rows.push_back(cand);
    }
    std::vector<PauliVector> pv;
    for (auto rbits : rows) pv.emplace_back(n, rbits & mask_n, rbits >> n);
    return StabilizerCheckMatrix(n, std::move(pv));
}

/// Uniform full-column-rank m x r binary matrix by rejection.
inline SMCode sample_sm_matrix(int m, int r, std::mt19937_64& rng) {
    while (true) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(m));
        for (auto& row : rows) row = rng() & (r == 64 ? ~0ull : ((1ull << r) - 1));
        SMCode A(m, r, rows);
        if (A.full_column_rank()) return A;
    }
}

inline DSCode sample_code(const EnsembleParams& p, std::mt19937_64& rng) {
    return DSCode(sample_check_matrix(p.n, p.m(), rng), sample_sm_matrix(p.m(), p.r, rng));
}

/// Empirical average enumerators over `count` uniform samples.
inline AvgEnumerator sample_ensemble(const EnsembleParams& p, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_ensemble: need count >= 1");
    std::mt19937_64 rng(seed);
    AvgEnumerator acc;
    acc.n = p.n;
    acc.m = p.m();
    acc.r = p.r;
    acc.B = make_grid(p.n + 1, p.mr() + 1);
    acc.Bperp = make_grid(p.n + 1, p.mr() + 1);
    for (int s = 0; s < count; ++s) {
        DSCode code = sample_code(p, rng);
        SplitWeightEnumerator B = enumerate_code(code);
        SplitWeightEnumerator Bp = enumerate_dual(code);
        for (int i = 0; i <= p.n; ++i)
            for (int j = 0; j <= p.mr(); ++j) {
                acc.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += mpq_class(B.at(i, j));
                acc.Bperp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += mpq_class(Bp.at(i, j));
            }
    }
    for (auto grid : {&acc.B, &acc.Bperp})
        for (auto& row : *grid)
            for (auto& v : row) {
                v /= count;
                v.canonicalize();
            }
    return acc;
}

/// Asymptotic growth exponents of the average enumerators:
///   b_{0,xi}        = (1-R+rho) H(xi/(1-R+rho)) - 1 + R
///   b_{iota,xi}     = H(iota) + iota log2(3) + (1-R+rho) H(xi/(1-R+rho)) - 2
///   b^perp_{iota,xi} = H(iota) + iota log2(3) + (1-R+rho) H(xi/(1-R+rho)) - (1-R+rho)
///   b^perp_{iota,0} = H(iota) + iota log2(3) - 1 + R.
struct AsymptoticExponents {
    double b_0_xi = 0;
    double b_iota_xi = 0;
    double bperp_iota_xi = 0;
    double bperp_iota_0 = 0;
};

inline AsymptoticExponents asymptotic_exponents(double R, double rho, double iota, double xi) {
    double mu = 1.0 - R + rho;
    if (mu <= 0.0 || xi / mu > 1.0 + 1e-12) throw std::domain_error("asymptotic_exponents: xi outside [0, 1-R+rho]");
    double hx = mu * entropy(std::min(xi / mu, 1.0));
    double hi = entropy(iota) + iota * kLog2_3;
    AsymptoticExponents e;
    e.b_0_xi = hx - 1.0 + R;
    e.b_iota_xi = hi + hx - 2.0;
    e.bperp_iota_xi = hi + hx - mu;
    e.bperp_iota_0 = hi - 1.0 + R;
    return e;
}

}  // namespace qds
