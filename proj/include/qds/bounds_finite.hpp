#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "krawtchouk.hpp"

// Finite-length upper bounds on DS codes: the general two-variable
// polynomial bound, Singleton, and the Hamming-bound family (nondegenerate,
// unrestricted, hybrid).  Everything here is exact rational arithmetic.

namespace qds {

/// The exclusion region A within N = {(i,j): 0 <= i <= n, 1 <= j <= m+r}.
/// Either the minimum-distance triangle {j >= 1, i+j <= d-1} or the hybrid
/// rectangle {i <= 2 t_D, 1 <= j <= 2 t_S}.
struct BoundRegion {
    bool hybrid = false;
    int d = 0;   // triangle parameter
    int tD = 0;  // rectangle parameters
    int tS = 0;

    static BoundRegion min_distance(int d) { return {false, d, 0, 0}; }
    static BoundRegion rectangle(int tD, int tS) { return {true, 0, tD, tS}; }

    bool contains(int i, int j) const {
        if (j < 1) return false;
        return hybrid ? (i <= 2 * tD && j <= 2 * tS) : (i + j <= d - 1);
    }
};

/// A polynomial in the two-variable Krawtchouk basis together with its
/// value grid, the target distance d_D and the region A.
struct BoundPolynomial {
    int n = 0;
    int mr = 0;
    int dD = 0;
    BoundRegion region;
    QGrid coeffs;  // f_{i,j}, (n+1) x (mr+1)
    QGrid values;  // f(x,y) on the same grid

    /// Throws std::domain_error naming the violated hypothesis.
    void check_invariants() const {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= mr; ++j)
                if (coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0)
                    throw std::domain_error("bound polynomial: negative coefficient at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        for (int x = dD; x <= n; ++x)
            if (values[static_cast<std::size_t>(x)][0] > 0)
                throw std::domain_error("bound polynomial: f(x,0) > 0 at x = " + std::to_string(x));
        for (int x = 0; x <= n; ++x)
            for (int y = 1; y <= mr; ++y)
                if (!region.contains(x, y) && values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0)
                    throw std::domain_error("bound polynomial: f > 0 on the complement region at (" +
                                            std::to_string(x) + "," + std::to_string(y) + ")");
    }
};

/// Outcome of the general bound test against 2^(2n).
struct BoundResult {
    bool admitted = false;       // parameters survive the necessary condition
    bool infinite_term = false;  // a positive numerator met a zero denominator
    mpq_class lhs = 0;           // the max in the bound (meaningless if infinite)
    std::string witness;         // which term dominated
};

/// Evaluates the general polynomial bound: for a code with the polynomial's
/// (n, d_D, A) parameters to exist,
///   nondegenerate:  f(0,0)/f_{0,0} >= 2^(2n)
///   unrestricted:   max{ f(0,0)/f_{0,0},
///                        max_{1<=x<=d_D-1} f(x,0)/min_{j>=1} f_{x,j} } >= 2^(2n).
/// A term with positive numerator and a zero coefficient in the denominator
/// is +infinity: the polynomial yields no constraint and the parameters are
/// admitted trivially.  Terms with f(x,0) <= 0 cannot dominate and are
/// skipped.
inline BoundResult general_bound(const BoundPolynomial& poly, bool nondegenerate) {
    poly.check_invariants();
    const mpq_class& f00 = poly.coeffs[0][0];
    if (f00 == 0) throw std::domain_error("general_bound: f_{0,0} = 0");

    BoundResult res;
    res.lhs = poly.values[0][0] / f00;
    res.lhs.canonicalize();
    res.witness = "f(0,0)/f_{0,0}";
    if (!nondegenerate) {
        for (int x = 1; x <= poly.dD - 1; ++x) {
            const mpq_class& num = poly.values[static_cast<std::size_t>(x)][0];
            if (num <= 0) continue;
            mpq_class denom = poly.coeffs[static_cast<std::size_t>(x)][1];
            for (int j = 2; j <= poly.mr; ++j)
                if (poly.coeffs[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)] < denom)
                    denom = poly.coeffs[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
            if (denom == 0) {
                res.infinite_term = true;
                res.admitted = true;
                res.witness = "x=" + std::to_string(x) + " term is unbounded";
                return res;
            }
            mpq_class term = num / denom;
            term.canonicalize();
            if (term > res.lhs) {
                res.lhs = term;
                res.witness = "f(" + std::to_string(x) + ",0)/min_j f_{" + std::to_string(x) + ",j}";
            }
        }
    }
    res.admitted = res.lhs >= mpq_class(pow_int(2, 2 * poly.n));
    return res;
}

/// Singleton bound: k <= n - 2(d-1).  Negative return means no such code.
inline int singleton_max_k(int n, int d) {
    if (d < 1 || d > n) throw std::invalid_argument("singleton_max_k: need 1 <= d <= n");
    return n - 2 * (d - 1);
}

/// The Singleton polynomial f(x,y) = (4^(n-d+1) 2^m / C(n,d-1)) C(n-x, n-d+1) delta_{y,0}
/// with coefficients f_{i,j} = C(n-i, d-1)/C(n, d-1).
inline BoundPolynomial singleton_polynomial(int n, int d, int m) {
    BoundPolynomial p;
    p.n = n;
    p.mr = m;
    p.dD = d;
    p.region = BoundRegion::min_distance(d);
    p.coeffs = make_grid(n + 1, m + 1);
    p.values = make_grid(n + 1, m + 1);
    mpq_class norm(1, 1);
    norm = mpq_class(binom(n, d - 1));
    for (int i = 0; i <= n; ++i) {
        mpq_class c = mpq_class(binom(n - i, d - 1)) / norm;
        c.canonicalize();
        for (int j = 0; j <= m; ++j) p.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    }
    mpq_class scale = mpq_class(pow_int(4, n - d + 1) * pow_int(2, m)) / norm;
    scale.canonicalize();
    for (int x = 0; x <= n; ++x) {
        mpq_class v = scale * mpq_class(binom(n - x, n - d + 1));
        v.canonicalize();
        p.values[static_cast<std::size_t>(x)][0] = v;
    }
    return p;
}

/// The Hamming polynomial of the lemma: coefficients
///   f_{i,j} = ( sum_{a<=t} sum_{g<=t-lambda a} K_a(j;m,2) K_g(i;n,4) )^2
/// and values, via the alpha/beta closed form,
///   f(x,y) = 4^n 2^m sum_{a,b<=t} beta(y,a,b)
///            sum_{g<=t-lambda a} sum_{h<=t-lambda b} sum_{w<=n-x} alpha(x,g,h,w).
inline mpq_class hamming_poly_coeff(const KrawTable& k2m, const KrawTable& k4n, int t, int lambda,
                                    int i, int j) {
    mpz_class s = 0;
    // K_a(j; m, 2) = 0 for a > m (the generating function has degree m)
    for (int a = 0; a <= t && a <= k2m.n(); ++a)
        for (int g = 0; g <= t - lambda * a && g <= k4n.n(); ++g) s += k2m(a, j) * k4n(g, i);
    return mpq_class(s * s);
}

inline mpq_class hamming_poly_value(int n, int m, int t, int lambda, int x, int y) {
    mpz_class acc = 0;
    for (int a = 0; a <= t; ++a) {
        for (int b = 0; b <= t; ++b) {
            mpz_class bv = beta(m, y, a, b);
            if (bv == 0) continue;
            mpz_class inner = 0;
            for (int g = 0; g <= t - lambda * a; ++g)
                for (int h = 0; h <= t - lambda * b; ++h)
                    for (int w = 0; w <= n - x; ++w) inner += alpha(n, x, g, h, w);
            acc += bv * inner;
        }
    }
    return mpq_class(pow_int(4, n) * pow_int(2, m) * acc);
}

inline BoundPolynomial hamming_poly(int n, int m, int t, int lambda) {
    if (lambda < 1 || lambda > t + 1) throw std::invalid_argument("hamming_poly: need 1 <= lambda <= t+1");
    BoundPolynomial p;
    p.n = n;
    p.mr = m;
    p.dD = 2 * t + 1;
    p.region = BoundRegion::min_distance(2 * t + 1);
    p.coeffs = make_grid(n + 1, m + 1);
    p.values = make_grid(n + 1, m + 1);
    KrawTable k2m(m, 2), k4n(n, 4);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            p.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                hamming_poly_coeff(k2m, k4n, t, lambda, i, j);
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= m; ++y)
            p.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                hamming_poly_value(n, m, t, lambda, x, y);
    return p;
}

/// The hybrid polynomial for the rectangle region:
///   f(x,y) = 4^n 2^m ( sum_{i,j<=tD} sum_h alpha(x,i,j,h) ) ( sum_{u,v<=tS} beta(y,u,v) ).
inline BoundPolynomial hybrid_poly(int n, int m, int tD, int tS) {
    BoundPolynomial p;
    p.n = n;
    p.mr = m;
    p.dD = 2 * tD + 1;
    p.region = BoundRegion::rectangle(tD, tS);
    p.values = make_grid(n + 1, m + 1);
    mpz_class scale = pow_int(4, n) * pow_int(2, m);
    for (int x = 0; x <= n; ++x) {
        mpz_class ax = 0;
        for (int i = 0; i <= tD; ++i)
            for (int j = 0; j <= tD; ++j)
                for (int h = 0; h <= n - x; ++h) ax += alpha(n, x, i, j, h);
        for (int y = 0; y <= m; ++y) {
            mpz_class by = 0;
            for (int u = 0; u <= tS; ++u)
                for (int v = 0; v <= tS; ++v) by += beta(m, y, u, v);
            p.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = mpq_class(scale * ax * by);
        }
    }
    p.coeffs = expand_2d(p.values, n, 4, m, 2);
    return p;
}

/// Hamming bound for nondegenerate DS codes: largest k with
///   sum_{i<=t} C(n,i) 3^i sum_{j<=t-i} C(n-k,j)  <=  2^(n-k).
/// Negative return means no k >= 0 satisfies the bound.
inline int hamming_nondeg_max_k(int n, int d) {
    if (d % 2 == 0) throw std::invalid_argument("hamming_nondeg_max_k: d must be odd");
    int t = (d - 1) / 2;
    for (int k = n; k >= 0; --k) {
        mpz_class sum = 0;
        for (int i = 0; i <= t; ++i) {
            mpz_class inner = 0;
            for (int j = 0; j <= t - i; ++j) inner += binom(n - k, j);
            sum += binom(n, i) * pow_int(3, i) * inner;
        }
        if (sum <= pow_int(2, n - k)) return k;
    }
    return -1;
}

/// Hamming bound for unrestricted DS codes: largest k such that
///   min_{1<=lambda<=t+1} max{ f(0,0)/f_{0,0}, max_x f(x,0)/min_j f_{x,j} } >= 2^(2n)
/// with the polynomial re-instantiated at m = n-k per candidate.  Only the
/// coefficient rows x <= d-1 are needed, so the scan avoids the full grid.
inline int hamming_unrestricted_max_k(int n, int d) {
    if (d % 2 == 0) throw std::invalid_argument("hamming_unrestricted_max_k: d must be odd");
    const int t = (d - 1) / 2;
    const mpq_class target(pow_int(2, 2 * n));
    KrawTable k4n(n, 4);
    for (int k = n; k >= 0; --k) {
        const int m = n - k;
        KrawTable k2m(m, 2);
        bool any_lambda_fails = false;  // min over lambda < 2^(2n)
        for (int lambda = 1; lambda <= t + 1 && !any_lambda_fails; ++lambda) {
            // max term for this lambda; "unbounded" counts as passing
            bool unbounded = false;
            mpq_class best = hamming_poly_value(n, m, t, lambda, 0, 0) /
                             hamming_poly_coeff(k2m, k4n, t, lambda, 0, 0);
            best.canonicalize();
            // with m = 0 there are no syndrome columns: only the (0,0) term
            for (int x = 1; x <= d - 1 && !unbounded && m >= 1; ++x) {
                mpq_class num = hamming_poly_value(n, m, t, lambda, x, 0);
                if (num <= 0) continue;
                mpq_class denom = hamming_poly_coeff(k2m, k4n, t, lambda, x, 1);
                for (int j = 2; j <= m; ++j) {
                    mpq_class c = hamming_poly_coeff(k2m, k4n, t, lambda, x, j);
                    if (c < denom) denom = c;
                }
                if (denom == 0) {
                    unbounded = true;
                    break;
                }
                mpq_class term = num / denom;
                term.canonicalize();
                if (term > best) best = term;
            }
            if (!unbounded && best < target) any_lambda_fails = true;
        }
        if (!any_lambda_fails) return k;
    }
    return -1;
}

/// Hybrid Hamming bound: largest k with
///   sum_{i<=tD} sum_{j<=tS} C(n,i) 3^i C(n-k,j) <= 2^(n-k).
inline int hybrid_hamming_max_k(int n, int tD, int tS) {
    for (int k = n; k >= 0; --k) {
        mpz_class sum = 0;
        for (int i = 0; i <= tD; ++i)
            for (int j = 0; j <= tS; ++j) sum += binom(n, i) * pow_int(3, i) * binom(n - k, j);
        if (sum <= pow_int(2, n - k)) return k;
    }
    return -1;
}

}  // namespace qds
