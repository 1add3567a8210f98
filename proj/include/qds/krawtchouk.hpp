#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

// Exact-integer Krawtchouk polynomial machinery: the defining sum, tabulated
// values, product-expansion coefficients and the two-variable Krawtchouk
// expansion.  Everything in this header is exact; no floating point.

namespace qds {

/// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
/// (Callers that may produce half-integer lower indices check parity first.)
inline mpz_class binom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline mpz_class pow_int(long base, long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

/// K_i(x; n, q) = sum_j (-1)^j (q-1)^(i-j) C(x,j) C(n-x, i-j).
inline mpz_class kraw(long i, long x, long n, long q) {
    if (i < 0 || i > n || x < 0 || x > n) throw std::out_of_range("kraw: index out of range");
    mpz_class acc = 0;
    for (long j = 0; j <= i; ++j) {
        mpz_class term = pow_int(q - 1, i - j) * binom(x, j) * binom(n - x, i - j);
        if (j & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Table of K_i(x; n, q) for 0 <= i, x <= n.
class KrawTable {
  public:
    KrawTable(long n, long q) : n_(n), q_(q), v_(static_cast<std::size_t>((n + 1) * (n + 1))) {
        for (long i = 0; i <= n; ++i)
            for (long x = 0; x <= n; ++x) v_[idx(i, x)] = kraw(i, x, n, q);
    }
    const mpz_class& operator()(long i, long x) const { return v_[idx(i, x)]; }
    long n() const { return n_; }
    long q() const { return q_; }

  private:
    std::size_t idx(long i, long x) const {
        return static_cast<std::size_t>(i * (n_ + 1) + x);
    }
    long n_, q_;
    std::vector<mpz_class> v_;
};

/// Expansion coefficient for products of quaternary Krawtchouk polynomials:
///   K_g(i;n,4) K_h(i;n,4) = sum_x sum_w alpha(x,g,h,w) K_x(i;n,4).
/// The power of two is 2^(g+h-2w-x); whenever the binomials are nonzero the
/// exponent is nonnegative, so the value is an exact integer.
inline mpz_class alpha(long n, long x, long g, long h, long w) {
    long s = 2 * x + 2 * w - g - h;
    mpz_class b1 = binom(x, s);
    if (b1 == 0) return 0;
    mpz_class b2 = binom(n - x, w);
    if (b2 == 0) return 0;
    mpz_class b3 = binom(s, x + w - h);
    if (b3 == 0) return 0;
    long e = g + h - 2 * w - x;
    if (e < 0) throw std::logic_error("alpha: negative power with nonzero binomials");
    return b1 * b2 * b3 * pow_int(2, e) * pow_int(3, w);
}

/// Expansion coefficient for products of binary Krawtchouk polynomials:
///   K_a(j;m,2) K_b(j;m,2) = sum_y beta(y,a,b) K_y(j;m,2).
/// Half-integer lower indices evaluate to zero.
inline mpz_class beta(long m, long y, long a, long b) {
    if ((a + b - y) % 2 != 0) return 0;  // also covers (a-b+y), same parity
    return binom(m - y, (a + b - y) / 2) * binom(y, (a - b + y) / 2);
}

/// sum_j C(m,j) K_u(j;n,2) = 2^m C(n-m, u).  Returns the closed form.
inline mpz_class binom_kraw_sum(long m, long n, long u) {
    if (m < 0 || m > n) throw std::out_of_range("binom_kraw_sum: need 0 <= m <= n");
    return pow_int(2, m) * binom(n - m, u);
}

/// Exact rational grid, used for two-variable expansions and enumerators.
using QGrid = std::vector<std::vector<mpq_class>>;

inline QGrid make_grid(long rows, long cols, const mpq_class& fill = 0) {
    return QGrid(static_cast<std::size_t>(rows),
                 std::vector<mpq_class>(static_cast<std::size_t>(cols), fill));
}

/// Coefficients f_{i,j} of f(x,y) in the product basis
/// K_i(x;n,q1) K_j(y;mr,q2), from the values of f on the full grid:
///   f_{i,j} = 1/(q1^n q2^mr) sum_{x,y} f(x,y) K_x(i;n,q1) K_y(j;mr,q2).
inline QGrid expand_2d(const QGrid& f, long n, long q1, long mr, long q2) {
    if (f.size() != static_cast<std::size_t>(n + 1) ||
        f[0].size() != static_cast<std::size_t>(mr + 1))
        throw std::invalid_argument("expand_2d: grid shape mismatch");
    KrawTable k1(n, q1), k2(mr, q2);
    mpz_class norm = pow_int(q1, n) * pow_int(q2, mr);
    QGrid c = make_grid(n + 1, mr + 1);
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= mr; ++j) {
            mpq_class acc = 0;
            for (long x = 0; x <= n; ++x)
                for (long y = 0; y <= mr; ++y)
                    acc += f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                           mpq_class(k1(x, i) * k2(y, j));
            acc /= mpq_class(norm);
            acc.canonicalize();
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    }
    return c;
}

/// Evaluates f(x,y) = sum_{i,j} c_{i,j} K_i(x;n,q1) K_j(y;mr,q2) on the grid.
inline QGrid evaluate_2d(const QGrid& c, long n, long q1, long mr, long q2) {
    KrawTable k1(n, q1), k2(mr, q2);
    QGrid f = make_grid(n + 1, mr + 1);
    for (long x = 0; x <= n; ++x) {
        for (long y = 0; y <= mr; ++y) {
            mpq_class acc = 0;
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= mr; ++j)
                    acc += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                           mpq_class(k1(i, x) * k2(j, y));
            acc.canonicalize();
            f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = acc;
        }
    }
    return f;
}

}  // namespace qds
