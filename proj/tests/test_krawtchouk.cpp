#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qds/krawtchouk.hpp"

using namespace qds;

TEST_CASE("binomial convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(3, 4) == 0);
    CHECK(binom(0, 0) == 1);
}

TEST_CASE("Krawtchouk basic values") {
    CHECK(kraw(0, 5, 7, 4) == 1);
    CHECK(kraw(2, 0, 7, 4) == 189);  // (q-1)^j C(n,j)
    for (long n = 1; n <= 10; ++n)
        for (long q : {2L, 4L})
            for (long j = 0; j <= n; ++j) CHECK(kraw(j, 0, n, q) == pow_int(q - 1, j) * binom(n, j));
}

TEST_CASE("Krawtchouk orthogonality") {
    mpz_class acc = 0;
    for (long i = 0; i <= 7; ++i) acc += kraw(3, i, 7, 2) * kraw(i, 3, 7, 2);
    CHECK(acc == 128);
    for (long n = 1; n <= 8; ++n)
        for (long q : {2L, 4L})
            for (long r = 0; r <= n; ++r)
                for (long s = 0; s <= n; ++s) {
                    mpz_class sum = 0;
                    for (long i = 0; i <= n; ++i) sum += kraw(r, i, n, q) * kraw(i, s, n, q);
                    CHECK(sum == (r == s ? pow_int(q, n) : mpz_class(0)));
                }
}

TEST_CASE("weighted row sums vanish except at i = 0") {
    // sum_j C(n,j)(q-1)^j K_i(j;n,q) = q^n delta_{i,0}
    for (long n = 1; n <= 10; ++n)
        for (long q : {2L, 4L})
            for (long i = 0; i <= n; ++i) {
                mpz_class sum = 0;
                for (long j = 0; j <= n; ++j) sum += binom(n, j) * pow_int(q - 1, j) * kraw(i, j, n, q);
                CHECK(sum == (i == 0 ? pow_int(q, n) : mpz_class(0)));
            }
}

TEST_CASE("binomial-Krawtchouk contraction identity") {
    // sum_i C(n-i, n-j) K_i(x;n,q) = q^j C(n-x, j)
    for (long n = 1; n <= 10; ++n)
        for (long q : {2L, 4L})
            for (long j = 0; j <= n; ++j)
                for (long x = 0; x <= n; ++x) {
                    mpz_class sum = 0;
                    for (long i = 0; i <= n; ++i) sum += binom(n - i, n - j) * kraw(i, x, n, q);
                    CHECK(sum == pow_int(q, j) * binom(n - x, j));
                }
}

TEST_CASE("alpha edge cases") {
    CHECK(alpha(5, 0, 0, 0, 0) == 1);
    CHECK(alpha(5, 1, 3, 1, 0) == 0);  // 2x+2w-g-h < 0
}

TEST_CASE("alpha expands quaternary Krawtchouk products") {
    // K_g(i;n,4) K_h(i;n,4) = sum_{x,w} alpha(x,g,h,w) K_x(i;n,4)
    for (long n = 2; n <= 8; ++n) {
        KrawTable k(n, 4);
        for (long g = 0; g <= 3 && g <= n; ++g)
            for (long h = 0; h <= 3 && h <= n; ++h)
                for (long i = 0; i <= n; ++i) {
                    mpz_class rhs = 0;
                    for (long x = 0; x <= n; ++x)
                        for (long w = 0; w <= n; ++w) rhs += alpha(n, x, g, h, w) * k(x, i);
                    CHECK(rhs == k(g, i) * k(h, i));
                }
    }
}

TEST_CASE("beta edge cases") {
    CHECK(beta(4, 0, 0, 0) == 1);
    CHECK(beta(4, 3, 1, 1) == 0);  // a+b < y
}

TEST_CASE("beta expands binary Krawtchouk products") {
    // K_a(j;m,2) K_b(j;m,2) = sum_u beta(u,a,b) K_u(j;m,2)
    for (long m = 1; m <= 10; ++m) {
        KrawTable k(m, 2);
        for (long a = 0; a <= 4 && a <= m; ++a)
            for (long b = 0; b <= 4 && b <= m; ++b)
                for (long j = 0; j <= m; ++j) {
                    mpz_class rhs = 0;
                    for (long u = 0; u <= m; ++u) rhs += beta(m, u, a, b) * k(u, j);
                    CHECK(rhs == k(a, j) * k(b, j));
                }
    }
}

TEST_CASE("binomial sum against binary Krawtchouk") {
    CHECK(binom_kraw_sum(3, 7, 0) == 8);
    CHECK(binom_kraw_sum(7, 7, 1) == 0);
    CHECK(binom_kraw_sum(3, 7, 2) == 48);
    // left side by direct summation
    for (long n = 1; n <= 10; ++n)
        for (long m = 0; m <= n; ++m)
            for (long u = 0; u <= 4 && u <= n; ++u) {
                mpz_class lhs = 0;
                for (long j = 0; j <= m; ++j) lhs += binom(m, j) * kraw(u, j, n, 2);
                CHECK(lhs == binom_kraw_sum(m, n, u));
            }
}

TEST_CASE("two-variable expansion round trip") {
    const long n = 4, q1 = 4, mr = 3, q2 = 2;
    SECTION("constant function") {
        QGrid f = make_grid(n + 1, mr + 1, 1);
        QGrid c = expand_2d(f, n, q1, mr, q2);
        CHECK(c[0][0] == 1);
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= mr; ++j)
                if (i || j) CHECK(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
    }
    SECTION("a Krawtchouk basis function") {
        QGrid f = make_grid(n + 1, mr + 1);
        for (long x = 0; x <= n; ++x)
            for (long y = 0; y <= mr; ++y)
                f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = mpq_class(kraw(1, x, n, q1));
        QGrid c = expand_2d(f, n, q1, mr, q2);
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= mr; ++j)
                CHECK(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      ((i == 1 && j == 0) ? 1 : 0));
    }
    SECTION("random table round trip") {
        std::mt19937_64 rng(19);
        QGrid f = make_grid(n + 1, mr + 1);
        for (auto& row : f)
            for (auto& v : row) v = mpq_class(static_cast<long>(rng() % 2001) - 1000);
        QGrid c = expand_2d(f, n, q1, mr, q2);
        QGrid back = evaluate_2d(c, n, q1, mr, q2);
        CHECK(back == f);
    }
}
