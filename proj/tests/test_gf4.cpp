#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "qds/gf4.hpp"

using namespace qds;

TEST_CASE("F4 field axioms") {
    std::vector<F4> all = {F4::zero(), F4::one(), F4::omega(), F4::omega_sq()};
    for (F4 a : all) {
        CHECK(a + a == F4::zero());
        for (F4 b : all) {
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
        }
    }
    CHECK(F4::omega() * F4::omega() == F4::omega_sq());
    CHECK(F4::omega() * F4::omega() * F4::omega() == F4::one());
    CHECK(F4::omega_sq() == F4::omega() + F4::one());
}

TEST_CASE("F4 conjugation and trace") {
    CHECK(F4::zero().conj() == F4::zero());
    CHECK(F4::one().conj() == F4::one());
    CHECK(F4::omega().conj() == F4::omega_sq());
    CHECK(F4::omega_sq().conj() == F4::omega());
    CHECK(F4::zero().trace() == 0);
    CHECK(F4::one().trace() == 0);
    CHECK(F4::omega().trace() == 1);
    CHECK(F4::omega_sq().trace() == 1);
    // Tr(x) = x + x^2 as field arithmetic
    for (F4 a : {F4::zero(), F4::one(), F4::omega(), F4::omega_sq()}) {
        F4 t = a + a * a;
        CHECK((t == F4::one() ? 1 : 0) == a.trace());
    }
}

TEST_CASE("tau map") {
    PauliVector p = tau_map("XYZII");
    CHECK(p.str() == "1Ww00");
    CHECK(p.pauli_str() == "XYZII");
    CHECK(tau_map("II").is_zero());
    CHECK(tau_map("Y")[0] == F4::omega_sq());
    CHECK_THROWS_AS(tau_map("XQ"), std::invalid_argument);
}

TEST_CASE("trace inner product basics") {
    CHECK(trace_inner(parse_f4_vector("1"), parse_f4_vector("1")) == 0);  // X vs X
    CHECK(trace_inner(parse_f4_vector("1"), parse_f4_vector("w")) == 1);  // X vs Z
    PauliVector x = tau_map("XYZII");
    CHECK(trace_inner(x, x) == 0);
    CHECK_THROWS_AS(trace_inner(parse_f4_vector("1"), parse_f4_vector("11")), std::invalid_argument);
}

TEST_CASE("trace inner product is symmetric, biadditive, alternating") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto rnd = [&] {
            return PauliVector(n, rng(), rng());
        };
        PauliVector a = rnd(), b = rnd(), c = rnd();
        CHECK(trace_inner(a, b) == trace_inner(b, a));
        CHECK(trace_inner(a + b, c) == (trace_inner(a, c) ^ trace_inner(b, c)));
        CHECK(trace_inner(a, a) == 0);
    }
}

namespace {

// 2^n x 2^n complex Pauli matrices for the commutator cross-check.
using Mat = std::vector<std::vector<std::complex<int>>>;

Mat pauli_matrix(const PauliVector& p) {
    const std::complex<int> I(0, 1);
    auto single = [&](F4 e) -> Mat {
        switch (e.v) {
            case 0: return {{1, 0}, {0, 1}};
            case 1: return {{0, 1}, {1, 0}};
            case 2: return {{1, 0}, {0, -1}};
            default: return {{0, -I}, {I, 0}};
        }
    };
    Mat acc = single(p[0]);
    for (int q = 1; q < p.n; ++q) {
        Mat next = single(p[q]);
        Mat out(acc.size() * 2, std::vector<std::complex<int>>(acc.size() * 2, 0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < acc.size(); ++j)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b)
                        out[2 * i + a][2 * j + b] = acc[i][j] * next[a][b];
        acc = std::move(out);
    }
    return acc;
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat out(a.size(), std::vector<std::complex<int>>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k)
            for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

}  // namespace

TEST_CASE("trace inner product matches the Pauli commutator") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            PauliVector g(n, rng(), rng()), h(n, rng(), rng());
            bool commute = matmul(pauli_matrix(g), pauli_matrix(h)) == matmul(pauli_matrix(h), pauli_matrix(g));
            CHECK(trace_inner(g, h) == (commute ? 0 : 1));
        }
    }
}

TEST_CASE("split weight") {
    CHECK(split_weight(DSVector(PauliVector(5), BitVec(3))) == std::pair{0, 0});
    CHECK(split_weight(DSVector(tau_map("XYZII"), parse_bit_vector("101"))) == std::pair{3, 2});
    CHECK(split_weight(DSVector(PauliVector(7), parse_bit_vector("111111"))) == std::pair{0, 6});
}

TEST_CASE("star product") {
    DSVector e1(PauliVector(2), parse_bit_vector("10"));
    CHECK(star(e1, e1) == 1);
    DSVector x(parse_f4_vector("1"), BitVec(0)), z(parse_f4_vector("w"), BitVec(0));
    CHECK(star(x, z) == 1);
    DSVector zero(PauliVector(2), BitVec(2));
    CHECK(star(e1, zero) == 0);
    CHECK_THROWS_AS(star(e1, DSVector(PauliVector(2), BitVec(3))), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8), mr = static_cast<int>(rng() % 8);
        auto rnd = [&] {
            return DSVector(PauliVector(n, rng(), rng()), BitVec(mr, rng()));
        };
        DSVector a = rnd(), b = rnd(), c = rnd();
        CHECK(star(a, b) == star(b, a));
        CHECK(star(a + b, c) == (star(a, c) ^ star(b, c)));
    }
}

TEST_CASE("vector parsing accepts both alphabets") {
    CHECK(parse_f4_vector("01wW") == tau_map("IXZY"));
    CHECK(parse_f4_vector("IXZY") == tau_map("IXZY"));
    CHECK_THROWS_AS(parse_f4_vector("012"), std::invalid_argument);
    CHECK(parse_bit_vector("0110").weight() == 2);
    CHECK_THROWS_AS(parse_bit_vector("01x"), std::invalid_argument);
}
