#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qds/bounds_asymptotic.hpp"
#include "qds/ensemble.hpp"

using namespace qds;
using Catch::Approx;

TEST_CASE("entropy and its inverse") {
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(entropy(0.5) == Approx(1.0));
    CHECK(entropy(0.11) == Approx(0.499916).margin(1e-5));
    for (double x : {0.01, 0.1, 0.25, 0.4, 0.5}) CHECK(entropy(x) == Approx(entropy(1.0 - x)));
    for (double y : {0.0, 0.2, 0.5, 0.9, 1.0}) CHECK(entropy(inv_entropy(y)) == Approx(y).margin(1e-12));
    CHECK_THROWS_AS(entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(inv_entropy(1.5), std::domain_error);
}

TEST_CASE("iota_star maximizes the Hamming exponent") {
    for (double R : {0.1, 0.3, 0.6})
        for (double tau : {0.02, 0.05, 0.1}) {
            double i0 = iota_star(R, tau);
            CHECK(i0 >= 0.0);
            CHECK(i0 <= tau);
            auto g = [&](double i) {
                return entropy(i) + i * kLog2_3 + (1.0 - R) * entropy((tau - i) / (1.0 - R));
            };
            double best = g(i0);
            for (int s = 1; s <= 99; ++s) {
                double i = tau * s / 100.0;
                CHECK(g(i) <= best + 1e-9);
            }
        }
}

TEST_CASE("nondegenerate Hamming rate") {
    SECTION("root residual is tiny") {
        for (double delta : {0.02, 0.05, 0.1, 0.15}) {
            double R = hamming_nondeg_rate(delta);
            double tau = delta / 2.0;
            CHECK(std::fabs(hamming_exponent(R, tau) + R - 1.0) < 1e-9);
        }
    }
    SECTION("decreasing in delta, and 1 at delta = 0") {
        CHECK(hamming_nondeg_rate(0.0) == Approx(1.0).margin(1e-9));
        double prev = 1.0;
        for (double delta = 0.02; delta <= 0.2; delta += 0.02) {
            double R = hamming_nondeg_rate(delta);
            CHECK(R < prev);
            prev = R;
        }
    }
}

TEST_CASE("degenerate Hamming and LP1 rates") {
    CHECK(hamming_deg_rate(0.0) == Approx(1.0));
    CHECK(lp1_rate(0.0) == Approx(1.0).margin(1e-12));
    CHECK(hamming_deg_rate(1.0 / 3.0) == Approx(1.0 - kLog2_3 / 6.0 - entropy(1.0 / 6.0)));
    CHECK_THROWS_AS(hamming_deg_rate(0.4), std::domain_error);
    CHECK_THROWS_AS(lp1_rate(0.35), std::domain_error);
    SECTION("the nondegenerate bound is strictly stronger on a mid-range interval") {
        for (double delta : {0.05, 0.08, 0.1}) {
            double nd = hamming_nondeg_rate(delta);
            CHECK(nd < hamming_deg_rate(delta));
            CHECK(nd < lp1_rate(delta));
        }
    }
}

TEST_CASE("stabilizer GV distance") {
    SECTION("defining equation holds") {
        for (double R : {0.0, 0.1, 0.5, 0.9}) {
            double d = gv_stabilizer(R);
            CHECK(entropy(d) + d * kLog2_3 == Approx(1.0 - R).margin(1e-9));
        }
    }
    SECTION("known value at R = 0") { CHECK(gv_stabilizer(0.0) == Approx(0.18929).margin(1e-4)); }
    SECTION("decreasing in R") {
        CHECK(gv_stabilizer(0.2) > gv_stabilizer(0.4));
        CHECK(gv_stabilizer(0.4) > gv_stabilizer(0.8));
    }
}

TEST_CASE("DS GV distance") {
    SECTION("strictly below the stabilizer curve at rho = 0") {
        for (double R = 0.1; R <= 0.9; R += 0.1) {
            INFO("R=" << R);
            CHECK(gv_ds(R, 0.0) < gv_stabilizer(R));
            CHECK(gv_ds(R, 0.0) > 0.0);
        }
    }
    SECTION("nondecreasing in rho and capped by the stabilizer curve") {
        double R = 0.5;
        double prev = 0.0;
        for (double rho = 0.0; rho <= 1.0 - R + 1e-12; rho += 0.05) {
            double v = gv_ds(R, rho);
            CHECK(v >= prev - 1e-12);
            CHECK(v <= gv_stabilizer(R) + 1e-12);
            prev = v;
        }
    }
    SECTION("rho* sits strictly inside (0, 1-R)") {
        for (double R : {0.25, 0.5, 0.75}) {
            double rs = rho_star(R);
            INFO("R=" << R << " rho*=" << rs);
            CHECK(rs > 0.0);
            CHECK(rs < 1.0 - R);
            CHECK(gv_ds(R, rs) >= gv_stabilizer(R) - 2e-9);
        }
    }
    SECTION("argument validation") {
        CHECK_THROWS_AS(gv_ds(0.5, 0.6), std::domain_error);
        CHECK_THROWS_AS(gv_ds(-0.1, 0.0), std::domain_error);
    }
}

TEST_CASE("ensemble asymptotic exponents are internally consistent") {
    // at xi = 0 the dual exponent collapses to the zero-column form
    double R = 0.4, rho = 0.2;
    AsymptoticExponents e0 = asymptotic_exponents(R, rho, 0.1, 0.0);
    CHECK(e0.bperp_iota_xi == Approx(e0.bperp_iota_0 + (1.0 - R) - (1.0 - R + rho)).margin(1e-12));
    // the B and Bperp exponents differ by the fixed offset (1-R+rho) - 2 + 1 - R... :
    AsymptoticExponents e = asymptotic_exponents(R, rho, 0.1, 0.05);
    CHECK(e.b_iota_xi - e.bperp_iota_xi == Approx((1.0 - R + rho) - 2.0).margin(1e-12));
    CHECK(e.b_iota_xi - e.b_0_xi == Approx(entropy(0.1) + 0.1 * kLog2_3 - 1.0 - R).margin(1e-12));
}
