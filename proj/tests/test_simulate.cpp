#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qds/simulate.hpp"

using namespace qds;
using Catch::Approx;

TEST_CASE("readout flip probability") {
    SECTION("closed form equals the binomial sum") {
        for (int w : {1, 2, 4, 7})
            for (double p : {0.001, 0.01, 0.1, 0.3})
                CHECK(p_err(w, p) == Approx(p_err_sum(w, p)).margin(1e-15));
    }
    SECTION("edge values") {
        CHECK(p_err(1, 0.25) == Approx(0.25));
        CHECK(p_err(0, 0.3) == 0.0);
        CHECK(p_err(3, 0.5) == Approx(0.5));
        CHECK_THROWS_AS(p_err(-1, 0.1), std::invalid_argument);
        CHECK_THROWS_AS(p_err(2, 1.5), std::invalid_argument);
    }
    SECTION("increasing in the weight") {
        for (int w = 1; w < 6; ++w) CHECK(p_err(w, 0.01) < p_err(w + 1, 0.01));
    }
}

TEST_CASE("SM codewords and ML decoding") {
    SECTION("repetition codewords are blockwise copies") {
        SMCode rep = SMCode::repetition(2, 3);  // m=2, r=4, codeword (u, u, u)
        auto cw = sm_codewords(rep);
        REQUIRE(cw.size() == 4);
        for (std::uint64_t u = 0; u < 4; ++u)
            CHECK(cw[u] == (u | (u << 2) | (u << 4)));
    }
    SECTION("ML decoding corrects below half distance") {
        SMCode rep = SMCode::repetition(1, 5);  // [5,1] repetition
        auto cw = sm_codewords(rep);
        auto cost = bit_costs(std::vector<double>(5, 0.1));
        // up to 2 flips decode to 0, three or more to 1
        for (std::uint64_t e = 0; e < 32; ++e) {
            std::uint64_t u = ml_decode(cw, e, cost);
            CHECK(u == (std::popcount(e) >= 3 ? 1u : 0u));
        }
    }
    SECTION("ties go to the smallest message") {
        SMCode rep = SMCode::repetition(1, 2);  // codewords 00, 11
        auto cw = sm_codewords(rep);
        auto cost = bit_costs(std::vector<double>(2, 0.2));
        CHECK(ml_decode(cw, 0b01, cost) == 0);
        CHECK(ml_decode(cw, 0b10, cost) == 0);
    }
    SECTION("non-uniform costs can override Hamming distance") {
        SMCode rep = SMCode::repetition(1, 3);
        auto cw = sm_codewords(rep);
        // bit 0 is almost always flipped; observing 011 should decode to 1
        auto cost = bit_costs({0.49, 0.01, 0.01});
        CHECK(ml_decode(cw, 0b110, cost) == 1);
    }
}

TEST_CASE("exact block error probability") {
    SECTION("single-bit code") {
        SMCode triv = SMCode::empty(1);  // m=1, r=0: codewords 0 and 1 distance 1
        PseResult res = exact_Pse(triv, {0.1});
        // any flip is undetectable but the ML decision on one bit decodes the
        // flipped observation to the wrong message with probability q
        CHECK(res.P_se == Approx(0.1));
        CHECK(res.P_sber == Approx(0.1));
    }
    SECTION("repetition matches the majority-vote closed form") {
        SMCode rep = SMCode::repetition(3, 5);
        for (double q : {0.001, 0.01, 0.05, 0.2}) {
            PseResult res = exact_Pse(rep, std::vector<double>(15, q));
            INFO("q=" << q);
            CHECK(std::fabs(res.P_se - repetition5_oracle(q)) < 1e-12);
        }
    }
    SECTION("uniform and per-pattern paths agree") {
        SMCode rep = SMCode::repetition(2, 3);
        double q = 0.07;
        PseResult uni = exact_Pse(rep, std::vector<double>(6, q));
        // break uniformity detection with an epsilon-identical second array
        std::vector<double> probs(6, q);
        probs[0] = std::nextafter(q, 1.0);
        PseResult gen = exact_Pse(rep, probs);
        CHECK(uni.P_se == Approx(gen.P_se).margin(1e-9));
        CHECK(uni.P_sber == Approx(gen.P_sber).margin(1e-9));
    }
}

TEST_CASE("Monte Carlo agrees with the exact evaluation") {
    SMCode rep = SMCode::repetition(3, 5);
    std::vector<double> probs(15, 0.05);
    PseResult exact = exact_Pse(rep, probs);
    McResult mc = mc_Pse(rep, probs, 200000, 42);
    CHECK(std::fabs(mc.P_se - exact.P_se) < std::max(3.0 * mc.radius / 1.96, 1e-4));
    // determinism
    McResult mc2 = mc_Pse(rep, probs, 1000, 42);
    McResult mc3 = mc_Pse(rep, probs, 1000, 42);
    CHECK(mc2.P_se == mc3.P_se);
}

TEST_CASE("code-vs-repetition comparison table") {
    std::vector<double> grid = {0.005, 0.01, 0.02};
    auto rows = fig1_table(grid);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        INFO("p_m=" << rows[i].p_m);
        CHECK(rows[i].p_m == grid[i]);
        // the [15,3] code (distance 8) beats 5-fold repetition (distance 5)
        CHECK(rows[i].code.P_se < rows[i].rep.P_se);
        // and the repetition column matches its closed form
        double q = p_err(4, rows[i].p_m);
        CHECK(std::fabs(rows[i].rep.P_se - repetition5_oracle(q)) < 1e-12);
    }
    // P_se grows with the measurement error rate
    CHECK(rows[0].code.P_se < rows[1].code.P_se);
    CHECK(rows[1].code.P_se < rows[2].code.P_se);
}
