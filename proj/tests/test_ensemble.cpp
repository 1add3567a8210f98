#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qds/ensemble.hpp"
#include "zoo.hpp"

using namespace qds;

TEST_CASE("ensemble counting formulas") {
    SECTION("n=1, m=1: three self-orthogonal rows") {
        EnsembleCounts c = ensemble_counts(EnsembleParams(1, 0, 0));
        CHECK(c.E == 3);  // rows 1, w, w^2
        CHECK(c.F == 1);
        CHECK(c.N == 3);
    }
    SECTION("|E| matches exhaustive counting for n=2") {
        // count ordered bases rejected down to matrices: m = 1 over n = 2:
        // nonzero self-orthogonal vectors of length 2
        long count = 0;
        for (std::uint64_t bits = 1; bits < 16; ++bits) {
            PauliVector v(2, bits & 3, bits >> 2);
            if (trace_inner(v, v) == 0) ++count;
        }
        EnsembleCounts c = ensemble_counts(EnsembleParams(2, 1, 0));
        CHECK(c.E == count);
    }
    SECTION("F counts full-column-rank binary matrices") {
        // m = 3, r = 2: (2^3 - 1)(2^3 - 2) = 42
        EnsembleCounts c = ensemble_counts(EnsembleParams(4, 1, 2));
        CHECK(c.F == 42);
        CHECK(c.N == c.E * c.F);
    }
    SECTION("L divides out to the per-word membership ratio") {
        // uniform pair-counting: sum over codes of (codewords with a,b nonzero)
        // equals L times the number of such pairs; here just integrality
        for (int n = 2; n <= 5; ++n)
            for (int k = 0; k < n; ++k) CHECK_NOTHROW(ensemble_counts(EnsembleParams(n, k, 0)));
    }
}

TEST_CASE("average enumerators") {
    SECTION("MacWilliams consistency for all small shapes") {
        for (int n = 2; n <= 6; ++n)
            for (int k = 0; k < n; ++k)
                for (int r = 0; r <= n - k; ++r) {
                    INFO("n=" << n << " k=" << k << " r=" << r);
                    CHECK(consistency_check(EnsembleParams(n, k, r)));
                }
    }
    SECTION("row and grid totals") {
        EnsembleParams p(4, 1, 2);
        AvgEnumerator a = avg_enumerators(p);
        mpq_class totB = 0, totBp = 0;
        for (const auto& row : a.B)
            for (const auto& v : row) totB += v;
        for (const auto& row : a.Bperp)
            for (const auto& v : row) totBp += v;
        CHECK(totB == mpq_class(pow_int(2, p.mr())));
        CHECK(totBp == mpq_class(pow_int(4, p.n)));
    }
    SECTION("exact match against full enumeration of a tiny ensemble") {
        // n=2, k=1, r=0: average B over every code in E_{2,1} (3 * 5 = 15
        // self-orthogonal nonzero rows) must equal the closed form
        EnsembleParams p(2, 1, 0);
        QGrid sumB = make_grid(3, 2), sumBp = make_grid(3, 2);
        long count = 0;
        for (std::uint64_t bits = 1; bits < 16; ++bits) {
            PauliVector v(2, bits & 3, bits >> 2);
            if (trace_inner(v, v) != 0) continue;
            DSCode code(StabilizerCheckMatrix(2, {v}), SMCode::empty(1));
            SplitWeightEnumerator B = enumerate_code(code), Bp = enumerate_dual(code);
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 1; ++j) {
                    sumB[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += mpq_class(B.at(i, j));
                    sumBp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += mpq_class(Bp.at(i, j));
                }
            ++count;
        }
        AvgEnumerator a = avg_enumerators(p);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 1; ++j) {
                mpq_class avgB = sumB[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / count;
                mpq_class avgBp = sumBp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / count;
                avgB.canonicalize();
                avgBp.canonicalize();
                INFO("i=" << i << " j=" << j);
                CHECK(avgB == a.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                CHECK(avgBp == a.Bperp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
    }
}

TEST_CASE("sampling") {
    std::mt19937_64 rng(2024);
    SECTION("check matrices are valid and reproducible") {
        std::mt19937_64 a(5), b(5);
        StabilizerCheckMatrix ha = sample_check_matrix(5, 3, a);
        StabilizerCheckMatrix hb = sample_check_matrix(5, 3, b);
        for (int i = 0; i < 3; ++i) CHECK(ha.row(i) == hb.row(i));
    }
    SECTION("SM matrices have full column rank") {
        for (int trial = 0; trial < 20; ++trial) {
            SMCode A = sample_sm_matrix(4, 3, rng);
            CHECK(A.full_column_rank());
        }
    }
    SECTION("empirical averages approach the closed form") {
        EnsembleParams p(3, 1, 1);
        AvgEnumerator exact = avg_enumerators(p);
        AvgEnumerator emp = sample_ensemble(p, 2000, 77);
        for (int i = 0; i <= p.n; ++i)
            for (int j = 0; j <= p.mr(); ++j) {
                double ev = exact.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
                double sv = emp.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
                if (ev < 0.25) continue;  // skip tiny cells
                INFO("i=" << i << " j=" << j << " exact=" << ev << " sampled=" << sv);
                CHECK(std::fabs(sv - ev) / ev < 0.15);
            }
    }
}

TEST_CASE("exponent formulas reject out-of-range xi") {
    CHECK_THROWS_AS(asymptotic_exponents(0.5, 0.0, 0.1, 0.6), std::domain_error);
    CHECK_NOTHROW(asymptotic_exponents(0.5, 0.1, 0.1, 0.5));
}
