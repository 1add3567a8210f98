#pragma once

// Shared test fixture: a reproducible zoo of small random DS codes.

#include <random>
#include <vector>

#include "qds/code.hpp"
#include "qds/ensemble.hpp"

namespace qds::testing {

/// `count` random DS codes with n <= 6, 1 <= m <= 4, 0 <= r <= 2.
inline std::vector<DSCode> small_code_zoo(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DSCode> zoo;
    while (static_cast<int>(zoo.size()) < count) {
        int n = 2 + static_cast<int>(rng() % 5);            // 2..6
        int m = 1 + static_cast<int>(rng() % std::min(4, n));  // 1..min(4,n)
        int r = static_cast<int>(rng() % (std::min(2, m) + 1));
        StabilizerCheckMatrix H = sample_check_matrix(n, m, rng);
        SMCode A = r == 0 ? SMCode::empty(m) : sample_sm_matrix(m, r, rng);
        zoo.emplace_back(std::move(H), std::move(A));
    }
    return zoo;
}

}  // namespace qds::testing
