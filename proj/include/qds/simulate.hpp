#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "code.hpp"

// Syndrome-measurement decoding: the per-bit readout flip model, maximum-
// likelihood decoding of the SM code, and exact / Monte Carlo evaluation of
// the block error probability P_se and per-bit error rate P_SBER.

namespace qds {

/// Probability that the readout of a weight-w stabilizer flips:
/// sum over odd i of C(w,i) p^i (1-p)^(w-i) = (1 - (1-2p)^w)/2.
inline double p_err(int weight, double p_m) {
    if (weight < 0 || p_m < 0.0 || p_m > 1.0) throw std::invalid_argument("p_err: bad arguments");
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p_m, weight));
}

/// Same quantity through the defining binomial sum (self-check path).
inline double p_err_sum(int weight, double p_m) {
    double acc = 0.0;
    for (int i = 1; i <= weight; i += 2) {
        double term = std::pow(p_m, i) * std::pow(1.0 - p_m, weight - i);
        double c = 1.0;
        for (int a = 0; a < i; ++a) c = c * (weight - a) / (a + 1);
        acc += c * term;
    }
    return acc;
}

/// All 2^m codewords of G = [I_m A], indexed by message.
inline std::vector<std::uint64_t> sm_codewords(const SMCode& A) {
    if (A.m() > 24) throw std::length_error("sm_codewords: 2^m too large");
    std::vector<std::uint64_t> gen = sm_generator(A);
    std::vector<std::uint64_t> cw(1ull << A.m(), 0);
    for (std::uint64_t u = 0; u < cw.size(); ++u) {
        std::uint64_t c = 0;
        for (int i = 0; i < A.m(); ++i)
            if ((u >> i) & 1) c ^= gen[static_cast<std::size_t>(i)];
        cw[u] = c;
    }
    return cw;
}

/// ML decoding under independent per-bit flips: the codeword minimizing
/// sum over mismatched bits of log((1-p_b)/p_b).  Ties go to the smallest
/// message index.  Returns the message (information bits).
inline std::uint64_t ml_decode(const std::vector<std::uint64_t>& codewords, std::uint64_t observed,
                               const std::vector<double>& bit_cost) {
    std::uint64_t best_u = 0;
    double best_cost = -1.0;
    for (std::uint64_t u = 0; u < codewords.size(); ++u) {
        std::uint64_t e = codewords[u] ^ observed;
        double cost = 0.0;
        while (e) {
            int b = std::countr_zero(e);
            e &= e - 1;
            cost += bit_cost[static_cast<std::size_t>(b)];
        }
        if (best_cost < 0.0 || cost < best_cost) {
            best_cost = cost;
            best_u = u;
        }
    }
    return best_u;
}

inline std::vector<double> bit_costs(const std::vector<double>& flip_probs) {
    std::vector<double> w;
    for (double p : flip_probs) {
        if (p <= 0.0 || p >= 0.5) throw std::domain_error("bit_costs: need flip probabilities in (0, 1/2)");
        w.push_back(std::log((1.0 - p) / p));
    }
    return w;
}

struct PseResult {
    double P_se = 0.0;    // Pr(decoded information bits != transmitted)
    double P_sber = 0.0;  // average per-bit error rate of the information bits
};

/// Exact evaluation over all 2^(m+r) flip patterns, conditioned on the
/// all-zero codeword (valid by linearity and channel symmetry).  With a
/// uniform flip probability the patterns are aggregated by weight first,
/// which keeps the final sum at m+r+1 floating-point terms.
inline PseResult exact_Pse(const SMCode& A, const std::vector<double>& flip_probs) {
    const int len = A.m() + A.r();
    if (len > 22) throw std::length_error("exact_Pse: 2^(m+r) too large");
    if (static_cast<int>(flip_probs.size()) != len)
        throw std::invalid_argument("exact_Pse: need one flip probability per bit");
    auto codewords = sm_codewords(A);
    auto cost = bit_costs(flip_probs);

    bool uniform = true;
    for (double p : flip_probs)
        if (p != flip_probs[0]) uniform = false;

    PseResult res;
    if (uniform) {
        std::vector<std::uint64_t> fail_by_weight(static_cast<std::size_t>(len + 1), 0);
        std::vector<std::uint64_t> bitfail_by_weight(static_cast<std::size_t>(len + 1), 0);
        for (std::uint64_t e = 0; e < (1ull << len); ++e) {
            std::uint64_t u = ml_decode(codewords, e, cost);
            int w = std::popcount(e);
            if (u != 0) fail_by_weight[static_cast<std::size_t>(w)] += 1;
            bitfail_by_weight[static_cast<std::size_t>(w)] += static_cast<std::uint64_t>(std::popcount(u));
        }
        double q = flip_probs[0];
        for (int w = 0; w <= len; ++w) {
            double pw = std::pow(q, w) * std::pow(1.0 - q, len - w);
            res.P_se += static_cast<double>(fail_by_weight[static_cast<std::size_t>(w)]) * pw;
            res.P_sber += static_cast<double>(bitfail_by_weight[static_cast<std::size_t>(w)]) * pw;
        }
    } else {
        for (std::uint64_t e = 0; e < (1ull << len); ++e) {
            double pr = 1.0;
            for (int b = 0; b < len; ++b) pr *= ((e >> b) & 1) ? flip_probs[static_cast<std::size_t>(b)]
                                                               : 1.0 - flip_probs[static_cast<std::size_t>(b)];
            std::uint64_t u = ml_decode(codewords, e, cost);
            if (u != 0) res.P_se += pr;
            res.P_sber += pr * std::popcount(u);
        }
    }
    res.P_sber /= A.m();
    return res;
}

struct McResult {
    double P_se = 0.0;
    double P_sber = 0.0;
    double radius = 0.0;  // 95% binomial confidence radius on P_se
};

/// Monte Carlo estimate over random flip patterns; seed-deterministic.
inline McResult mc_Pse(const SMCode& A, const std::vector<double>& flip_probs, long trials,
                       std::uint64_t seed) {
    const int len = A.m() + A.r();
    if (trials < 1) throw std::invalid_argument("mc_Pse: need trials >= 1");
    auto codewords = sm_codewords(A);
    auto cost = bit_costs(flip_probs);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    long block_err = 0;
    long bit_err = 0;
    for (long t = 0; t < trials; ++t) {
        std::uint64_t e = 0;
        for (int b = 0; b < len; ++b)
            if (unif(rng) < flip_probs[static_cast<std::size_t>(b)]) e |= 1ull << b;
        std::uint64_t u = ml_decode(codewords, e, cost);
        if (u != 0) ++block_err;
        bit_err += std::popcount(u);
    }
    McResult res;
    res.P_se = static_cast<double>(block_err) / trials;
    res.P_sber = static_cast<double>(bit_err) / trials / A.m();
    res.radius = 1.96 * std::sqrt(res.P_se * (1.0 - res.P_se) / trials);
    return res;
}

/// Closed-form block error probability of the 5-fold repetition of 3 bits
/// under per-bit majority vote with a uniform flip probability q.
inline double repetition5_oracle(double q) {
    double p_bit = 0.0;
    for (int i = 3; i <= 5; ++i) {
        double c = i == 3 ? 10.0 : (i == 4 ? 5.0 : 1.0);
        p_bit += c * std::pow(q, i) * std::pow(1.0 - q, 5 - i);
    }
    double ok = 1.0 - p_bit;
    return 1.0 - ok * ok * ok;
}

struct Fig1Row {
    double p_m = 0.0;
    PseResult code;  // the [15,3] SM code
    PseResult rep;   // 5-fold repetition of the 3 syndrome bits
};

/// The code-vs-repetition comparison: all measured stabilizers have weight
/// 4, so every readout bit flips with q = p_err(4, p_m) in both schemes.
inline std::vector<Fig1Row> fig1_table(const std::vector<double>& pm_grid) {
    SMCode code = builtin_sm_15_3();
    SMCode rep = SMCode::repetition(3, 5);
    std::vector<Fig1Row> out;
    for (double pm : pm_grid) {
        double q = p_err(4, pm);
        std::vector<double> probs(15, q);
        Fig1Row row;
        row.p_m = pm;
        row.code = exact_Pse(code, probs);
        row.rep = exact_Pse(rep, probs);
        out.push_back(row);
    }
    return out;
}

}  // namespace qds
