#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "code.hpp"
#include "f2.hpp"
#include "gf4.hpp"
#include "krawtchouk.hpp"

// Split weight enumerators of C_DS and its dual, the MacWilliams transform
// between them, minimum distance (two independent paths) and degeneracy.

namespace qds {

enum class Side { code, dual };

/// Exact 2-D table B[i][j], 0 <= i <= n, 0 <= j <= m+r.
struct SplitWeightEnumerator {
    int n = 0;
    int m = 0;
    int r = 0;
    Side side = Side::code;
    std::vector<std::vector<mpz_class>> counts;  // (n+1) x (m+r+1)

    SplitWeightEnumerator() = default;
    SplitWeightEnumerator(int n_, int m_, int r_, Side s)
        : n(n_), m(m_), r(r_), side(s),
          counts(static_cast<std::size_t>(n_ + 1),
                 std::vector<mpz_class>(static_cast<std::size_t>(m_ + r_ + 1), 0)) {}

    mpz_class& at(int i, int j) { return counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const mpz_class& at(int i, int j) const {
        return counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    mpz_class total() const {
        mpz_class t = 0;
        for (auto& row : counts)
            for (auto& v : row) t += v;
        return t;
    }
    friend bool operator==(const SplitWeightEnumerator& a, const SplitWeightEnumerator& b) {
        return a.n == b.n && a.m == b.m && a.r == b.r && a.counts == b.counts;
    }
};

/// Enumerates C_DS: all F2-combinations u of the m+r rows of H_DS.
inline SplitWeightEnumerator enumerate_code(const DSCode& code) {
    const int mr = code.mr();
    if (mr > 30) throw std::length_error("enumerate_code: 2^(m+r) too large");
    SplitWeightEnumerator B(code.n(), code.m(), code.r(), Side::code);

    std::vector<DSVector> rows;
    for (int i = 0; i < mr; ++i) rows.push_back(code.ds_row(i));

    // Gray-code walk over subsets: one row-addition per step.
    DSVector w(PauliVector(code.n()), BitVec(mr));
    std::uint64_t prev = 0;
    B.at(0, 0) += 1;
    for (std::uint64_t u = 1; u < (1ull << mr); ++u) {
        std::uint64_t g = u ^ (u >> 1);
        std::uint64_t flip = g ^ prev;
        prev = g;
        int bit = std::countr_zero(flip);
        w = w + rows[static_cast<std::size_t>(bit)];
        auto [i, j] = split_weight(w);
        B.at(i, j) += 1;
    }
    return B;
}

/// Enumerates C_DS^perp via its characterization: every dual word is
/// (e, s(e), A^T s(e)) for a unique data error e in F4^n, so the dual has
/// exactly 4^n elements.
inline SplitWeightEnumerator enumerate_dual(const DSCode& code, int n_limit = 14) {
    const int n = code.n();
    if (n > n_limit) throw std::length_error("enumerate_dual: 4^n too large");
    SplitWeightEnumerator B(n, code.m(), code.r(), Side::dual);

    const int m = code.m(), r = code.r();
    std::vector<std::uint64_t> acols(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) acols[static_cast<std::size_t>(j)] = code.A().column_bits(j);

    // Walk F4^n in Gray order over 2n bits (x plane low, z plane high),
    // maintaining the syndrome incrementally: flipping one plane bit of
    // position p XORs a fixed syndrome increment.
    std::vector<std::uint64_t> syn_inc(static_cast<std::size_t>(2 * n), 0);
    for (int p = 0; p < n; ++p) {
        for (int plane = 0; plane < 2; ++plane) {
            PauliVector unit(n, plane == 0 ? (1ull << p) : 0, plane == 1 ? (1ull << p) : 0);
            std::uint64_t s = 0;
            for (int i = 0; i < m; ++i) s |= std::uint64_t(trace_inner(code.H().row(i), unit)) << i;
            std::uint64_t full = s;
            for (int j = 0; j < r; ++j)
                full |= std::uint64_t(parity64(acols[static_cast<std::size_t>(j)] & s)) << (m + j);
            syn_inc[static_cast<std::size_t>(plane * n + p)] = full;
        }
    }

    std::uint64_t x = 0, z = 0, syn = 0, prev = 0;
    B.at(0, 0) += 1;
    const std::uint64_t count = 1ull << (2 * n);
    for (std::uint64_t u = 1; u < count; ++u) {
        std::uint64_t g = u ^ (u >> 1);
        int bit = std::countr_zero(g ^ prev);
        prev = g;
        if (bit < n)
            x ^= 1ull << bit;
        else
            z ^= 1ull << (bit - n);
        syn ^= syn_inc[static_cast<std::size_t>(bit)];
        B.at(std::popcount(x | z), std::popcount(syn)) += 1;
    }
    return B;
}

/// Independent oracle: scans the full ambient space F4^n x F2^(m+r) and
/// keeps the vectors star-orthogonal to every row of H_DS.
inline SplitWeightEnumerator brute_force_dual(const DSCode& code) {
    const int n = code.n(), mr = code.mr();
    if (2 * n + mr > 24) throw std::length_error("brute_force_dual: ambient space too large");
    SplitWeightEnumerator B(n, code.m(), code.r(), Side::dual);

    std::vector<DSVector> rows;
    for (int i = 0; i < mr; ++i) rows.push_back(code.ds_row(i));

    for (std::uint64_t dz = 0; dz < (1ull << n); ++dz) {
        for (std::uint64_t dx = 0; dx < (1ull << n); ++dx) {
            PauliVector e(n, dx, dz);
            for (std::uint64_t s = 0; s < (1ull << mr); ++s) {
                DSVector v(e, BitVec(mr, s));
                bool ortho = true;
                for (auto& row : rows)
                    if (star(v, row)) { ortho = false; break; }
                if (ortho) B.at(e.weight(), std::popcount(s)) += 1;
            }
        }
    }
    return B;
}

/// MacWilliams transform between the two sides:
///   dual -> code:  B_{x,y} = 4^{-n}      sum B^perp_{i,j} K_x(i;n,4) K_y(j;m+r,2)
///   code -> dual:  B^perp_{x,y} = 2^{-(m+r)} sum B_{i,j} K_x(i;n,4) K_y(j;m+r,2).
/// Throws if the transform is not integral (inconsistent input).
inline SplitWeightEnumerator macwilliams(const SplitWeightEnumerator& B) {
    const int n = B.n, mr = B.m + B.r;
    KrawTable k4(n, 4), k2(mr, 2);
    mpz_class norm = B.side == Side::dual ? pow_int(4, n) : pow_int(2, mr);
    SplitWeightEnumerator out(B.n, B.m, B.r, B.side == Side::dual ? Side::code : Side::dual);
    for (int x = 0; x <= n; ++x) {
        for (int y = 0; y <= mr; ++y) {
            mpz_class acc = 0;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= mr; ++j) acc += B.at(i, j) * k4(x, i) * k2(y, j);
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), norm.get_mpz_t());
            if (rem != 0 || q < 0)
                throw std::domain_error("macwilliams: non-integral or negative output at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
            out.at(x, y) = q;
        }
    }
    return out;
}

struct DistanceResult {
    int d = 0;
    bool degenerate = false;
};

/// Minimum distance by direct scan: min over e in F4^n with e outside the
/// stabilizer row space C of wt(e) + wt(extended syndrome of e).
inline DistanceResult min_distance(const DSCode& code, int n_limit = 14) {
    const int n = code.n();
    if (n > n_limit) throw std::length_error("min_distance: 4^n too large");
    if (code.m() == 0) throw std::domain_error("min_distance: no stabilizers (k = n)");

    F2Basis stab(2 * n);
    for (int i = 0; i < code.m(); ++i) stab.insert(code.H().row(i).symplectic_bits());

    int best = n + code.mr() + 1;
    for (std::uint64_t dz = 0; dz < (1ull << n); ++dz) {
        for (std::uint64_t dx = 0; dx < (1ull << n); ++dx) {
            PauliVector e(n, dx, dz);
            if (stab.contains(e.symplectic_bits())) continue;
            int w = e.weight();
            if (w >= best) continue;
            w += code.extended_syndrome(e).weight();
            if (w < best) best = w;
        }
    }

    // degeneracy: stabilizer-side mass strictly below d
    bool degen = false;
    SplitWeightEnumerator B = enumerate_code(code);
    for (int i = 1; i < best && !degen; ++i)
        for (int j = 0; j <= code.mr(); ++j)
            if (B.at(i, j) > 0) { degen = true; break; }
    return {best, degen};
}

/// Minimum distance from the enumerator tables:
///   d(i) = min x with B^perp_{x,i} > 0 for i >= 1,
///   d(0) = min x >= 1 with 2^r B^perp_{x,0} > sum_j B_{x,j},
///   d = min_i d(i) + i.
/// The d(0) comparison scales the dual count by 2^r because each coset of
/// the stabilizer contributes 2^r dual words with identical data part.
inline int min_distance_from_tables(const SplitWeightEnumerator& B,
                                    const SplitWeightEnumerator& Bp) {
    if (B.side != Side::code || Bp.side != Side::dual)
        throw std::invalid_argument("min_distance_from_tables: need (code, dual) pair");
    const int n = Bp.n, mr = Bp.m + Bp.r;
    mpz_class scale = pow_int(2, Bp.r);
    int best = n + mr + 1;
    for (int i = 0; i <= mr; ++i) {
        for (int x = 1; x <= n; ++x) {
            bool hit;
            if (i == 0) {
                mpz_class excluded = 0;  // stabilizer-side words of data weight x
                for (int j = 0; j <= mr; ++j) excluded += B.at(x, j);
                hit = scale * Bp.at(x, 0) > excluded;
            } else {
                hit = Bp.at(x, i) > 0;
            }
            if (hit) {
                if (x + i < best) best = x + i;
                break;
            }
        }
    }
    return best;
}

/// Distance of a binary DS half: min over nonzero y in F2^n outside the
/// row space of Hprime of wt(y) + wt(Hprime y).  Gray-code scan with the
/// syndrome maintained incrementally.
inline int css_distance_scan(const std::vector<std::uint64_t>& hprime, int n) {
    if (n > 28) throw std::length_error("css_distance_scan: 2^n too large");
    const int rows = static_cast<int>(hprime.size());

    // syndrome increment per flipped data bit = column of Hprime
    std::vector<std::uint64_t> col(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < rows; ++i)
            if ((hprime[static_cast<std::size_t>(i)] >> j) & 1) col[static_cast<std::size_t>(j)] |= 1ull << i;

    F2Basis rowspace(n);
    for (auto r : hprime) rowspace.insert(r);

    int best = n + rows + 1;
    std::uint64_t y = 0, syn = 0, prev = 0;
    for (std::uint64_t u = 1; u < (1ull << n); ++u) {
        std::uint64_t g = u ^ (u >> 1);
        int bit = std::countr_zero(g ^ prev);
        prev = g;
        y ^= 1ull << bit;
        syn ^= col[static_cast<std::size_t>(bit)];
        int w = std::popcount(y);
        if (w >= best) continue;
        if (syn == 0 && rowspace.contains(y)) continue;
        w += std::popcount(syn);
        if (w < best) best = w;
    }
    return best;
}

}  // namespace qds
