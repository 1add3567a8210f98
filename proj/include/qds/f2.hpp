#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Small dense linear algebra over F2 on word-sized bit rows.

namespace qds {

/// Row-reduced basis of a subspace of F2^width (width <= 64).
class F2Basis {
  public:
    explicit F2Basis(int width) : width_(width) {
        if (width < 0 || width > 64) throw std::invalid_argument("F2Basis: bad width");
    }

    /// Reduces v against the basis; returns the remainder.
    std::uint64_t reduce(std::uint64_t v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v & pivot_bit_[i]) v ^= rows_[i];
        return v;
    }

    bool contains(std::uint64_t v) const { return reduce(v) == 0; }

    /// Inserts v if independent of the current rows; returns false otherwise.
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (v == 0) return false;
        std::uint64_t p = v & (~v + 1);  // lowest set bit as pivot
        rows_.push_back(v);
        pivot_bit_.push_back(p);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

  private:
    int width_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> pivot_bit_;
};

/// Solution of a linear system over F2: one particular solution plus a basis
/// of the homogeneous null space.
struct F2Solution {
    std::uint64_t particular = 0;
    std::vector<std::uint64_t> nullspace;
};

/// Solves the system { <a_i, x> = b_i } for x in F2^width by Gaussian
/// elimination on the coefficient masks.  Returns nullopt if inconsistent.
inline std::optional<F2Solution> f2_solve(std::vector<std::uint64_t> coeffs,
                                          std::vector<int> rhs, int width) {
    if (coeffs.size() != rhs.size()) throw std::invalid_argument("f2_solve: size mismatch");
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < width && rank < coeffs.size(); ++col) {
        std::size_t sel = rank;
        while (sel < coeffs.size() && !((coeffs[sel] >> col) & 1)) ++sel;
        if (sel == coeffs.size()) continue;
        std::swap(coeffs[sel], coeffs[rank]);
        std::swap(rhs[sel], rhs[rank]);
        for (std::size_t r = 0; r < coeffs.size(); ++r) {
            if (r != rank && ((coeffs[r] >> col) & 1)) {
                coeffs[r] ^= coeffs[rank];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < coeffs.size(); ++r)
        if (rhs[r]) return std::nullopt;

    F2Solution sol;
    std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
    for (std::size_t r = 0; r < rank; ++r) {
        is_pivot[static_cast<std::size_t>(pivot_col[r])] = true;
        if (rhs[r]) sol.particular |= 1ull << pivot_col[r];
    }
    for (int col = 0; col < width; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        std::uint64_t v = 1ull << col;
        for (std::size_t r = 0; r < rank; ++r)
            if ((coeffs[r] >> col) & 1) v |= 1ull << pivot_col[r];
        sol.nullspace.push_back(v);
    }
    return sol;
}

/// Rank of a list of bit rows.
inline int f2_rank(const std::vector<std::uint64_t>& rows, int width) {
    F2Basis b(width);
    for (auto r : rows) b.insert(r);
    return b.rank();
}

}  // namespace qds
