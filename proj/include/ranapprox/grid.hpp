#pragma once

#include "ranapprox/model.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ranapprox {

// Raised when a uniform grid would exceed its point budget; callers may fall
// back to random-point evaluation.
class GridBudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Evaluates functions spanned by a fixed list of basis indices on the uniform
// grid {0, 1/G, ..., (G-1)/G}^d. Indices sharing their first d-1 coordinates
// are summed along the last axis first, so one evaluation costs about
// G^d * (#prefix groups) instead of G^d * (#indices).
class GridEvaluator {
public:
    GridEvaluator(const LambdaSequence& lambda, std::size_t d, std::span<const MultiIndex> indices,
                  std::size_t points_per_dim, std::size_t budget);

    [[nodiscard]] std::size_t dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t points_per_dim() const noexcept { return G_; }
    [[nodiscard]] std::size_t total_points() const noexcept { return total_; }
    [[nodiscard]] std::size_t index_count() const noexcept { return count_; }

    // max over the grid of |sum_i coefs[i] psi_{indices[i]}(x)|
    [[nodiscard]] double max_abs(std::span<const double> coefs) const;

    // All grid values; the first coordinate varies slowest.
    [[nodiscard]] std::vector<double> values(std::span<const double> coefs) const;

private:
    template <class Visit>
    void sweep(std::span<const double> coefs, Visit&& visit) const;

    [[nodiscard]] double table(int k, std::size_t g) const {
        return table_[static_cast<std::size_t>(k + k_max_) * G_ + g];
    }

    std::size_t d_;
    std::size_t G_;
    std::size_t total_ = 1;
    std::size_t count_;
    int k_max_ = 0;
    std::vector<double> table_;
    // groups of indices sharing the prefix (first d-1 coordinates)
    std::vector<int> prefixes_;             // group_count * (d-1)
    std::vector<std::size_t> group_start_;  // group_count + 1 offsets into members
    std::vector<int> member_last_;          // last coordinate per member
    std::vector<std::size_t> member_slot_;  // position in the caller's index list
};

}  // namespace ranapprox
