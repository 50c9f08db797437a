#pragma once

#include "ranapprox/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <vector>

namespace ranapprox {

// Ordering key of a signed frequency: 0, +1, -1, +2, -2, ...
[[nodiscard]] constexpr std::int64_t frequency_key(int k) noexcept {
    return k == 0 ? 0 : (k > 0 ? 2 * static_cast<std::int64_t>(k) - 1 : -2 * static_cast<std::int64_t>(k));
}

// Lexicographic comparison of multi-indices under frequency_key.
[[nodiscard]] bool key_less(std::span<const int> a, std::span<const int> b) noexcept;

// Squared singular values of the embedding into L2 with uniform measure:
// sigma_0^2 = lambda_0^2, sigma_{+-k}^2 = lambda_k^2 / 2.
class SingularSpectrum1D {
public:
    explicit SingularSpectrum1D(LambdaSequence lambda);

    [[nodiscard]] const LambdaSequence& lambda() const noexcept { return lambda_; }
    [[nodiscard]] double sigma2(int k) const;
    [[nodiscard]] double sigma(int k) const;

    struct Entry {
        int k = 0;
        double sigma2 = 0.0;
    };
    // Frequencies with sigma > 0, sorted by nonincreasing sigma^2 and then by
    // frequency_key. Infinite for korobov weights; extended on demand.
    [[nodiscard]] std::optional<Entry> sorted_entry(std::size_t pos);

private:
    void extend_to(std::size_t pos);

    LambdaSequence lambda_;
    std::vector<Entry> sorted_;
    bool exhausted_ = false;
    bool zero_placed_ = false;
    int next_k_ = 1;
};

// Tensor product weight prod_j sigma_{k_j}^2. Factors are multiplied in
// ascending order so permuted indices produce bit-identical weights.
[[nodiscard]] double tensor_sigma2(const SingularSpectrum1D& spectrum, std::span<const int> k);

// Yields multi-indices of Z^d in order of nonincreasing sigma^2, ties by
// key_less. Best-first search over positions in the sorted 1-d spectrum.
class TensorIndexEnumerator {
public:
    TensorIndexEnumerator(const LambdaSequence& lambda, std::size_t d);

    struct Item {
        MultiIndex index;
        double sigma2 = 0.0;
    };
    // Next index, or nothing once every positive-weight index has been produced.
    [[nodiscard]] std::optional<Item> next();

private:
    struct Node {
        double weight = 0.0;
        std::vector<std::uint32_t> pos;
        bool operator<(const Node& other) const noexcept { return weight < other.weight; }
    };
    [[nodiscard]] std::optional<Node> make_node(std::vector<std::uint32_t> pos);
    void push_children(const Node& node);

    SingularSpectrum1D spectrum_;
    std::size_t d_;
    std::priority_queue<Node> heap_;
    std::vector<Item> ready_;  // current tie group, reversed
};

struct IndexSelection {
    std::size_t d = 1;
    std::vector<MultiIndex> indices;
    std::vector<double> sigma2;
    double captured_mass = 0.0;
};

// The n indices with largest sigma (fewer if only that many have sigma > 0).
[[nodiscard]] IndexSelection top_n_indices(const LambdaSequence& lambda, std::size_t d,
                                           std::size_t n);

// sqrt((1 - captured mass of top n)_+). Requires normalized lambda.
[[nodiscard]] double det_lower_bound(const LambdaSequence& lambda, std::size_t d, std::size_t n);

// Largest count m < n such that the first m selected indices are a union of
// complete sign orbits (all cos/sin partners present). Returns 0 for n = 0.
[[nodiscard]] std::size_t completed_pair_count(const IndexSelection& sel, std::size_t n);

// Orthogonal projection: coefficients restricted to the selection.
[[nodiscard]] SparseCoefFunction project(const SparseCoefFunction& f, const IndexSelection& sel);

inline constexpr std::size_t kDefaultGridBudget = std::size_t{1} << 22;

// max over the uniform grid {i/G}^d of sqrt(K_d(x,x) - sum_{k in sel} psi_k(x)^2).
// Throws std::length_error when G^d exceeds the budget and std::runtime_error
// when a radicand is below -1e-10.
[[nodiscard]] double det_worst_case_error(const LambdaSequence& lambda, std::size_t d,
                                          const IndexSelection& sel,
                                          std::size_t grid_points_per_dim,
                                          std::size_t grid_budget = kDefaultGridBudget);

// sup{lambda_0^2, lambda_k^2 / 2}.
[[nodiscard]] double curse_beta(const LambdaSequence& lambda);

// beta^{-d} (1 - eps)^2. Throws std::invalid_argument unless beta, eps in (0, 1).
[[nodiscard]] double curse_bound(double beta, std::size_t d, double eps);

}  // namespace ranapprox
