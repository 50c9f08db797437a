#pragma once

#include "ranapprox/detapprox.hpp"
#include "ranapprox/kernel.hpp"
#include "ranapprox/model.hpp"
#include "ranapprox/random.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace ranapprox {

// Finite set of basis indices kept by every implementable method, in the
// canonical enumeration order (nonincreasing sigma, ties by key_less).
struct TruncationSet {
    std::size_t d = 1;
    std::vector<MultiIndex> indices;
    std::vector<double> sigma2;
    double dropped_mass = 0.0;  // (sum lambda^2)^d minus the captured sigma^2 mass
};

// Grows the top-sigma selection until dropped_mass <= mass_tol.
// Throws std::invalid_argument unless 0 < mass_tol < 1.
[[nodiscard]] TruncationSet default_truncation(const LambdaSequence& lambda, std::size_t d,
                                               double mass_tol);

// One truncated realization  Psi(x) = sum_k X_k psi_k(x)  with i.i.d.
// standard Gaussian X_k, one per truncation index.
struct FieldSample {
    LambdaSequence lambda;
    TruncationSet trunc;
    std::vector<double> draws;

    [[nodiscard]] double operator()(std::span<const double> x) const;
    [[nodiscard]] SparseCoefFunction to_function() const;
};

[[nodiscard]] FieldSample sample_field(const LambdaSequence& lambda, const TruncationSet& trunc,
                                       Rng& rng);

// Grid-based estimate of E ||Psi||_inf over the truncation.
struct SupNormEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t replications = 0;
    std::size_t grid_points_per_dim = 0;
};

// Mean over replications of the grid maximum of |Psi|. Replication i draws
// from derive_seed(master_seed, "sup_norm", i). Requires replications >= 2 and
// at least 16 points per dimension; throws GridBudgetError past the budget.
[[nodiscard]] SupNormEstimate estimate_sup_norm(const LambdaSequence& lambda,
                                                const TruncationSet& trunc,
                                                std::size_t grid_points_per_dim,
                                                std::size_t replications,
                                                std::uint64_t master_seed, unsigned threads = 1,
                                                std::size_t grid_budget = kDefaultGridBudget);

// Fallback for grids over budget: maximum over `points` uniform random points
// per replication (grid_points_per_dim is reported as 0).
[[nodiscard]] SupNormEstimate estimate_sup_norm_random_points(const LambdaSequence& lambda,
                                                              const TruncationSet& trunc,
                                                              std::size_t points,
                                                              std::size_t replications,
                                                              std::uint64_t master_seed,
                                                              unsigned threads = 1);

// Points per dimension so that every torus point is within canonical distance
// `diameter` of the grid, using d_K^2 <= 2 alpha d_p^p.
[[nodiscard]] std::size_t grid_points_for_resolution(const DecayProfile& profile, std::size_t d,
                                                     double diameter = 0.05);

inline constexpr double kDudleyConstant = 4.0 * std::numbers::sqrt2;

// int_0^inf sup_x sqrt(log 1/mu(B_K(x, r))) dr with volumes of l_p balls of
// radius (r^2 / 2 alpha)^{1/p} (capped at r0), zero beyond r = 2.
[[nodiscard]] double entropy_integral(const DecayProfile& profile, std::size_t d);

// sqrt(2/pi) + 4 C_Dudley * entropy_integral, an upper bound for
// E ||Psi||_inf of a normalized kernel (E sup Psi <= 2 C_Dudley I, and
// E||Psi||_inf <= sqrt(2/pi) inf sqrt(K(x,x)) + 2 E sup Psi).
[[nodiscard]] double dudley_bound(const DecayProfile& profile, std::size_t d,
                                  double dudley_constant = kDudleyConstant);

// Second moments E||P_K Psi||^2 in the smoothness-s space for each cutoff K:
//   lambda_0^2 + 2 sum_{k=1}^K lambda_k^2 k^{2s},
// i.e. the reference norm uses weights 1 and k^{-s}. Requires korobov
// lambda and s < r.
struct SmoothnessMoment {
    std::size_t cutoff = 0;
    double second_moment = 0.0;
};
[[nodiscard]] std::vector<SmoothnessMoment> smoothness_loss_statistic(
    const LambdaSequence& lambda, double s, std::span<const std::size_t> cutoffs);

}  // namespace ranapprox
