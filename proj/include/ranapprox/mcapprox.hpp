#pragma once

#include "ranapprox/gaussfield.hpp"
#include "ranapprox/model.hpp"
#include "ranapprox/random.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ranapprox {

// Rank-n Monte Carlo method restricted to a truncation set of size m.
struct MCConfig {
    LambdaSequence lambda;
    std::size_t n = 1;
    TruncationSet trunc;
    std::uint64_t seed = 0;  // master seed for replicated runs
};

// Draws an n x m standard Gaussian array X over the truncation indices (row by
// row from rng), forms y = X c from the coefficients of f on the truncation,
// and returns the function with coefficients X^T y / n on the truncation set.
// Coefficients of f outside the truncation are not observed.
[[nodiscard]] SparseCoefFunction mc_approximate(const SparseCoefFunction& f, const MCConfig& cfg,
                                                Rng& rng);

// 2 sup_est / sqrt(n)
[[nodiscard]] double mc_error_bound(double sup_est, std::size_t n);

// ceil(4 (sup_est / eps)^2)
[[nodiscard]] std::size_t mc_complexity_bound(double sup_est, double eps);

struct ErrorReport {
    double mean_error = 0.0;
    double std_error = 0.0;
    std::size_t replications = 0;
    std::vector<double> per_replication_errors;
    std::size_t grid_points_per_dim = 0;
};

// Per replication i (seed derive_seed(cfg.seed, "mc_error", i)): grid maximum
// of |f - A_n f| plus the certified remainder ||c_out||_2 (sum lambda^2)^{d/2}
// of the coefficients of f outside the truncation.
[[nodiscard]] ErrorReport empirical_error(const SparseCoefFunction& f, const MCConfig& cfg,
                                          std::size_t grid_points_per_dim,
                                          std::size_t replications, unsigned threads = 1,
                                          std::size_t grid_budget = kDefaultGridBudget);

}  // namespace ranapprox
