#pragma once

#include "ranapprox/model.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace ranapprox {

inline constexpr double kDefaultKernelTolerance = 1e-10;

// Reproducing kernel K(x, y) = sum_k lambda_k^2 cos(2 pi k (x - y)) together
// with the absolute accuracy every evaluation must certify.
struct KernelSpec {
    LambdaSequence lambda;
    double trunc_tol = kDefaultKernelTolerance;
};

// Local lower bound K(x, 0) >= 1 - alpha d(x, 0)^p for d(x, 0) <= r0.
struct DecayProfile {
    double p = 1.0;
    double alpha = 1.0;
    double r0 = 0.5;
};

// Shortest connection on the circle of length one, in [0, 1/2].
[[nodiscard]] double torus_metric(double x, double y) noexcept;

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

// (sum_j d(x_j, y_j)^p)^{1/p}; p = infinity gives the maximum.
[[nodiscard]] double torus_metric_p(std::span<const double> x, std::span<const double> y, double p);

// Korobov weights use a closed series expansion (see periodic_zeta_cos);
// explicit lists are summed exactly.
[[nodiscard]] double kernel_1d(const KernelSpec& spec, double x, double y);

// Product of one-dimensional factors, each evaluated to trunc_tol / d.
[[nodiscard]] double kernel_nd(const KernelSpec& spec, std::span<const double> x,
                               std::span<const double> y);

// sqrt(K(x,x) - 2 K(x,y) + K(y,y)). Radicands in [-10 trunc_tol, 0) are
// rounding and clamp to zero; anything below throws std::runtime_error.
[[nodiscard]] double canonical_metric(const KernelSpec& spec, std::span<const double> x,
                                      std::span<const double> y);

// (sum_k lambda_k^2)^{d/2}, the norm of the embedding into L_infinity.
[[nodiscard]] double initial_error(const LambdaSequence& lambda, std::size_t d);

inline constexpr std::size_t kDecayFitGrid = 10000;
inline constexpr double kDecayFitMargin = 1.05;

// r > 1:        p = 1, alpha = 2 pi beta1 zeta(2r - 1), r0 = 1/2.
// 1/2 < r <= 1: p = 2r - 1, r0 = 1/(sqrt(2) pi), alpha fitted numerically.
// Requires a normalized korobov sequence.
[[nodiscard]] DecayProfile decay_profile_korobov(const LambdaSequence& lambda);

// 1.05 * max_{x in grid of (0, r0]} (1 - K(x, 0)) / x^p. The grid has
// grid_size points x_i = i r0 / grid_size. Throws std::runtime_error when some
// K(x, 0) exceeds 1 + tolerance (kernel not normalized).
[[nodiscard]] double fit_decay_constant(const KernelSpec& spec, double p, double r0,
                                        std::size_t grid_size);
[[nodiscard]] double fit_decay_constant(const std::function<double(double)>& kernel_at_zero,
                                        double p, double r0, std::size_t grid_size,
                                        double tolerance);

// True when K(x, 0) >= 1 - alpha x^p - tolerance on grid_size points of (0, r0].
[[nodiscard]] bool certify_decay_profile(const std::function<double(double)>& kernel_at_zero,
                                         const DecayProfile& profile, std::size_t grid_size,
                                         double tolerance);

}  // namespace ranapprox
