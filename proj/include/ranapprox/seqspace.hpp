#pragma once

#include "ranapprox/random.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace ranapprox {

// Gaussian sketch of the identity l2^m -> lq^m with rank n.
struct SketchConfig {
    std::size_t m = 1;
    std::size_t n = 1;
    double q = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
};

// N^T N x with N = n^{-1/2} X, X an n x m standard Gaussian array drawn from
// rng row by row. The array depends only on the generator state, never on x,
// so the map is linear in x for a fixed generator state.
[[nodiscard]] std::vector<double> mathe_sketch(std::span<const double> x, const SketchConfig& cfg,
                                               Rng& rng);

enum class NormMethod { quadrature, montecarlo };

struct NormExpectation {
    double value = 0.0;
    double std_error = 0.0;  // zero for deterministic evaluation
    std::size_t samples = 0;
};

// E ||X||_q for a standard Gaussian m-vector.
//   quadrature: q = infinity integrates  int_0^inf 1 - (2 Phi(t) - 1)^m dt;
//               q = 1 and q = 2 use closed forms; other q throw.
//   montecarlo: `samples` draws from rng (required), mean and standard error.
// Throws std::invalid_argument for q < 1 or m = 0.
[[nodiscard]] NormExpectation gauss_norm_expectation(std::size_t m, double q, NormMethod method,
                                                     Rng* rng = nullptr,
                                                     std::size_t samples = 100000);

// E max_i |X_i| by quadrature, relative error below 1e-10.
[[nodiscard]] double expected_gauss_max(std::size_t m);

// 2 E||X||_q / sqrt(n); q must be 1, 2 or infinity.
[[nodiscard]] double mathe_error_bound(std::size_t m, std::size_t n, double q);

// (1 - eps^2) m. Throws std::invalid_argument unless eps in (0, 1).
[[nodiscard]] double smolyak_lower_bound(std::size_t m, double eps);

}  // namespace ranapprox
