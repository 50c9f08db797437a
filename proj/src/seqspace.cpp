#include "ranapprox/seqspace.hpp"

#include "ranapprox/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ranapprox {

std::vector<double> mathe_sketch(std::span<const double> x, const SketchConfig& cfg, Rng& rng) {
    if (x.size() != cfg.m) {
        throw std::invalid_argument("mathe_sketch: vector length " + std::to_string(x.size()) +
                                    " != m = " + std::to_string(cfg.m));
    }
    if (cfg.n == 0) throw std::invalid_argument("mathe_sketch: rank n must be >= 1");
    std::normal_distribution<double> normal;
    std::vector<double> row(cfg.m);
    std::vector<double> out(cfg.m, 0.0);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        double y = 0.0;
        for (std::size_t j = 0; j < cfg.m; ++j) {
            row[j] = normal(rng);
            y += row[j] * x[j];
        }
        for (std::size_t j = 0; j < cfg.m; ++j) out[j] += y * row[j];
    }
    const double scale = 1.0 / static_cast<double>(cfg.n);
    for (double& v : out) v *= scale;
    return out;
}

double expected_gauss_max(std::size_t m) {
    if (m == 0) throw std::invalid_argument("expected_gauss_max: m must be >= 1");
    const double md = static_cast<double>(m);
    const auto integrand = [md](double t) {
        // 1 - (1 - 2Q)^m without cancellation
        return -std::expm1(md * std::log1p(-2.0 * normal_upper_tail(t)));
    };
    // tail beyond T is below 2 m phi(T) / T^2; also m Q(T) <= 1e-8
    double T = 1.0;
    const auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); };
    while (2.0 * md * phi(T) / (T * T) > 1e-13 || md * normal_upper_tail(T) > 1e-8) T += 0.25;
    return adaptive_simpson(integrand, 0.0, T, 1e-12);
}

NormExpectation gauss_norm_expectation(std::size_t m, double q, NormMethod method, Rng* rng,
                                       std::size_t samples) {
    if (m == 0) throw std::invalid_argument("gauss_norm_expectation: m must be >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("gauss_norm_expectation: q must be >= 1");
    const double md = static_cast<double>(m);
    if (method == NormMethod::quadrature) {
        if (std::isinf(q)) return {expected_gauss_max(m), 0.0, 0};
        if (q == 1.0) return {md * std::sqrt(2.0 / std::numbers::pi), 0.0, 0};
        if (q == 2.0) {
            return {std::numbers::sqrt2 * std::exp(std::lgamma(0.5 * (md + 1.0)) - std::lgamma(0.5 * md)),
                    0.0, 0};
        }
        throw std::invalid_argument("gauss_norm_expectation: no quadrature for q = " +
                                    std::to_string(q) + "; use montecarlo");
    }
    if (rng == nullptr) throw std::invalid_argument("gauss_norm_expectation: montecarlo needs a generator");
    if (samples < 2) throw std::invalid_argument("gauss_norm_expectation: need at least 2 samples");
    std::normal_distribution<double> normal;
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        double norm = 0.0;
        if (std::isinf(q)) {
            for (std::size_t i = 0; i < m; ++i) norm = std::max(norm, std::abs(normal(*rng)));
        } else {
            for (std::size_t i = 0; i < m; ++i) norm += std::pow(std::abs(normal(*rng)), q);
            norm = std::pow(norm, 1.0 / q);
        }
        const double delta = norm - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (norm - mean);
    }
    const double var = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

double mathe_error_bound(std::size_t m, std::size_t n, double q) {
    if (n == 0) throw std::invalid_argument("mathe_error_bound: n must be >= 1");
    const double expectation = gauss_norm_expectation(m, q, NormMethod::quadrature).value;
    return 2.0 * expectation / std::sqrt(static_cast<double>(n));
}

double smolyak_lower_bound(std::size_t m, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("smolyak_lower_bound: eps must lie in (0, 1)");
    return (1.0 - eps * eps) * static_cast<double>(m);
}

}  // namespace ranapprox
