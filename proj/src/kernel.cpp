#include "ranapprox/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ranapprox {

namespace {

void check_same_dim(std::span<const double> x, std::span<const double> y, const char* what) {
    if (x.size() != y.size()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
                                    ")");
    }
}

}  // namespace

double torus_metric(double x, double y) noexcept {
    double t = std::abs(x - y);
    t -= std::floor(t);
    return std::min(t, 1.0 - t);
}

double torus_metric_p(std::span<const double> x, std::span<const double> y, double p) {
    check_same_dim(x, y, "torus_metric_p");
    if (!(p > 0.0)) throw std::invalid_argument("torus_metric_p: p must be positive");
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) m = std::max(m, torus_metric(x[j], y[j]));
        return m;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) sum += std::pow(torus_metric(x[j], y[j]), p);
    return std::pow(sum, 1.0 / p);
}

double kernel_1d(const KernelSpec& spec, double x, double y) {
    if (!(spec.trunc_tol > 0.0)) throw std::invalid_argument("kernel_1d: trunc_tol must be > 0");
    const auto& lambda = spec.lambda;
    const double u = torus_metric(x, y);
    if (lambda.kind() == LambdaSequence::Kind::explicit_list) {
        const auto& v = lambda.values();
        double sum = 0.0;
        for (std::size_t k = v.size(); k-- > 1;) {
            sum += v[k] * v[k] * std::cos(2.0 * std::numbers::pi * std::fmod(k * u, 1.0));
        }
        return sum + v[0] * v[0];
    }
    if (lambda.beta1() == 0.0) return lambda.beta0();
    return lambda.beta0() +
           lambda.beta1() * periodic_zeta_cos(2.0 * lambda.r(), u, spec.trunc_tol / lambda.beta1());
}

double kernel_nd(const KernelSpec& spec, std::span<const double> x, std::span<const double> y) {
    check_same_dim(x, y, "kernel_nd");
    if (x.empty()) throw std::invalid_argument("kernel_nd: dimension must be >= 1");
    const KernelSpec factor{spec.lambda, spec.trunc_tol / static_cast<double>(x.size())};
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) prod *= kernel_1d(factor, x[j], y[j]);
    return prod;
}

double canonical_metric(const KernelSpec& spec, std::span<const double> x,
                        std::span<const double> y) {
    check_same_dim(x, y, "canonical_metric");
    const double radicand = kernel_nd(spec, x, x) - 2.0 * kernel_nd(spec, x, y) + kernel_nd(spec, y, y);
    if (radicand >= 0.0) return std::sqrt(radicand);
    if (radicand >= -10.0 * spec.trunc_tol) return 0.0;
    throw std::runtime_error("canonical_metric: negative radicand " + std::to_string(radicand) +
                             " (inconsistent kernel specification)");
}

double initial_error(const LambdaSequence& lambda, std::size_t d) {
    return std::pow(lambda.squared_sum(), 0.5 * static_cast<double>(d));
}

double fit_decay_constant(const std::function<double(double)>& kernel_at_zero, double p, double r0,
                          std::size_t grid_size, double tolerance) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("fit_decay_constant: p must lie in (0, 1]");
    if (!(r0 > 0.0 && r0 <= 0.5)) throw std::invalid_argument("fit_decay_constant: r0 must lie in (0, 1/2]");
    if (grid_size < 1000) throw std::invalid_argument("fit_decay_constant: grid_size must be >= 1000");
    double best = 0.0;
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double x = r0 * static_cast<double>(i) / static_cast<double>(grid_size);
        const double k = kernel_at_zero(x);
        if (k > 1.0 + tolerance) {
            throw std::runtime_error("fit_decay_constant: K(x,0) = " + std::to_string(k) +
                                     " exceeds 1 at x = " + std::to_string(x) + " (kernel not normalized)");
        }
        best = std::max(best, (1.0 - k) / std::pow(x, p));
    }
    return kDecayFitMargin * best;
}

double fit_decay_constant(const KernelSpec& spec, double p, double r0, std::size_t grid_size) {
    return fit_decay_constant([&spec](double x) { return kernel_1d(spec, x, 0.0); }, p, r0,
                              grid_size, spec.trunc_tol);
}

bool certify_decay_profile(const std::function<double(double)>& kernel_at_zero,
                           const DecayProfile& profile, std::size_t grid_size, double tolerance) {
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double x = profile.r0 * static_cast<double>(i) / static_cast<double>(grid_size);
        if (kernel_at_zero(x) < 1.0 - profile.alpha * std::pow(x, profile.p) - tolerance) return false;
    }
    return true;
}

DecayProfile decay_profile_korobov(const LambdaSequence& lambda) {
    if (lambda.kind() != LambdaSequence::Kind::korobov) {
        throw std::invalid_argument("decay_profile_korobov: korobov sequence required");
    }
    if (!lambda.normalized()) throw std::invalid_argument("decay_profile_korobov: lambda must be normalized");
    const double r = lambda.r();
    if (r > 1.0) {
        return {1.0, 2.0 * std::numbers::pi * lambda.beta1() * zeta(2.0 * r - 1.0), 0.5};
    }
    DecayProfile profile;
    profile.p = 2.0 * r - 1.0;
    profile.r0 = 1.0 / (std::numbers::sqrt2 * std::numbers::pi);
    profile.alpha = fit_decay_constant(KernelSpec{lambda}, profile.p, profile.r0, kDecayFitGrid);
    return profile;
}

}  // namespace ranapprox
