#include "ranapprox/gaussfield.hpp"

#include "ranapprox/grid.hpp"
#include "ranapprox/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ranapprox {

namespace {

SupNormEstimate aggregate(const std::vector<double>& values, std::size_t grid_points) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    return {mean, sd / std::sqrt(n), values.size(), grid_points};
}

std::vector<double> draw_gaussians(std::size_t count, Rng& rng) {
    std::normal_distribution<double> normal;
    std::vector<double> out(count);
    for (double& v : out) v = normal(rng);
    return out;
}

}  // namespace

TruncationSet default_truncation(const LambdaSequence& lambda, std::size_t d, double mass_tol) {
    if (!(mass_tol > 0.0 && mass_tol < 1.0)) {
        throw std::invalid_argument("default_truncation: mass_tol must lie in (0, 1)");
    }
    TruncationSet trunc;
    trunc.d = d;
    const double total = std::pow(lambda.squared_sum(), static_cast<double>(d));
    TensorIndexEnumerator it(lambda, d);
    double captured = 0.0;
    double compensation = 0.0;
    while (trunc.indices.empty() || total - captured > mass_tol) {
        auto item = it.next();
        if (!item) break;
        // Kahan summation keeps the dropped mass accurate for long sums
        const double y = item->sigma2 - compensation;
        const double t = captured + y;
        compensation = (t - captured) - y;
        captured = t;
        trunc.sigma2.push_back(item->sigma2);
        trunc.indices.push_back(std::move(item->index));
    }
    trunc.dropped_mass = std::max(0.0, total - captured);
    return trunc;
}

double FieldSample::operator()(std::span<const double> x) const {
    if (x.size() != trunc.d) throw std::invalid_argument("FieldSample: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        double term = draws[i];
        for (std::size_t j = 0; j < x.size(); ++j) term *= eval_basis_1d(lambda, trunc.indices[i][j], x[j]);
        sum += term;
    }
    return sum;
}

SparseCoefFunction FieldSample::to_function() const {
    std::vector<int> idx;
    idx.reserve(trunc.indices.size() * trunc.d);
    for (const auto& k : trunc.indices) idx.insert(idx.end(), k.begin(), k.end());
    return SparseCoefFunction(trunc.d, lambda, std::move(idx), draws);
}

FieldSample sample_field(const LambdaSequence& lambda, const TruncationSet& trunc, Rng& rng) {
    return FieldSample{lambda, trunc, draw_gaussians(trunc.indices.size(), rng)};
}

SupNormEstimate estimate_sup_norm(const LambdaSequence& lambda, const TruncationSet& trunc,
                                  std::size_t grid_points_per_dim, std::size_t replications,
                                  std::uint64_t master_seed, unsigned threads,
                                  std::size_t grid_budget) {
    if (replications < 2) throw std::invalid_argument("estimate_sup_norm: need at least 2 replications");
    if (grid_points_per_dim < 16) throw std::invalid_argument("estimate_sup_norm: need at least 16 grid points per dimension");
    const GridEvaluator grid(lambda, trunc.d, trunc.indices, grid_points_per_dim, grid_budget);
    std::vector<double> maxima(replications);
    parallel_for(replications, threads, [&](std::size_t i) {
        Rng rng(derive_seed(master_seed, "sup_norm", i));
        maxima[i] = grid.max_abs(draw_gaussians(trunc.indices.size(), rng));
    });
    return aggregate(maxima, grid_points_per_dim);
}

SupNormEstimate estimate_sup_norm_random_points(const LambdaSequence& lambda,
                                                const TruncationSet& trunc, std::size_t points,
                                                std::size_t replications,
                                                std::uint64_t master_seed, unsigned threads) {
    if (replications < 2) throw std::invalid_argument("estimate_sup_norm: need at least 2 replications");
    if (points == 0) throw std::invalid_argument("estimate_sup_norm: need at least one point");
    std::vector<double> maxima(replications);
    parallel_for(replications, threads, [&](std::size_t i) {
        Rng rng(derive_seed(master_seed, "sup_norm_points", i));
        const FieldSample field = sample_field(lambda, trunc, rng);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        std::vector<double> x(trunc.d);
        double best = 0.0;
        for (std::size_t p = 0; p < points; ++p) {
            for (double& xj : x) xj = uniform(rng);
            best = std::max(best, std::abs(field(x)));
        }
        maxima[i] = best;
    });
    return aggregate(maxima, 0);
}

std::size_t grid_points_for_resolution(const DecayProfile& profile, std::size_t d, double diameter) {
    if (!(diameter > 0.0)) throw std::invalid_argument("grid_points_for_resolution: diameter must be > 0");
    // half cell (h/2) per coordinate: d_K^2 <= 2 alpha d (h/2)^p
    const double half = std::pow(diameter * diameter / (2.0 * profile.alpha * static_cast<double>(d)),
                                 1.0 / profile.p);
    return static_cast<std::size_t>(std::ceil(1.0 / (2.0 * half)));
}

double entropy_integral(const DecayProfile& profile, std::size_t d) {
    if (!(profile.alpha > 0.0)) throw std::invalid_argument("entropy_integral: alpha must be positive");
    if (!(profile.r0 > 0.0)) throw std::invalid_argument("entropy_integral: r0 must be positive");
    if (!(profile.p > 0.0 && profile.p <= 1.0)) throw std::invalid_argument("entropy_integral: p must lie in (0, 1]");
    if (d == 0) throw std::invalid_argument("entropy_integral: dimension must be >= 1");
    const double p = profile.p;
    const double dd = static_cast<double>(d);
    const double r0 = std::min(profile.r0, 0.5);
    // log(1 / Vol(R B_p^d)) = log Gamma(d/p + 1) - d log(2 R Gamma(1/p + 1))
    const double log_gamma_dim = std::lgamma(dd / p + 1.0);
    const double log_two_gamma = std::log(2.0) + std::lgamma(1.0 / p + 1.0);
    const auto log_inv_volume = [&](double log_radius) {
        return std::max(0.0, log_gamma_dim - dd * (log_two_gamma + log_radius));
    };

    const double r_switch = std::min(std::sqrt(2.0 * profile.alpha * std::pow(r0, p)), 2.0);
    // first regime in the variable t, r = r_switch e^{-t}
    const double log_two_alpha = std::log(2.0 * profile.alpha);
    const auto transformed = [&](double t) {
        const double log_r = std::log(r_switch) - t;
        const double log_radius = (2.0 * log_r - log_two_alpha) / p;
        return std::sqrt(log_inv_volume(log_radius)) * std::exp(log_r);
    };
    const double scale = r_switch * std::sqrt(log_inv_volume(std::log(r0)) + 2.0 * dd / p + 1.0);
    const double first = adaptive_simpson(transformed, 0.0, 80.0, 1e-8 * scale);
    const double second = std::max(0.0, 2.0 - r_switch) * std::sqrt(log_inv_volume(std::log(r0)));
    return first + second;
}

double dudley_bound(const DecayProfile& profile, std::size_t d, double dudley_constant) {
    return std::sqrt(2.0 / std::numbers::pi) + 4.0 * dudley_constant * entropy_integral(profile, d);
}

std::vector<SmoothnessMoment> smoothness_loss_statistic(const LambdaSequence& lambda, double s,
                                                        std::span<const std::size_t> cutoffs) {
    if (lambda.kind() != LambdaSequence::Kind::korobov) {
        throw std::invalid_argument("smoothness_loss_statistic: korobov lambda required");
    }
    if (!(s < lambda.r())) throw std::invalid_argument("smoothness_loss_statistic: s must be below r");
    std::vector<SmoothnessMoment> out;
    out.reserve(cutoffs.size());
    for (const std::size_t K : cutoffs) {
        double sum = 0.0;
        for (std::size_t k = K; k >= 1; --k) {
            const double lam = lambda.at(k);
            sum += lam * lam * std::pow(static_cast<double>(k), 2.0 * s);
        }
        const double l0 = lambda.at(0);
        out.push_back({K, l0 * l0 + 2.0 * sum});
    }
    return out;
}

}  // namespace ranapprox
