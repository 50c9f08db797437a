#include "ranapprox/mcapprox.hpp"

#include "ranapprox/grid.hpp"
#include "ranapprox/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ranapprox {

namespace {

void check_compatible(const SparseCoefFunction& f, const MCConfig& cfg) {
    if (f.dim() != cfg.trunc.d) throw std::invalid_argument("mc_approximate: dimension mismatch");
    if (!(f.lambda() == cfg.lambda)) throw std::invalid_argument("mc_approximate: lambda mismatch");
    if (cfg.n == 0) throw std::invalid_argument("mc_approximate: n must be >= 1");
}

std::vector<double> restrict_to(const SparseCoefFunction& f, const TruncationSet& trunc) {
    std::vector<double> c(trunc.indices.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coefficient(trunc.indices[i]);
    return c;
}

}  // namespace

SparseCoefFunction mc_approximate(const SparseCoefFunction& f, const MCConfig& cfg, Rng& rng) {
    check_compatible(f, cfg);
    const auto c = restrict_to(f, cfg.trunc);
    const SketchConfig sketch{c.size(), cfg.n, std::numeric_limits<double>::infinity(), cfg.seed};
    auto out = mathe_sketch(c, sketch, rng);
    std::vector<int> idx;
    idx.reserve(cfg.trunc.indices.size() * cfg.trunc.d);
    for (const auto& k : cfg.trunc.indices) idx.insert(idx.end(), k.begin(), k.end());
    return SparseCoefFunction(cfg.trunc.d, cfg.lambda, std::move(idx), std::move(out));
}

double mc_error_bound(double sup_est, std::size_t n) {
    if (!(sup_est >= 0.0)) throw std::invalid_argument("mc_error_bound: sup estimate must be >= 0");
    if (n == 0) throw std::invalid_argument("mc_error_bound: n must be >= 1");
    return 2.0 * sup_est / std::sqrt(static_cast<double>(n));
}

std::size_t mc_complexity_bound(double sup_est, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("mc_complexity_bound: eps must be > 0");
    if (!(sup_est >= 0.0)) throw std::invalid_argument("mc_complexity_bound: sup estimate must be >= 0");
    const double ratio = sup_est / eps;
    return static_cast<std::size_t>(std::ceil(4.0 * ratio * ratio));
}

ErrorReport empirical_error(const SparseCoefFunction& f, const MCConfig& cfg,
                            std::size_t grid_points_per_dim, std::size_t replications,
                            unsigned threads, std::size_t grid_budget) {
    check_compatible(f, cfg);
    if (replications < 2) throw std::invalid_argument("empirical_error: need at least 2 replications");
    const auto c = restrict_to(f, cfg.trunc);
    std::vector<MultiIndex> kept = cfg.trunc.indices;
    std::sort(kept.begin(), kept.end());
    double outside2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto k = f.index(i);
        if (!std::binary_search(kept.begin(), kept.end(), MultiIndex(k.begin(), k.end()))) {
            outside2 += f.coef(i) * f.coef(i);
        }
    }
    const double outside = std::sqrt(outside2);
    const double remainder =
        outside * std::pow(cfg.lambda.squared_sum(), 0.5 * static_cast<double>(cfg.trunc.d));

    const GridEvaluator grid(cfg.lambda, cfg.trunc.d, cfg.trunc.indices, grid_points_per_dim,
                             grid_budget);
    const SketchConfig sketch{c.size(), cfg.n, std::numeric_limits<double>::infinity(), cfg.seed};
    ErrorReport report;
    report.replications = replications;
    report.grid_points_per_dim = grid_points_per_dim;
    report.per_replication_errors.resize(replications);
    parallel_for(replications, threads, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, "mc_error", i));
        auto residual = mathe_sketch(c, sketch, rng);
        for (std::size_t j = 0; j < c.size(); ++j) residual[j] = c[j] - residual[j];
        report.per_replication_errors[i] = grid.max_abs(residual) + remainder;
    });
    const auto n = static_cast<double>(replications);
    for (const double e : report.per_replication_errors) report.mean_error += e;
    report.mean_error /= n;
    double ss = 0.0;
    for (const double e : report.per_replication_errors) ss += (e - report.mean_error) * (e - report.mean_error);
    report.std_error = std::sqrt(ss / (n - 1.0) / n);
    return report;
}

}  // namespace ranapprox
