#include "ranapprox/gaussfield.hpp"
#include "ranapprox/kernel.hpp"
#include "ranapprox/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ranapprox {
namespace {

constexpr double kPi = std::numbers::pi;

// int_0^c sqrt(a - b ln r) dr = e^{a/b} sqrt(b) Gamma(3/2, z), z = (a - b ln c) / b
double log_root_integral(double a, double b, double c) {
    const double z = (a - b * std::log(c)) / b;
    const double upper_gamma = std::sqrt(z) * std::exp(-z) + 0.5 * std::sqrt(kPi) * std::erfc(std::sqrt(z));
    return std::exp(a / b) * std::sqrt(b) * upper_gamma;
}

TEST(TruncationTest, DroppedMassBelowTolerance) {
    const auto seq = normalize_korobov(1.25, 0.4);
    for (const std::size_t d : {1u, 2u, 3u}) {
        for (const double tol : {0.1, 0.03}) {
            const auto t = default_truncation(seq, d, tol);
            EXPECT_LE(t.dropped_mass, tol);
            EXPECT_EQ(t.indices.size(), t.sigma2.size());
            double captured = 0.0;
            for (const double s : t.sigma2) captured += s;
            EXPECT_NEAR(captured + t.dropped_mass, 1.0, 1e-12);
            // minimal: without the last index the tolerance is violated
            EXPECT_GT(t.dropped_mass + t.sigma2.back(), tol);
        }
    }
    EXPECT_EQ(default_truncation(seq, 1, 0.01).indices.size(), 20u);
    EXPECT_THROW((void)default_truncation(seq, 1, 0.0), std::invalid_argument);
    EXPECT_THROW((void)default_truncation(seq, 1, 1.0), std::invalid_argument);
}

TEST(FieldSampleTest, CovarianceIsTruncatedKernel) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto trunc = default_truncation(seq, 1, 1e-3);
    const std::vector<double> x{0.1}, y{0.35};
    constexpr int kSamples = 40000;
    Rng rng(17);
    double mean = 0.0, m2 = 0.0;
    for (int s = 0; s < kSamples; ++s) {
        const auto field = sample_field(seq, trunc, rng);
        const double v = field(x) * field(y);
        const double delta = v - mean;
        mean += delta / (s + 1);
        m2 += delta * (v - mean);
    }
    const double se = std::sqrt(m2 / (kSamples - 1) / kSamples);
    const KernelSpec spec{seq};
    EXPECT_NEAR(mean, kernel_1d(spec, 0.1, 0.35), 4.0 * se + trunc.dropped_mass);
}

TEST(FieldSampleTest, FunctionViewAgrees) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto trunc = default_truncation(seq, 2, 0.1);
    Rng rng(2);
    const auto field = sample_field(seq, trunc, rng);
    const auto f = field.to_function();
    for (const double a : {0.0, 0.3}) {
        const std::vector<double> x{a, 0.77};
        EXPECT_NEAR(field(x), eval_function(f, x), 1e-12);
    }
}

TEST(SupNormTest, ConstantField) {
    // one basis function: Psi = sqrt(0.4) X_0, E|Psi| = sqrt(0.4) sqrt(2/pi)
    const auto seq = LambdaSequence::explicit_values({std::sqrt(0.4)});
    const auto trunc = default_truncation(seq, 1, 0.5);
    const auto est = estimate_sup_norm(seq, trunc, 16, 20000, 99, 2);
    EXPECT_NEAR(est.mean, 0.50463, 4.0 * est.std_error);
    EXPECT_NEAR(std::sqrt(0.4) * std::sqrt(2.0 / kPi), 0.50463, 1e-5);
}

TEST(SupNormTest, DeterministicAcrossThreadCounts) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto trunc = default_truncation(seq, 2, 0.05);
    const auto a = estimate_sup_norm(seq, trunc, 32, 40, 5, 1);
    const auto b = estimate_sup_norm(seq, trunc, 32, 40, 5, 4);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_THROW((void)estimate_sup_norm(seq, trunc, 8, 40, 5), std::invalid_argument);
    EXPECT_THROW((void)estimate_sup_norm(seq, trunc, 32, 1, 5), std::invalid_argument);
}

TEST(SupNormTest, RandomPointsBelowGridEstimate) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto trunc = default_truncation(seq, 1, 0.01);
    const auto grid = estimate_sup_norm(seq, trunc, 256, 400, 8);
    const auto pts = estimate_sup_norm_random_points(seq, trunc, 256, 400, 8);
    EXPECT_EQ(pts.grid_points_per_dim, 0u);
    EXPECT_NEAR(pts.mean, grid.mean, 5.0 * (pts.std_error + grid.std_error));
}

TEST(EntropyIntegralTest, ClosedFormsForLinearProfile) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto prof = decay_profile_korobov(seq);
    const double la = std::log(prof.alpha);
    // d = 1: log(1/vol) = ln alpha - 2 ln r; d = 2: ln 2 + 2 ln alpha - 4 ln r
    EXPECT_NEAR(entropy_integral(prof, 1), log_root_integral(la, 2.0, 2.0), 1e-7);
    EXPECT_NEAR(entropy_integral(prof, 2), log_root_integral(std::log(2.0) + 2.0 * la, 4.0, 2.0), 1e-7);
    // alpha = 1, r0 = 1/2: first regime ends at r = 1 with zero entropy after
    const DecayProfile flat{1.0, 1.0, 0.5};
    EXPECT_NEAR(entropy_integral(flat, 1), std::sqrt(kPi / 2.0), 1e-7);
    EXPECT_THROW((void)entropy_integral(DecayProfile{2.0, 1.0, 0.5}, 1), std::invalid_argument);
}

TEST(DudleyBoundTest, FormulaAndGrowth) {
    const auto prof = decay_profile_korobov(normalize_korobov(1.25, 0.4));
    EXPECT_NEAR(dudley_bound(prof, 1), std::sqrt(2.0 / kPi) + 16.0 * std::sqrt(2.0) * entropy_integral(prof, 1),
                1e-12);
    EXPECT_NEAR(dudley_bound(prof, 1, 1.0), std::sqrt(2.0 / kPi) + 4.0 * entropy_integral(prof, 1), 1e-12);
    double prev = 0.0;
    for (std::size_t d = 1; d <= 15; ++d) {
        const double b = dudley_bound(prof, d);
        EXPECT_GT(b, prev);
        // sqrt(d log d) growth
        EXPECT_LT(b, dudley_bound(prof, 1) * 3.0 * std::sqrt(d * (1.0 + std::log(static_cast<double>(d)))));
        prev = b;
    }
}

TEST(DudleyBoundTest, DominatesEmpiricalSupNorm) {
    for (const double r : {0.75, 1.25, 2.0}) {
        const auto seq = normalize_korobov(r, 0.4);
        const auto prof = decay_profile_korobov(seq);
        for (const std::size_t d : {1u, 2u, 3u}) {
            const double tol = d == 1 ? 0.01 : (d == 2 ? 0.05 : 0.15);
            const auto trunc = default_truncation(seq, d, tol);
            const std::size_t G = d == 1 ? 256 : (d == 2 ? 64 : 24);
            const auto est = estimate_sup_norm(seq, trunc, G, 50, 1234, 2);
            EXPECT_LE(est.mean - 3.0 * est.std_error, dudley_bound(prof, d)) << "r=" << r << " d=" << d;
        }
    }
}

TEST(GridResolutionTest, CellsWithinDiameter) {
    const auto prof = decay_profile_korobov(normalize_korobov(1.25, 0.4));
    for (const std::size_t d : {1u, 3u}) {
        const auto G = grid_points_for_resolution(prof, d, 0.1);
        const double half = 0.5 / static_cast<double>(G);
        EXPECT_LE(2.0 * prof.alpha * d * std::pow(half, prof.p), 0.01 * (1 + 1e-12));
        const double coarser = 0.5 / static_cast<double>(G - 1);
        EXPECT_GT(2.0 * prof.alpha * d * std::pow(coarser, prof.p), 0.01);
    }
}

TEST(SmoothnessStatisticTest, PartialSums) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const std::vector<std::size_t> cutoffs{10, 100, 1000, 10000};
    // s = 0.75: lambda_k^2 k^{1.5} = beta1 / k, harmonic growth
    const auto rough = smoothness_loss_statistic(seq, 0.75, cutoffs);
    for (const auto& m : rough) {
        double h = 0.0;
        for (std::size_t k = m.cutoff; k >= 1; --k) h += 1.0 / static_cast<double>(k);
        EXPECT_NEAR(m.second_moment, 0.4 + 2.0 * seq.beta1() * h, 1e-11);
    }
    // s = 0.5: converges to beta0 + 2 beta1 zeta(3/2)
    const auto smooth = smoothness_loss_statistic(seq, 0.5, cutoffs);
    const double limit = 0.4 + 2.0 * seq.beta1() * zeta(1.5);
    for (std::size_t i = 0; i < smooth.size(); ++i) {
        EXPECT_LT(smooth[i].second_moment, limit);
        if (i > 0) {
            EXPECT_GT(smooth[i].second_moment, smooth[i - 1].second_moment);
        }
    }
    EXPECT_THROW((void)smoothness_loss_statistic(seq, 1.25, cutoffs), std::invalid_argument);
    EXPECT_THROW((void)smoothness_loss_statistic(LambdaSequence::explicit_values({1.0}), 0.1, cutoffs),
                 std::invalid_argument);
}

}  // namespace
}  // namespace ranapprox
