#include "ranapprox/kernel.hpp"
#include "ranapprox/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace ranapprox {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(TorusMetricTest, Properties) {
    EXPECT_DOUBLE_EQ(torus_metric(0.1, 0.9), 0.2);
    EXPECT_DOUBLE_EQ(torus_metric(0.0, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(torus_metric(0.3, 1.3), 0.0);
    const std::vector<double> x{0.1, 0.2}, y{0.9, 0.5};
    EXPECT_NEAR(torus_metric_p(x, y, 1.0), 0.5, 1e-15);
    EXPECT_NEAR(torus_metric_p(x, y, 2.0), std::sqrt(0.04 + 0.09), 1e-15);
    EXPECT_NEAR(torus_metric_p(x, y, kInfinityNorm), 0.3, 1e-15);
}

TEST(KernelTest, ClosedFormAtRequalOne) {
    // lambda_k^2 = beta1 / k^2: K(x, 0) = beta0 + beta1 pi^2 (1/6 - u + u^2)
    const auto seq = normalize_korobov(1.0, 0.5);
    const KernelSpec spec{seq};
    for (int i = 0; i < 1000; ++i) {
        const double x = i / 1000.0;
        const double u = torus_metric(x, 0.0);
        const double expect = 0.5 + seq.beta1() * kPi * kPi * (1.0 / 6.0 - u + u * u);
        EXPECT_NEAR(kernel_1d(spec, x, 0.0), expect, 1e-8) << x;
    }
}

TEST(KernelTest, StationarySymmetricPeriodic) {
    const KernelSpec spec{normalize_korobov(1.25, 0.4)};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double x = unif(rng), y = unif(rng), s = unif(rng);
        const double k = kernel_1d(spec, x, y);
        EXPECT_NEAR(kernel_1d(spec, y, x), k, 1e-13);
        EXPECT_NEAR(kernel_1d(spec, x + s, y + s), k, 1e-12);
        EXPECT_NEAR(kernel_1d(spec, x + 2.0, y), k, 1e-12);
        EXPECT_LE(std::abs(k), kernel_1d(spec, x, x) + 1e-12);
    }
    EXPECT_NEAR(kernel_1d(spec, 0.3, 0.3), 1.0, 1e-12);
}

TEST(KernelTest, KorobovMatchesTruncatedSeries) {
    const auto seq = normalize_korobov(2.0, 0.3);
    const KernelSpec spec{seq};
    for (const double x : {0.0, 0.07, 0.25, 0.5}) {
        double sum = seq.beta0();
        for (int k = 200000; k >= 1; --k) sum += seq.beta1() * std::pow(k, -4.0) * std::cos(2 * kPi * k * x);
        EXPECT_NEAR(kernel_1d(spec, x, 0.0), sum, 1e-10);
    }
}

TEST(KernelTest, ExplicitListExact) {
    const auto seq = LambdaSequence::explicit_values({0.6, 0.0, 0.8});
    const KernelSpec spec{seq};
    EXPECT_NEAR(kernel_1d(spec, 0.1, 0.0), 0.36 + 0.64 * std::cos(2 * kPi * 0.2), 1e-15);
}

// Cholesky succeeds on a Gram matrix with a small ridge.
bool positive_definite(std::vector<double> a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
        if (!(diag > 0.0)) return false;
        a[j * n + j] = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = v / a[j * n + j];
        }
    }
    return true;
}

TEST(KernelTest, GramMatricesPositiveDefinite) {
    const KernelSpec spec{normalize_korobov(1.25, 0.4)};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const std::size_t d : {1u, 2u}) {
        constexpr std::size_t n = 20;
        std::vector<std::vector<double>> pts(n, std::vector<double>(d));
        for (auto& p : pts) {
            for (auto& c : p) c = unif(rng);
        }
        std::vector<double> gram(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                gram[i * n + j] = kernel_nd(spec, pts[i], pts[j]) + (i == j ? 1e-9 : 0.0);
            }
        }
        EXPECT_TRUE(positive_definite(gram, n)) << "d=" << d;
    }
}

TEST(KernelTest, ProductStructure) {
    const KernelSpec spec{normalize_korobov(1.25, 0.4)};
    const std::vector<double> x{0.1, 0.7, 0.2}, y{0.4, 0.1, 0.95};
    double prod = 1.0;
    for (std::size_t j = 0; j < 3; ++j) prod *= kernel_1d(spec, x[j], y[j]);
    EXPECT_NEAR(kernel_nd(spec, x, y), prod, 1e-12);
    EXPECT_THROW((void)kernel_nd(spec, x, std::vector<double>{0.1}), std::invalid_argument);
}

TEST(CanonicalMetricTest, MetricAxioms) {
    const KernelSpec spec{normalize_korobov(1.25, 0.4)};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const std::vector<double> a{unif(rng), unif(rng)}, b{unif(rng), unif(rng)}, c{unif(rng), unif(rng)};
        const double ab = canonical_metric(spec, a, b);
        EXPECT_NEAR(canonical_metric(spec, b, a), ab, 1e-9);
        EXPECT_LE(ab, canonical_metric(spec, a, c) + canonical_metric(spec, c, b) + 1e-7);
        EXPECT_LE(ab, 2.0 + 1e-12);
    }
    const std::vector<double> a{0.3, 0.6};
    EXPECT_LE(canonical_metric(spec, a, a), 1e-4);
}

TEST(InitialErrorTest, PowerOfMass) {
    EXPECT_NEAR(initial_error(normalize_korobov(1.25, 0.4), 7), 1.0, 1e-11);
    EXPECT_NEAR(initial_error(LambdaSequence::explicit_values({1.0, 1.0}), 3), std::pow(2.0, 1.5), 1e-14);
}

TEST(DecayProfileTest, SmoothCaseClosedForm) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const auto prof = decay_profile_korobov(seq);
    EXPECT_EQ(prof.p, 1.0);
    EXPECT_EQ(prof.r0, 0.5);
    EXPECT_NEAR(prof.alpha, 2 * kPi * seq.beta1() * zeta(1.5), 1e-12);
    const KernelSpec spec{seq};
    EXPECT_TRUE(certify_decay_profile([&](double x) { return kernel_1d(spec, x, 0.0); }, prof, 10000, 1e-9));
}

TEST(DecayProfileTest, RoughCaseIsFittedAndCertified) {
    for (const double r : {0.75, 1.0}) {
        const auto seq = normalize_korobov(r, 0.4);
        const auto prof = decay_profile_korobov(seq);
        EXPECT_NEAR(prof.p, 2 * r - 1, 1e-15);
        EXPECT_NEAR(prof.r0, 1.0 / (std::sqrt(2.0) * kPi), 1e-15);
        const KernelSpec spec{seq};
        const auto at_zero = [&](double x) { return kernel_1d(spec, x, 0.0); };
        EXPECT_TRUE(certify_decay_profile(at_zero, prof, 20000, 1e-9));
        // a 20% smaller alpha must fail somewhere
        auto weaker = prof;
        weaker.alpha *= 0.8;
        EXPECT_FALSE(certify_decay_profile(at_zero, weaker, 20000, 1e-9));
    }
    // r = 1: 1 - K(x,0) = beta1 pi^2 (x - x^2) <= beta1 pi^2 x
    const auto seq = normalize_korobov(1.0, 0.4);
    EXPECT_NEAR(decay_profile_korobov(seq).alpha, kDecayFitMargin * seq.beta1() * kPi * kPi, 1e-3);
}

TEST(DecayProfileTest, FitRejectsUnnormalizedKernel) {
    const auto bumped = [](double) { return 1.1; };
    EXPECT_THROW((void)fit_decay_constant(bumped, 1.0, 0.5, 1000, 1e-9), std::runtime_error);
    EXPECT_THROW((void)decay_profile_korobov(LambdaSequence::korobov(1.25, 0.4, 1.0)), std::invalid_argument);
}

}  // namespace
}  // namespace ranapprox
