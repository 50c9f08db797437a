#include "ranapprox/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ranapprox {
namespace {

constexpr double kPi = std::numbers::pi;

// Independent zeta: 10^6-term partial sum plus the midpoint of the integral
// tail bracket. Returns the value and the half-width of the bracket.
std::pair<double, double> zeta_oracle(double s) {
    constexpr int kTerms = 1000000;
    double sum = 0.0;
    for (int k = kTerms; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double upper = std::pow(static_cast<double>(kTerms), 1.0 - s) / (s - 1.0);
    const double lower = std::pow(static_cast<double>(kTerms) + 1.0, 1.0 - s) / (s - 1.0);
    return {sum + 0.5 * (upper + lower), 0.5 * (upper - lower) + 1e-12};
}

TEST(ZetaTest, EvenValuesExact) {
    EXPECT_NEAR(zeta(2.0), kPi * kPi / 6.0, 1e-14);
    EXPECT_NEAR(zeta(4.0), std::pow(kPi, 4) / 90.0, 1e-14);
    EXPECT_NEAR(zeta(6.0), std::pow(kPi, 6) / 945.0, 1e-14);
}

TEST(ZetaTest, MatchesPartialSumOracle) {
    for (const double s : {1.1, 1.5, 2.5, 3.0, 5.0}) {
        const auto [value, width] = zeta_oracle(s);
        EXPECT_NEAR(zeta(s), value, width + 1e-12) << "s=" << s;
    }
}

TEST(ZetaTest, RejectsArgumentsAtOrBelowOne) {
    EXPECT_THROW((void)zeta(1.0), std::domain_error);
    EXPECT_THROW((void)zeta(0.5), std::domain_error);
}

TEST(ZetaTest, ContinuationKnownValues) {
    EXPECT_DOUBLE_EQ(zeta_continued(0.0), -0.5);
    EXPECT_NEAR(zeta_continued(-1.0), -1.0 / 12.0, 1e-13);
    EXPECT_NEAR(zeta_continued(-3.0), 1.0 / 120.0, 1e-13);
    EXPECT_EQ(zeta_continued(-2.0), 0.0);
    EXPECT_NEAR(zeta_continued(0.5), -1.4603545088095868, 1e-12);
    EXPECT_NEAR(zeta_continued(-0.5), -0.20788622497735457, 1e-12);
    EXPECT_THROW((void)zeta_continued(1.0), std::domain_error);
}

TEST(PowerTailTest, BracketContainsTail) {
    for (const double s : {1.5, 2.0, 2.5}) {
        for (const double K : {1.0, 10.0, 1000.0}) {
            double partial = 0.0;
            for (int k = 1; k <= static_cast<int>(K); ++k) partial += std::pow(k, -s);
            const double tail = zeta(s) - partial;
            const auto b = power_tail_bracket(s, K);
            EXPECT_LE(b.lower, tail + 1e-13);
            EXPECT_GE(b.upper, tail - 1e-13);
        }
    }
    EXPECT_THROW((void)power_tail_bracket(1.0, 5.0), std::domain_error);
    EXPECT_THROW((void)power_tail_bracket(2.0, 0.5), std::invalid_argument);
}

TEST(PowerTailTest, CutoffIsSmallestCertified) {
    for (const double s : {1.5, 2.5, 4.0}) {
        for (const double tol : {1e-2, 1e-6}) {
            const auto K = power_tail_cutoff(s, tol);
            EXPECT_LE(std::pow(static_cast<double>(K), 1.0 - s) / (s - 1.0), tol * (1 + 1e-12));
            if (K > 1) {
                EXPECT_GT(std::pow(static_cast<double>(K - 1), 1.0 - s) / (s - 1.0), tol * (1 - 1e-12));
            }
        }
    }
}

// sum_k cos(2 pi k u) / k^{2n} = (-1)^{n+1} (2 pi)^{2n} B_{2n}(u) / (2 (2n)!)
double bernoulli_cos_2(double u) { return kPi * kPi * (u * u - u + 1.0 / 6.0); }
double bernoulli_cos_4(double u) {
    const double b4 = u * u * u * u - 2.0 * u * u * u + u * u - 1.0 / 30.0;
    return -std::pow(kPi, 4) / 3.0 * b4;
}

TEST(PeriodicZetaTest, BernoulliClosedForms) {
    for (int i = 0; i <= 200; ++i) {
        const double u = i / 200.0;
        EXPECT_NEAR(periodic_zeta_cos(2.0, u), bernoulli_cos_2(u), 1e-12) << u;
        EXPECT_NEAR(periodic_zeta_cos(4.0, u, 1e-12), bernoulli_cos_4(u), 1e-11) << u;
    }
}

TEST(PeriodicZetaTest, ExpansionAgreesWithDirectSummation) {
    for (const double s : {1.5, 2.2, 2.5, 2.8}) {
        for (const double u : {0.01, 0.1, 0.25, 0.37, 0.5}) {
            EXPECT_NEAR(periodic_zeta_cos(s, u), periodic_zeta_cos_direct(s, u, 1e-9), 2e-9)
                << "s=" << s << " u=" << u;
        }
    }
}

TEST(PeriodicZetaTest, SymmetryAndPeriodicity) {
    for (const double s : {1.5, 2.5, 3.5}) {
        for (const double u : {0.05, 0.2, 0.45}) {
            const double v = periodic_zeta_cos(s, u, 1e-10);
            EXPECT_NEAR(periodic_zeta_cos(s, 1.0 - u, 1e-10), v, 1e-9);
            EXPECT_NEAR(periodic_zeta_cos(s, u + 3.0, 1e-10), v, 1e-9);
            EXPECT_NEAR(periodic_zeta_cos(s, -u, 1e-10), v, 1e-9);
        }
        EXPECT_NEAR(periodic_zeta_cos(s, 0.0, 1e-10), zeta(s), 1e-9);
    }
}

TEST(NormalTest, KnownValues) {
    EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
    EXPECT_NEAR(normal_upper_tail(1.959963984540054), 0.025, 1e-15);
    EXPECT_NEAR(normal_cdf(-1.0) + normal_upper_tail(-1.0), 1.0, 1e-15);
    EXPECT_NEAR(normal_upper_tail(10.0), 7.6198530241604696e-24, 1e-36);
}

TEST(AdaptiveSimpsonTest, Integrals) {
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12), 2.0, 1e-11);
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10), 2.0 / 3.0, 1e-8);
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12),
                std::sqrt(kPi), 1e-10);
    EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0, 1e-9), 0.0);
}

}  // namespace
}  // namespace ranapprox
