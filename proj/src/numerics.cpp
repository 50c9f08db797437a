#include "ranapprox/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ranapprox {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2j} / (2j)!  for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

// Euler-Maclaurin evaluation, valid for every real x != 1 with x > -15.
double zeta_euler_maclaurin(double x) {
    constexpr int kTerms = 24;
    const double n = kTerms;
    double sum = 0.0;
    for (int k = kTerms - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -x);
    sum += std::pow(n, 1.0 - x) / (x - 1.0);
    sum += 0.5 * std::pow(n, -x);
    // rising factorial x (x+1) ... (x+2j-2), times n^{-x-2j+1}
    double rising = x;
    double power = std::pow(n, -x - 1.0);
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        sum += kBernoulliOverFactorial[j] * rising * power;
        const double a = x + 2.0 * static_cast<double>(j) + 1.0;
        rising *= a * (a + 1.0);
        power /= n * n;
    }
    return sum;
}

}  // namespace

double zeta(double s) {
    if (!(s > 1.0)) {
        throw std::domain_error("zeta: argument must be > 1, got " + std::to_string(s));
    }
    return zeta_euler_maclaurin(s);
}

double zeta_continued(double x) {
    if (x == 1.0) throw std::domain_error("zeta_continued: pole at 1");
    if (x == 0.0) return -0.5;
    if (x > 0.0) return zeta_euler_maclaurin(x);
    if (x == std::floor(x) && std::fmod(-x, 2.0) == 0.0) return 0.0;  // trivial zeros
    // zeta(x) = 2^x pi^{x-1} sin(pi x / 2) Gamma(1-x) zeta(1-x)
    const double log_mag = x * std::log(2.0) + (x - 1.0) * std::log(kPi) + std::lgamma(1.0 - x);
    return std::exp(log_mag) * std::sin(kPi * x / 2.0) * zeta_euler_maclaurin(1.0 - x);
}

TailBracket power_tail_bracket(double s, double K) {
    if (!(s > 1.0)) throw std::domain_error("power_tail_bracket: exponent must be > 1");
    if (!(K >= 1.0)) throw std::invalid_argument("power_tail_bracket: K must be >= 1");
    return {std::pow(K + 1.0, 1.0 - s) / (s - 1.0), std::pow(K, 1.0 - s) / (s - 1.0)};
}

std::size_t power_tail_cutoff(double s, double tol) {
    if (!(s > 1.0)) throw std::domain_error("power_tail_cutoff: exponent must be > 1");
    if (!(tol > 0.0)) throw std::invalid_argument("power_tail_cutoff: tolerance must be > 0");
    const double k = std::pow(tol * (s - 1.0), -1.0 / (s - 1.0));
    if (!(k < 1e15)) throw std::overflow_error("power_tail_cutoff: cutoff too large");
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k)));
}

double periodic_zeta_cos_direct(double s, double u, double tol) {
    if (!(s > 1.0)) throw std::domain_error("periodic_zeta_cos: exponent must be > 1");
    u = u - std::floor(u);
    if (!(tol > 0.0)) throw std::invalid_argument("periodic_zeta_cos: tolerance must be > 0");
    double k_cut = std::pow(tol * (s - 1.0), -1.0 / (s - 1.0));
    const double sin_pi_u = std::abs(std::sin(kPi * u));
    if (sin_pi_u > 0.0) {
        // Abel summation: |sum_{k>K} k^{-s} cos(2 pi k u)| <= (K+1)^{-s} / |sin(pi u)|
        k_cut = std::min(k_cut, std::pow(tol * sin_pi_u, -1.0 / s));
    }
    if (!(k_cut < 1e11)) throw std::overflow_error("periodic_zeta_cos_direct: cutoff too large");
    const std::size_t k_max = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k_cut)));
    double sum = 0.0;
    for (std::size_t k = k_max; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        sum += std::pow(kd, -s) * std::cos(2.0 * kPi * std::fmod(kd * u, 1.0));
    }
    return sum;
}

double periodic_zeta_cos(double s, double u, double tol) {
    if (!(s > 1.0)) throw std::domain_error("periodic_zeta_cos: exponent must be > 1");
    u = u - std::floor(u);
    if (u > 0.5) u = 1.0 - u;
    if (s >= 2.9) return periodic_zeta_cos_direct(s, u, tol);
    if (u == 0.0) return zeta(s);

    // Coefficients depend on s only; keep the last set per thread.
    struct Coefficients {
        double s = 0.0;
        double leading = 0.0;
        std::vector<double> series;  // (-1)^j zeta(s - 2j)
    };
    thread_local Coefficients cache;
    if (cache.s != s || cache.series.empty()) {
        cache.s = s;
        cache.leading = kPi / (2.0 * std::tgamma(s) * std::cos(kPi * s / 2.0));
        cache.series.clear();
        for (int j = 0; j < 80; ++j) {
            cache.series.push_back(((j % 2 == 0) ? 1.0 : -1.0) * zeta_continued(s - 2.0 * j));
        }
    }

    const double z = 2.0 * kPi * u;
    double sum = cache.leading * std::pow(z, s - 1.0);
    double z_pow_over_fact = 1.0;  // z^{2j} / (2j)!
    for (std::size_t j = 0; j < cache.series.size(); ++j) {
        const double term = cache.series[j] * z_pow_over_fact;
        sum += term;
        if (j > 2 && std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        z_pow_over_fact *= z * z / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
    }
    return sum;
}

double normal_upper_tail(double t) { return 0.5 * std::erfc(t / std::numbers::sqrt2); }

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    // Seed with a few panels so narrow features are not missed on the first pass.
    constexpr int kPanels = 8;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * h;
        const double hi = (i + 1 == kPanels) ? b : lo + h;
        const double flo = f(lo);
        const double fhi = f(hi);
        const double fm = f(0.5 * (lo + hi));
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
        total += simpson_step(f, lo, hi, flo, fm, fhi, whole, tol / kPanels, max_depth);
    }
    return total;
}

}  // namespace ranapprox
