#pragma once

#include <cstddef>
#include <functional>

namespace ranapprox {

// Riemann zeta for real s > 1. Partial sum plus Euler-Maclaurin tail
// (integral term and Bernoulli corrections); absolute error below 1e-13.
// Throws std::domain_error for s <= 1.
[[nodiscard]] double zeta(double s);

// Analytically continued zeta for real x != 1. Negative arguments go through
// the functional equation.
[[nodiscard]] double zeta_continued(double x);

// Certified bracket for the tail sum  sum_{k > K} k^{-s},  s > 1, K >= 1.
struct TailBracket {
    double lower = 0.0;
    double upper = 0.0;
};
[[nodiscard]] TailBracket power_tail_bracket(double s, double K);

// Smallest K >= 1 whose integral upper bound  K^{1-s}/(s-1)  is <= tol.
[[nodiscard]] std::size_t power_tail_cutoff(double s, double tol);

// Periodic zeta  C_s(u) = sum_{k>=1} k^{-s} cos(2 pi k u)  for s > 1.
//
// For 1 < s < 2.9 the small-argument expansion of the polylogarithm on the
// unit circle is used,
//   C_s(u) = pi (2 pi u)^{s-1} / (2 Gamma(s) cos(pi s / 2))
//            + sum_j (-1)^j zeta(s - 2j) (2 pi u)^{2j} / (2j)!,
// which converges geometrically (ratio u^2) on 0 <= u <= 1/2. Larger s fall
// back to direct summation with a certified cutoff (absolute tail or Abel
// summation bound, whichever is smaller) at accuracy `tol`.
[[nodiscard]] double periodic_zeta_cos(double s, double u, double tol = 1e-14);

// Direct truncated summation of C_s(u) with a certified cutoff. Exposed for
// cross-checks; cost grows like tol^{-1/(s-1)}.
[[nodiscard]] double periodic_zeta_cos_direct(double s, double u, double tol);

// Standard normal upper tail  Q(t) = 1 - Phi(t).
[[nodiscard]] double normal_upper_tail(double t);
[[nodiscard]] double normal_cdf(double t);

// Adaptive Simpson quadrature on [a, b] to absolute tolerance `tol`.
[[nodiscard]] double adaptive_simpson(const std::function<double(double)>& f, double a,
                                      double b, double tol, int max_depth = 50);

}  // namespace ranapprox
