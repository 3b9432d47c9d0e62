#pragma once

#include <cmath>
#include <stdexcept>

namespace knnad {

/// Digamma function for x > 0.
///
/// Uses the asymptotic series once x >= 6 and the upward recurrence
/// psi(x) = psi(x+1) - 1/x below that. Absolute accuracy is better than
/// 1e-10 over the positive axis (the first omitted series term at x = 6
/// is ~1e-12).
template <typename Scalar = double>
Scalar digamma(Scalar x) {
  if (!(x > Scalar(0))) {
    throw std::domain_error("digamma: argument must be positive");
  }
  Scalar acc = 0;
  while (x < Scalar(6)) {
    acc -= Scalar(1) / x;
    x += Scalar(1);
  }
  const Scalar inv = Scalar(1) / x;
  const Scalar inv2 = inv * inv;
  // psi(x) ~ ln x - 1/(2x) - 1/(12x^2) + 1/(120x^4) - 1/(252x^6)
  //          + 1/(240x^8) - 1/(132x^10) + 691/(32760x^12)
  const Scalar series =
      std::log(x) - inv / Scalar(2) -
      inv2 * (Scalar(1) / 12 -
              inv2 * (Scalar(1) / 120 -
                      inv2 * (Scalar(1) / 252 -
                              inv2 * (Scalar(1) / 240 -
                                      inv2 * (Scalar(1) / 132 -
                                              inv2 * Scalar(691) / 32760)))));
  return acc + series;
}

/// Standard normal CDF.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// Standard normal quantile function (inverse CDF) for p in (0, 1).
///
/// Rational initial guess (Acklam) polished with one Halley step against
/// erfc, which brings the result to full double precision.
double normal_quantile(double p);

/// Volume of the unit ball in `dim` dimensions: pi^(d/2) / Gamma(d/2 + 1).
double unit_ball_volume(int dim);

/// log of the Euler beta function B(a, b), a, b > 0.
inline double ln_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("ln_beta: parameters must be positive");
  }
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace knnad
