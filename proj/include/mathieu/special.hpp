#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>

#include "mathieu/errors.hpp"

namespace mathieu {

/// Apery's constant zeta(3). Regenerated from the defining series in the tests.
inline constexpr double kZeta3 = 1.2020569031595942;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// log Gamma(x) for x > 0 without touching the global `signgam`.
inline double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// log n!
inline double log_factorial(std::size_t n) {
  return log_gamma(static_cast<double>(n) + 1.0);
}

/// log (2n-1)!! = log((2n)! / (2^n n!)); (2*0-1)!! is taken as 1.
inline double log_odd_double_factorial(std::size_t n) {
  if (n == 0) return 0.0;
  const double nd = static_cast<double>(n);
  return log_gamma(2.0 * nd + 1.0) - nd * std::numbers::ln2 - log_gamma(nd + 1.0);
}

/// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0: upward recurrence to
/// x >= 8, then the asymptotic expansion through x^-14.
inline double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("digamma requires finite x > 0");
  }
  double shift = 0.0;
  while (x < 8.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  // Bernoulli terms B_{2k}/(2k x^{2k}), k = 1..7, Horner in w.
  const double series =
      w * (1.0 / 12.0 -
           w * (1.0 / 120.0 -
                w * (1.0 / 252.0 -
                     w * (1.0 / 240.0 -
                          w * (1.0 / 132.0 -
                               w * (691.0 / 32760.0 - w * (1.0 / 12.0)))))));
  return shift + std::log(x) - 0.5 / x - series;
}

/// Trigamma psi'(x) for x > 0, same scheme as digamma.
inline double trigamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("trigamma requires finite x > 0");
  }
  double shift = 0.0;
  while (x < 8.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  // 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
  const double series =
      w * (1.0 / 6.0 -
           w * (1.0 / 30.0 -
                w * (1.0 / 42.0 -
                     w * (1.0 / 30.0 -
                          w * (5.0 / 66.0 -
                               w * (691.0 / 2730.0 - w * (7.0 / 6.0)))))));
  return shift + 1.0 / x + 0.5 * w + series / x;
}

/// Neumaier-compensated accumulator.
template <std::floating_point T>
class CompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace mathieu
