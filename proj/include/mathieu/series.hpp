#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>

#include "mathieu/coefficients.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

template <class T>
struct BasicEvalResult {
  T value{};
  std::size_t truncation_index = 0;
  double tail_bound = 0.0;

  friend bool operator==(const BasicEvalResult&, const BasicEvalResult&) = default;
};

using EvalResult = BasicEvalResult<std::complex<double>>;
using RealEvalResult = BasicEvalResult<double>;

namespace detail {

class ComplexAccumulator {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_, im_;
};

}  // namespace detail

/// sum_{k} coeffs[k] w^k by Horner's rule.
inline std::complex<double> horner(std::span<const double> coeffs, std::complex<double> w) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

/// Partial sum sum_{n=1}^{N} a_n z^n with no tail estimate.
inline std::complex<double> eval_partial(const CoefficientSeq& c, std::complex<double> z,
                                         std::size_t N) {
  detail::ComplexAccumulator sum;
  std::complex<double> zpow = z;
  for (std::size_t n = 1; n <= N; ++n) {
    sum.add(c.value(n) * zpow);
    zpow *= z;
  }
  return sum.value();
}

/// Evaluates sum_{n>=1} a_n z^n for |z| < 1.
///
/// Truncation uses the geometric majorant a_{N+1}|z|^{N+1}/(1-|z|), valid
/// while the coefficients are non-increasing past N. For sequences flagged
/// unimodal a single observed decrease suffices; otherwise the whole
/// computed prefix must be non-increasing. When neither holds the routine
/// falls back to doubling N until successive partial sums differ by less
/// than `tol` (a Cauchy estimate rather than a bound).
inline EvalResult eval_series(const CoefficientSeq& c, std::complex<double> z,
                              double tol = kDefaultTolerance,
                              std::size_t max_terms = kDefaultMaxTerms) {
  if (!(tol > 0.0)) throw ConfigurationError("eval_series: tolerance must be > 0");
  const double rho = std::abs(z);
  if (!(rho < 1.0)) throw DomainError("eval_series: requires |z| < 1");

  const double log_rho = std::log(rho);
  const double log_gap = std::log1p(-rho);
  detail::ComplexAccumulator sum;
  std::complex<double> zpow = z;
  Term current = c.term(1);
  bool rose = false;
  bool geometric = true;
  std::size_t checkpoint = 0;
  std::complex<double> checkpoint_sum = 0.0;
  double last_estimate = std::numeric_limits<double>::infinity();

  for (std::size_t n = 1; n <= max_terms; ++n) {
    sum.add(current.value * zpow);
    zpow *= z;
    const Term next = c.term(n + 1);
    if (next.value > current.value) rose = true;

    if (geometric) {
      const bool decreasing_tail = c.unimodal() ? next.value <= current.value : !rose;
      if (decreasing_tail) {
        const double bound =
            rho == 0.0 ? 0.0
                       : std::exp(next.log_value + static_cast<double>(n + 1) * log_rho - log_gap);
        last_estimate = bound;
        if (bound < tol) return {sum.value(), n, bound};
      } else if (!c.unimodal()) {
        geometric = false;
        checkpoint_sum = sum.value();
        checkpoint = std::max<std::size_t>(2 * n, 32);
      }
    } else if (n == checkpoint) {
      const auto s = sum.value();
      const double diff = std::abs(s - checkpoint_sum);
      last_estimate = diff;
      if (diff < tol) return {s, n, diff};
      checkpoint_sum = s;
      checkpoint *= 2;
    }
    current = next;
  }
  throw TruncationError("eval_series: tolerance not reached within term cap", sum.value(),
                        max_terms, last_estimate);
}

/// Bounds for Mathieu's series S(r) displayed by Alzer et al.
inline double alzer_lower_bound(double r) { return 1.0 / (r * r + 1.0 / (2.0 * kZeta3)); }
inline double alzer_upper_bound(double r) { return 1.0 / (r * r + 1.0 / 6.0); }

/// Mathieu's series S(r) = sum 2n/(n^2+r^2)^2.
///
/// The tail past N is pinned between int_{N+1}^inf and int_N^inf of
/// 2x/(x^2+r^2)^2 (the summand decreases for x > r/sqrt 3); the midpoint is
/// added and half the bracket width is reported as tail_bound.
inline RealEvalResult eval_S(double r, double tol = kDefaultTolerance) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("eval_S: requires r > 0");
  if (!(tol > 0.0)) throw ConfigurationError("eval_S: tolerance must be > 0");
  const double r2 = r * r;
  auto upper = [r2](double x) { return 1.0 / (x * x + r2); };
  auto half_width = [&](double x) { return 0.5 * (upper(x) - upper(x + 1.0)); };

  double N = std::max(std::ceil(r / std::sqrt(3.0)), std::ceil(std::cbrt(1.0 / tol)));
  N = std::max(N, 1.0);
  while (half_width(N) >= tol) N = std::ceil(N * 1.1);
  if (N > static_cast<double>(kDefaultMaxTerms)) {
    throw TruncationError("eval_S: tolerance requires too many terms", 0.0, kDefaultMaxTerms,
                          half_width(N));
  }

  CompensatedSum<double> sum;
  for (double n = N; n >= 1.0; n -= 1.0) {
    const double d = n * n + r2;
    sum.add(2.0 * n / (d * d));
  }
  sum.add(0.5 * (upper(N) + upper(N + 1.0)));
  return {sum.value(), static_cast<std::size_t>(N), half_width(N)};
}

/// S(r) from its integral representation (1/r) int_0^inf t sin(rt)/(e^t - 1) dt.
///
/// The range is cut at T = max(50, 40/r), enlarged until the analytic
/// remainder bound (T+1)e^{-T}/(1-e^{-T}) is below r*tol/2; the finite part
/// is integrated to r*tol/2.
inline double eval_S_integral(double r, double tol = kDefaultTolerance) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("eval_S_integral: requires r > 0");
  if (!(tol > 0.0)) throw ConfigurationError("eval_S_integral: tolerance must be > 0");
  const double target = 0.5 * tol * r;
  auto remainder = [](double T) { return (T + 1.0) * std::exp(-T) / -std::expm1(-T); };
  double T = std::max(50.0, 40.0 / r);
  while (remainder(T) >= target) T += 10.0;

  auto integrand = [r](double t) {
    if (t == 0.0) return 0.0;
    return t * std::sin(r * t) / std::expm1(t);
  };
  const auto panels = static_cast<std::size_t>(std::ceil(r * T / std::numbers::pi)) + 1;
  const auto q = integrate_adaptive(integrand, 0.0, T, target, panels);
  return q.value / r;
}

}  // namespace mathieu
