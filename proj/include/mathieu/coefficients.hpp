#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathieu/errors.hpp"
#include "mathieu/params.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

enum class Family { F, Q, SHat, DoubleFactorial, Custom };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::Q: return "Q";
    case Family::SHat: return "SHat";
    case Family::DoubleFactorial: return "DoubleFactorial";
    case Family::Custom: return "Custom";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::F, Family::Q, Family::SHat, Family::DoubleFactorial,
                   Family::Custom}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

/// One coefficient together with its natural logarithm. Zero coefficients
/// carry log_value = -inf.
struct Term {
  std::size_t n = 0;
  double value = 0.0;
  double log_value = -std::numeric_limits<double>::infinity();

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

inline void require_index(std::size_t n) {
  if (n < 1) throw DomainError("coefficient index must be >= 1");
}

inline Term term_from_log(std::size_t n, double log_value) {
  return {n, std::exp(log_value), log_value};
}

inline Term term_from_value(std::size_t n, double value) {
  return {n, value, value > 0.0 ? std::log(value)
                                : -std::numeric_limits<double>::infinity()};
}

// log(n^2 + r^2) split as log(1 + r^2) + log1p((n^2 - 1)/(1 + r^2)) so the
// n = 1 coefficient normalizes to exactly 1.
inline double log_mathieu_denominator(std::size_t n, double r2) {
  const double nd = static_cast<double>(n);
  return std::log1p(r2) + std::log1p((nd * nd - 1.0) / (1.0 + r2));
}

}  // namespace detail

/// log a_n for the normalized generalized Mathieu series,
/// a_n = n (r^2+1)^(mu+1) / (n^2+r^2)^(mu+1).
inline double log_coeff_F(std::size_t n, const ParamSet& p) {
  detail::require_index(n);
  const double r2 = p.r() * p.r();
  const double log_ratio = std::log1p(r2) - detail::log_mathieu_denominator(n, r2);
  return std::log(static_cast<double>(n)) + (p.mu() + 1.0) * log_ratio;
}

inline double coeff_F(std::size_t n, const ParamSet& p) {
  return std::exp(log_coeff_F(n, p));
}

/// log C_n for the factorial variant,
/// C_n = n! (r^2+1)^(mu+1) / ((n!)^2+r^2)^(mu+1). Works entirely with
/// log n! since (n!)^2 overflows a double near n = 86.
inline double log_coeff_Q(std::size_t n, const ParamSet& p) {
  detail::require_index(n);
  if (n == 1) return 0.0;
  const double r2 = p.r() * p.r();
  const double lf = log_factorial(n);
  const double log_den = 2.0 * lf + std::log1p(r2 * std::exp(-2.0 * lf));
  return lf + (p.mu() + 1.0) * (std::log1p(r2) - log_den);
}

inline double coeff_Q(std::size_t n, const ParamSet& p) {
  return std::exp(log_coeff_Q(n, p));
}

/// Coefficients of the two closed-form starlike examples:
///   SHat:            1, then 8/(n^2+1)^3
///   DoubleFactorial: 1, then 4 (2n-1)!! / [(2n+1)!! + 1]^2
inline Term example_term(Family family, std::size_t n) {
  detail::require_index(n);
  if (n == 1) return {1, 1.0, 0.0};
  const double nd = static_cast<double>(n);
  switch (family) {
    case Family::SHat: {
      const double q = nd * nd + 1.0;
      return {n, 8.0 / (q * q * q), std::log(8.0) - 3.0 * std::log(q)};
    }
    case Family::DoubleFactorial: {
      const double lo = log_odd_double_factorial(n);
      const double hi = log_odd_double_factorial(n + 1);
      const double log_den = hi + std::log1p(std::exp(-hi));
      return detail::term_from_log(n, 2.0 * std::numbers::ln2 + lo - 2.0 * log_den);
    }
    default:
      throw DomainError("coeff_example expects family SHat or DoubleFactorial");
  }
}

inline double coeff_example(Family family, std::size_t n) {
  return example_term(family, n).value;
}

/// Lazily generated normalized coefficient sequence a_1, a_2, ... with
/// log-domain magnitudes. Immutable; copies share nothing mutable.
class CoefficientSeq {
 public:
  using Generator = std::function<Term(std::size_t)>;
  /// Bound on sum_{n > N} n a_n, used by the Goodman criterion.
  using TailMajorant = std::function<double(std::size_t)>;

  static CoefficientSeq mathieu_f(const ParamSet& p) {
    CoefficientSeq s(Family::F, p, "F",
                     [p](std::size_t n) { return detail::term_from_log(n, log_coeff_F(n, p)); });
    s.unimodal_ = true;
    return s;
  }

  static CoefficientSeq mathieu_q(const ParamSet& p) {
    CoefficientSeq s(Family::Q, p, "Q",
                     [p](std::size_t n) { return detail::term_from_log(n, log_coeff_Q(n, p)); });
    s.unimodal_ = true;
    return s;
  }

  static CoefficientSeq shat() {
    CoefficientSeq s(Family::SHat, std::nullopt, "SHat",
                     [](std::size_t n) { return example_term(Family::SHat, n); });
    s.unimodal_ = true;
    // sum_{n>N} 8n/(n^2+1)^3 <= int_N^inf 8x/(x^2+1)^3 dx
    s.goodman_tail_ = [](std::size_t N) {
      const double q = static_cast<double>(N) * static_cast<double>(N) + 1.0;
      return 2.0 / (q * q);
    };
    return s;
  }

  static CoefficientSeq double_factorial() {
    CoefficientSeq s(Family::DoubleFactorial, std::nullopt, "DoubleFactorial",
                     [](std::size_t n) { return example_term(Family::DoubleFactorial, n); });
    s.unimodal_ = true;
    // Telescoping: 4n(2n-1)!!/[(2n+1)!!+1]^2 < 2/((2n-1)!!+1) - 2/((2n+1)!!+1)
    s.goodman_tail_ = [](std::size_t N) {
      const double l = log_odd_double_factorial(N + 1);
      return 2.0 * std::exp(-(l + std::log1p(std::exp(-l))));
    };
    return s;
  }

  static CoefficientSeq of(Family family, const std::optional<ParamSet>& p) {
    switch (family) {
      case Family::F:
      case Family::Q:
        if (!p) throw DomainError("families F and Q require (mu, r)");
        return family == Family::F ? mathieu_f(*p) : mathieu_q(*p);
      case Family::SHat: return shat();
      case Family::DoubleFactorial: return double_factorial();
      case Family::Custom: break;
    }
    throw DomainError("use CoefficientSeq::custom for custom sequences");
  }

  /// f(z) = z: a_1 = 1 and every later coefficient zero.
  static CoefficientSeq identity() {
    CoefficientSeq s(Family::Custom, std::nullopt, "identity", [](std::size_t n) {
      return detail::term_from_value(n, n == 1 ? 1.0 : 0.0);
    });
    s.goodman_tail_ = [](std::size_t) { return 0.0; };
    return s;
  }

  /// Arbitrary sequence given by its values. `unimodal` asserts that once
  /// the sequence decreases it never increases again.
  static CoefficientSeq custom(std::string name, std::function<double(std::size_t)> value,
                               bool unimodal = false, TailMajorant goodman_tail = {}) {
    CoefficientSeq s(Family::Custom, std::nullopt, std::move(name),
                     [value = std::move(value)](std::size_t n) {
                       detail::require_index(n);
                       return detail::term_from_value(n, value(n));
                     });
    s.unimodal_ = unimodal;
    s.goodman_tail_ = std::move(goodman_tail);
    return s;
  }

  /// The sequence n a_n: coefficients of f'(z) written as sum n a_n z^(n-1).
  CoefficientSeq index_weighted() const {
    CoefficientSeq s = *this;
    s.name_ = name_ + "'";
    s.weighted_ = true;
    s.generator_ = [g = generator_](std::size_t n) {
      Term t = g(n);
      const double nd = static_cast<double>(n);
      t.value *= nd;
      t.log_value += std::log(nd);
      return t;
    };
    s.goodman_tail_ = {};
    // n*C_n for the factorial family is not known to be unimodal.
    s.unimodal_ = unimodal_ && family_ != Family::Q;
    return s;
  }

  Term term(std::size_t n) const {
    detail::require_index(n);
    return generator_(n);
  }
  double value(std::size_t n) const { return term(n).value; }
  double log_value(std::size_t n) const { return term(n).log_value; }

  /// Terms 1..count.
  std::vector<Term> prefix(std::size_t count) const {
    std::vector<Term> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) out.push_back(generator_(n));
    return out;
  }

  std::vector<double> values(std::size_t count) const {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) out.push_back(generator_(n).value);
    return out;
  }

  Family family() const noexcept { return family_; }
  const std::optional<ParamSet>& params() const noexcept { return params_; }
  const std::string& name() const noexcept { return name_; }
  bool is_index_weighted() const noexcept { return weighted_; }
  bool unimodal() const noexcept { return unimodal_; }
  const TailMajorant& goodman_tail() const noexcept { return goodman_tail_; }

 private:
  CoefficientSeq(Family family, std::optional<ParamSet> params, std::string name,
                 Generator gen)
      : family_(family),
        params_(std::move(params)),
        name_(std::move(name)),
        generator_(std::move(gen)) {}

  Family family_;
  std::optional<ParamSet> params_;
  std::string name_;
  Generator generator_;
  bool weighted_ = false;
  bool unimodal_ = false;
  TailMajorant goodman_tail_;
};

}  // namespace mathieu
