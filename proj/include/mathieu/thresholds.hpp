#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mathieu/coefficients.hpp"
#include "mathieu/criteria.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/params.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

enum class ThresholdKind {
  FCloseToConvex,
  FStarlike,
  FHalfPlaneRatio,
  FHalfPlaneDeriv,
  QCloseToConvex,
  QStarlike,
  QHalfPlaneRatio,
  QHalfPlaneDeriv,
};

/// Geometric property asserted by a theorem.
enum class Property { CloseToConvex, Starlike, HalfPlaneRatio, HalfPlaneDeriv };

inline constexpr std::array<ThresholdKind, 8> kAllThresholdKinds = {
    ThresholdKind::FCloseToConvex,  ThresholdKind::FStarlike,
    ThresholdKind::FHalfPlaneRatio, ThresholdKind::FHalfPlaneDeriv,
    ThresholdKind::QCloseToConvex,  ThresholdKind::QStarlike,
    ThresholdKind::QHalfPlaneRatio, ThresholdKind::QHalfPlaneDeriv,
};

inline std::string_view to_string(ThresholdKind k) {
  switch (k) {
    case ThresholdKind::FCloseToConvex: return "F_CloseToConvex";
    case ThresholdKind::FStarlike: return "F_Starlike";
    case ThresholdKind::FHalfPlaneRatio: return "F_HalfPlaneRatio";
    case ThresholdKind::FHalfPlaneDeriv: return "F_HalfPlaneDeriv";
    case ThresholdKind::QCloseToConvex: return "Q_CloseToConvex";
    case ThresholdKind::QStarlike: return "Q_Starlike";
    case ThresholdKind::QHalfPlaneRatio: return "Q_HalfPlaneRatio";
    case ThresholdKind::QHalfPlaneDeriv: return "Q_HalfPlaneDeriv";
  }
  return "?";
}

inline std::optional<ThresholdKind> threshold_kind_from_string(std::string_view s) {
  for (ThresholdKind k : kAllThresholdKinds) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

inline Family family_of(ThresholdKind k) {
  return static_cast<int>(k) < 4 ? Family::F : Family::Q;
}

inline Property property_of(ThresholdKind k) {
  return static_cast<Property>(static_cast<int>(k) % 4);
}

/// Smallest admissible mu. Starlikeness of Q and the derivative half-plane
/// bound for Q need mu >= 2 (inclusive); everything else needs mu > 0.
inline double mu_min(ThresholdKind k) {
  return (k == ThresholdKind::QStarlike || k == ThresholdKind::QHalfPlaneDeriv) ? 2.0 : 0.0;
}

inline bool mu_admissible(ThresholdKind k, double mu) {
  if (!std::isfinite(mu) || !(mu > 0.0)) return false;
  const double lo = mu_min(k);
  return lo == 0.0 ? true : mu >= lo;
}

enum class HypothesisPolicy {
  Strict,
  /// Accept any mu > 0; used to probe Q_Starlike / Q_HalfPlaneDeriv below
  /// mu = 2 where the radius formula is applied outside its hypotheses.
  Exploratory,
};

/// r^2 at the root of phi(1) = (mu + 2mu^2) - (3 + 5mu) r^2 + r^4 closest
/// to zero, in rationalized form to avoid cancellation as mu -> 0.
inline double starlike_radius_squared_F(double mu) {
  const double s = 5.0 * mu + 3.0;
  return 2.0 * (mu + 2.0 * mu * mu) / (s + std::sqrt(17.0 * mu * mu + 26.0 * mu + 9.0));
}

/// Closed-form sufficient radius for each theorem.
inline double threshold(ThresholdKind kind, double mu,
                        HypothesisPolicy policy = HypothesisPolicy::Strict) {
  const bool ok = policy == HypothesisPolicy::Strict ? mu_admissible(kind, mu)
                                                     : std::isfinite(mu) && mu > 0.0;
  if (!ok) {
    throw HypothesisError(std::string(to_string(kind)) + ": mu = " + std::to_string(mu) +
                          " is outside the theorem hypotheses");
  }
  switch (kind) {
    case ThresholdKind::FStarlike:
    case ThresholdKind::FHalfPlaneDeriv:
      return std::sqrt(starlike_radius_squared_F(mu));
    case ThresholdKind::FHalfPlaneRatio:
      return std::sqrt((2.0 * mu + 1.0) / 3.0);
    default:
      return std::sqrt(mu);
  }
}

/// Radius below which the F-family coefficients a_n merely decrease
/// (no convexity): sqrt(1 + 2mu). Exploratory only.
inline double decrease_only_radius_F(double mu) { return std::sqrt(1.0 + 2.0 * mu); }

/// The coefficient sequence whose chain is checked for a kind: a_n for the
/// close-to-convex, starlike and ratio kinds; n a_n for the derivative kinds.
inline CoefficientSeq criterion_sequence(ThresholdKind kind, const ParamSet& p) {
  auto base = family_of(kind) == Family::F ? CoefficientSeq::mathieu_f(p)
                                           : CoefficientSeq::mathieu_q(p);
  return property_of(kind) == Property::HalfPlaneDeriv ? base.index_weighted() : base;
}

/// The sequence criterion paired with each kind.
inline CriterionReport sequence_criterion(ThresholdKind kind, const ParamSet& p,
                                          std::size_t N = kDefaultCriterionTerms) {
  const auto seq = criterion_sequence(kind, p);
  switch (property_of(kind)) {
    case Property::CloseToConvex: return check_ozaki(seq, N);
    case Property::Starlike: return check_fejer_starlike(seq, N);
    case Property::HalfPlaneRatio:
    case Property::HalfPlaneDeriv: return check_fejer_halfplane(seq, N);
  }
  throw std::logic_error("unreachable");
}

// --- digamma bounds -------------------------------------------------------

struct PsiBoundsResult {
  bool lower_ok = false;
  bool upper_ok = false;
  bool trigamma_ok = false;
  double lower_margin = 0.0;     // psi(x) - (log x - 1/x)
  double upper_margin = 0.0;     // (log x - 1/(2x)) - psi(x)
  double trigamma_margin = 0.0;  // (1/x + 1/x^2) - psi'(x)
};

/// Checks log x - 1/x < psi(x) < log x - 1/(2x) and psi'(x) < 1/x + 1/x^2.
inline PsiBoundsResult psi_bounds_check(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("psi_bounds_check requires x > 1");
  const double lx = std::log(x);
  const double psi = digamma(x);
  PsiBoundsResult r;
  r.lower_margin = psi - (lx - 1.0 / x);
  r.upper_margin = (lx - 0.5 / x) - psi;
  r.trigamma_margin = (1.0 / x + 1.0 / (x * x)) - trigamma(x);
  r.lower_ok = r.lower_margin > 0.0;
  r.upper_ok = r.upper_margin > 0.0;
  r.trigamma_ok = r.trigamma_margin > 0.0;
  return r;
}

// --- convexity of the factorial family ------------------------------------

/// A real number stored as sign * exp(log_abs).
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static SignedLog from(double v) {
    if (v == 0.0) return {};
    return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
  }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
  SignedLog scaled_by_log(double log_factor) const { return {sign, log_abs + log_factor}; }
};

namespace detail {

// Both A and A~ are homogeneous of degree 4 in (r, Gamma(x+1)); with
// t = r^2 / Gamma(x+1)^2 they factor as Gamma(x+1)^4 * (polynomial in t).
inline double gamma_ratio_t(double x, double r) {
  return std::exp(2.0 * std::log(r) - 2.0 * log_gamma(x + 1.0));
}

inline void require_positive_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be finite and > 0");
}

}  // namespace detail

/// A(x) from g''(x) = Gamma(x+1) (Gamma(x+1)^2+r^2)^(-mu-3) (1+r^2)^(mu+1) A(x),
/// with g(x) = x Gamma(x+1)(1+r^2)^(mu+1) / (Gamma(x+1)^2+r^2)^(mu+1).
inline SignedLog A_of_x(double x, const ParamSet& p) {
  detail::require_positive_x(x);
  const double mu = p.mu();
  const double t = detail::gamma_ratio_t(x, p.r());
  const double k = 2.0 * mu + 1.0;
  const double psi = digamma(x + 1.0);
  const double psi1 = trigamma(x + 1.0);
  const double mixed = (t + 1.0) * (t - k);
  const double quartic = t * t - 2.0 * t * (4.0 * mu + 3.0) + k * k;
  const double reduced = 2.0 * mixed * psi + x * quartic * psi * psi + x * mixed * psi1;
  return SignedLog::from(reduced).scaled_by_log(4.0 * log_gamma(x + 1.0));
}

/// A~(x) from g~''(x) = Gamma(x+1)(r^2+Gamma(x+1)^2)^(-mu-3) A~(x),
/// with g~(x) = Gamma(x+1) / (Gamma(x+1)^2 + r^2)^(mu+1).
inline SignedLog A_tilde_of_x(double x, const ParamSet& p) {
  detail::require_positive_x(x);
  const double mu = p.mu();
  const double t = detail::gamma_ratio_t(x, p.r());
  const double k = 2.0 * mu + 1.0;
  const double psi = digamma(x + 1.0);
  const double quartic = t * t - 2.0 * t * (4.0 * mu + 3.0) + k * k;
  const double reduced = quartic * psi * psi + (t + 1.0) * (t - k) * trigamma(x + 1.0);
  return SignedLog::from(reduced).scaled_by_log(4.0 * log_gamma(x + 1.0));
}

inline double log_gamma_sq_plus_r2(double x, double r) {
  const double lg = log_gamma(x + 1.0);
  return 2.0 * lg + std::log1p(std::exp(2.0 * std::log(r) - 2.0 * lg));
}

/// g(x) = x Gamma(x+1) (1+r^2)^(mu+1) / (Gamma(x+1)^2 + r^2)^(mu+1); g(n) = n C_n.
inline double g_of_x(double x, const ParamSet& p) {
  detail::require_positive_x(x);
  const double e = p.mu() + 1.0;
  return std::exp(std::log(x) + log_gamma(x + 1.0) + e * std::log1p(p.r() * p.r()) -
                  e * log_gamma_sq_plus_r2(x, p.r()));
}

/// g''(x) assembled from A(x).
inline double g_second_derivative(double x, const ParamSet& p) {
  const double e = p.mu() + 1.0;
  const SignedLog a = A_of_x(x, p);
  if (a.sign == 0) return 0.0;
  const double log_prefactor = log_gamma(x + 1.0) - (p.mu() + 3.0) * log_gamma_sq_plus_r2(x, p.r()) +
                               e * std::log1p(p.r() * p.r());
  return a.sign * std::exp(a.log_abs + log_prefactor);
}

/// g~(x) = Gamma(x+1) / (Gamma(x+1)^2 + r^2)^(mu+1).
inline double g_tilde_of_x(double x, const ParamSet& p) {
  detail::require_positive_x(x);
  return std::exp(log_gamma(x + 1.0) - (p.mu() + 1.0) * log_gamma_sq_plus_r2(x, p.r()));
}

inline double g_tilde_second_derivative(double x, const ParamSet& p) {
  const SignedLog a = A_tilde_of_x(x, p);
  if (a.sign == 0) return 0.0;
  const double log_prefactor = log_gamma(x + 1.0) - (p.mu() + 3.0) * log_gamma_sq_plus_r2(x, p.r());
  return a.sign * std::exp(a.log_abs + log_prefactor);
}

/// h(n) = n C_n - (n+1) C_{n+1}.
inline double h_Q(std::size_t n, const ParamSet& p) {
  const double nd = static_cast<double>(n);
  return nd * coeff_Q(n, p) - (nd + 1.0) * coeff_Q(n + 1, p);
}

/// h~(n) = C_n - C_{n+1}.
inline double h_tilde_Q(std::size_t n, const ParamSet& p) {
  return coeff_Q(n, p) - coeff_Q(n + 1, p);
}

// --- starlikeness polynomial for the F family -----------------------------

/// phi(x) = x^4 (mu + 2mu^2) - x^2 (3 + 5mu) r^2 + r^4.
inline double phi_F(double x, const ParamSet& p) {
  const double mu = p.mu(), r2 = p.r() * p.r(), x2 = x * x;
  return x2 * x2 * (mu + 2.0 * mu * mu) - x2 * (3.0 + 5.0 * mu) * r2 + r2 * r2;
}

inline double phi_F_derivative(double x, const ParamSet& p) {
  const double mu = p.mu(), r2 = p.r() * p.r();
  return 4.0 * x * x * x * (2.0 * mu * mu + mu) - 2.0 * (3.0 + 5.0 * mu) * r2 * x;
}

/// phi(1) >= 0 and phi'(x) >= 0 on a uniform sample of [1, 50]: the
/// condition under which x^2/(x^2+r^2)^(mu+1) is convex on x >= 1.
inline bool phi_convexity_check(const ParamSet& p, std::size_t samples = 491) {
  auto ok = [](double v, double scale) {
    return v >= -kChainSlack * std::max(1.0, scale);
  };
  const double mu = p.mu(), r2 = p.r() * p.r();
  if (!ok(phi_F(1.0, p), (mu + 2.0 * mu * mu) + (3.0 + 5.0 * mu) * r2)) return false;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = 1.0 + 49.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double scale = 4.0 * x * x * x * (2.0 * mu * mu + mu);
    if (!ok(phi_F_derivative(x, p), scale)) return false;
  }
  return true;
}

}  // namespace mathieu
