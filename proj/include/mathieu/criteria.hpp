#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathieu/coefficients.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

/// Relative slack for every chain comparison: lhs >= rhs passes when
/// lhs - rhs >= -kChainSlack * max(1, |lhs|, |rhs|).
inline constexpr double kChainSlack = 1e-12;
/// Violations larger than the slack but within this relative band are
/// reported Inconclusive instead of Falsified.
inline constexpr double kIndeterminateBand = 1e-9;
inline constexpr std::size_t kDefaultCriterionTerms = 200;

enum class Criterion { OzakiDecreasing, OzakiIncreasing, FejerStarlike, FejerHalfPlane, GoodmanSum };
enum class Status { Verified, Falsified, Inconclusive };

inline std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::OzakiDecreasing: return "OzakiDecreasing";
    case Criterion::OzakiIncreasing: return "OzakiIncreasing";
    case Criterion::FejerStarlike: return "FejerStarlike";
    case Criterion::FejerHalfPlane: return "FejerHalfPlane";
    case Criterion::GoodmanSum: return "GoodmanSum";
  }
  return "?";
}

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Falsified: return "Falsified";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Location of the worst chain comparison lhs >= rhs. When every operand
/// underflowed the comparison is carried out on log-scaled values and
/// `log_scaled` is set; lhs/rhs are then relative to the largest operand.
struct Witness {
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool log_scaled = false;

  double margin() const { return lhs - rhs; }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CriterionReport {
  Criterion criterion = Criterion::GoodmanSum;
  Status status = Status::Inconclusive;
  std::size_t terms_checked = 0;
  double min_margin = 0.0;
  std::optional<Witness> witness;

  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

namespace detail {

enum class Severity { Pass = 0, Soft = 1, Hard = 2 };

// Accumulates comparisons of the form sum_i coef_i * a_{n_i} >= 0 and
// tracks the worst one.
class ChainAudit {
 public:
  void check(std::size_t n, std::initializer_list<std::pair<double, Term>> parts) {
    double lhs = 0.0, rhs = 0.0;
    bool all_underflow = true;
    double log_max = -std::numeric_limits<double>::infinity();
    for (const auto& [coef, t] : parts) {
      (coef > 0 ? lhs : rhs) += std::abs(coef) * t.value;
      if (t.value != 0.0) {
        all_underflow = false;
      } else if (std::isfinite(t.log_value)) {
        log_max = std::max(log_max, t.log_value);
      }
    }
    bool scaled = false;
    if (all_underflow && std::isfinite(log_max)) {
      // Both sides are below the double range: compare exp(l_i - l_max).
      lhs = rhs = 0.0;
      for (const auto& [coef, t] : parts) {
        const double v = std::isfinite(t.log_value) ? std::exp(t.log_value - log_max) : 0.0;
        (coef > 0 ? lhs : rhs) += std::abs(coef) * v;
      }
      scaled = true;
    }
    record(n, lhs, rhs, scaled);
  }

  void record(std::size_t n, double lhs, double rhs, bool scaled = false) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double margin = lhs - rhs;
    const double normalized = margin / scale;
    const double reported = scaled ? 0.0 : margin;
    if (!any_ || reported < min_margin_) min_margin_ = reported;
    Severity sev = Severity::Pass;
    if (margin < -kChainSlack * scale) {
      sev = margin < -kIndeterminateBand * scale ? Severity::Hard : Severity::Soft;
    }
    if (!any_ || normalized < worst_normalized_) {
      worst_normalized_ = normalized;
      worst_ = Witness{n, lhs, rhs, scaled};
    }
    severity_ = std::max(severity_, sev);
    any_ = true;
  }

  Severity severity() const { return severity_; }
  double min_margin() const { return any_ ? min_margin_ : 0.0; }
  const Witness& worst() const { return worst_; }
  double worst_normalized() const { return worst_normalized_; }

  Status status() const {
    switch (severity_) {
      case Severity::Pass: return Status::Verified;
      case Severity::Soft: return Status::Inconclusive;
      case Severity::Hard: return Status::Falsified;
    }
    return Status::Inconclusive;
  }

  CriterionReport report(Criterion c, std::size_t terms) const {
    CriterionReport r{c, status(), terms, min_margin(), std::nullopt};
    if (severity_ != Severity::Pass) r.witness = worst_;
    return r;
  }

 private:
  bool any_ = false;
  double min_margin_ = 0.0;
  double worst_normalized_ = 0.0;
  Witness worst_{};
  Severity severity_ = Severity::Pass;
};

inline std::vector<Term> normalized_prefix(const CoefficientSeq& c, std::size_t N,
                                           std::size_t min_terms) {
  if (N < min_terms) {
    throw ConfigurationError("criterion check needs N >= " + std::to_string(min_terms));
  }
  auto terms = c.prefix(N + 2);
  if (std::abs(terms[0].value - 1.0) > kChainSlack) {
    throw NormalizationError("coefficient sequence must satisfy a_1 = 1");
  }
  return terms;
}

inline Term weighted(const Term& t) {
  const double nd = static_cast<double>(t.n);
  return {t.n, nd * t.value, t.log_value + std::log(nd)};
}

}  // namespace detail

/// Ozaki's monotone-chain condition on (n+1) a_{n+1}, checked for n <= N:
/// either 1 >= 2a_2 >= ... >= N a_N >= 0 or 1 <= 2a_2 <= ... <= N a_N <= 2.
/// The reported criterion names the branch that verified. If both branches
/// are violated the decreasing branch is reported.
inline CriterionReport check_ozaki(const CoefficientSeq& c,
                                   std::size_t N = kDefaultCriterionTerms) {
  const auto a = detail::normalized_prefix(c, N, 3);
  detail::ChainAudit dec, inc;
  for (std::size_t n = 1; n < N; ++n) {
    const Term d0 = detail::weighted(a[n - 1]);
    const Term d1 = detail::weighted(a[n]);
    dec.check(n, {{1.0, d0}, {-1.0, d1}});
    inc.check(n, {{1.0, d1}, {-1.0, d0}});
  }
  const Term last = detail::weighted(a[N - 1]);
  dec.record(N, last.value, 0.0);
  inc.record(N, 2.0, last.value);

  if (dec.severity() == detail::Severity::Pass) return dec.report(Criterion::OzakiDecreasing, N);
  if (inc.severity() == detail::Severity::Pass) return inc.report(Criterion::OzakiIncreasing, N);
  if (inc.severity() == detail::Severity::Soft && dec.severity() == detail::Severity::Hard) {
    return inc.report(Criterion::OzakiIncreasing, N);
  }
  return dec.report(Criterion::OzakiDecreasing, N);
}

/// Fejer's starlikeness condition: a_n >= 0, {n a_n} non-increasing and
/// {n a_n - (n+1) a_{n+1}} non-increasing, for n <= N.
inline CriterionReport check_fejer_starlike(const CoefficientSeq& c,
                                            std::size_t N = kDefaultCriterionTerms) {
  const auto a = detail::normalized_prefix(c, N, 3);
  detail::ChainAudit audit;
  for (std::size_t n = 1; n <= N; ++n) audit.record(n, a[n - 1].value, 0.0);
  for (std::size_t n = 1; n < N; ++n) {
    audit.check(n, {{1.0, detail::weighted(a[n - 1])}, {-1.0, detail::weighted(a[n])}});
  }
  for (std::size_t n = 1; n + 2 <= N; ++n) {
    audit.check(n, {{1.0, detail::weighted(a[n - 1])},
                    {-2.0, detail::weighted(a[n])},
                    {1.0, detail::weighted(a[n + 1])}});
  }
  return audit.report(Criterion::FejerStarlike, N);
}

/// Non-negative, non-increasing, convex coefficients (a_n - 2a_{n+1} +
/// a_{n+2} >= 0) for n <= N: the hypothesis giving Re(sum a_n z^{n-1}) > 1/2.
inline CriterionReport check_fejer_halfplane(const CoefficientSeq& c,
                                             std::size_t N = kDefaultCriterionTerms) {
  const auto a = detail::normalized_prefix(c, N, 3);
  detail::ChainAudit audit;
  for (std::size_t n = 1; n <= N; ++n) audit.record(n, a[n - 1].value, 0.0);
  for (std::size_t n = 1; n < N; ++n) audit.check(n, {{1.0, a[n - 1]}, {-1.0, a[n]}});
  for (std::size_t n = 1; n + 2 <= N; ++n) {
    audit.check(n, {{1.0, a[n - 1]}, {-2.0, a[n]}, {1.0, a[n + 1]}});
  }
  return audit.report(Criterion::FejerHalfPlane, N);
}

namespace detail {

// Geometric tail bound for sum_{n>N} d_n from the ratios d_{n+1}/d_n over
// the second half of the prefix: valid when those ratios are non-increasing
// and the last one is below 1.
inline std::optional<double> ratio_tail(const std::vector<Term>& d, std::size_t N) {
  const Term& last = d[N - 1];
  if (!std::isfinite(last.log_value)) return std::nullopt;
  double prev_log_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t n = std::max<std::size_t>(N / 2, 1); n < N; ++n) {
    const double lr = d[n].log_value - d[n - 1].log_value;
    if (!std::isfinite(lr) || lr > prev_log_ratio + 1e-12) return std::nullopt;
    prev_log_ratio = lr;
  }
  if (!(prev_log_ratio < 0.0)) return std::nullopt;
  const double q = std::exp(prev_log_ratio);
  return std::exp(last.log_value) * q / (1.0 - q);
}

}  // namespace detail

/// Goodman's sufficient condition for starlikeness: sum_{n>=2} n|a_n| < 1.
/// The partial sum to N is combined with a tail majorant: the sequence's own
/// (SHat: integral bound, DoubleFactorial: telescoping bound) when it has
/// one, otherwise a geometric bound from the prefix ratios. Without any
/// majorant the result is Inconclusive unless the partial sum alone
/// already reaches 1.
inline CriterionReport check_goodman(const CoefficientSeq& c, std::size_t N = 10'000) {
  if (N < 2) throw ConfigurationError("check_goodman needs N >= 2");
  const auto a = c.prefix(N);
  if (std::abs(a[0].value - 1.0) > kChainSlack) {
    throw NormalizationError("coefficient sequence must satisfy a_1 = 1");
  }
  std::vector<Term> d;
  d.reserve(N);
  CompensatedSum<double> partial;
  for (const Term& t : a) {
    d.push_back(detail::weighted(t));
    if (t.n >= 2) partial.add(d.back().value);
  }
  const double sum = partial.value();

  std::optional<double> tail;
  if (c.goodman_tail()) {
    tail = c.goodman_tail()(N);
  } else {
    tail = detail::ratio_tail(d, N);
  }

  CriterionReport r{Criterion::GoodmanSum, Status::Inconclusive, N, 0.0, std::nullopt};
  const double slack = kChainSlack;
  if (tail) {
    const double total = sum + *tail;
    r.min_margin = 1.0 - total;
    if (total < 1.0) {
      r.status = Status::Verified;
      return r;
    }
    r.witness = Witness{N, total, 1.0, false};
  } else {
    r.min_margin = 1.0 - sum;
    r.witness = Witness{N, sum, 1.0, false};
  }
  r.status = sum >= 1.0 + slack ? Status::Falsified : Status::Inconclusive;
  return r;
}

/// sigma_n(theta) = sum_{k=0}^{n} s_k with s_k = 1/2 + sum_{j<=k} cos(j theta).
struct FejerKernelValue {
  std::size_t n = 0;
  double theta = 0.0;
  double sigma = 0.0;
};

/// Closed form sigma_n = (1/2) (sin((n+1) theta/2) / sin(theta/2))^2.
inline FejerKernelValue fejer_kernel_sigma(std::size_t n, double theta) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw DomainError("fejer_kernel_sigma requires theta in (0, 2pi)");
  }
  // (n+1) theta/2 is rounded; recover the rounding error with an fma and correct sin to first order.
  const double m = static_cast<double>(n + 1);
  const double h = 0.5 * theta;
  const double arg = m * h;
  const double err = std::fma(m, h, -arg);
  const double q = (std::sin(arg) + err * std::cos(arg)) / std::sin(h);
  return {n, theta, 0.5 * q * q};
}

}  // namespace mathieu
