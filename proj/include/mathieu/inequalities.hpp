#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/random/sobol.hpp>

#include "mathieu/criteria.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

/// The auxiliary inequalities used in the convexity arguments for the
/// factorial family, each checked by falsification search over its domain.
enum class InequalityCase {
  RMuC,
  PsiUpper,
  PsiLower,
  Trigamma,
  SqrtBound,
  NineteenTenths,
  Total,
  RMuIneq,
  LogIneq,
  FracIneq,
  CMuIneq,
};

inline constexpr std::array<InequalityCase, 11> kAllInequalityCases = {
    InequalityCase::RMuC,      InequalityCase::PsiUpper,       InequalityCase::PsiLower,
    InequalityCase::Trigamma,  InequalityCase::SqrtBound,      InequalityCase::NineteenTenths,
    InequalityCase::Total,     InequalityCase::RMuIneq,        InequalityCase::LogIneq,
    InequalityCase::FracIneq,  InequalityCase::CMuIneq,
};

/// Stable identifiers used on the command line.
inline std::string_view inequality_id(InequalityCase c) {
  switch (c) {
    case InequalityCase::RMuC: return "eq-r-mu-c";
    case InequalityCase::PsiUpper: return "eq-psi-upper";
    case InequalityCase::PsiLower: return "eq-psi-lower";
    case InequalityCase::Trigamma: return "eq-trigamma";
    case InequalityCase::SqrtBound: return "eq-sqrt";
    case InequalityCase::NineteenTenths: return "eq-19-10";
    case InequalityCase::Total: return "eq-total";
    case InequalityCase::RMuIneq: return "eq-r-mu-ineq";
    case InequalityCase::LogIneq: return "eq-log-ineq";
    case InequalityCase::FracIneq: return "eq-frac-ineq";
    case InequalityCase::CMuIneq: return "eq-c-mu-ineq";
  }
  return "?";
}

inline std::optional<InequalityCase> inequality_from_id(std::string_view id) {
  for (auto c : kAllInequalityCases) {
    if (inequality_id(c) == id) return c;
  }
  return std::nullopt;
}

inline std::string_view inequality_statement(InequalityCase c) {
  switch (c) {
    case InequalityCase::RMuC:
      return "-2r^2(4mu+3)c + (2mu+1)^2 c^2 >= 0;  mu>0, 0<=r<=sqrt(mu), c>=2";
    case InequalityCase::PsiUpper: return "psi(x) < log x - 1/(2x);  x>1";
    case InequalityCase::PsiLower: return "psi(x) > log x - 1/x;  x>1";
    case InequalityCase::Trigamma: return "psi'(x) < 1/x + 1/x^2;  x>0";
    case InequalityCase::SqrtBound: return "log(x+1) - 1/(2(x+1)) <= sqrt(x);  x>=1";
    case InequalityCase::NineteenTenths: return "(log(x+1) - 1/(x+1))^2 >= 19/10;  x>=4";
    case InequalityCase::Total:
      return "2(r^2+c)(r^2-(2mu+1)c)sqrt(x) + (19/10)x(r^4-2r^2(4mu+3)c+(2mu+1)^2c^2) "
             "+ x(r^2+c)(r^2-(2mu+1)c)(1/(x+1)+1/(x+1)^2) >= 0;  x>=4, c>=Gamma(5)^2, mu>0, "
             "0<=r<=sqrt(mu)";
    case InequalityCase::RMuIneq:
      return "-2r^2(4mu+3) + (2mu+1)^2 c >= 0;  mu>0, 0<=r<=sqrt(mu), c>=2";
    case InequalityCase::LogIneq: return "(log(x+1) - 1/(x+1))^2 >= 1;  x>=3";
    case InequalityCase::FracIneq: return "1/(x+1) + 1/(x+1)^2 <= 1/2;  x>=3";
    case InequalityCase::CMuIneq:
      return "(2mu+1)^2 - 2r^2(4mu+3)/c - ((2mu+1)/2)(1 + r^2/c) > 0;  mu>0, 0<=r<=sqrt(mu), c>=5";
  }
  return "?";
}

/// Sampling range of one variable. Unbounded domains are truncated at `hi`;
/// open lower ends are approached by a small positive `lo`.
struct VariableRange {
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;

  bool empty() const { return !(hi >= lo) || (log_scale && !(lo > 0.0)); }
  double at(double u) const {
    if (log_scale) return lo * std::pow(hi / lo, u);
    return lo + (hi - lo) * u;
  }
};

/// Domain of an inequality. r is sampled as s*sqrt(mu) with s in `r_fraction`.
struct ConstraintBox {
  std::optional<VariableRange> x, mu, c;
  std::optional<VariableRange> r_fraction;

  std::size_t dimension() const {
    return std::size_t(x.has_value()) + mu.has_value() + c.has_value() + r_fraction.has_value();
  }
  bool empty() const {
    for (const auto* v : {&x, &mu, &c, &r_fraction}) {
      if (v->has_value() && (*v)->empty()) return true;
    }
    return dimension() == 0;
  }
};

struct SamplePoint {
  double x = 0.0, mu = 0.0, r = 0.0, c = 0.0;
  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

inline ConstraintBox default_box(InequalityCase c) {
  constexpr double kBig = 1e6;
  const VariableRange mu{1e-8, 1e4, true};
  const VariableRange frac{0.0, 1.0, false};
  ConstraintBox b;
  switch (c) {
    case InequalityCase::RMuC:
    case InequalityCase::RMuIneq:
      b.mu = mu, b.r_fraction = frac, b.c = VariableRange{2.0, 1e8, true};
      break;
    case InequalityCase::CMuIneq:
      b.mu = mu, b.r_fraction = frac, b.c = VariableRange{5.0, 1e8, true};
      break;
    case InequalityCase::Total:
      b.mu = mu, b.r_fraction = frac, b.c = VariableRange{576.0, 1e8, true};
      b.x = VariableRange{4.0, kBig, true};
      break;
    case InequalityCase::PsiUpper:
    case InequalityCase::PsiLower:
      b.x = VariableRange{1.0 + 1e-9, kBig, true};
      break;
    case InequalityCase::Trigamma: b.x = VariableRange{1e-6, kBig, true}; break;
    case InequalityCase::SqrtBound: b.x = VariableRange{1.0, kBig, true}; break;
    case InequalityCase::NineteenTenths: b.x = VariableRange{4.0, kBig, true}; break;
    case InequalityCase::LogIneq:
    case InequalityCase::FracIneq: b.x = VariableRange{3.0, kBig, true}; break;
  }
  return b;
}

/// Both sides of an inequality written as lhs >= rhs, with every term of
/// positive sign on the left so that max(|lhs|, |rhs|) sets the scale.
struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return lhs - rhs; }
};

inline InequalitySides evaluate_inequality(InequalityCase c, const SamplePoint& p) {
  const double x = p.x, mu = p.mu, r2 = p.r * p.r, cc = p.c;
  const double k = 2.0 * mu + 1.0;
  switch (c) {
    case InequalityCase::RMuC: return {k * k * cc * cc, 2.0 * r2 * (4.0 * mu + 3.0) * cc};
    case InequalityCase::PsiUpper: return {std::log(x) - 0.5 / x, digamma(x)};
    case InequalityCase::PsiLower: return {digamma(x), std::log(x) - 1.0 / x};
    case InequalityCase::Trigamma: return {1.0 / x + 1.0 / (x * x), trigamma(x)};
    case InequalityCase::SqrtBound: return {std::sqrt(x), std::log1p(x) - 0.5 / (x + 1.0)};
    case InequalityCase::NineteenTenths: {
      const double v = std::log1p(x) - 1.0 / (x + 1.0);
      return {v * v, 1.9};
    }
    case InequalityCase::Total: {
      const double sx = std::sqrt(x);
      const double w = 1.0 / (x + 1.0) + 1.0 / ((x + 1.0) * (x + 1.0));
      const double rc = r2 + cc;
      // (r^2 + c)(r^2 - k c) = rc*r^2 - rc*k*c
      const double lhs = 2.0 * rc * r2 * sx + 1.9 * x * (r2 * r2 + k * k * cc * cc) + x * rc * r2 * w;
      const double rhs = 2.0 * rc * k * cc * sx + 1.9 * x * 2.0 * r2 * (4.0 * mu + 3.0) * cc +
                         x * rc * k * cc * w;
      return {lhs, rhs};
    }
    case InequalityCase::RMuIneq: return {k * k * cc, 2.0 * r2 * (4.0 * mu + 3.0)};
    case InequalityCase::LogIneq: {
      const double v = std::log1p(x) - 1.0 / (x + 1.0);
      return {v * v, 1.0};
    }
    case InequalityCase::FracIneq:
      return {0.5, 1.0 / (x + 1.0) + 1.0 / ((x + 1.0) * (x + 1.0))};
    case InequalityCase::CMuIneq:
      return {k * k, 2.0 * r2 * (4.0 * mu + 3.0) / cc + 0.5 * k * (1.0 + r2 / cc)};
  }
  return {};
}

struct InequalityReport {
  InequalityCase id = InequalityCase::RMuC;
  Status status = Status::Inconclusive;
  std::size_t samples = 0;
  /// Smallest lhs - rhs seen and where.
  double min_margin = 0.0;
  SamplePoint argmin;
  /// Smallest (lhs - rhs)/max(1,|lhs|,|rhs|): the sharpness indicator.
  double min_relative_margin = 0.0;
  SamplePoint relative_argmin;
  std::optional<SamplePoint> counterexample;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

inline constexpr std::size_t kDefaultInequalitySamples = 100'000;

namespace detail {

// The inequalities whose left-minus-right side decreases in r^2, so the
// worst case sits on the face r = sqrt(mu).
inline bool monotone_in_r(InequalityCase c) {
  return c == InequalityCase::RMuC || c == InequalityCase::RMuIneq ||
         c == InequalityCase::CMuIneq;
}

class BoxMapper {
 public:
  explicit BoxMapper(const ConstraintBox& box) {
    if (box.x) dims_.push_back({&SamplePoint::x, *box.x});
    if (box.mu) dims_.push_back({&SamplePoint::mu, *box.mu});
    if (box.c) dims_.push_back({&SamplePoint::c, *box.c});
    if (box.r_fraction) {
      r_dim_ = dims_.size();
      dims_.push_back({nullptr, *box.r_fraction});
    }
  }

  std::size_t dimension() const { return dims_.size(); }
  std::optional<std::size_t> r_dimension() const { return r_dim_; }

  SamplePoint map(const std::vector<double>& u) const {
    SamplePoint p;
    double s = 0.0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      const double v = dims_[i].range.at(std::clamp(u[i], 0.0, 1.0));
      if (dims_[i].field) {
        p.*(dims_[i].field) = v;
      } else {
        s = v;
      }
    }
    if (r_dim_) p.r = s * std::sqrt(p.mu);
    return p;
  }

 private:
  struct Dim {
    double SamplePoint::*field;
    VariableRange range;
  };
  std::vector<Dim> dims_;
  std::optional<std::size_t> r_dim_;
};

}  // namespace detail

/// Falsification search for one inequality over its (truncated) domain.
///
/// Samples are stratified: every corner of the box, dense lines along each
/// edge, for the r-monotone cases a dense face at r = sqrt(mu), and a
/// randomly shifted Sobol sequence in the interior. A sample is a
/// counterexample when lhs - rhs < -1e-12 * max(1, |lhs|, |rhs|).
inline InequalityReport verify_inequality(InequalityCase id,
                                          std::size_t samples = kDefaultInequalitySamples,
                                          std::uint64_t seed = 0,
                                          std::optional<ConstraintBox> box_override = {}) {
  if (samples < 1000) throw ConfigurationError("verify_inequality needs at least 1000 samples");
  const ConstraintBox box = box_override.value_or(default_box(id));
  if (box.empty()) throw ConfigurationError("verify_inequality: empty constraint box");

  const detail::BoxMapper mapper(box);
  const std::size_t d = mapper.dimension();

  InequalityReport rep;
  rep.id = id;
  bool first = true;
  auto consider = [&](const std::vector<double>& u) {
    const SamplePoint p = mapper.map(u);
    const InequalitySides s = evaluate_inequality(id, p);
    const double scale = std::max({1.0, std::abs(s.lhs), std::abs(s.rhs)});
    const double m = s.margin();
    const double rel = m / scale;
    if (first || m < rep.min_margin) rep.min_margin = m, rep.argmin = p;
    if (first || rel < rep.min_relative_margin) rep.min_relative_margin = rel, rep.relative_argmin = p;
    if (!(m >= -kChainSlack * scale) && !rep.counterexample) rep.counterexample = p;
    first = false;
    ++rep.samples;
  };

  // Corners.
  const std::size_t corners = std::size_t{1} << d;
  std::vector<double> u(d);
  for (std::size_t mask = 0; mask < corners; ++mask) {
    for (std::size_t i = 0; i < d; ++i) u[i] = (mask >> i) & 1u ? 1.0 : 0.0;
    consider(u);
  }

  // Edges: lines along each axis through every corner of the others.
  const std::size_t lines = d * (corners / 2);
  const std::size_t per_line = std::max<std::size_t>(2, samples / (5 * lines));
  for (std::size_t axis = 0; axis < d; ++axis) {
    for (std::size_t mask = 0; mask < corners; ++mask) {
      if ((mask >> axis) & 1u) continue;
      for (std::size_t i = 0; i < d; ++i) u[i] = (mask >> i) & 1u ? 1.0 : 0.0;
      for (std::size_t k = 1; k + 1 < per_line; ++k) {
        u[axis] = static_cast<double>(k) / static_cast<double>(per_line - 1);
        consider(u);
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> shift(d);
  for (auto& s : shift) s = unit(rng);
  auto sobol_fill = [&](boost::random::sobol& gen, std::size_t dims, std::vector<double>& out) {
    constexpr double kScale = 0x1p-64;
    for (std::size_t i = 0; i < dims; ++i) {
      double v = static_cast<double>(gen()) * kScale + shift[i];
      out[i] = v - std::floor(v);
    }
  };

  // Worst-case face r = sqrt(mu) for the r-monotone cases.
  if (detail::monotone_in_r(id) && mapper.r_dimension() && d > 1) {
    const std::size_t face = samples / 10;
    boost::random::sobol gen(d - 1);
    std::vector<double> v(d - 1);
    const std::size_t rd = *mapper.r_dimension();
    for (std::size_t k = 0; k < face; ++k) {
      sobol_fill(gen, d - 1, v);
      for (std::size_t i = 0, j = 0; i < d; ++i) u[i] = i == rd ? 1.0 : v[j++];
      consider(u);
    }
  }

  // Interior.
  boost::random::sobol gen(d);
  while (rep.samples < samples) {
    sobol_fill(gen, d, u);
    consider(u);
  }

  rep.status = rep.counterexample ? Status::Falsified : Status::Verified;
  return rep;
}

}  // namespace mathieu
