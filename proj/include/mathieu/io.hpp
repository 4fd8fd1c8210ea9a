#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "mathieu/criteria.hpp"
#include "mathieu/disk.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/explorer.hpp"
#include "mathieu/inequalities.hpp"
#include "mathieu/series.hpp"
#include "mathieu/theorems.hpp"
#include "mathieu/thresholds.hpp"

namespace mathieu {

using nlohmann::json;

namespace detail {

inline double parse_real(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigurationError("not a real number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses a complex literal of the form a, bi, a+bi or a-bi. Exponents
/// (1e-3+2e-1i) and a bare i (-i, 0.5+i) are accepted.
inline std::complex<double> parse_complex(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw ConfigurationError("empty complex literal");
  if (s.back() != 'i') return {detail::parse_real(s), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im = split == std::string_view::npos ? s : s.substr(split);
  double imag;
  if (im.empty() || im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = detail::parse_real(im);
  return {re.empty() ? 0.0 : detail::parse_real(re), imag};
}

inline std::string format_complex(std::complex<double> z) {
  const std::string im = detail::format_real(z.imag());
  return detail::format_real(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

namespace detail {

// JSON has no infinities; non-finite values travel as strings.
inline json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw ConfigurationError("bad real in JSON: " + s);
}

inline json complex_to_json(std::complex<double> z) {
  return {{"re", real_to_json(z.real())}, {"im", real_to_json(z.imag())}};
}

inline std::complex<double> complex_from_json(const json& j) {
  return {real_from_json(j.at("re")), real_from_json(j.at("im"))};
}

template <class E, std::size_t K>
E enum_from_json(const json& j, const std::array<E, K>& all) {
  const auto s = j.get<std::string>();
  for (E e : all) {
    if (to_string(e) == s) return e;
  }
  throw ConfigurationError("unknown enum value in JSON: " + s);
}

inline constexpr std::array kCriteria = {Criterion::OzakiDecreasing, Criterion::OzakiIncreasing,
                                         Criterion::FejerStarlike, Criterion::FejerHalfPlane,
                                         Criterion::GoodmanSum};
inline constexpr std::array kStatuses = {Status::Verified, Status::Falsified, Status::Inconclusive};
inline constexpr std::array kFunctionals = {Functional::RatioHalfPlane, Functional::DerivHalfPlane,
                                            Functional::Starlike, Functional::CloseToConvex};
inline constexpr std::array kDiskStatuses = {DiskStatus::Holds, DiskStatus::Violated};
inline constexpr std::array kProbes = {Probe::SequenceCriterion, Probe::DiskFunctional};
inline constexpr std::array kRecordStatuses = {RecordStatus::Ok, RecordStatus::NoFailureFound,
                                               RecordStatus::Errored};

}  // namespace detail

// --- evaluation -------------------------------------------------------------

inline void to_json(json& j, const EvalResult& r) {
  j = {{"value", detail::complex_to_json(r.value)},
       {"truncation_index", r.truncation_index},
       {"tail_bound", detail::real_to_json(r.tail_bound)}};
}
inline void from_json(const json& j, EvalResult& r) {
  r.value = detail::complex_from_json(j.at("value"));
  r.truncation_index = j.at("truncation_index").get<std::size_t>();
  r.tail_bound = detail::real_from_json(j.at("tail_bound"));
}

inline void to_json(json& j, const RealEvalResult& r) {
  j = {{"value", detail::real_to_json(r.value)},
       {"truncation_index", r.truncation_index},
       {"tail_bound", detail::real_to_json(r.tail_bound)}};
}
inline void from_json(const json& j, RealEvalResult& r) {
  r.value = detail::real_from_json(j.at("value"));
  r.truncation_index = j.at("truncation_index").get<std::size_t>();
  r.tail_bound = detail::real_from_json(j.at("tail_bound"));
}

// --- criteria ---------------------------------------------------------------

inline void to_json(json& j, const Witness& w) {
  j = {{"n", w.n},
       {"lhs", detail::real_to_json(w.lhs)},
       {"rhs", detail::real_to_json(w.rhs)},
       {"log_scaled", w.log_scaled}};
}
inline void from_json(const json& j, Witness& w) {
  w.n = j.at("n").get<std::size_t>();
  w.lhs = detail::real_from_json(j.at("lhs"));
  w.rhs = detail::real_from_json(j.at("rhs"));
  w.log_scaled = j.at("log_scaled").get<bool>();
}

inline void to_json(json& j, const CriterionReport& r) {
  j = {{"criterion", to_string(r.criterion)},
       {"status", to_string(r.status)},
       {"terms_checked", r.terms_checked},
       {"min_margin", detail::real_to_json(r.min_margin)},
       {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}
inline void from_json(const json& j, CriterionReport& r) {
  r.criterion = detail::enum_from_json(j.at("criterion"), detail::kCriteria);
  r.status = detail::enum_from_json(j.at("status"), detail::kStatuses);
  r.terms_checked = j.at("terms_checked").get<std::size_t>();
  r.min_margin = detail::real_from_json(j.at("min_margin"));
  const auto& w = j.at("witness");
  r.witness = w.is_null() ? std::nullopt : std::optional<Witness>(w.get<Witness>());
}

// --- disk -------------------------------------------------------------------

inline void to_json(json& j, const DiskGrid& g) {
  j = {{"n_radii", g.n_radii}, {"n_angles", g.n_angles}, {"max_radius", g.max_radius}};
}
inline void from_json(const json& j, DiskGrid& g) {
  g.n_radii = j.at("n_radii").get<std::size_t>();
  g.n_angles = j.at("n_angles").get<std::size_t>();
  g.max_radius = j.at("max_radius").get<double>();
}

inline void to_json(json& j, const DiskReport& r) {
  j = {{"functional", to_string(r.functional)},
       {"min_value", detail::real_to_json(r.min_value)},
       {"argmin", detail::complex_to_json(r.argmin)},
       {"grid", r.grid},
       {"status", to_string(r.status)},
       {"truncation_index", r.truncation_index},
       {"polished", r.polished}};
}
inline void from_json(const json& j, DiskReport& r) {
  r.functional = detail::enum_from_json(j.at("functional"), detail::kFunctionals);
  r.min_value = detail::real_from_json(j.at("min_value"));
  r.argmin = detail::complex_from_json(j.at("argmin"));
  r.grid = j.at("grid").get<DiskGrid>();
  r.status = detail::enum_from_json(j.at("status"), detail::kDiskStatuses);
  r.truncation_index = j.at("truncation_index").get<std::size_t>();
  r.polished = j.at("polished").get<bool>();
}

// --- inequalities -----------------------------------------------------------

inline void to_json(json& j, const SamplePoint& p) {
  j = {{"x", p.x}, {"mu", p.mu}, {"r", p.r}, {"c", p.c}};
}
inline void from_json(const json& j, SamplePoint& p) {
  p.x = j.at("x").get<double>();
  p.mu = j.at("mu").get<double>();
  p.r = j.at("r").get<double>();
  p.c = j.at("c").get<double>();
}

inline void to_json(json& j, const InequalityReport& r) {
  j = {{"id", inequality_id(r.id)},
       {"status", to_string(r.status)},
       {"samples", r.samples},
       {"min_margin", detail::real_to_json(r.min_margin)},
       {"argmin", r.argmin},
       {"min_relative_margin", detail::real_to_json(r.min_relative_margin)},
       {"relative_argmin", r.relative_argmin},
       {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}};
}
inline void from_json(const json& j, InequalityReport& r) {
  const auto id = inequality_from_id(j.at("id").get<std::string>());
  if (!id) throw ConfigurationError("unknown inequality id in JSON");
  r.id = *id;
  r.status = detail::enum_from_json(j.at("status"), detail::kStatuses);
  r.samples = j.at("samples").get<std::size_t>();
  r.min_margin = detail::real_from_json(j.at("min_margin"));
  r.argmin = j.at("argmin").get<SamplePoint>();
  r.min_relative_margin = detail::real_from_json(j.at("min_relative_margin"));
  r.relative_argmin = j.at("relative_argmin").get<SamplePoint>();
  const auto& c = j.at("counterexample");
  r.counterexample = c.is_null() ? std::nullopt : std::optional<SamplePoint>(c.get<SamplePoint>());
}

// --- explorer ---------------------------------------------------------------

inline void to_json(json& j, const ThresholdRecord& r) {
  j = {{"kind", to_string(r.kind)},
       {"mu", r.mu},
       {"sufficient_r", detail::real_to_json(r.sufficient_r)},
       {"empirical_r", detail::real_to_json(r.empirical_r)},
       {"gap", detail::real_to_json(r.gap)},
       {"probe", to_string(r.probe)},
       {"status", to_string(r.status)},
       {"message", r.message}};
}
inline void from_json(const json& j, ThresholdRecord& r) {
  const auto kind = threshold_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw ConfigurationError("unknown threshold kind in JSON");
  r.kind = *kind;
  r.mu = j.at("mu").get<double>();
  r.sufficient_r = detail::real_from_json(j.at("sufficient_r"));
  r.empirical_r = detail::real_from_json(j.at("empirical_r"));
  r.gap = detail::real_from_json(j.at("gap"));
  r.probe = detail::enum_from_json(j.at("probe"), detail::kProbes);
  r.status = detail::enum_from_json(j.at("status"), detail::kRecordStatuses);
  r.message = j.value("message", std::string{});
}

inline void to_json(json& j, const TheoremRow& r) {
  j = {{"kind", to_string(r.kind)},
       {"mu", r.mu},
       {"r", r.r},
       {"skipped", r.skipped},
       {"pass", r.pass()},
       {"sequence", r.sequence ? json(*r.sequence) : json(nullptr)},
       {"disk", r.disk ? json(*r.disk) : json(nullptr)},
       {"error", r.error}};
}

}  // namespace mathieu
