#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mathieu/criteria.hpp"
#include "mathieu/disk.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/parallel.hpp"
#include "mathieu/theorems.hpp"
#include "mathieu/thresholds.hpp"

namespace mathieu {

enum class Probe { SequenceCriterion, DiskFunctional };

/// Ok: a failure was bracketed. NoFailureFound: the probe still held at
/// r_hi, which is then reported as empirical_r. Errored: the row threw.
enum class RecordStatus { Ok, NoFailureFound, Errored };

inline std::string_view to_string(Probe p) {
  return p == Probe::SequenceCriterion ? "SequenceCriterion" : "DiskFunctional";
}

inline std::optional<Probe> probe_from_string(std::string_view s) {
  if (s == "SequenceCriterion" || s == "sequence") return Probe::SequenceCriterion;
  if (s == "DiskFunctional" || s == "disk") return Probe::DiskFunctional;
  return std::nullopt;
}

inline std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "ok";
    case RecordStatus::NoFailureFound: return "no failure found";
    case RecordStatus::Errored: return "errored";
  }
  return "?";
}

struct ThresholdRecord {
  ThresholdKind kind = ThresholdKind::FCloseToConvex;
  double mu = 0.0;
  double sufficient_r = 0.0;
  double empirical_r = 0.0;
  double gap = 0.0;
  Probe probe = Probe::SequenceCriterion;
  RecordStatus status = RecordStatus::Ok;
  std::string message;

  friend bool operator==(const ThresholdRecord&, const ThresholdRecord&) = default;
};

inline constexpr double kDefaultBisectionTol = 1e-6;
inline constexpr double kDefaultRHiFactor = 4.0;
inline constexpr std::size_t kExplorerTerms = 500;

struct ProbeOptions {
  std::size_t terms = kExplorerTerms;
  DiskGrid grid{};
  DiskOptions disk{};
};

/// True when the probe reports a definite failure at (mu, r): Falsified,
/// Violated, or a zero of f on the grid. Inconclusive counts as holding.
inline bool probe_fails(ThresholdKind kind, const ParamSet& p, Probe probe,
                        const ProbeOptions& opts = {}) {
  if (probe == Probe::SequenceCriterion) {
    return sequence_criterion(kind, p, opts.terms).status == Status::Falsified;
  }
  try {
    return disk_check(kind, p, opts.grid, opts.disk).status == DiskStatus::Violated;
  } catch (const DegeneratePointError&) {
    return true;
  }
}

/// Bisects in r over [sufficient_r, r_hi] for the first failing verdict.
/// r_hi defaults to 4 * sufficient_r. empirical_r is the failing end of the
/// final bracket.
inline ThresholdRecord bisect_failure_r(ThresholdKind kind, double mu, Probe probe,
                                        std::optional<double> r_hi = std::nullopt,
                                        double tol = kDefaultBisectionTol,
                                        const ProbeOptions& opts = {}) {
  const double lo0 = threshold(kind, mu);
  const double hi0 = r_hi.value_or(kDefaultRHiFactor * lo0);
  if (!(hi0 > lo0)) throw ConfigurationError("r_hi must exceed the sufficient radius");
  if (!(tol > 0.0)) throw ConfigurationError("bisection tolerance must be positive");

  ThresholdRecord rec;
  rec.kind = kind;
  rec.mu = mu;
  rec.sufficient_r = lo0;
  rec.probe = probe;

  auto fails = [&](double r) { return probe_fails(kind, ParamSet(mu, r), probe, opts); };
  if (fails(lo0)) {
    throw CoherenceError(std::string(to_string(kind)) + " probe fails at its sufficient radius (mu = " +
                         std::to_string(mu) + ")");
  }
  if (!fails(hi0)) {
    rec.empirical_r = hi0;
    rec.gap = hi0 - lo0;
    rec.status = RecordStatus::NoFailureFound;
    return rec;
  }
  double lo = lo0, hi = hi0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (fails(mid) ? hi : lo) = mid;
  }
  rec.empirical_r = hi;
  rec.gap = hi - lo0;
  return rec;
}

struct SweepOptions {
  Probe probe = Probe::SequenceCriterion;
  double r_hi_factor = kDefaultRHiFactor;
  double tol = kDefaultBisectionTol;
  ProbeOptions probe_options{};
  /// Keep rows whose mu violates the kind's hypothesis (they come back
  /// errored) instead of dropping them.
  bool include_inadmissible = false;
  std::size_t jobs = 1;
};

/// One record per admissible (kind, mu), ordered by kind as given, then mu
/// ascending. A failing row is marked errored and the sweep continues.
inline std::vector<ThresholdRecord> sweep(const std::vector<ThresholdKind>& kinds,
                                          std::vector<double> mu_grid,
                                          const SweepOptions& opts = {}) {
  if (kinds.empty() || mu_grid.empty()) throw ConfigurationError("sweep needs non-empty kind and mu grids");
  for (double mu : mu_grid) {
    if (!(std::isfinite(mu) && mu > 0.0)) throw DomainError("sweep mu values must be finite and positive");
  }
  std::sort(mu_grid.begin(), mu_grid.end());
  std::vector<ThresholdRecord> rows;
  for (auto kind : kinds) {
    for (double mu : mu_grid) {
      if (!opts.include_inadmissible && !mu_admissible(kind, mu)) continue;
      ThresholdRecord rec;
      rec.kind = kind;
      rec.mu = mu;
      rec.probe = opts.probe;
      rows.push_back(rec);
    }
  }
  ProbeOptions probe_opts = opts.probe_options;
  probe_opts.disk.jobs = 1;
  parallel_for(rows.size(), opts.jobs, [&](std::size_t i) {
    auto& row = rows[i];
    try {
      const double suff = threshold(row.kind, row.mu);
      row = bisect_failure_r(row.kind, row.mu, opts.probe, opts.r_hi_factor * suff, opts.tol,
                             probe_opts);
    } catch (const std::exception& e) {
      row.status = RecordStatus::Errored;
      row.message = e.what();
    }
  });
  return rows;
}

namespace detail {

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline void write_sweep_csv(std::ostream& os, const std::vector<ThresholdRecord>& rows) {
  os << "kind,mu,sufficient_r,empirical_r,gap,probe,status\n";
  for (const auto& r : rows) {
    os << to_string(r.kind) << ',' << detail::format_real(r.mu) << ','
       << detail::format_real(r.sufficient_r) << ',' << detail::format_real(r.empirical_r) << ','
       << detail::format_real(r.gap) << ',' << to_string(r.probe) << ',' << to_string(r.status)
       << '\n';
  }
}

}  // namespace mathieu
