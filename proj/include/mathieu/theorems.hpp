#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/criteria.hpp"
#include "mathieu/disk.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/parallel.hpp"
#include "mathieu/thresholds.hpp"

namespace mathieu {

/// Disk functional that certifies the geometric conclusion of a property.
inline Functional functional_for(Property p) {
  switch (p) {
    case Property::CloseToConvex: return Functional::CloseToConvex;
    case Property::Starlike: return Functional::Starlike;
    case Property::HalfPlaneRatio: return Functional::RatioHalfPlane;
    case Property::HalfPlaneDeriv: return Functional::DerivHalfPlane;
  }
  throw std::logic_error("unreachable");
}

inline Functional functional_for(ThresholdKind k) { return functional_for(property_of(k)); }

/// Runs the disk functional paired with `kind` on the family function.
inline DiskReport disk_check(ThresholdKind kind, const ParamSet& p, const DiskGrid& grid = {},
                             const DiskOptions& opts = {}) {
  return verify_functional(functional_for(kind), family_of(kind), p, grid, opts);
}

struct TheoremRow {
  ThresholdKind kind = ThresholdKind::FCloseToConvex;
  double mu = 0.0;
  double r = 0.0;
  /// mu below the kind's hypothesis; nothing was run.
  bool skipped = false;
  std::optional<CriterionReport> sequence;
  std::optional<DiskReport> disk;
  std::string error;

  bool pass() const {
    if (skipped) return true;
    if (!error.empty() || !sequence) return false;
    if (sequence->status != Status::Verified) return false;
    return !disk || disk->status == DiskStatus::Holds;
  }
};

struct TheoremOptions {
  std::vector<double> mu_grid{0.5, 1.0, 2.0, 5.0};
  double radius_fraction = 0.99;
  std::size_t terms = kDefaultCriterionTerms;
  bool run_disk = true;
  DiskGrid grid{};
  DiskOptions disk{};
  /// Rows run concurrently; each row's disk pass is single-threaded.
  std::size_t jobs = 1;
};

/// Every kind at every mu of the grid, at r = radius_fraction * threshold.
/// Rows are ordered by kind, then by mu as given.
inline std::vector<TheoremRow> run_theorem_matrix(const TheoremOptions& opts = {}) {
  if (opts.mu_grid.empty()) throw ConfigurationError("theorem matrix needs a non-empty mu grid");
  if (!(opts.radius_fraction > 0.0)) throw ConfigurationError("radius fraction must be positive");
  std::vector<TheoremRow> rows;
  for (auto kind : kAllThresholdKinds) {
    for (double mu : opts.mu_grid) {
      TheoremRow row;
      row.kind = kind;
      row.mu = mu;
      row.skipped = !mu_admissible(kind, mu);
      if (!row.skipped) row.r = opts.radius_fraction * threshold(kind, mu);
      rows.push_back(row);
    }
  }
  DiskOptions disk_opts = opts.disk;
  disk_opts.jobs = 1;
  parallel_for(rows.size(), opts.jobs, [&](std::size_t i) {
    auto& row = rows[i];
    if (row.skipped) return;
    try {
      const ParamSet p(row.mu, row.r);
      row.sequence = sequence_criterion(row.kind, p, opts.terms);
      if (opts.run_disk) row.disk = disk_check(row.kind, p, opts.grid, disk_opts);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace mathieu
