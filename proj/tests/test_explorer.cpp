#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mathieu/explorer.hpp"

using namespace mathieu;
using Catch::Matchers::WithinAbs;

namespace {

// Worst relative rise of n a_n over n < N, computed by direct substitution.
double worst_rise(double mu, double r, int N) {
  auto na = [&](int n) {
    return double(n) * n * std::pow(r * r + 1.0, mu + 1.0) / std::pow(double(n) * n + r * r, mu + 1.0);
  };
  double worst = 0.0;
  for (int n = 1; n < N; ++n) {
    const double lhs = na(n), rhs = na(n + 1);
    worst = std::max(worst, (rhs - lhs) / std::max({1.0, lhs, rhs}));
  }
  return worst;
}

}  // namespace

TEST_CASE("bisection for F close-to-convexity matches a direct scan", "[explorer]") {
  const auto rec = bisect_failure_r(ThresholdKind::FCloseToConvex, 0.25, Probe::SequenceCriterion, 4.0);
  CHECK(rec.sufficient_r == 0.5);
  CHECK(rec.empirical_r >= 0.5);
  CHECK(rec.status == RecordStatus::Ok);
  CHECK_THAT(rec.gap, WithinAbs(rec.empirical_r - rec.sufficient_r, 1e-15));

  // Oracle: bisection on "some rise exceeds the 1e-9 indeterminate band".
  double lo = 0.5, hi = 4.0;
  REQUIRE(worst_rise(0.25, hi, 500) > kIndeterminateBand);
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (worst_rise(0.25, mid, 500) > kIndeterminateBand ? hi : lo) = mid;
  }
  CHECK_THAT(rec.empirical_r, WithinAbs(hi, 2e-6));
}

TEST_CASE("bisection for F starlikeness", "[explorer]") {
  const auto rec = bisect_failure_r(ThresholdKind::FStarlike, 1.0, Probe::SequenceCriterion, 2.0);
  CHECK(rec.empirical_r >= 0.62805);
  CHECK(rec.gap >= -1e-6);
}

TEST_CASE("bisection preconditions", "[explorer]") {
  CHECK_THROWS_AS(bisect_failure_r(ThresholdKind::QStarlike, 1.0, Probe::SequenceCriterion),
                  HypothesisError);
  CHECK_THROWS_AS(bisect_failure_r(ThresholdKind::FCloseToConvex, 1.0, Probe::SequenceCriterion, 0.5),
                  ConfigurationError);
  CHECK_THROWS_AS(bisect_failure_r(ThresholdKind::FCloseToConvex, 1.0, Probe::SequenceCriterion, 2.0, 0.0),
                  ConfigurationError);

  // A verdict tolerance that rejects everything makes the probe fail at the
  // sufficient radius itself.
  ProbeOptions strict;
  strict.grid = DiskGrid{8, 16, 0.9};
  strict.disk.verdict_tol = -1.0;
  CHECK_THROWS_AS(bisect_failure_r(ThresholdKind::FHalfPlaneRatio, 1.0, Probe::DiskFunctional,
                                   std::nullopt, 1e-6, strict),
                  CoherenceError);
}

TEST_CASE("no failure found is flagged", "[explorer]") {
  // Re(f/z) > 1/2 for F at mu = 5 survives well past its radius on a coarse grid.
  ProbeOptions coarse;
  coarse.grid = DiskGrid{8, 32, 0.9};
  const auto rec = bisect_failure_r(ThresholdKind::FHalfPlaneRatio, 5.0, Probe::DiskFunctional,
                                    1.2 * threshold(ThresholdKind::FHalfPlaneRatio, 5.0), 1e-6, coarse);
  CHECK(rec.status == RecordStatus::NoFailureFound);
  CHECK(rec.empirical_r == 1.2 * rec.sufficient_r);
}

TEST_CASE("sweep rows and ordering", "[explorer]") {
  const auto one = sweep({ThresholdKind::FCloseToConvex}, {1.0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].sufficient_r == 1.0);

  const auto rows = sweep({ThresholdKind::FStarlike, ThresholdKind::FHalfPlaneRatio}, {2.0, 0.5, 1.0});
  REQUIRE(rows.size() == 6);
  const double mus[] = {0.5, 1.0, 2.0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].kind == (i < 3 ? ThresholdKind::FStarlike : ThresholdKind::FHalfPlaneRatio));
    CHECK(rows[i].mu == mus[i % 3]);
    CHECK(rows[i].status != RecordStatus::Errored);
    CHECK(rows[i].gap >= -1e-6);
  }

  CHECK_THROWS_AS(sweep({ThresholdKind::FStarlike}, {}), ConfigurationError);
  CHECK_THROWS_AS(sweep({}, {1.0}), ConfigurationError);
  CHECK_THROWS_AS(sweep({ThresholdKind::FStarlike}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sweep({ThresholdKind::FStarlike}, {-2.0}), DomainError);
}

TEST_CASE("sweep skips or flags inadmissible rows", "[explorer]") {
  CHECK(sweep({ThresholdKind::QStarlike}, {1.0, 2.0}).size() == 1);
  SweepOptions keep;
  keep.include_inadmissible = true;
  const auto rows = sweep({ThresholdKind::QStarlike}, {1.0, 2.0}, keep);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == RecordStatus::Errored);
  CHECK_FALSE(rows[0].message.empty());
  CHECK(rows[1].status != RecordStatus::Errored);
}

TEST_CASE("sweep CSV is deterministic and job-count independent", "[explorer]") {
  const std::vector<ThresholdKind> kinds(kAllThresholdKinds.begin(), kAllThresholdKinds.end());
  SweepOptions serial, parallel;
  parallel.jobs = 3;
  std::ostringstream a, b, c;
  write_sweep_csv(a, sweep(kinds, {0.5, 2.0}, serial));
  write_sweep_csv(b, sweep(kinds, {0.5, 2.0}, serial));
  write_sweep_csv(c, sweep(kinds, {0.5, 2.0}, parallel));
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  CHECK(a.str().rfind("kind,mu,sufficient_r,empirical_r,gap,probe,status\n", 0) == 0);
}

TEST_CASE("disk probe fails no earlier than the sequence probe", "[explorer]") {
  for (auto kind : {ThresholdKind::FCloseToConvex, ThresholdKind::FStarlike,
                    ThresholdKind::FHalfPlaneRatio, ThresholdKind::FHalfPlaneDeriv}) {
    for (double mu : {0.5, 2.0}) {
      const auto seq = bisect_failure_r(kind, mu, Probe::SequenceCriterion);
      const auto disk = bisect_failure_r(kind, mu, Probe::DiskFunctional);
      INFO(to_string(kind) << " mu = " << mu << " seq " << seq.empirical_r << " disk "
                           << disk.empirical_r);
      CHECK(disk.empirical_r >= seq.empirical_r - 1e-6);
    }
  }
}
