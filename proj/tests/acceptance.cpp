// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mathieu/mathieu.hpp"

using namespace mathieu;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<double> kMuGrid{0.5, 1.0, 2.0, 5.0};

Outcome theorem_matrix_sequence() {
  const auto t0 = Clock::now();
  TheoremOptions opts;
  opts.mu_grid = kMuGrid;
  opts.run_disk = false;
  opts.terms = 200;
  const auto rows = run_theorem_matrix(opts);
  int checked = 0, failed = 0;
  std::string first;
  for (const auto& r : rows) {
    if (r.skipped) continue;
    ++checked;
    if (!r.pass()) {
      ++failed;
      if (first.empty()) first = fmt(" first failure %s mu=%g", std::string(to_string(r.kind)).c_str(), r.mu);
    }
  }
  const double dt = seconds_since(t0);
  return {failed == 0 && checked == 28 && dt < 5.0,
          fmt("%d/%d (kind, mu) points Verified at r = 0.99 threshold, N = 200, %.2f s%s", checked - failed,
              checked, dt, first.c_str())};
}

Outcome theorem_matrix_disk() {
  const auto t0 = Clock::now();
  TheoremOptions opts;
  opts.mu_grid = kMuGrid;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = run_theorem_matrix(opts);
  int checked = 0, failed = 0;
  double worst = INFINITY;
  for (const auto& r : rows) {
    if (r.skipped) continue;
    ++checked;
    if (!r.disk || r.disk->status != DiskStatus::Holds || !r.error.empty()) ++failed;
    if (r.disk) worst = std::min(worst, r.disk->min_value - functional_bound(r.disk->functional));
  }
  const double dt = seconds_since(t0);
  return {failed == 0 && checked == 28 && dt < 60.0,
          fmt("%d/%d disk functionals Hold on 64x256 to |z| = 0.995, smallest margin %.3e, %.2f s",
              checked - failed, checked, worst, dt)};
}

Outcome alzer() {
  bool ok = true;
  double worst_gap = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double s = eval_S(r).value;
    const double i = eval_S_integral(r);
    ok = ok && alzer_lower_bound(r) < s && s < alzer_upper_bound(r);
    worst_gap = std::max(worst_gap, std::abs(s - i));
  }
  ok = ok && worst_gap <= 1e-8;
  return {ok, fmt("S(r) strictly inside Alzer bounds for r in {0.1,0.5,1,2,10}; max |series - integral| = %.2e",
                  worst_gap)};
}

Outcome example_shat() {
  const auto rep = check_goodman(CoefficientSeq::shat(), 10'000);
  CompensatedSum<double> s;
  for (int n = 1; n <= 10'000; ++n) {
    const double q = double(n) * n + 1.0;
    s.add(2.0 * n / (q * q * q));
  }
  const double q = 1e8 + 1.0;
  const double diananda = s.value() + 0.5 / (q * q);
  const double total = 1.0 - rep.min_margin;
  return {rep.status == Status::Verified && total < 1.0 && diananda < 0.5,
          fmt("Goodman sum (N = 1e4 + integral tail) = %.15f < 1; sum 2n/(n^2+1)^3 = %.15f < 0.5", total,
              diananda)};
}

Outcome example_double_factorial() {
  const auto rep = check_goodman(CoefficientSeq::double_factorial());
  const double total = 1.0 - rep.min_margin;
  return {rep.status == Status::Verified && rep.min_margin >= 0.25,
          fmt("Goodman sum with telescoping tail = %.15f, margin %.6f >= 1/4", total, rep.min_margin)};
}

Outcome inequality_ledger() {
  bool ok = true;
  std::string log;
  for (auto c : kAllInequalityCases) {
    const auto rep = verify_inequality(c, 100'000, 0);
    ok = ok && rep.status == Status::Verified && !rep.counterexample;
    log += fmt("\n       %-13s %-8s min margin %-11.4g at (x=%.4g, mu=%.4g, r=%.4g, c=%.4g)",
               std::string(inequality_id(c)).c_str(), std::string(to_string(rep.status)).c_str(), rep.min_margin,
               rep.argmin.x, rep.argmin.mu, rep.argmin.r, rep.argmin.c);
  }
  return {ok, "11 inequalities, 1e5 stratified samples each, seed 0" + log};
}

Outcome proof_steps() {
  bool ok = true;
  std::string why;
  for (double mu : {2.0, 3.0, 5.0}) {
    const ParamSet p(mu, std::sqrt(mu));
    for (int i = 0; i < 1000; ++i) {
      const double x = 4.0 + 16.0 * i / 999.0;
      if (A_of_x(x, p).sign <= 0) ok = false, why = fmt(" A(%g) <= 0 at mu=%g", x, mu);
    }
    if (!(h_Q(1, p) >= h_Q(2, p) && h_Q(2, p) >= h_Q(3, p) && h_Q(3, p) >= h_Q(4, p))) {
      ok = false, why = fmt(" h chain fails at mu=%g", mu);
    }
  }
  for (double mu : {0.5, 1.0, 2.0}) {
    const ParamSet p(mu, std::sqrt(mu));
    for (int i = 0; i < 1000; ++i) {
      const double x = 3.0 + 17.0 * i / 999.0;
      if (A_tilde_of_x(x, p).sign <= 0) ok = false, why = fmt(" A~(%g) <= 0 at mu=%g", x, mu);
    }
    if (!(h_tilde_Q(1, p) >= h_tilde_Q(2, p) && h_tilde_Q(2, p) >= h_tilde_Q(3, p))) {
      ok = false, why = fmt(" h~ chain fails at mu=%g", mu);
    }
  }
  // g'' assembled from A(x) against a Richardson-refined centred difference.
  double worst = 0.0;
  for (double mu : {2.0, 3.0, 5.0}) {
    const ParamSet p(mu, std::sqrt(mu));
    for (double x : {4.0, 6.5, 10.0}) {
      auto g = [&](double y) { return g_of_x(y, p); };
      auto d2 = [&](double h) { return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h); };
      const double fd = (4.0 * d2(0.5e-4) - d2(1e-4)) / 3.0;
      const double exact = g_second_derivative(x, p);
      worst = std::max(worst, std::abs(exact - fd) / std::abs(exact));
    }
  }
  ok = ok && worst <= 1e-6;
  return {ok, fmt("A > 0 on [4,20], A~ > 0 on [3,20], h and h~ prefixes ordered; g'' vs finite "
                  "difference max rel. error %.2e%s",
                  worst, why.c_str())};
}

Outcome fejer_kernel() {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> nd(0, 100);
  std::uniform_real_distribution<double> td(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  bool nonneg = true;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = nd(rng);
    double t = td(rng);
    if (t == 0.0) t = 1e-3;
    const double sigma = fejer_kernel_sigma(n, t).sigma;
    // Extended-precision cosine sum; k * t is exact in a 64-bit mantissa.
    long double s = 0.5L, brute = 0.0L;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) s += std::cos(static_cast<long double>(k) * t);
      brute += s;
    }
    worst = std::max(worst, static_cast<double>(std::abs(sigma - brute)));
    nonneg = nonneg && sigma >= 0.0;
  }
  return {worst <= 1e-12 && nonneg,
          fmt("closed form vs cosine sum on 500 random (n <= 100, theta): max abs diff %.2e; sigma >= 0", worst)};
}

Outcome sweep_soundness() {
  const std::vector<ThresholdKind> kinds(kAllThresholdKinds.begin(), kAllThresholdKinds.end());
  SweepOptions opts;
  opts.probe = Probe::SequenceCriterion;
  const auto t0 = Clock::now();
  const auto rows = sweep(kinds, kMuGrid, opts);
  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, sweep(kinds, kMuGrid, opts));
  double min_gap = INFINITY;
  bool ok = rows.size() == 28;
  for (const auto& r : rows) {
    ok = ok && r.status != RecordStatus::Errored;
    min_gap = std::min(min_gap, r.gap);
  }
  ok = ok && min_gap >= -1e-6 && a.str() == b.str();
  return {ok, fmt("%zu rows, min gap %.3e, CSV byte-identical across runs: %s, %.2f s", rows.size(), min_gap,
                  a.str() == b.str() ? "yes" : "no", seconds_since(t0))};
}

Outcome digamma_quality() {
  bool ok = true;
  for (int i = 1; i <= 1000; ++i) {
    const auto r = psi_bounds_check(std::pow(1e4, i / 1000.0));
    ok = ok && r.lower_ok && r.upper_ok && r.trigamma_ok;
  }
  const double e1 = std::abs(digamma(1.0) + 0.5772156649015329);
  const double e2 = std::abs(trigamma(1.0) - std::numbers::pi * std::numbers::pi / 6.0);
  ok = ok && e1 <= 1e-12 && e2 <= 1e-12;
  return {ok, fmt("psi/psi' bounds on 1000 log-spaced x in (1, 1e4]; |psi(1)+gamma| = %.1e, "
                  "|psi'(1)-pi^2/6| = %.1e",
                  e1, e2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"theorem matrix, sequence level", theorem_matrix_sequence},
      {"theorem matrix, disk level", theorem_matrix_disk},
      {"Alzer bounds and integral form", alzer},
      {"example 1 (SHat) Goodman", example_shat},
      {"example 2 (double factorial) Goodman", example_double_factorial},
      {"inequality ledger", inequality_ledger},
      {"proof-step checks", proof_steps},
      {"Fejer kernel identity", fejer_kernel},
      {"sharpness sweep soundness", sweep_soundness},
      {"digamma quality", digamma_quality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria pass\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
