// Command-line front end: eval, coeffs, verify, thresholds, sweep, examples,
// theorems. Data goes to stdout (or --output), diagnostics to stderr.
//
// Exit codes: 0 success / Verified / Holds, 1 Falsified / Violated,
// 2 invalid input or domain error, 3 Inconclusive.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mathieu/io.hpp"
#include "mathieu/mathieu.hpp"

using namespace mathieu;

namespace {

enum class Format { Human, Json, Csv };

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kInconclusive = 3 };

struct Common {
  std::string format = "human";
  std::string output;
  std::size_t jobs = 1;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Human;
  }
};

struct SeriesArgs {
  std::string family = "F";
  std::optional<double> mu, r;

  CoefficientSeq sequence() const {
    const auto fam = family_from_string(family);
    if (!fam || *fam == Family::Custom) throw ConfigurationError("unknown family '" + family + "'");
    std::optional<ParamSet> p;
    if (*fam == Family::F || *fam == Family::Q) {
      if (!mu || !r) throw ConfigurationError("families F and Q need --mu and --r");
      p = ParamSet(*mu, *r);
    }
    return CoefficientSeq::of(*fam, p);
  }
};

void add_series_options(CLI::App* cmd, SeriesArgs& s) {
  cmd->add_option("--family", s.family, "F, Q, SHat or DoubleFactorial")->capture_default_str();
  cmd->add_option("--mu", s.mu, "order mu > 0");
  cmd->add_option("--r", s.r, "parameter r > 0");
}

struct GridArgs {
  DiskGrid grid;
  double verdict_tol = 1e-9;

  void add(CLI::App* cmd) {
    cmd->add_option("--n-radii", grid.n_radii, "radii in the disk grid")->capture_default_str();
    cmd->add_option("--n-angles", grid.n_angles, "angles in the disk grid")->capture_default_str();
    cmd->add_option("--max-radius", grid.max_radius, "outermost radius, in (0,1)")->capture_default_str();
    cmd->add_option("--verdict-tol", verdict_tol, "tolerance on the functional bound")->capture_default_str();
  }
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigurationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string real(double v) { return detail::format_real(v); }

int status_exit(Status s) {
  switch (s) {
    case Status::Verified: return kOk;
    case Status::Falsified: return kFailed;
    case Status::Inconclusive: return kInconclusive;
  }
  return kBadInput;
}

int disk_exit(DiskStatus s) { return s == DiskStatus::Holds ? kOk : kFailed; }

// --- eval -----------------------------------------------------------------------

int cmd_eval(const Common& common, const SeriesArgs& series, const std::string& z_text, double tol,
             std::size_t max_terms) {
  Sink sink(common.output);
  auto& os = sink.out();
  if (series.family == "S") {
    if (!series.r) throw ConfigurationError("Mathieu series S needs --r");
    const auto s = eval_S(*series.r, tol);
    const double integral = eval_S_integral(*series.r, tol);
    switch (common.fmt()) {
      case Format::Json: {
        json j = s;
        j["integral"] = integral;
        j["alzer_lower"] = alzer_lower_bound(*series.r);
        j["alzer_upper"] = alzer_upper_bound(*series.r);
        os << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        os << "value,truncation_index,tail_bound,integral,alzer_lower,alzer_upper\n"
           << real(s.value) << ',' << s.truncation_index << ',' << real(s.tail_bound) << ','
           << real(integral) << ',' << real(alzer_lower_bound(*series.r)) << ','
           << real(alzer_upper_bound(*series.r)) << '\n';
        break;
      case Format::Human:
        os << "S(" << real(*series.r) << ") = " << real(s.value) << "  (N = " << s.truncation_index
           << ", tail <= " << real(s.tail_bound) << ")\n"
           << "integral form = " << real(integral) << "\n"
           << "Alzer bounds  = (" << real(alzer_lower_bound(*series.r)) << ", "
           << real(alzer_upper_bound(*series.r)) << ")\n";
    }
    return kOk;
  }
  const auto z = parse_complex(z_text);
  const auto res = eval_series(series.sequence(), z, tol, max_terms);
  switch (common.fmt()) {
    case Format::Json: os << json(res).dump(2) << '\n'; break;
    case Format::Csv:
      os << "re,im,truncation_index,tail_bound\n"
         << real(res.value.real()) << ',' << real(res.value.imag()) << ',' << res.truncation_index
         << ',' << real(res.tail_bound) << '\n';
      break;
    case Format::Human:
      os << "value = " << format_complex(res.value) << "\nN = " << res.truncation_index
         << "\ntail_bound = " << real(res.tail_bound) << '\n';
  }
  return kOk;
}

// --- coeffs ---------------------------------------------------------------------

int cmd_coeffs(const Common& common, const SeriesArgs& series, std::size_t n_max, bool weighted) {
  auto seq = series.sequence();
  if (weighted) seq = seq.index_weighted();
  const auto terms = seq.prefix(n_max);
  Sink sink(common.output);
  auto& os = sink.out();
  switch (common.fmt()) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& t : terms) {
        arr.push_back({{"n", t.n}, {"value", t.value}, {"log_value", detail::real_to_json(t.log_value)}});
      }
      os << json{{"sequence", seq.name()}, {"terms", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "n,value,log_value\n";
      for (const auto& t : terms) os << t.n << ',' << real(t.value) << ',' << real(t.log_value) << '\n';
      break;
    case Format::Human:
      os << seq.name() << '\n';
      for (const auto& t : terms) {
        char line[96];
        std::snprintf(line, sizeof line, "%6zu  %-24.17g %.17g\n", t.n, t.value, t.log_value);
        os << line;
      }
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------------

void print_criterion(std::ostream& os, Format fmt, const CriterionReport& r) {
  switch (fmt) {
    case Format::Json: os << json(r).dump(2) << '\n'; break;
    case Format::Csv:
      os << "criterion,status,terms_checked,min_margin,witness_n,witness_lhs,witness_rhs\n"
         << to_string(r.criterion) << ',' << to_string(r.status) << ',' << r.terms_checked << ','
         << real(r.min_margin) << ',';
      if (r.witness) os << r.witness->n << ',' << real(r.witness->lhs) << ',' << real(r.witness->rhs);
      else os << ",,";
      os << '\n';
      break;
    case Format::Human:
      os << to_string(r.criterion) << ": " << to_string(r.status) << " (N = " << r.terms_checked
         << ", min margin " << real(r.min_margin) << ")\n";
      if (r.witness) {
        os << "  witness n = " << r.witness->n << ": lhs " << real(r.witness->lhs) << " vs rhs "
           << real(r.witness->rhs) << (r.witness->log_scaled ? " (log-scaled)" : "") << '\n';
      }
  }
}

void print_disk(std::ostream& os, Format fmt, const DiskReport& r) {
  switch (fmt) {
    case Format::Json: os << json(r).dump(2) << '\n'; break;
    case Format::Csv:
      os << "functional,status,min_value,argmin_re,argmin_im,n_radii,n_angles,max_radius\n"
         << to_string(r.functional) << ',' << to_string(r.status) << ',' << real(r.min_value) << ','
         << real(r.argmin.real()) << ',' << real(r.argmin.imag()) << ',' << r.grid.n_radii << ','
         << r.grid.n_angles << ',' << real(r.grid.max_radius) << '\n';
      break;
    case Format::Human:
      os << to_string(r.functional) << ": " << to_string(r.status) << " (min "
         << real(r.min_value) << " at z = " << format_complex(r.argmin) << ", bound "
         << functional_bound(r.functional) << ", grid " << r.grid.n_radii << "x" << r.grid.n_angles
         << " to |z| = " << r.grid.max_radius << ")\n";
  }
}

void print_inequality(std::ostream& os, Format fmt, const InequalityReport& r) {
  auto pt = [](const SamplePoint& p) {
    return "x=" + real(p.x) + " mu=" + real(p.mu) + " r=" + real(p.r) + " c=" + real(p.c);
  };
  switch (fmt) {
    case Format::Json: os << json(r).dump(2) << '\n'; break;
    case Format::Csv:
      os << "id,status,samples,min_margin,argmin_x,argmin_mu,argmin_r,argmin_c,min_relative_margin\n"
         << inequality_id(r.id) << ',' << to_string(r.status) << ',' << r.samples << ','
         << real(r.min_margin) << ',' << real(r.argmin.x) << ',' << real(r.argmin.mu) << ','
         << real(r.argmin.r) << ',' << real(r.argmin.c) << ',' << real(r.min_relative_margin) << '\n';
      break;
    case Format::Human:
      os << inequality_id(r.id) << ": " << to_string(r.status) << " (" << r.samples << " samples)\n"
         << "  " << inequality_statement(r.id) << '\n'
         << "  min margin " << real(r.min_margin) << " at " << pt(r.argmin) << '\n'
         << "  min relative margin " << real(r.min_relative_margin) << " at " << pt(r.relative_argmin)
         << '\n';
      if (r.counterexample) os << "  counterexample at " << pt(*r.counterexample) << '\n';
  }
}

struct VerifyArgs {
  std::string criterion, functional, inequality;
  std::size_t terms = kDefaultCriterionTerms;
  bool weighted = false;
  std::size_t samples = kDefaultInequalitySamples;
  std::uint64_t seed = 0;
  std::string dump;
};

std::optional<Functional> functional_from_flag(const std::string& s) {
  if (s == "ratio") return Functional::RatioHalfPlane;
  if (s == "deriv") return Functional::DerivHalfPlane;
  if (s == "starlike") return Functional::Starlike;
  if (s == "ctc" || s == "close-to-convex") return Functional::CloseToConvex;
  return std::nullopt;
}

int cmd_verify(const Common& common, const SeriesArgs& series, const GridArgs& grid,
               const VerifyArgs& v) {
  const int chosen = !v.criterion.empty() + !v.functional.empty() + !v.inequality.empty();
  if (chosen != 1) {
    throw ConfigurationError("verify needs exactly one of --criterion, --functional, --inequality");
  }
  if (!v.inequality.empty()) {
    const auto id = inequality_from_id(v.inequality);
    if (!id) throw ConfigurationError("unknown inequality id '" + v.inequality + "'");
    const auto rep = verify_inequality(*id, v.samples, v.seed);
    Sink sink(common.output);
    print_inequality(sink.out(), common.fmt(), rep);
    return status_exit(rep.status);
  }
  auto seq = series.sequence();
  if (!v.criterion.empty()) {
    if (v.weighted) seq = seq.index_weighted();
    CriterionReport rep;
    if (v.criterion == "ozaki") rep = check_ozaki(seq, v.terms);
    else if (v.criterion == "fejer-starlike") rep = check_fejer_starlike(seq, v.terms);
    else if (v.criterion == "fejer-halfplane") rep = check_fejer_halfplane(seq, v.terms);
    else if (v.criterion == "goodman") rep = check_goodman(seq, std::max<std::size_t>(v.terms, 2));
    else throw ConfigurationError("unknown criterion '" + v.criterion + "'");
    Sink sink(common.output);
    print_criterion(sink.out(), common.fmt(), rep);
    return status_exit(rep.status);
  }
  const auto fn = functional_from_flag(v.functional);
  if (!fn) throw ConfigurationError("unknown functional '" + v.functional + "'");
  DiskOptions opts;
  opts.verdict_tol = grid.verdict_tol;
  opts.jobs = common.jobs;
  std::vector<DiskSample> samples;
  const auto rep = verify_functional(*fn, seq, grid.grid, opts, v.dump.empty() ? nullptr : &samples);
  if (!v.dump.empty()) {
    std::ofstream f(v.dump);
    if (!f) throw ConfigurationError("cannot open dump file '" + v.dump + "'");
    f << "radius,angle,re_functional\n";
    for (const auto& s : samples) f << real(s.radius) << ',' << real(s.angle) << ',' << real(s.value) << '\n';
  }
  Sink sink(common.output);
  print_disk(sink.out(), common.fmt(), rep);
  return disk_exit(rep.status);
}

// --- thresholds -----------------------------------------------------------------

std::vector<ThresholdKind> parse_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllThresholdKinds.begin(), kAllThresholdKinds.end()};
  std::vector<ThresholdKind> out;
  for (const auto& n : names) {
    const auto k = threshold_kind_from_string(n);
    if (!k) throw ConfigurationError("unknown threshold kind '" + n + "'");
    out.push_back(*k);
  }
  return out;
}

int cmd_thresholds(const Common& common, const std::vector<std::string>& kind_names,
                   const std::vector<double>& mus) {
  if (mus.empty()) throw ConfigurationError("thresholds needs at least one --mu");
  const auto kinds = parse_kinds(kind_names);
  Sink sink(common.output);
  auto& os = sink.out();
  json arr = json::array();
  if (common.fmt() == Format::Csv) os << "kind,mu,threshold,admissible\n";
  for (auto k : kinds) {
    for (double mu : mus) {
      const bool ok = mu_admissible(k, mu);
      const std::optional<double> t = ok ? std::optional<double>(threshold(k, mu)) : std::nullopt;
      switch (common.fmt()) {
        case Format::Json:
          arr.push_back({{"kind", to_string(k)}, {"mu", mu}, {"threshold", t ? json(*t) : json(nullptr)},
                         {"admissible", ok}});
          break;
        case Format::Csv:
          os << to_string(k) << ',' << real(mu) << ',' << (t ? real(*t) : "") << ',' << (ok ? "true" : "false")
             << '\n';
          break;
        case Format::Human: {
          char line[128];
          if (t) std::snprintf(line, sizeof line, "%-18s mu=%-10g r <= %.17g\n", std::string(to_string(k)).c_str(), mu, *t);
          else std::snprintf(line, sizeof line, "%-18s mu=%-10g outside hypotheses (mu >= %g required)\n",
                             std::string(to_string(k)).c_str(), mu, mu_min(k));
          os << line;
        }
      }
    }
  }
  if (common.fmt() == Format::Json) os << arr.dump(2) << '\n';
  return kOk;
}

// --- sweep ----------------------------------------------------------------------

struct SweepArgs {
  std::vector<std::string> kinds;
  std::vector<double> mu_grid{0.5, 1.0, 2.0, 5.0};
  std::string probe = "sequence";
  double r_hi_factor = kDefaultRHiFactor;
  double tol = kDefaultBisectionTol;
  std::size_t terms = kExplorerTerms;
  bool include_inadmissible = false;
};

int cmd_sweep(const Common& common, const GridArgs& grid, const SweepArgs& a) {
  SweepOptions opts;
  const auto probe = probe_from_string(a.probe);
  if (!probe) throw ConfigurationError("unknown probe '" + a.probe + "'");
  if (!(a.r_hi_factor > 1.0)) throw ConfigurationError("--r-hi-factor must exceed 1");
  opts.probe = *probe;
  opts.r_hi_factor = a.r_hi_factor;
  opts.tol = a.tol;
  opts.probe_options.terms = a.terms;
  opts.probe_options.grid = grid.grid;
  opts.probe_options.disk.verdict_tol = grid.verdict_tol;
  opts.include_inadmissible = a.include_inadmissible;
  opts.jobs = common.jobs;
  grid.grid.validate();
  const auto rows = sweep(parse_kinds(a.kinds), a.mu_grid, opts);

  Sink sink(common.output);
  auto& os = sink.out();
  switch (common.fmt()) {
    case Format::Json: os << json(rows).dump(2) << '\n'; break;
    case Format::Csv: write_sweep_csv(os, rows); break;
    case Format::Human:
      for (const auto& r : rows) {
        char line[200];
        std::snprintf(line, sizeof line, "%-18s mu=%-6g sufficient %.9f  empirical %.9f  gap %+.3e  %s\n",
                      std::string(to_string(r.kind)).c_str(), r.mu, r.sufficient_r, r.empirical_r, r.gap,
                      std::string(to_string(r.status)).c_str());
        os << line;
        if (!r.message.empty()) os << "    " << r.message << '\n';
      }
  }
  bool errored = false;
  for (const auto& r : rows) errored = errored || r.status == RecordStatus::Errored;
  return errored ? kFailed : kOk;
}

// --- examples -------------------------------------------------------------------

int cmd_examples(const Common& common, const GridArgs& grid) {
  DiskOptions opts;
  opts.verdict_tol = grid.verdict_tol;
  opts.jobs = common.jobs;
  json arr = json::array();
  bool ok = true;
  Sink sink(common.output);
  auto& os = sink.out();
  if (common.fmt() == Format::Csv) os << "example,goodman_status,goodman_sum,starlike_status,starlike_min\n";
  for (const auto& seq : {CoefficientSeq::shat(), CoefficientSeq::double_factorial()}) {
    const auto g = check_goodman(seq);
    const auto d = verify_starlike(seq, grid.grid, opts);
    ok = ok && g.status == Status::Verified && d.status == DiskStatus::Holds;
    switch (common.fmt()) {
      case Format::Json: arr.push_back({{"example", seq.name()}, {"goodman", g}, {"starlike", d}}); break;
      case Format::Csv:
        os << seq.name() << ',' << to_string(g.status) << ',' << real(1.0 - g.min_margin) << ','
           << to_string(d.status) << ',' << real(d.min_value) << '\n';
        break;
      case Format::Human:
        os << seq.name() << ": sum_{n>=2} n a_n <= " << real(1.0 - g.min_margin) << " -> Goodman "
           << to_string(g.status) << "; Re(zf'/f) min " << real(d.min_value) << " -> "
           << to_string(d.status) << '\n';
    }
  }
  if (common.fmt() == Format::Json) os << arr.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

// --- theorems -------------------------------------------------------------------

int cmd_theorems(const Common& common, const GridArgs& grid, const std::vector<double>& mu_grid,
                 bool no_disk, std::size_t terms) {
  TheoremOptions opts;
  opts.mu_grid = mu_grid;
  opts.run_disk = !no_disk;
  opts.grid = grid.grid;
  opts.disk.verdict_tol = grid.verdict_tol;
  opts.terms = terms;
  opts.jobs = common.jobs;
  grid.grid.validate();
  const auto rows = run_theorem_matrix(opts);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass();

  Sink sink(common.output);
  auto& os = sink.out();
  switch (common.fmt()) {
    case Format::Json: os << json{{"pass", all}, {"rows", rows}}.dump(2) << '\n'; break;
    case Format::Csv:
      os << "kind,mu,r,skipped,sequence_status,disk_status,disk_min,pass\n";
      for (const auto& r : rows) {
        os << to_string(r.kind) << ',' << real(r.mu) << ',' << real(r.r) << ',' << (r.skipped ? "true" : "false")
           << ',' << (r.sequence ? to_string(r.sequence->status) : "") << ','
           << (r.disk ? to_string(r.disk->status) : "") << ',' << (r.disk ? real(r.disk->min_value) : "")
           << ',' << (r.pass() ? "true" : "false") << '\n';
      }
      break;
    case Format::Human:
      for (const auto& r : rows) {
        char line[200];
        if (r.skipped) {
          std::snprintf(line, sizeof line, "[skip] %-18s mu=%-5g (below mu_min)\n",
                        std::string(to_string(r.kind)).c_str(), r.mu);
        } else {
          std::snprintf(line, sizeof line, "[%s] %-18s mu=%-5g r=%.6f  sequence %-12s disk %-8s %s\n",
                        r.pass() ? "pass" : "FAIL", std::string(to_string(r.kind)).c_str(), r.mu, r.r,
                        r.sequence ? std::string(to_string(r.sequence->status)).c_str() : "-",
                        r.disk ? std::string(to_string(r.disk->status)).c_str() : "-", r.error.c_str());
        }
        os << line;
      }
      os << (all ? "all rows pass\n" : "some rows FAIL\n");
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Mathieu series: evaluation and geometric criteria"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", common.output, "write data to this file instead of stdout");
  app.add_option("--jobs,-j", common.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  SeriesArgs series;
  GridArgs grid;

  auto* eval = app.add_subcommand("eval", "evaluate a series at z (family S: Mathieu's S(r))");
  add_series_options(eval, series);
  std::string z_text = "0";
  double tol = kDefaultTolerance;
  std::size_t max_terms = kDefaultMaxTerms;
  eval->add_option("--z", z_text, "complex point a+bi with |z| < 1")->capture_default_str();
  eval->add_option("--tol", tol, "truncation tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--max-terms", max_terms, "term cap")->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "list coefficients a_1..a_N");
  add_series_options(coeffs, series);
  std::size_t n_max = 10;
  bool coeffs_weighted = false;
  coeffs->add_option("--n", n_max, "number of terms")->check(CLI::PositiveNumber)->capture_default_str();
  coeffs->add_flag("--weighted", coeffs_weighted, "list n a_n instead");

  auto* verify = app.add_subcommand("verify", "run one criterion, disk functional or inequality");
  add_series_options(verify, series);
  grid.add(verify);
  VerifyArgs va;
  verify->add_option("--criterion", va.criterion, "ozaki, fejer-starlike, fejer-halfplane, goodman");
  verify->add_option("--functional", va.functional, "ratio, deriv, starlike, ctc");
  verify->add_option("--inequality", va.inequality, "inequality id, e.g. eq-total");
  verify->add_option("--N", va.terms, "terms checked by a criterion")->capture_default_str();
  verify->add_flag("--weighted", va.weighted, "apply the criterion to n a_n");
  verify->add_option("--samples", va.samples, "inequality samples")->capture_default_str();
  verify->add_option("--seed", va.seed, "sampler seed")->capture_default_str();
  verify->add_option("--dump", va.dump, "write per-point functional values as CSV");

  auto* thresholds = app.add_subcommand("thresholds", "closed-form sufficient radii");
  std::vector<std::string> kind_names;
  std::vector<double> mus{0.5, 1.0, 2.0, 5.0};
  thresholds->add_option("--kind", kind_names, "threshold kinds (default all)")->delimiter(',');
  thresholds->add_option("--mu", mus, "mu values")->delimiter(',')->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "bisect empirical failure radii");
  SweepArgs sa;
  std::uint64_t sweep_seed = 0;
  grid.add(sweep_cmd);
  sweep_cmd->add_option("--kinds", sa.kinds, "threshold kinds (default all)")->delimiter(',');
  sweep_cmd->add_option("--mu-grid", sa.mu_grid, "mu values")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--probe", sa.probe, "sequence or disk")->capture_default_str();
  sweep_cmd->add_option("--r-hi-factor", sa.r_hi_factor, "r_hi = factor * sufficient radius")->capture_default_str();
  sweep_cmd->add_option("--tol", sa.tol, "bisection tolerance in r")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--N", sa.terms, "terms for the sequence probe")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_seed, "accepted for uniformity; the sweep is deterministic");
  sweep_cmd->add_flag("--include-inadmissible", sa.include_inadmissible,
                      "keep rows with mu below the kind's hypothesis (reported as errored)");

  auto* examples = app.add_subcommand("examples", "Goodman and disk checks for the two starlike examples");
  grid.add(examples);

  auto* theorems = app.add_subcommand("theorems", "theorem matrix at 0.99 x threshold");
  grid.add(theorems);
  std::vector<double> th_grid{0.5, 1.0, 2.0, 5.0};
  bool no_disk = false;
  std::size_t th_terms = kDefaultCriterionTerms;
  theorems->add_option("--mu-grid", th_grid, "mu values")->delimiter(',')->capture_default_str();
  theorems->add_flag("--no-disk", no_disk, "sequence criteria only");
  theorems->add_option("--N", th_terms, "criterion terms")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*eval) return cmd_eval(common, series, z_text, tol, max_terms);
    if (*coeffs) return cmd_coeffs(common, series, n_max, coeffs_weighted);
    if (*verify) return cmd_verify(common, series, grid, va);
    if (*thresholds) return cmd_thresholds(common, kind_names, mus);
    if (*sweep_cmd) return cmd_sweep(common, grid, sa);
    if (*examples) return cmd_examples(common, grid);
    if (*theorems) return cmd_theorems(common, grid, th_grid, no_disk, th_terms);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {  // configuration, hypothesis, normalization
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DegeneratePointError& e) {
    std::cerr << "error: " << e.what() << " at z = " << format_complex(e.where()) << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
