#include "catch_amalgamated.hpp"

#include <cmath>
#include <limits>

#include "mathieu/io.hpp"

using namespace mathieu;
using cd = std::complex<double>;

namespace {

template <class T>
T round_trip(const T& v) {
  return json::parse(json(v).dump()).get<T>();
}

}  // namespace

TEST_CASE("complex literals", "[io]") {
  CHECK(parse_complex("0.5+0i") == cd(0.5, 0.0));
  CHECK(parse_complex("0+0i") == cd(0.0, 0.0));
  CHECK(parse_complex("1.5") == cd(1.5, 0.0));
  CHECK(parse_complex("-0.25-0.5i") == cd(-0.25, -0.5));
  CHECK(parse_complex("+0.1+2e-1i") == cd(0.1, 0.2));
  CHECK(parse_complex("1e-3-1E+0i") == cd(1e-3, -1.0));
  CHECK(parse_complex("0.3i") == cd(0.0, 0.3));
  CHECK(parse_complex("-i") == cd(0.0, -1.0));
  CHECK(parse_complex("0.5+i") == cd(0.5, 1.0));
  CHECK(parse_complex(" 2-3i ") == cd(2.0, -3.0));
  for (const char* bad : {"", "i0", "1+", "abc", "1+2j", "0.5+0.5ii", "--1"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_complex(bad), ConfigurationError);
  }
  const cd z(-0.125, 3.5);
  CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("evaluation results round-trip", "[io]") {
  const auto res = eval_series(CoefficientSeq::mathieu_f(ParamSet(1.0, 1.0)), cd(0.3, -0.2));
  CHECK(round_trip(res) == res);
  const auto s = eval_S(1.0);
  CHECK(round_trip(s) == s);
}

TEST_CASE("criterion reports round-trip", "[io]") {
  const auto ok = check_ozaki(CoefficientSeq::mathieu_f(ParamSet(1.0, 1.0)));
  CHECK(round_trip(ok) == ok);
  const auto bad = check_ozaki(CoefficientSeq::mathieu_f(ParamSet(0.25, 1.0)));
  REQUIRE(bad.witness);
  CHECK(round_trip(bad) == bad);
  CriterionReport odd;
  odd.min_margin = -std::numeric_limits<double>::infinity();
  CHECK(round_trip(odd) == odd);
}

TEST_CASE("disk, inequality and sweep reports round-trip", "[io]") {
  const auto d = verify_starlike(CoefficientSeq::shat(), DiskGrid{8, 16, 0.9});
  CHECK(round_trip(d) == d);
  const auto q = verify_inequality(InequalityCase::Total, 2000);
  CHECK(round_trip(q) == q);
  ConstraintBox box;
  box.x = VariableRange{1.0, 3.0, false};
  const auto f = verify_inequality(InequalityCase::NineteenTenths, 2000, 0, box);
  REQUIRE(f.counterexample);
  CHECK(round_trip(f) == f);
  for (const auto& row : sweep({ThresholdKind::FCloseToConvex, ThresholdKind::QStarlike}, {1.0, 2.0})) {
    CHECK(round_trip(row) == row);
  }
}

TEST_CASE("JSON schema keys are stable", "[io]") {
  const json j = check_goodman(CoefficientSeq::shat());
  for (const char* key : {"criterion", "status", "terms_checked", "min_margin", "witness"}) {
    CHECK(j.contains(key));
  }
  const json r = ThresholdRecord{};
  for (const char* key : {"kind", "mu", "sufficient_r", "empirical_r", "gap", "probe", "status"}) {
    CHECK(r.contains(key));
  }
}
