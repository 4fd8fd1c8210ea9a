#include "catch_amalgamated.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mathieu/quadrature.hpp"
#include "mathieu/series.hpp"

using namespace mathieu;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using cd = std::complex<double>;

namespace {

// Plain left-to-right sum, independent of the library's accumulators.
cd brute_force(double (*coeff)(std::size_t, const ParamSet&), const ParamSet& p, cd z, int N) {
  cd s = 0.0, w = z;
  for (int n = 1; n <= N; ++n) {
    s += coeff(n, p) * w;
    w *= z;
  }
  return s;
}

// S(r) from mpmath nsum at 30 digits.
struct SRef {
  double r, value;
};
constexpr SRef kSRefs[] = {{0.1, 2.3632337884758541259}, {0.5, 1.6500839448675816971},
                           {1.0, 0.79423354275931886558}, {2.0, 0.23891277507361487405},
                           {5.0, 0.039731135271959095906}, {10.0, 0.0099832997584930154915}};

}  // namespace

TEST_CASE("eval_series at the origin", "[series]") {
  const auto f = CoefficientSeq::mathieu_f(ParamSet(1.0, 1.0));
  const auto res = eval_series(f, 0.0);
  CHECK(res.value == cd(0.0, 0.0));
  CHECK(res.tail_bound == 0.0);
  const auto q = eval_series(CoefficientSeq::mathieu_q(ParamSet(1.0, 1.0)), 0.0);
  CHECK(q.value == cd(0.0, 0.0));
}

TEST_CASE("eval_series matches brute-force sums", "[series]") {
  const ParamSet p(1.0, 1.0);
  const auto f = eval_series(CoefficientSeq::mathieu_f(p), 0.5);
  CHECK(std::abs(f.value - brute_force(coeff_F, p, 0.5, 10'000)) < 1e-10);
  CHECK(f.tail_bound < 1e-12);

  const auto q = eval_series(CoefficientSeq::mathieu_q(p), 0.9);
  CHECK(std::abs(q.value - brute_force(coeff_Q, p, 0.9, 200)) < 1e-12);

  const cd z = std::polar(0.97, 2.1);
  const auto g = eval_series(CoefficientSeq::mathieu_f(ParamSet(0.4, 2.0)), z, 1e-11);
  CHECK(std::abs(g.value - brute_force(coeff_F, ParamSet(0.4, 2.0), z, 20'000)) < 1e-10);
}

TEST_CASE("eval_series tail bound covers the N to 2N difference", "[series]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.0, 0.99), angle(0.0, 2.0 * std::numbers::pi);
  const CoefficientSeq seqs[] = {CoefficientSeq::mathieu_f(ParamSet(1.0, 1.0)),
                                 CoefficientSeq::mathieu_f(ParamSet(0.25, 3.0)),
                                 CoefficientSeq::mathieu_q(ParamSet(2.0, 1.2)),
                                 CoefficientSeq::shat()};
  for (int i = 0; i < 100; ++i) {
    const cd z = std::polar(radius(rng), angle(rng));
    for (const auto& c : seqs) {
      const auto res = eval_series(c, z, 1e-12);
      const auto N = res.truncation_index;
      const cd far = eval_partial(c, z, 2 * N);
      INFO(c.name() << " z = " << z << " N = " << N);
      CHECK(std::abs(far - res.value) <= res.tail_bound + 1e-15);
    }
  }
}

TEST_CASE("eval_series errors", "[series]") {
  const auto f = CoefficientSeq::mathieu_f(ParamSet(1.0, 1.0));
  CHECK_THROWS_AS(eval_series(f, 1.5), DomainError);
  CHECK_THROWS_AS(eval_series(f, cd(0.6, 0.8)), DomainError);
  CHECK_THROWS_AS(eval_series(f, 0.5, 0.0), ConfigurationError);

  // a_n = n grows; the doubling fallback cannot converge within 1000 terms.
  const auto grow = CoefficientSeq::custom("n", [](std::size_t n) { return double(n); });
  try {
    eval_series(grow, 0.9999, 1e-12, 1000);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.terms() == 1000);
    CHECK(std::abs(e.partial()) > 0.0);
  }
}

TEST_CASE("eval_series on a rising sequence uses the Cauchy fallback", "[series]") {
  // a_n = n: sum n z^n = z/(1-z)^2.
  const auto grow = CoefficientSeq::custom("n", [](std::size_t n) { return double(n); });
  const cd z(0.3, 0.4);
  const auto res = eval_series(grow, z, 1e-13);
  CHECK(std::abs(res.value - z / ((1.0 - z) * (1.0 - z))) < 1e-11);
}

TEST_CASE("Alzer bounds sandwich S(r)", "[series][alzer]") {
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto s = eval_S(r);
    INFO("r = " << r);
    CHECK(alzer_lower_bound(r) < s.value);
    CHECK(s.value < alzer_upper_bound(r));
  }
  CHECK(eval_S(10.0).value < 1.0 / (100.0 + 1.0 / 6.0));
}

TEST_CASE("eval_S matches high-precision references", "[series]") {
  for (const auto& ref : kSRefs) {
    const auto s = eval_S(ref.r, 1e-13);
    INFO("r = " << ref.r);
    CHECK_THAT(s.value, WithinAbs(ref.value, 1e-12));
    CHECK(s.tail_bound <= 1e-13);
  }
  CHECK_THROWS_AS(eval_S(0.0), DomainError);
  CHECK_THROWS_AS(eval_S(-1.0), DomainError);
}

TEST_CASE("integral representation agrees with the series", "[series][quadrature]") {
  const double tol = 1e-10;
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    INFO("r = " << r);
    CHECK_THAT(eval_S_integral(r, tol), WithinAbs(eval_S(r, tol).value, 2.0 * tol));
  }
  CHECK_THROWS_AS(eval_S_integral(0.0), DomainError);
}

TEST_CASE("adaptive Gauss-Kronrod integrates smooth and oscillatory functions", "[quadrature]") {
  const auto e = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14);
  CHECK_THAT(e.value, WithinRel(std::numbers::e - 1.0, 1e-14));
  const auto s = integrate_adaptive([](double x) { return std::sin(40.0 * x); }, 0.0,
                                    std::numbers::pi, 1e-12, 8);
  CHECK_THAT(s.value, WithinAbs(0.0, 1e-12));
  const auto q = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK_THAT(q.value, WithinRel(2.0 / 3.0, 1e-10));
  CHECK_THROWS_AS(
      integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12, 1, 50), NumericError);
}
