#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mathieu/special.hpp"
#include "mathieu/thresholds.hpp"

using namespace mathieu;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// psi, psi' reference values computed with mpmath at 30 digits.
struct Ref {
  double x, psi, trigamma;
};
const std::vector<Ref> kRefs = {
    {0.25, -4.2274535333762654081, 17.197329154507110739},
    {0.5, -1.9635100260214234794, 4.9348022005446793094},
    {1.0, -0.57721566490153286061, 1.6449340668482264365},
    {1.5, 0.036489973978576520559, 0.93480220054467930942},
    {2.0, 0.42278433509846713939, 0.64493406684822643647},
    {3.7, 1.1671535393615114409, 0.31003785767003830216},
    {7.99, 2.0143092220462237995, 0.13331424565985759635},
    {8.0, 2.0156414779556099965, 0.13313701469403142513},
    {10.0, 2.2517525890667211076, 0.10516633568168574612},
    {123.4, 4.8113737751162774191, 0.0081366516108652633096},
    {1e4, 9.2102903711428494036, 0.00010000500016666666633},
};

}  // namespace

TEST_CASE("digamma and trigamma match high-precision references", "[special]") {
  for (const auto& r : kRefs) {
    INFO("x = " << r.x);
    CHECK_THAT(digamma(r.x), WithinAbs(r.psi, 1e-12));
    CHECK_THAT(trigamma(r.x), WithinAbs(r.trigamma, 1e-12));
  }
}

TEST_CASE("digamma at the integers follows harmonic numbers", "[special]") {
  // psi(n) = H_{n-1} - gamma; gamma regenerated from psi(1) and checked.
  CHECK_THAT(digamma(1.0), WithinAbs(-kEulerGamma, 1e-14));
  double harmonic = 0.0;
  for (int n = 1; n <= 60; ++n) {
    CHECK_THAT(digamma(n), WithinAbs(harmonic - 0.5772156649015329, 1e-12));
    harmonic += 1.0 / n;
  }
}

TEST_CASE("digamma recurrence and trigamma at 1", "[special]") {
  CHECK_THAT(digamma(2.0) - digamma(1.0), WithinAbs(1.0, 1e-14));
  CHECK_THAT(trigamma(1.0), WithinAbs(std::numbers::pi * std::numbers::pi / 6.0, 1e-12));
  for (double x : {0.3, 1.7, 5.5, 7.9, 8.1, 40.0}) {
    CHECK_THAT(digamma(x + 1.0) - digamma(x), WithinAbs(1.0 / x, 1e-12));
    CHECK_THAT(trigamma(x) - trigamma(x + 1.0), WithinAbs(1.0 / (x * x), 1e-12));
  }
}

TEST_CASE("digamma and trigamma reject non-positive arguments", "[special]") {
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
  CHECK_THROWS_AS(trigamma(0.0), DomainError);
  CHECK_THROWS_AS(trigamma(std::nan("")), DomainError);
}

TEST_CASE("zeta(3) constant regenerates from its series", "[special]") {
  CompensatedSum<double> s;
  const int N = 1'000'000;
  for (int n = N; n >= 1; --n) s.add(1.0 / (double(n) * n * n));
  // Tail beyond N is about 1/(2N^2).
  CHECK_THAT(s.value() + 0.5 / (double(N) * N), WithinAbs(kZeta3, 1e-15));
}

TEST_CASE("log factorial and odd double factorial", "[special]") {
  CHECK(log_factorial(0) == 0.0);
  CHECK_THAT(log_factorial(5), WithinRel(std::log(120.0), 1e-14));
  CHECK(log_odd_double_factorial(0) == 0.0);
  CHECK_THAT(std::exp(log_odd_double_factorial(1)), WithinRel(1.0, 1e-13));
  CHECK_THAT(std::exp(log_odd_double_factorial(2)), WithinRel(3.0, 1e-13));
  CHECK_THAT(std::exp(log_odd_double_factorial(4)), WithinRel(105.0, 1e-13));
  // (2n-1)!! for n = 200 overflows a naive product; check against a log sum.
  double ref = 0.0;
  for (int k = 1; k <= 399; k += 2) ref += std::log(double(k));
  CHECK_THAT(log_odd_double_factorial(200), WithinRel(ref, 1e-13));
}

TEST_CASE("log_add_exp is stable", "[special]") {
  CHECK_THAT(log_add_exp(0.0, 0.0), WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(log_add_exp(1000.0, 0.0), WithinAbs(1000.0, 1e-12));
  CHECK(log_add_exp(-INFINITY, 3.0) == 3.0);
}

TEST_CASE("compensated sum recovers small addends", "[special]") {
  CompensatedSum<double> s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  CHECK_THAT(s.value(), WithinRel(1e-14, 1e-10));
}

TEST_CASE("psi bounds at sample points", "[special][psi]") {
  for (double x : {2.0, 1.01, 100.0}) {
    const auto r = psi_bounds_check(x);
    INFO("x = " << x);
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
    CHECK(r.trigamma_ok);
  }
  // Hand-checkable at x = 2: psi(2) = 1 - gamma.
  const auto r = psi_bounds_check(2.0);
  CHECK_THAT(r.lower_margin, WithinAbs(1.0 - kEulerGamma - (std::log(2.0) - 0.5), 1e-13));
  CHECK_THAT(r.upper_margin, WithinAbs(std::log(2.0) - 0.25 - (1.0 - kEulerGamma), 1e-13));
  CHECK_THROWS_AS(psi_bounds_check(1.0), DomainError);
}

TEST_CASE("psi bounds hold on a log grid", "[special][psi]") {
  for (int i = 1; i <= 1000; ++i) {
    const double x = std::pow(1e4, i / 1000.0);
    const auto r = psi_bounds_check(x);
    INFO("x = " << x);
    REQUIRE(r.lower_ok);
    REQUIRE(r.upper_ok);
    REQUIRE(r.trigamma_ok);
  }
}
