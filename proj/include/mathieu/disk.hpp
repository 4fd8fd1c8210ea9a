#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathieu/coefficients.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/parallel.hpp"
#include "mathieu/series.hpp"

namespace mathieu {

/// Polar sampling lattice of the open unit disk. Radii are
/// max_radius * sin(pi (i+1) / (2 n_radii)), i = 0..n_radii-1, which
/// clusters them toward the rim and makes the 2x-refined lattice a superset.
/// Angles are 2 pi j / n_angles.
struct DiskGrid {
  std::size_t n_radii = 64;
  std::size_t n_angles = 256;
  double max_radius = 0.995;

  void validate() const {
    if (n_radii < 1 || n_angles < 1) throw ConfigurationError("disk grid needs >= 1 radius and angle");
    if (!(max_radius > 0.0 && max_radius < 1.0)) {
      throw ConfigurationError("disk grid max_radius must lie in (0, 1)");
    }
  }
  double radius(std::size_t i) const {
    return max_radius * std::sin(std::numbers::pi * static_cast<double>(i + 1) /
                                 (2.0 * static_cast<double>(n_radii)));
  }
  double angle(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
  }
  DiskGrid refined() const { return {2 * n_radii, 2 * n_angles, max_radius}; }

  friend bool operator==(const DiskGrid&, const DiskGrid&) = default;
};

/// Re(f(z)/z), Re f'(z), Re(z f'(z)/f(z)), Re((1-z) f'(z)).
enum class Functional { RatioHalfPlane, DerivHalfPlane, Starlike, CloseToConvex };
enum class DiskStatus { Holds, Violated };

inline std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::RatioHalfPlane: return "RatioHalfPlane";
    case Functional::DerivHalfPlane: return "DerivHalfPlane";
    case Functional::Starlike: return "Starlike";
    case Functional::CloseToConvex: return "CloseToConvex";
  }
  return "?";
}

inline std::string_view to_string(DiskStatus s) {
  return s == DiskStatus::Holds ? "Holds" : "Violated";
}

/// 1/2 for the half-plane functionals, 0 for the other two.
inline double functional_bound(Functional f) {
  return (f == Functional::RatioHalfPlane || f == Functional::DerivHalfPlane) ? 0.5 : 0.0;
}

struct DiskReport {
  Functional functional = Functional::RatioHalfPlane;
  double min_value = 0.0;
  std::complex<double> argmin{};
  DiskGrid grid{};
  DiskStatus status = DiskStatus::Holds;
  std::size_t truncation_index = 0;
  bool polished = false;

  friend bool operator==(const DiskReport&, const DiskReport&) = default;
};

struct DiskOptions {
  double series_tol = kDefaultTolerance;
  /// Holds iff min_value > bound - verdict_tol.
  double verdict_tol = 1e-9;
  std::size_t jobs = 1;
  /// Re-examine a violation with three levels of 4x zoom around argmin.
  bool polish = true;
};

struct DiskSample {
  double radius = 0.0;
  double angle = 0.0;
  double value = 0.0;
};

namespace detail {

// Coefficients of P(z) = f(z)/z and D(z) = f'(z) as polynomials in z.
struct DiskPolynomials {
  std::vector<double> p;
  std::vector<double> d;
};

inline DiskPolynomials disk_polynomials(const CoefficientSeq& f, double rho, double tol) {
  // f(z)/z loses a factor |z| against f; ask for tol*rho on f.
  std::size_t N = eval_series(f, rho, tol * rho).truncation_index;
  N = std::max(N, eval_series(f.index_weighted(), rho, tol).truncation_index);
  DiskPolynomials out;
  out.p = f.values(N + 1);
  out.d.resize(out.p.size());
  for (std::size_t k = 0; k < out.p.size(); ++k) out.d[k] = static_cast<double>(k + 1) * out.p[k];
  return out;
}

inline double functional_value(Functional fn, std::complex<double> z, std::complex<double> P,
                               std::complex<double> D) {
  switch (fn) {
    case Functional::RatioHalfPlane: return P.real();
    case Functional::DerivHalfPlane: return D.real();
    case Functional::Starlike: {
      if (std::abs(z * P) < 1e-14) {
        throw DegeneratePointError("f(z) vanishes on the sampling grid", z);
      }
      return (D / P).real();
    }
    case Functional::CloseToConvex: return ((1.0 - z) * D).real();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Values of sum_k coeffs[k] (rho e^{i theta_j})^k at the M equispaced
// angles. Powers are folded modulo M (exact for equispaced angles) and
// then transformed with a direct DFT.
inline void ring_values(std::span<const double> coeffs, double rho,
                        const std::vector<std::complex<double>>& twiddle,
                        std::vector<std::complex<double>>& out) {
  const std::size_t M = twiddle.size();
  std::vector<double> bins(M, 0.0);
  double power = 1.0;
  for (std::size_t k = 0; k < coeffs.size() && power != 0.0; ++k) {
    bins[k % M] += coeffs[k] * power;
    power *= rho;
  }
  out.assign(M, 0.0);
  for (std::size_t j = 0; j < M; ++j) {
    std::complex<double> acc = 0.0;
    std::size_t idx = 0;
    for (std::size_t m = 0; m < M; ++m) {
      acc += bins[m] * twiddle[idx];
      idx += j;
      if (idx >= M) idx -= M;
    }
    out[j] = acc;
  }
}

}  // namespace detail

/// Samples one functional of f over the grid and reports its minimum.
/// `dump`, when non-null, receives every grid value in (radius, angle) order.
inline DiskReport verify_functional(Functional fn, const CoefficientSeq& f,
                                    const DiskGrid& grid = {}, const DiskOptions& opts = {},
                                    std::vector<DiskSample>* dump = nullptr) {
  grid.validate();
  const auto poly = detail::disk_polynomials(f, grid.max_radius, opts.series_tol);
  const std::size_t R = grid.n_radii, M = grid.n_angles;

  std::vector<std::complex<double>> twiddle(M);
  for (std::size_t q = 0; q < M; ++q) twiddle[q] = std::polar(1.0, grid.angle(q));

  struct RingMin {
    double value;
    std::size_t j;
  };
  std::vector<RingMin> ring_min(R);
  std::vector<double> values(dump ? R * M : 0);

  parallel_for(R, opts.jobs, [&](std::size_t i) {
    const double rho = grid.radius(i);
    std::vector<std::complex<double>> P, D;
    detail::ring_values(poly.p, rho, twiddle, P);
    detail::ring_values(poly.d, rho, twiddle, D);
    RingMin best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < M; ++j) {
      const auto z = rho * twiddle[j];
      const double v = detail::functional_value(fn, z, P[j], D[j]);
      if (dump) values[i * M + j] = v;
      if (v < best.value) best = {v, j};
    }
    ring_min[i] = best;
  });

  DiskReport rep;
  rep.functional = fn;
  rep.grid = grid;
  rep.truncation_index = poly.p.size();
  std::size_t bi = 0;
  for (std::size_t i = 0; i < R; ++i) {
    if (ring_min[i].value < ring_min[bi].value) bi = i;
  }
  double best_r = grid.radius(bi), best_t = grid.angle(ring_min[bi].j);
  rep.min_value = ring_min[bi].value;

  const double bound = functional_bound(fn);
  if (opts.polish && !(rep.min_value > bound - opts.verdict_tol)) {
    double dr = bi > 0 ? grid.radius(bi) - grid.radius(bi - 1) : grid.radius(0);
    double dt = 2.0 * std::numbers::pi / static_cast<double>(M);
    constexpr int kSide = 4;
    for (int level = 0; level < 3; ++level) {
      const double r0 = best_r, t0 = best_t;
      for (int a = -kSide; a <= kSide; ++a) {
        const double rr = std::min(r0 + dr * a / kSide, grid.max_radius);
        if (!(rr > 0.0)) continue;
        for (int b = -kSide; b <= kSide; ++b) {
          const double tt = t0 + dt * b / kSide;
          const auto z = std::polar(rr, tt);
          const double v = detail::functional_value(fn, z, horner(poly.p, z), horner(poly.d, z));
          if (v < rep.min_value) rep.min_value = v, best_r = rr, best_t = tt;
        }
      }
      dr /= 4.0;
      dt /= 4.0;
    }
    rep.polished = true;
  }
  rep.argmin = std::polar(best_r, best_t);
  rep.status = rep.min_value > bound - opts.verdict_tol ? DiskStatus::Holds : DiskStatus::Violated;

  if (dump) {
    dump->clear();
    dump->reserve(R * M);
    for (std::size_t i = 0; i < R; ++i) {
      for (std::size_t j = 0; j < M; ++j) {
        dump->push_back({grid.radius(i), grid.angle(j), values[i * M + j]});
      }
    }
  }
  return rep;
}

inline DiskReport verify_ratio_halfplane(const CoefficientSeq& f, const DiskGrid& grid = {},
                                         const DiskOptions& opts = {}) {
  return verify_functional(Functional::RatioHalfPlane, f, grid, opts);
}
inline DiskReport verify_deriv_halfplane(const CoefficientSeq& f, const DiskGrid& grid = {},
                                         const DiskOptions& opts = {}) {
  return verify_functional(Functional::DerivHalfPlane, f, grid, opts);
}
inline DiskReport verify_starlike(const CoefficientSeq& f, const DiskGrid& grid = {},
                                  const DiskOptions& opts = {}) {
  return verify_functional(Functional::Starlike, f, grid, opts);
}
inline DiskReport verify_close_to_convex(const CoefficientSeq& f, const DiskGrid& grid = {},
                                         const DiskOptions& opts = {}) {
  return verify_functional(Functional::CloseToConvex, f, grid, opts);
}

/// Family/parameter overload: F or Q at (mu, r).
inline DiskReport verify_functional(Functional fn, Family family, const ParamSet& p,
                                    const DiskGrid& grid = {}, const DiskOptions& opts = {}) {
  return verify_functional(fn, CoefficientSeq::of(family, p), grid, opts);
}

}  // namespace mathieu
