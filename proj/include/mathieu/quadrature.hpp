#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "mathieu/errors.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Fn>
Panel gauss_kronrod_15(const Fn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The interval starts split into `initial_panels` pieces; the panel with
/// the largest error estimate is bisected until the summed estimate drops
/// below `abs_tol`. Throws NumericError after `max_panels` panels.
template <class Fn>
QuadratureResult integrate_adaptive(const Fn& f, double a, double b, double abs_tol,
                                    std::size_t initial_panels = 1,
                                    std::size_t max_panels = 20000) {
  if (!(b > a)) return {};
  initial_panels = std::max<std::size_t>(initial_panels, 1);
  std::priority_queue<detail::Panel> heap;
  double total_error = 0.0;
  const double width = (b - a) / static_cast<double>(initial_panels);
  for (std::size_t i = 0; i < initial_panels; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial_panels) ? b : lo + width;
    auto p = detail::gauss_kronrod_15(f, lo, hi);
    total_error += p.error;
    heap.push(p);
  }
  while (total_error > abs_tol) {
    if (heap.size() >= max_panels) {
      throw NumericError("adaptive quadrature did not converge within panel limit");
    }
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    // Panels below roundoff stop contributing meaningful refinement.
    if (!(mid > worst.a && worst.b > mid)) {
      throw NumericError("adaptive quadrature panel collapsed to machine precision");
    }
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from scratch: the running total drifts under repeated updates.
  QuadratureResult out;
  out.panels = heap.size();
  CompensatedSum<double> value, error;
  while (!heap.empty()) {
    value.add(heap.top().value);
    error.add(heap.top().error);
    heap.pop();
  }
  out.value = value.value();
  out.error_estimate = error.value();
  return out;
}

}  // namespace mathieu
