#pragma once

// Gauss-Legendre rules used by the verification harness.

#include <cmath>
#include <functional>
#include <vector>

#include "swcoulomb/errors.hpp"

namespace swc {

struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 1.0;
  int order = 0;

  double weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
};

// Gauss-Legendre rule on [lo, hi]; Newton iteration on P_n.
inline QuadratureGrid gauss_legendre(int order, double lo, double hi) {
  if (order < 1) throw domain_error("gauss_legendre: order must be >= 1");
  if (!(hi > lo)) throw domain_error("gauss_legendre: empty interval");
  QuadratureGrid g;
  g.lo = lo;
  g.hi = hi;
  g.order = order;
  g.nodes.resize(order);
  g.weights.resize(order);
  const int half = (order + 1) / 2;
  const double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = mid - rad * x;
    g.nodes[order - 1 - i] = mid + rad * x;
    g.weights[i] = rad * w;
    g.weights[order - 1 - i] = rad * w;
  }
  return g;
}

inline double integrate(const QuadratureGrid& g, const std::function<double(double)>& f) {
  double s = 0.0;
  for (int i = 0; i < g.order; ++i) s += g.weights[i] * f(g.nodes[i]);
  return s;
}

} // namespace swc
