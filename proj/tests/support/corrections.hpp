#pragma once

#include "rodbend/perturbation.hpp"

namespace oracle {

using rodbend::HolomorphicSeed;

// y-derivative of U1 and U2 from the same closed formulas, differentiated
// by hand; checked below against difference quotients.
inline double u1_dy(const HolomorphicSeed& s, double x, double y) {
  const double ym = -y - 2.0;
  const double t = y + 1.0;
  const auto d = [&](double yy, int n) { return s.y_derivative(x, yy, n); };
  return 0.5 * (-0.5 * d(y, 3) + 0.5 * d(ym, 3) - t * d(y, 4));
}
inline double u2_dy(const HolomorphicSeed& s, double x, double y) {
  const double ym = -y - 2.0;
  const double t = y + 1.0;
  const auto d = [&](double yy, int n) { return s.y_derivative(x, yy, n); };
  const double inner = d(y, 5) + 0.5 * d(ym, 5) - 0.5 * t * d(y, 6);
  const double inner_dy = 0.5 * d(y, 6) - 0.5 * d(ym, 6) - 0.5 * t * d(y, 7);
  return 0.25 * (0.75 * d(y, 5) + 0.75 * d(ym, 5) - inner - t * inner_dy);
}

}  // namespace oracle
