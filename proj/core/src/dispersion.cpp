#include "rodbend/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rodbend/errors.hpp"

namespace rodbend {

RodParams RodParams::from_physical(const PhysicalConstants& c, double half_length) {
  const ScaledTime st = scale_time(c.load, c.density, c.stiffness, 0.0);
  RodParams p{st.epsilon, half_length, c};
  p.validate();
  return p;
}

void RodParams::validate() const {
  if (!(epsilon > 0.0)) throw DomainError("RodParams: epsilon must be positive");
  if (!(half_length > 0.0)) throw DomainError("RodParams: half_length must be positive");
  if (physical) {
    const auto& c = *physical;
    if (!(c.load > 0.0 && c.density > 0.0 && c.stiffness > 0.0)) {
      throw DomainError("RodParams: physical constants must be positive");
    }
    if (std::abs(epsilon - std::sqrt(c.stiffness / c.load)) > 1e-12 * epsilon) {
      throw DomainError("RodParams: epsilon inconsistent with sqrt(G/P)");
    }
  }
}

ScaledTime scale_time(double load, double density, double stiffness, double t) {
  if (!(load > 0.0) || !(density > 0.0) || !(stiffness > 0.0)) {
    throw DomainError("scale_time: P, rho and G must be positive");
  }
  return {std::sqrt(load / density) * t, std::sqrt(stiffness / load)};
}

double omega_squared(double k, double epsilon) {
  const double k2 = k * k;
  return k2 - epsilon * epsilon * k2 * k2;
}

ModeClass classify_mode(double k, double epsilon, double tol) {
  const double w2 = omega_squared(k, epsilon);
  if (std::abs(w2) <= tol * k * k) return ModeClass::Degenerate;
  return w2 > 0.0 ? ModeClass::Growing : ModeClass::Oscillatory;
}

HyperbolicPair hyperbolic_pair(double z) {
  if (std::abs(z) < 1e-2) {
    // Taylor series; 8 terms reach full precision for |z| < 1e-2.
    double c = 0.0;
    double s = 0.0;
    double term_c = 1.0;  // z^j / (2j)!
    double term_s = 1.0;  // z^j / (2j+1)!
    for (int j = 0; j < 8; ++j) {
      c += term_c;
      s += term_s;
      term_c *= z / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
      term_s *= z / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    }
    return {c, s};
  }
  if (z > 0.0) {
    const double r = std::sqrt(z);
    return {std::cosh(r), std::sinh(r) / r};
  }
  const double r = std::sqrt(-z);
  return {std::cos(r), std::sin(r) / r};
}

Propagator mode_propagator(double k, double epsilon, double dy, double tol) {
  const double w2 = omega_squared(k, epsilon);
  switch (classify_mode(k, epsilon, tol)) {
    case ModeClass::Degenerate:
      return {1.0, dy, 0.0, 1.0};
    case ModeClass::Growing: {
      const double exponent = std::sqrt(w2) * std::abs(dy);
      if (exponent > kMaxGrowthExponent) {
        throw SaturationError("propagate_mode: growth exponent " +
                                  std::to_string(exponent) + " exceeds cap",
                              exponent);
      }
      [[fallthrough]];
    }
    case ModeClass::Oscillatory:
      break;
  }
  const HyperbolicPair hp = hyperbolic_pair(w2 * dy * dy);
  return {hp.c, dy * hp.s, w2 * dy * hp.s, hp.c};
}

ModeState propagate_mode(const ModeState& state, double epsilon, double dy,
                         double tol) {
  return mode_propagator(state.k, epsilon, dy, tol).apply(state);
}

FastestMode fastest_growing_mode(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("fastest_growing_mode: epsilon must be positive");
  return {1.0 / (std::numbers::sqrt2 * epsilon), 1.0 / (2.0 * epsilon)};
}

double nls_epsilon(double alpha1, double mu) {
  if (!(alpha1 > 0.0)) throw DomainError("nls_epsilon: alpha(1) must be positive");
  return mu / std::sqrt(alpha1);
}

}  // namespace rodbend
