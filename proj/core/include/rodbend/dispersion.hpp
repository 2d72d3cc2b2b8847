#pragma once

// Dispersion relation of u_xx + u_yy + eps^2 u_xxxx = 0 and the exact
// per-wavenumber propagator of its Fourier image
//   u''(y) = omega^2(k) u(y),  omega^2 = k^2 - eps^2 k^4.

#include <optional>

namespace rodbend {

/// Switch to the linear propagator when |omega^2| <= tol * k^2.
inline constexpr double kDegenerateTolerance = 1e-9;
/// Largest admissible omega*dy before a growing mode counts as saturated.
inline constexpr double kMaxGrowthExponent = 700.0;

struct PhysicalConstants {
  double load;       ///< compressive force P
  double density;    ///< linear density rho
  double stiffness;  ///< bending stiffness G
};

struct RodParams {
  double epsilon = 0.1;
  double half_length = 1.0;
  std::optional<PhysicalConstants> physical;

  /// epsilon = sqrt(G/P).
  static RodParams from_physical(const PhysicalConstants& c, double half_length);
  /// Throws DomainError when an invariant is broken.
  void validate() const;
};

enum class ModeClass { Growing, Degenerate, Oscillatory };

struct ModeState {
  double a = 0.0;  ///< displacement coefficient
  double b = 0.0;  ///< y-derivative coefficient
  double k = 1.0;  ///< wavenumber
};

struct ScaledTime {
  double y;
  double epsilon;
};

/// y = sqrt(P/rho) t, epsilon = sqrt(G/P).
ScaledTime scale_time(double load, double density, double stiffness, double t);

double omega_squared(double k, double epsilon);

ModeClass classify_mode(double k, double epsilon,
                        double tol = kDegenerateTolerance);

/// Row-major 2x2 map (a, b) -> (a', b').
struct Propagator {
  double m00, m01, m10, m11;

  double determinant() const { return m00 * m11 - m01 * m10; }
  ModeState apply(const ModeState& s) const {
    return {m00 * s.a + m01 * s.b, m10 * s.a + m11 * s.b, s.k};
  }
};

/// Exact propagator over dy for wavenumber k. Throws SaturationError when a
/// growing mode's exponent omega*|dy| exceeds kMaxGrowthExponent.
Propagator mode_propagator(double k, double epsilon, double dy,
                           double tol = kDegenerateTolerance);

ModeState propagate_mode(const ModeState& state, double epsilon, double dy,
                         double tol = kDegenerateTolerance);

/// cosh(sqrt z) and sinh(sqrt z)/sqrt z, continued to z < 0 as cos/sin.
/// Accurate through z = 0.
struct HyperbolicPair {
  double c;
  double s;
};
HyperbolicPair hyperbolic_pair(double z);

struct FastestMode {
  double k_star;
  double rate;
};

/// Maximiser of sqrt(max(0, omega^2)): k* = 1/(sqrt2 eps), rate 1/(2 eps).
FastestMode fastest_growing_mode(double epsilon);

/// Dispersion parameter of the linearised small-dispersion NLS system.
double nls_epsilon(double alpha1, double mu);

}  // namespace rodbend
