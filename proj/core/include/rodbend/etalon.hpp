#pragma once

// Closed-form whole-line reference solutions ("etalons") of the rod
// equation, launched at y = -1 with the traces of a singular Laplace
// solution and evaluated by direct quadrature of their Fourier integrals.
//
// With tau = y + 1 and P(k) = M(k, tau) applied to (1, k), where M is the
// exact mode propagator, every kind reduces to a single integral over
// k in [0, inf) of a smooth integrand:
//
//   PoleRe   int e^-k P cos(kx) dk                       -> -y/(x^2+y^2)
//   PoleIm  -int e^-k P sin(kx) dk                       -> -x/(x^2+y^2)
//   RootD2   int k^(1/2) e^-k P cos(kx) dk / sqrt(2 pi)  -> Re (2w)^(-3/2)
//   Root    -int k^(-3/2) (e^-k P cos(kx) - 1) dk / sqrt(2 pi)
//                                                        -> Re sqrt(2w)
//
// where the arrows give the eps -> 0 limit and w = -y + ix.

#include <string>
#include <string_view>

#include "rodbend/field.hpp"

namespace rodbend {

enum class EtalonKind { PoleRe, PoleIm, RootD2, Root };

std::string_view to_string(EtalonKind kind);
/// Accepts the names printed by to_string, case-insensitively.
EtalonKind parse_etalon_kind(std::string_view name);

enum class EtalonComponent { Value, DerivativeY };

struct CauchyTrace {
  double value;  ///< u(x, -1)
  double dy;     ///< u_y(x, -1)
};

/// Closed-form Cauchy data at y = -1.
CauchyTrace etalon_initial_data(EtalonKind kind, double x);

/// The eps = 0 solution U0(x, y) (singular at the origin).
double etalon_laplace_limit(EtalonKind kind, double x, double y);

/// Quadrature with absolute error <= abs_tol. y >= -1 and eps > 0.
/// Throws SaturationError when the growing band would overflow.
double evaluate_etalon(EtalonKind kind, double x, double y, double epsilon,
                       double abs_tol = 1e-10,
                       EtalonComponent component = EtalonComponent::Value);

SampledField evaluate_etalon_grid(EtalonKind kind, const Grid& grid, double epsilon,
                                  double abs_tol = 1e-10);

}  // namespace rodbend
