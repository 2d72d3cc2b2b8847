#pragma once

// Outer expansion u ~ U0 + eps^2 U1 + eps^4 U2 about a harmonic U0 with
// zero Cauchy data for the corrections at y = -1. U0 is the real or
// imaginary part of a complex potential F(x, y) that is holomorphic in
// (y + ix) up to orientation, so every y-derivative is exact:
//
//   d^n/dy^n U0 = part(d^n F / dy^n),   d/dx F = orientation * i * d/dy F.

#include <complex>
#include <functional>
#include <string>

#include "rodbend/sine_series.hpp"

namespace rodbend {

enum class SeedKind { Pole1, Root, TolstovMap, Custom };
enum class SeedPart { Re, Im };

class HolomorphicSeed {
 public:
  using Complex = std::complex<double>;
  /// n-th derivative f^(n)(w) of a function of w = -y + ix.
  using Derivatives = std::function<Complex(Complex w, int n)>;

  /// f(w) = 1/(w - w0) with the pole at (x0, y0); Re gives -y/(x^2+y^2)
  /// when centred at the origin.
  static HolomorphicSeed pole(SeedPart part, double x0 = 0.0, double y0 = 0.0);
  /// f(w) = sqrt(2w): U0 = sqrt(-y + sqrt(x^2 + y^2)).
  static HolomorphicSeed root();
  /// U0 = -Im z/(1-z), z = e^(y+ix); the 2pi-periodic sum -sum_j e^(jy) sin(jx).
  static HolomorphicSeed tolstov();
  static HolomorphicSeed custom(Derivatives f, SeedPart part, std::string name);

  SeedKind kind() const { return kind_; }
  SeedPart part() const { return part_; }
  const std::string& name() const { return name_; }
  double pole_x() const { return x0_; }
  double pole_y() const { return y0_; }

  /// d^n F / dy^n at (x, y). Throws DomainError at a singular point.
  Complex potential_derivative(double x, double y, int n) const;

  /// d^nx/dx^nx d^ny/dy^ny U0.
  double derivative(double x, double y, int nx, int ny) const;
  double y_derivative(double x, double y, int n) const { return derivative(x, y, 0, n); }

 private:
  HolomorphicSeed() = default;

  SeedKind kind_ = SeedKind::Custom;
  SeedPart part_ = SeedPart::Re;
  std::string name_;
  double x0_ = 0.0;
  double y0_ = 0.0;
  Derivatives f_;
};

inline constexpr int kMaxSeriesOrder = 2;

/// d^n U0 / dy^n at (x, y); lets the series run on harmonic data that has no
/// closed-form potential (for example a Dirichlet series).
using YDerivatives = std::function<double(double x, double y, int n)>;

double u1(const YDerivatives& d, double x, double y);
double u2(const YDerivatives& d, double x, double y);
double series_eval(const YDerivatives& d, double x, double y, double epsilon, int order);

double u0(const HolomorphicSeed& seed, double x, double y);
/// Needs the seed regular at (x, y) and at the mirror point (x, -y - 2).
double u1(const HolomorphicSeed& seed, double x, double y);
double u2(const HolomorphicSeed& seed, double x, double y);

/// sum_{n <= order} eps^(2n) U_n(x, y); order in {0, 1, 2}.
double series_eval(const HolomorphicSeed& seed, double x, double y, double epsilon,
                   int order);

/// n-th z-derivatives of cosh(sqrt z), sinh(sqrt z)/sqrt z and sqrt z sinh(sqrt z),
/// summed from their power series.
struct HyperbolicDerivatives {
  double c;
  double s;
  double t;
};
HyperbolicDerivatives hyperbolic_derivatives(double z, int n);

/// Coefficient of eps^(2n) in the exact evolution of `state` from state.y to
/// y, mode by mode. n = 0 is the eps = 0 evolution.
SineSeriesState series_coeff_spectral(const SineSeriesState& state, int n, double y);

}  // namespace rodbend
