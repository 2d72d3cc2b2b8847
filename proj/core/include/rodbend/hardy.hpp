#pragma once

// The Hardy integral
//
//   I_nu(X, Y, m) = int_0^inf k^nu exp(k (Y - iX) - k^m / 2) dk,  nu > -1,
//
// and the inner-zone solutions built from it. With X = x / eps^(2/3),
// Y = y / eps^(2/3) it describes the rod near a pole singularity
// (Re/Im I_0) and near a square-root singularity (u_in, built from I_{-1/2}
// and I_{3/2}). All asymptotic helpers assume m = 3.

#include <complex>

namespace rodbend {

inline constexpr double kHardyTolerance = 1e-12;

struct HardyQuery {
  double nu = 0.0;
  double X = 0.0;
  double Y = 0.0;
  double m = 3.0;

  void validate() const;
};

/// Inner (stretched) and outer coordinates of one point.
struct ScaledPoint {
  double X;
  double Y;
  double epsilon;
  double x;
  double y;

  static ScaledPoint from_outer(double x, double y, double epsilon);
  static ScaledPoint from_inner(double X, double Y, double epsilon);
};

/// eps^(2/3), the inner length scale.
double inner_scale(double epsilon);

/// Quadrature along the real k axis. The k^nu endpoint singularity is
/// removed by k = s^p; panels resolve both the decay scale and at least
/// eight panels per period 2 pi / |X|. Absolute error <= abs_tol, or
/// roundoff relative to the integral of |integrand| when that is larger.
std::complex<double> hardy(const HardyQuery& query, double abs_tol = kHardyTolerance);

/// Exact I_nu(0, 0, 3) = 2^((nu+1)/3) / 3 * Gamma((nu+1)/3).
double hardy_origin_closed_form(double nu);

/// Exponential-growth sector {Y > 0, |X| < sqrt(3) Y} of I_nu(X, Y, 3).
bool sector_contains(double X, double Y);

/// Partial sum over m = 0..n_terms of (3m)!/m! (-1/2)^m (-Y + iX)^(-3m-1),
/// the large-|Y - iX| expansion of I_0(X, Y, 3) valid outside the sector.
std::complex<double> hardy_pole_asymptotic(double X, double Y, int n_terms);

/// Two-term uniform approximation of I_0(X, Y, 3) for Y >= 0:
/// 1/(-Y + iX) + sqrt(pi) (2/(3w))^(1/4) exp((2w/3)^(3/2)), w = Y - iX.
std::complex<double> hardy_uniform_asymptotic(double X, double Y);

struct InnerPole {
  double re_part;  ///< Re I_0(X, Y, 3), inner profile of -y/(x^2+y^2)
  double im_part;  ///< Im I_0(X, Y, 3), inner profile of -x/(x^2+y^2)
};

InnerPole inner_pole(double X, double Y, double abs_tol = kHardyTolerance);

/// Both integral representations of the root-type inner solution:
/// combination  -Re[2 w I_{-1/2} - 3 I_{3/2}] / sqrt(2 pi), and
/// regularized  -Re int k^(-3/2) (exp(k w - k^3/2) - 1) dk / sqrt(2 pi).
struct InnerRootForms {
  double combination;
  double regularized;
  /// Integral of |integrand| of the regularized form (same normalisation).
  /// Near the sector edge the forms agree only to rounding relative to it.
  double magnitude;
};

InnerRootForms inner_root_forms(double X, double Y, double abs_tol = kHardyTolerance);

/// u_in(X, Y); throws ConsistencyError if the two forms disagree by more
/// than 10 * abs_tol (scaled by |u_in| when that exceeds one) or 10 times
/// the quadrature's relative floor on magnitude, whichever is larger.
double inner_root(double X, double Y, double abs_tol = kHardyTolerance);

/// sqrt(-Y + sqrt(Y^2 + X^2)), the behaviour of u_in outside the sector.
double inner_root_algebraic_asymptotic(double X, double Y);

/// Leading in-sector growth of u_in:
/// -Re[sqrt(3) / (2w) exp((2w/3)^(3/2))], w = Y - iX. DomainError outside
/// the sector.
double inner_root_exponential_asymptotic(double X, double Y);

/// d^2 u_in / dX^2 = Re I_{1/2}(X, Y, 3) / sqrt(2 pi).
double inner_root_curvature(double X, double Y, double abs_tol = kHardyTolerance);

}  // namespace rodbend
