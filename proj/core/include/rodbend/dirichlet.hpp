#pragma once

// Laplace equation on [-L, L] x [y_bottom, y_top] with Dirichlet data, by
// separation of variables. The bilinear interpolant of the four corner
// values is removed first; each side's remaining trace then vanishes at its
// ends and is carried by one sine/sinh series.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rodbend/sine_series.hpp"

namespace rodbend {

inline constexpr int kDirichletModes = 400;
inline constexpr double kCornerTolerance = 1e-8;

struct DirichletProblem {
  double half_length = 1.0;
  double y_bottom = -1.0;
  double y_top = 1.0;
  std::function<double(double)> bottom;  ///< u(x, y_bottom)
  std::function<double(double)> top;     ///< u(x, y_top)
  std::function<double(double)> left;    ///< u(-L, y)
  std::function<double(double)> right;   ///< u(L, y)
  int mode_count = kDirichletModes;

  void validate() const;
};

class RectangleSolution {
 public:
  /// Solves the problem; throws DomainError when adjacent traces disagree
  /// at a corner by more than kCornerTolerance.
  explicit RectangleSolution(DirichletProblem problem);

  double operator()(double x, double y) const { return derivative(x, y, 0, 0); }
  /// Term-wise d^nx/dx^nx d^ny/dy^ny; (x, y) must lie in the closed rectangle.
  double derivative(double x, double y, int nx, int ny) const;

  /// Largest |u - trace| over `samples` equispaced points per side.
  double boundary_residual(int samples = 201) const;

  const DirichletProblem& problem() const { return problem_; }

 private:
  struct SideSeries {
    std::vector<double> coeff;
  };

  DirichletProblem problem_;
  double corner_bl_ = 0.0;
  double corner_br_ = 0.0;
  double corner_tl_ = 0.0;
  double corner_tr_ = 0.0;
  SideSeries bottom_;
  SideSeries top_;
  SideSeries left_;
  SideSeries right_;
};

RectangleSolution solve_rectangle(const DirichletProblem& problem);
double solve_rectangle(const DirichletProblem& problem, double x, double y);

/// Q(x, y) = sqrt(-y + sqrt(y^2 + x^2)) = Re sqrt(2(-y + ix)) and its y-derivative.
double root_potential(double x, double y);
double root_potential_dy(double x, double y);

/// Harmonic H on [-L, L] x [-3, 1] equal to Q on the sides and the bottom;
/// the top trace shifts Q(x, -3) so that it meets the side traces.
RectangleSolution build_H(double half_length, int mode_count = kDirichletModes);

/// S = Q - H: vanishes at x = +-L and keeps the root singularity at the origin.
double build_S(const RectangleSolution& h, double x, double y);
double build_S_dy(const RectangleSolution& h, double x, double y);

/// Harmonic E on [-L, L] x [-2, y_top] whose side traces are
/// -c1 U_re(+-L, y) - c2 U_im(+-L, y) for the eps = 0 pole solutions; top and
/// bottom data interpolate the corner values linearly in x.
RectangleSolution build_E(double half_length, double c1, double c2, double y_top = 1.0,
                          int mode_count = kDirichletModes);

/// Hinged-rod solution launched at y = -1 with the Cauchy data of S.
class ModelMsk {
 public:
  ModelMsk(double half_length, double epsilon, int mode_count = kDefaultModeCount);

  double epsilon() const { return epsilon_; }
  double half_length() const { return half_length_; }
  const RectangleSolution& harmonic_part() const { return h_; }
  const SineSeriesState& initial_state() const { return initial_; }

  /// Sine state at y >= -1.
  SineSeriesState state_at(double y) const;
  std::vector<double> evaluate(double y, std::span<const double> xs) const;
  double evaluate(double x, double y) const;

 private:
  double half_length_;
  double epsilon_;
  RectangleSolution h_;
  SineSeriesState initial_;
};

std::vector<double> model_msk(double half_length, double epsilon, double y_eval,
                              std::span<const double> xs);

}  // namespace rodbend
