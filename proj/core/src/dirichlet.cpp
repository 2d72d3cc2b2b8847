#include "rodbend/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "rodbend/errors.hpp"
#include "rodbend/sine_projection.hpp"

namespace rodbend {

namespace {

constexpr double kPi = std::numbers::pi;

// sinh(a)/sinh(b) (or cosh(a)/sinh(b)) for 0 <= a <= b, b > 0, from the
// decaying exponentials only.
double sinh_ratio(double a, double b, bool cosh_numerator) {
  const double num = cosh_numerator ? 1.0 + std::exp(-2.0 * a) : -std::expm1(-2.0 * a);
  return std::exp(a - b) * num / -std::expm1(-2.0 * b);
}

// One family of separated solutions:
//   sum_n sin(k along) [near_n sinh(k (C - across)) + far_n sinh(k across)] / sinh(k C)
// with k = n pi / A, differentiated d_along times in `along` and d_across
// times in `across`.
double family_sum(const std::vector<double>& near, const std::vector<double>& far,
                  double along, double across, double A, double C, int d_along,
                  int d_across) {
  const double base = kPi / A;
  const std::complex<double> step = std::polar(1.0, base * along);
  std::complex<double> rot = 1.0;
  // i^d_along selects sin, cos, -sin, -cos.
  std::complex<double> phase = 1.0;
  for (int j = 0; j < d_along; ++j) phase *= std::complex<double>(0.0, 1.0);
  const bool odd = d_across % 2 == 1;
  const double near_sign = odd ? -1.0 : 1.0;

  double sum = 0.0;
  const std::size_t count = near.size();
  for (std::size_t i = 0; i < count; ++i) {
    rot *= step;
    const double cn = near[i];
    const double cf = far[i];
    if (cn == 0.0 && cf == 0.0) continue;
    const double k = base * static_cast<double>(i + 1);
    const double along_part = (phase * rot).imag() * std::pow(k, d_along);
    const double scale = std::pow(k, d_across);
    double across_part = 0.0;
    if (cn != 0.0) across_part += near_sign * cn * sinh_ratio(k * (C - across), k * C, odd);
    if (cf != 0.0) across_part += cf * sinh_ratio(k * across, k * C, odd);
    sum += along_part * scale * across_part;
  }
  return sum;
}

std::vector<double> side_coefficients(const std::function<double(double)>& g, double a,
                                      double b, int count) {
  return sine_coefficients(g, a, b, count);
}

double check_corner(double u, double v, const char* name) {
  if (std::abs(u - v) > kCornerTolerance) {
    throw DomainError(std::string("solve_rectangle: incompatible traces at ") + name +
                      " corner");
  }
  return 0.5 * (u + v);
}

}  // namespace

void DirichletProblem::validate() const {
  if (!(half_length > 0.0)) throw DomainError("DirichletProblem: L must be positive");
  if (!(y_top > y_bottom)) throw DomainError("DirichletProblem: empty y range");
  if (!bottom || !top || !left || !right) {
    throw DomainError("DirichletProblem: all four traces are required");
  }
  if (mode_count < 1) throw DomainError("DirichletProblem: mode count must be positive");
}

RectangleSolution::RectangleSolution(DirichletProblem problem) : problem_(std::move(problem)) {
  const DirichletProblem& p = problem_;
  p.validate();
  const double L = p.half_length;
  corner_bl_ = check_corner(p.bottom(-L), p.left(p.y_bottom), "bottom-left");
  corner_br_ = check_corner(p.bottom(L), p.right(p.y_bottom), "bottom-right");
  corner_tl_ = check_corner(p.top(-L), p.left(p.y_top), "top-left");
  corner_tr_ = check_corner(p.top(L), p.right(p.y_top), "top-right");

  const double W = 2.0 * L;
  const double H = p.y_top - p.y_bottom;
  const auto lerp = [](double lo, double hi, double t) { return lo + (hi - lo) * t; };

  bottom_.coeff = side_coefficients(
      [&](double x) { return p.bottom(x) - lerp(corner_bl_, corner_br_, (x + L) / W); }, -L,
      L, p.mode_count);
  top_.coeff = side_coefficients(
      [&](double x) { return p.top(x) - lerp(corner_tl_, corner_tr_, (x + L) / W); }, -L, L,
      p.mode_count);
  left_.coeff = side_coefficients(
      [&](double y) { return p.left(y) - lerp(corner_bl_, corner_tl_, (y - p.y_bottom) / H); },
      p.y_bottom, p.y_top, p.mode_count);
  right_.coeff = side_coefficients(
      [&](double y) { return p.right(y) - lerp(corner_br_, corner_tr_, (y - p.y_bottom) / H); },
      p.y_bottom, p.y_top, p.mode_count);
}

double RectangleSolution::derivative(double x, double y, int nx, int ny) const {
  if (nx < 0 || ny < 0) throw DomainError("RectangleSolution: negative derivative order");
  const DirichletProblem& p = problem_;
  const double L = p.half_length;
  const double W = 2.0 * L;
  const double H = p.y_top - p.y_bottom;
  const double slack = 1e-12 * std::max({1.0, L, std::abs(p.y_bottom), std::abs(p.y_top)});
  if (x < -L - slack || x > L + slack || y < p.y_bottom - slack || y > p.y_top + slack) {
    throw DomainError("RectangleSolution: point outside the rectangle");
  }
  const double s = std::clamp(x + L, 0.0, W);
  const double t = std::clamp(y - p.y_bottom, 0.0, H);

  // Bilinear corner interpolant.
  double bilinear = 0.0;
  if (nx <= 1 && ny <= 1) {
    const double u = s / W;
    const double v = t / H;
    const double fu[2] = {nx == 0 ? 1.0 - u : -1.0 / W, nx == 0 ? u : 1.0 / W};
    const double fv[2] = {ny == 0 ? 1.0 - v : -1.0 / H, ny == 0 ? v : 1.0 / H};
    bilinear = fu[0] * fv[0] * corner_bl_ + fu[1] * fv[0] * corner_br_ +
               fu[0] * fv[1] * corner_tl_ + fu[1] * fv[1] * corner_tr_;
  }

  const double horizontal = family_sum(bottom_.coeff, top_.coeff, s, t, W, H, nx, ny);
  const double vertical = family_sum(left_.coeff, right_.coeff, t, s, H, W, ny, nx);
  return bilinear + horizontal + vertical;
}

double RectangleSolution::boundary_residual(int samples) const {
  const DirichletProblem& p = problem_;
  const double L = p.half_length;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double f = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
    const double x = -L + 2.0 * L * f;
    const double y = p.y_bottom + (p.y_top - p.y_bottom) * f;
    worst = std::max(worst, std::abs((*this)(x, p.y_bottom) - p.bottom(x)));
    worst = std::max(worst, std::abs((*this)(x, p.y_top) - p.top(x)));
    worst = std::max(worst, std::abs((*this)(-L, y) - p.left(y)));
    worst = std::max(worst, std::abs((*this)(L, y) - p.right(y)));
  }
  return worst;
}

RectangleSolution solve_rectangle(const DirichletProblem& problem) {
  return RectangleSolution(problem);
}

double solve_rectangle(const DirichletProblem& problem, double x, double y) {
  return RectangleSolution(problem)(x, y);
}

double root_potential(double x, double y) {
  return std::sqrt(-y + std::hypot(x, y));
}

double root_potential_dy(double x, double y) {
  const double r = std::hypot(x, y);
  const double q = std::sqrt(-y + r);
  if (q == 0.0) throw DomainError("root_potential_dy: singular on the cut");
  return (-1.0 + y / r) / (2.0 * q);
}

RectangleSolution build_H(double half_length, int mode_count) {
  if (!(half_length > 0.0)) throw DomainError("build_H: L must be positive");
  const double L = half_length;
  const double top_shift = root_potential(L, 1.0) - root_potential(L, -3.0);
  DirichletProblem p;
  p.half_length = L;
  p.y_bottom = -3.0;
  p.y_top = 1.0;
  p.mode_count = mode_count;
  p.bottom = [](double x) { return root_potential(x, -3.0); };
  p.top = [top_shift](double x) { return root_potential(x, -3.0) + top_shift; };
  p.left = [L](double y) { return root_potential(-L, y); };
  p.right = [L](double y) { return root_potential(L, y); };
  return RectangleSolution(std::move(p));
}

double build_S(const RectangleSolution& h, double x, double y) {
  return root_potential(x, y) - h(x, y);
}

double build_S_dy(const RectangleSolution& h, double x, double y) {
  return root_potential_dy(x, y) - h.derivative(x, y, 0, 1);
}

RectangleSolution build_E(double half_length, double c1, double c2, double y_top,
                          int mode_count) {
  if (!(half_length > 0.0)) throw DomainError("build_E: L must be positive");
  if (!(y_top > -2.0)) throw DomainError("build_E: y_top must exceed -2");
  const double L = half_length;
  // eps = 0 pole solutions -y/(x^2+y^2) and -x/(x^2+y^2).
  const auto side = [c1, c2](double x, double y) {
    const double r2 = x * x + y * y;
    return -c1 * (-y / r2) - c2 * (-x / r2);
  };
  const double bl = side(-L, -2.0);
  const double br = side(L, -2.0);
  const double tl = side(-L, y_top);
  const double tr = side(L, y_top);
  DirichletProblem p;
  p.half_length = L;
  p.y_bottom = -2.0;
  p.y_top = y_top;
  p.mode_count = mode_count;
  p.bottom = [=](double x) { return bl + (br - bl) * (x + L) / (2.0 * L); };
  p.top = [=](double x) { return tl + (tr - tl) * (x + L) / (2.0 * L); };
  p.left = [=](double y) { return side(-L, y); };
  p.right = [=](double y) { return side(L, y); };
  return RectangleSolution(std::move(p));
}

ModelMsk::ModelMsk(double half_length, double epsilon, int mode_count)
    : half_length_(half_length),
      epsilon_(epsilon),
      h_(build_H(half_length)),
      initial_{} {
  if (!(epsilon > 0.0)) throw DomainError("ModelMsk: epsilon must be positive");
  const double L = half_length;
  initial_ = analyze([this](double x) { return build_S(h_, x, -1.0); },
                     [this](double x) { return build_S_dy(h_, x, -1.0); }, L, mode_count,
                     -1.0);
}

SineSeriesState ModelMsk::state_at(double y) const {
  if (!(y >= -1.0)) throw DomainError("ModelMsk: needs y >= -1");
  return evolve(initial_, epsilon_, y + 1.0);
}

std::vector<double> ModelMsk::evaluate(double y, std::span<const double> xs) const {
  return synthesize(state_at(y), xs);
}

double ModelMsk::evaluate(double x, double y) const {
  return synthesize_at(state_at(y), x);
}

std::vector<double> model_msk(double half_length, double epsilon, double y_eval,
                              std::span<const double> xs) {
  return ModelMsk(half_length, epsilon).evaluate(y_eval, xs);
}

}  // namespace rodbend
