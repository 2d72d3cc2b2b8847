#include "rodbend/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rodbend/errors.hpp"
#include "rodbend/quadrature.hpp"

namespace rodbend {

using cplx = std::complex<double>;

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-14; }

// Exponent p of the substitution k = s^p that makes k^nu dk smooth at 0.
double substitution_power(double nu) {
  if (is_integer(nu)) return 1.0;
  if (is_integer(2.0 * nu)) return 2.0;
  if (nu < 0.0) return 1.0 / (1.0 + nu);
  return 1.0;
}

// Real part of the integrand's log-modulus in k.
double log_envelope(double nu, double Y, double m, double k) {
  return nu * std::log(k) + k * Y - 0.5 * std::pow(k, m);
}

// Upper cut-off: beyond k_max the envelope sits far below both the peak
// and the requested tolerance.
double cutoff(double nu, double Y, double m, double abs_tol) {
  const double k_peak = Y > 0.0 ? std::pow(2.0 * Y / m, 1.0 / (m - 1.0)) : 0.0;
  double log_peak = -1e300;
  for (double k : {k_peak, 0.5, 1.0, 2.0}) {
    if (k > 0.0) log_peak = std::max(log_peak, log_envelope(nu, Y, m, k));
  }
  const double floor = std::min(log_peak - 45.0, std::log(abs_tol * 1e-3));
  const double step = 0.05 * std::max(1.0, k_peak);
  double k = std::max(k_peak, 0.5);
  while (log_envelope(nu, Y, m, k) > floor) k += step;
  return k;
}

// -Re of a quantity divided by sqrt(2 pi): the root inner solution's
// normalisation.
double root_normalise(const cplx& v) { return -v.real() / kSqrt2Pi; }

}  // namespace

void HardyQuery::validate() const {
  if (!(nu > -1.0)) throw DomainError("hardy: nu must exceed -1");
  if (!(m >= 2.0)) throw DomainError("hardy: m must be at least 2");
  if (!std::isfinite(X) || !std::isfinite(Y)) throw DomainError("hardy: non-finite point");
}

double inner_scale(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("inner_scale: epsilon must be positive");
  return std::cbrt(epsilon * epsilon);
}

ScaledPoint ScaledPoint::from_outer(double x, double y, double epsilon) {
  const double s = inner_scale(epsilon);
  return {x / s, y / s, epsilon, x, y};
}

ScaledPoint ScaledPoint::from_inner(double X, double Y, double epsilon) {
  const double s = inner_scale(epsilon);
  return {X, Y, epsilon, X * s, Y * s};
}

cplx hardy(const HardyQuery& q, double abs_tol) {
  q.validate();
  if (!(abs_tol > 0.0)) throw DomainError("hardy: abs_tol must be positive");

  const double p = substitution_power(q.nu);
  // k^nu dk = p s^(p(nu+1)-1) ds; the exponent is 0 for the chosen p except
  // in the generic nu >= 0 case, where it is nu itself.
  const double s_power = p * (q.nu + 1.0) - 1.0;
  const auto integrand = [&](double s) -> cplx {
    const double k = p == 1.0 ? s : (p == 2.0 ? s * s : std::pow(s, p));
    const double weight = s_power == 0.0 ? p : p * std::pow(s, s_power);
    const double re = k * q.Y - 0.5 * std::pow(k, q.m);
    return weight * std::exp(re) * cplx(std::cos(k * q.X), -std::sin(k * q.X));
  };

  const double k_max = cutoff(q.nu, q.Y, q.m, abs_tol);
  double h = 0.25;
  if (q.Y < 0.0) h = std::min(h, 2.0 / -q.Y);
  if (q.X != 0.0) h = std::min(h, 2.0 * std::numbers::pi / std::abs(q.X) / 8.0);
  const auto k_edges = quad::uniform_breakpoints(0.0, k_max, h);

  std::vector<double> s_edges;
  s_edges.reserve(k_edges.size());
  for (double k : k_edges) s_edges.push_back(p == 1.0 ? k : std::pow(k, 1.0 / p));

  quad::Options opts;
  opts.abs_tol = abs_tol;
  return quad::integrate(integrand, std::span<const double>(s_edges), opts).value;
}

double hardy_origin_closed_form(double nu) {
  if (!(nu > -1.0)) throw DomainError("hardy_origin_closed_form: nu must exceed -1");
  const double t = (nu + 1.0) / 3.0;
  return std::pow(2.0, t) / 3.0 * std::tgamma(t);
}

bool sector_contains(double X, double Y) {
  return Y > 0.0 && std::abs(X) < std::numbers::sqrt3 * Y;
}

cplx hardy_pole_asymptotic(double X, double Y, int n_terms) {
  if (sector_contains(X, Y)) {
    throw DomainError("hardy_pole_asymptotic: point inside the growth sector");
  }
  if (n_terms < 0) throw DomainError("hardy_pole_asymptotic: negative term count");
  const cplx w(-Y, X);
  if (std::abs(w) == 0.0) throw DomainError("hardy_pole_asymptotic: origin");

  const cplx w_inv = 1.0 / w;
  const cplx w_inv3 = w_inv * w_inv * w_inv;
  cplx power = w_inv;
  double coeff = 1.0;  // (3m)!/m! (-1/2)^m
  cplx sum = 0.0;
  for (int m = 0; m <= n_terms; ++m) {
    if (m > 0) {
      coeff *= -0.5 * (3.0 * m) * (3.0 * m - 1.0) * (3.0 * m - 2.0) / m;
      power *= w_inv3;
    }
    sum += coeff * power;
  }
  return sum;
}

cplx hardy_uniform_asymptotic(double X, double Y) {
  if (Y < 0.0) throw DomainError("hardy_uniform_asymptotic: needs Y >= 0");
  const cplx w(Y, -X);
  if (std::abs(w) == 0.0) throw DomainError("hardy_uniform_asymptotic: origin");
  const cplx algebraic = 1.0 / cplx(-Y, X);
  const cplx exponential = std::sqrt(std::numbers::pi) *
                           std::pow(2.0 / (3.0 * w), 0.25) *
                           std::exp(std::pow(2.0 * w / 3.0, 1.5));
  return algebraic + exponential;
}

InnerPole inner_pole(double X, double Y, double abs_tol) {
  const cplx v = hardy({0.0, X, Y, 3.0}, abs_tol);
  return {v.real(), v.imag()};
}

InnerRootForms inner_root_forms(double X, double Y, double abs_tol) {
  const cplx w(Y, -X);

  // The combination amplifies the I_{-1/2} error by 2|w|.
  const double tol_scale = 2.0 * std::abs(w) + 3.0 + 1.0;
  const double part_tol = abs_tol / tol_scale;
  const cplx i_m = hardy({-0.5, X, Y, 3.0}, part_tol);
  const cplx i_p = hardy({1.5, X, Y, 3.0}, part_tol);
  const double combination = root_normalise(2.0 * w * i_m - 3.0 * i_p);

  // k = s^2: k^(-3/2) (e^phi - 1) dk = 2 s^(-2) expm1(phi) ds.
  const auto integrand = [&](double s) -> double {
    const double k = s * s;
    const double re = k * Y - 0.5 * k * k * k;
    const double im = -k * X;
    // Re expm1(re + i im) = expm1(re) cos(im) - 2 sin^2(im/2).
    const double half = std::sin(0.5 * im);
    const double expm1_re = std::expm1(re) * std::cos(im) - 2.0 * half * half;
    return 2.0 * expm1_re / k;
  };
  const double k_max = std::max(cutoff(0.0, Y, 3.0, abs_tol), 40.0);
  const double s_max = std::sqrt(k_max);
  double h = 0.25;
  if (Y < 0.0) h = std::min(h, 2.0 / -Y);
  if (X != 0.0) h = std::min(h, 2.0 * std::numbers::pi / std::abs(X) / 8.0);
  std::vector<double> s_edges;
  for (double k : quad::uniform_breakpoints(0.0, k_max, h)) s_edges.push_back(std::sqrt(k));
  quad::Options opts;
  opts.abs_tol = 0.5 * abs_tol;
  const quad::Result<double> body =
      quad::integrate(integrand, std::span<const double>(s_edges), opts);
  // Tail of the -1 term: -int_{k_max}^inf k^(-3/2) dk = -2 / sqrt(k_max).
  const double regularized = -(body.value - 2.0 / s_max) / kSqrt2Pi;

  return {combination, regularized, body.abs_integral / kSqrt2Pi};
}

double inner_root(double X, double Y, double abs_tol) {
  const InnerRootForms forms = inner_root_forms(X, Y, abs_tol);
  const double diff = std::abs(forms.combination - forms.regularized);
  const double allowed = 10.0 * std::max(abs_tol * std::max(1.0, std::abs(forms.combination)),
                                         quad::Options{}.rel_tol * forms.magnitude);
  if (diff > allowed) {
    throw ConsistencyError("inner_root: integral forms disagree", diff);
  }
  return forms.combination;
}

double inner_root_algebraic_asymptotic(double X, double Y) {
  return std::sqrt(-Y + std::hypot(X, Y));
}

double inner_root_exponential_asymptotic(double X, double Y) {
  if (!sector_contains(X, Y)) {
    throw DomainError("inner_root_exponential_asymptotic: point outside the sector");
  }
  const cplx w(Y, -X);
  const cplx v = std::sqrt(3.0) / (2.0 * w) * std::exp(std::pow(2.0 * w / 3.0, 1.5));
  return -v.real();
}

double inner_root_curvature(double X, double Y, double abs_tol) {
  return hardy({0.5, X, Y, 3.0}, abs_tol).real() / kSqrt2Pi;
}

}  // namespace rodbend
