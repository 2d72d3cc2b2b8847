#include "rodbend/etalon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "rodbend/dispersion.hpp"
#include "rodbend/errors.hpp"
#include "rodbend/quadrature.hpp"

namespace rodbend {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143268;
constexpr double kMinCutoff = 50.0;

// e^-k P and e^-k P_y for the propagated (1, k) initial pair.
struct Kernel {
  double p;
  double py;
};

// Below this z = omega^2 tau^2 the propagator is formed directly; above it
// the exponentials are combined with e^-k before evaluation.
constexpr double kDirectLimit = 400.0;

Kernel kernel(double k, double tau, double epsilon) {
  const double w2 = omega_squared(k, epsilon);
  const double z = w2 * tau * tau;
  if (z <= kDirectLimit) {
    const HyperbolicPair hp = hyperbolic_pair(z);
    const double e = std::exp(-k);
    return {e * (hp.c + k * tau * hp.s), e * (w2 * tau * hp.s + k * hp.c)};
  }
  const double w = std::sqrt(w2);
  const double grow = std::exp(w * tau - k);
  const double decay = std::exp(-w * tau - k);
  return {0.5 * grow * (1.0 + k / w) + 0.5 * decay * (1.0 - k / w),
          0.5 * grow * (w + k) - 0.5 * decay * (w - k)};
}

// cosh(sqrt z) - 1 without cancellation.
double cosh_sqrt_m1(double z) {
  if (std::abs(z) < 1e-2) {
    return z * (0.5 + z * (1.0 / 24.0 + z * (1.0 / 720.0 + z / 40320.0)));
  }
  if (z > 0.0) {
    const double h = std::sinh(0.5 * std::sqrt(z));
    return 2.0 * h * h;
  }
  const double h = std::sin(0.5 * std::sqrt(-z));
  return -2.0 * h * h;
}

// e^-k P - 1, accurate as k -> 0.
double kernel_m1(double k, double tau, double epsilon) {
  if (k >= 1.0) return kernel(k, tau, epsilon).p - 1.0;
  const double w2 = omega_squared(k, epsilon);
  const double z = w2 * tau * tau;
  const HyperbolicPair hp = hyperbolic_pair(z);
  const double p = hp.c + k * tau * hp.s;
  return std::expm1(-k) * p + cosh_sqrt_m1(z) + k * tau * hp.s;
}

// e^-k P_y / k, finite as k -> 0.
double kernel_dy_over_k(double k, double tau, double epsilon) {
  const double w2 = omega_squared(k, epsilon);
  const double z = w2 * tau * tau;
  if (z > kDirectLimit) return kernel(k, tau, epsilon).py / k;
  const HyperbolicPair hp = hyperbolic_pair(z);
  return std::exp(-k) * ((1.0 - epsilon * epsilon * k * k) * k * tau * hp.s + hp.c);
}

// Log of a bound on the k-integrand's modulus, used to place the cut-off.
double log_envelope(EtalonKind kind, EtalonComponent component, double k,
                    double tau, double epsilon) {
  const double w2 = omega_squared(k, epsilon);
  double v = (w2 > 0.0 ? std::sqrt(w2) * tau : 0.0) - k + std::log1p(k * (1.0 + tau));
  if (component == EtalonComponent::DerivativeY) v += std::log1p(k);
  if (kind == EtalonKind::RootD2) v += 0.5 * std::log(k);
  if (kind == EtalonKind::Root) v -= 1.5 * std::log(k);
  return v;
}

double cutoff(EtalonKind kind, EtalonComponent component, double tau, double epsilon,
              double abs_tol) {
  const double target = std::log(abs_tol / 100.0);
  constexpr double step = 0.25;
  double prev = log_envelope(kind, component, step, tau, epsilon);
  double peak = prev;
  for (double k = 2.0 * step;; k += step) {
    const double v = log_envelope(kind, component, k, tau, epsilon);
    peak = std::max(peak, v);
    if (peak > kMaxGrowthExponent) {
      throw SaturationError("evaluate_etalon: growing band overflows", peak);
    }
    if (k >= kMinCutoff && v < target && v < prev) return k;
    if (k > 1e7) throw AccuracyError("evaluate_etalon: no decay of the integrand", v);
    prev = v;
  }
}

// Panel edges in k: at most eight per period of cos(kx) and of the
// oscillatory phase |omega| tau, with a break at the threshold k = 1/eps.
std::vector<double> k_panels(double x, double tau, double epsilon, double k_max) {
  const double h_x = x != 0.0 ? 2.0 * std::numbers::pi / std::abs(x) / 8.0 : 1e300;
  const double k_threshold = 1.0 / epsilon;
  std::vector<double> edges{0.0};
  double k = 0.0;
  while (k < k_max) {
    double h = std::min(0.5, h_x);
    if (k > 1.05 * k_threshold && tau > 0.0) {
      const double mu = std::sqrt(-omega_squared(k, epsilon));
      const double dmu = std::abs(4.0 * epsilon * epsilon * k * k * k - 2.0 * k) / (2.0 * mu);
      h = std::min(h, 2.0 * std::numbers::pi / (tau * dmu) / 8.0);
    }
    double next = std::min(k + h, k_max);
    if (k < k_threshold && next > k_threshold) next = k_threshold;
    edges.push_back(next);
    k = next;
  }
  return edges;
}

double cos_m1(double t) {
  const double h = std::sin(0.5 * t);
  return -2.0 * h * h;
}

}  // namespace

std::string_view to_string(EtalonKind kind) {
  switch (kind) {
    case EtalonKind::PoleRe: return "pole-re";
    case EtalonKind::PoleIm: return "pole-im";
    case EtalonKind::RootD2: return "root-d2";
    case EtalonKind::Root: return "root";
  }
  return "?";
}

EtalonKind parse_etalon_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::erase(lower, '_');
  std::erase(lower, '-');
  if (lower == "polere") return EtalonKind::PoleRe;
  if (lower == "poleim") return EtalonKind::PoleIm;
  if (lower == "rootd2") return EtalonKind::RootD2;
  if (lower == "root") return EtalonKind::Root;
  throw DomainError("unknown etalon kind: " + std::string(name));
}

CauchyTrace etalon_initial_data(EtalonKind kind, double x) {
  const double r2 = 1.0 + x * x;
  switch (kind) {
    case EtalonKind::PoleRe:
      return {1.0 / r2, (1.0 - x * x) / (r2 * r2)};
    case EtalonKind::PoleIm:
      return {-x / r2, -2.0 * x / (r2 * r2)};
    case EtalonKind::RootD2: {
      const std::complex<double> two_w(2.0, 2.0 * x);
      return {std::pow(two_w, -1.5).real(), 3.0 * std::pow(two_w, -2.5).real()};
    }
    case EtalonKind::Root: {
      const double r = std::sqrt(r2);
      const double q = std::sqrt(1.0 + r);
      return {q, (-1.0 - 1.0 / r) / (2.0 * q)};
    }
  }
  throw DomainError("etalon_initial_data: unknown kind");
}

double etalon_laplace_limit(EtalonKind kind, double x, double y) {
  const std::complex<double> w(-y, x);
  if (std::abs(w) == 0.0) throw DomainError("etalon_laplace_limit: singular point");
  switch (kind) {
    case EtalonKind::PoleRe: return (1.0 / w).real();
    case EtalonKind::PoleIm: return (1.0 / w).imag();
    case EtalonKind::RootD2: return std::pow(2.0 * w, -1.5).real();
    case EtalonKind::Root: return std::sqrt(2.0 * w).real();
  }
  throw DomainError("etalon_laplace_limit: unknown kind");
}

double evaluate_etalon(EtalonKind kind, double x, double y, double epsilon,
                       double abs_tol, EtalonComponent component) {
  if (!(y >= -1.0)) throw DomainError("evaluate_etalon: needs y >= -1");
  if (!(epsilon > 0.0)) throw DomainError("evaluate_etalon: epsilon must be positive");
  if (!(abs_tol > 0.0)) throw DomainError("evaluate_etalon: abs_tol must be positive");
  if (!std::isfinite(x)) throw DomainError("evaluate_etalon: non-finite x");

  const double tau = y + 1.0;
  const bool dy = component == EtalonComponent::DerivativeY;
  const double k_max = cutoff(kind, component, tau, epsilon, abs_tol);
  const std::vector<double> k_edges = k_panels(x, tau, epsilon, k_max);

  quad::Options opts;
  opts.abs_tol = abs_tol;

  const auto pick = [dy](const Kernel& g) { return dy ? g.py : g.p; };

  switch (kind) {
    case EtalonKind::PoleRe: {
      const auto f = [&](double k) { return pick(kernel(k, tau, epsilon)) * std::cos(k * x); };
      return quad::integrate(f, std::span<const double>(k_edges), opts).value;
    }
    case EtalonKind::PoleIm: {
      const auto f = [&](double k) { return pick(kernel(k, tau, epsilon)) * std::sin(k * x); };
      return -quad::integrate(f, std::span<const double>(k_edges), opts).value;
    }
    default:
      break;
  }

  // Root kinds: k = s^2 removes the half-integer power at k = 0.
  std::vector<double> s_edges;
  s_edges.reserve(k_edges.size());
  for (double k : k_edges) s_edges.push_back(std::sqrt(k));
  opts.abs_tol = abs_tol / kInvSqrt2Pi;

  if (kind == EtalonKind::RootD2) {
    // k^(1/2) dk = 2 s^2 ds
    const auto f = [&](double s) {
      const double k = s * s;
      return 2.0 * k * pick(kernel(k, tau, epsilon)) * std::cos(k * x);
    };
    return kInvSqrt2Pi * quad::integrate(f, std::span<const double>(s_edges), opts).value;
  }

  // Root: k^(-3/2) dk = 2 s^-2 ds.
  if (dy) {
    const auto f = [&](double s) {
      const double k = s * s;
      return 2.0 * kernel_dy_over_k(k, tau, epsilon) * std::cos(k * x);
    };
    return -kInvSqrt2Pi * quad::integrate(f, std::span<const double>(s_edges), opts).value;
  }
  const auto f = [&](double s) {
    const double k = s * s;
    if (k == 0.0) return 0.0;
    // e^-k P cos(kx) - 1 = (e^-k P - 1) cos(kx) + (cos(kx) - 1)
    const double g = kernel_m1(k, tau, epsilon) * std::cos(k * x) + cos_m1(k * x);
    return 2.0 * g / k;
  };
  const double body = quad::integrate(f, std::span<const double>(s_edges), opts).value;
  // The -1 term beyond k_max contributes -2 / sqrt(k_max).
  return -kInvSqrt2Pi * (body - 2.0 / std::sqrt(k_max));
}

SampledField evaluate_etalon_grid(EtalonKind kind, const Grid& grid, double epsilon,
                                  double abs_tol) {
  SampledField field = sample_field(grid, [&](double x, double y) {
    return evaluate_etalon(kind, x, y, epsilon, abs_tol);
  });
  field.scenario = std::string(to_string(kind));
  field.epsilon = epsilon;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", abs_tol);
  field.metadata["abs_tol"] = buf;
  field.metadata["provider"] = "whole-line Fourier quadrature";
  return field;
}

}  // namespace rodbend
