#include "rodbend/perturbation.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "rodbend/errors.hpp"

namespace rodbend {

using Complex = std::complex<double>;

namespace {

// Eulerian numbers A(n, m), m = 0..n-1.
std::vector<double> eulerian_row(int n) {
  std::vector<double> row{1.0};
  for (int r = 2; r <= n; ++r) {
    std::vector<double> next(static_cast<std::size_t>(r), 0.0);
    for (int m = 0; m < r; ++m) {
      const double keep = m < r - 1 ? (m + 1) * row[m] : 0.0;
      const double shift = m > 0 ? (r - m) * row[m - 1] : 0.0;
      next[m] = keep + shift;
    }
    row = std::move(next);
  }
  return row;
}

// Li_{-n}(z) = z sum_m A(n, m) z^m / (1 - z)^(n+1), n >= 1; Li_0 = z/(1-z).
Complex polylog_negative(Complex z, int n) {
  const Complex one_minus = 1.0 - z;
  if (std::abs(one_minus) < 1e-300) throw DomainError("tolstov seed: singular point");
  if (n == 0) return z / one_minus;
  const std::vector<double> a = eulerian_row(n);
  Complex poly = 0.0;
  for (int m = n - 1; m >= 0; --m) poly = poly * z + a[m];
  return z * poly / std::pow(one_minus, n + 1);
}

double take(const Complex& v, SeedPart part) {
  return part == SeedPart::Re ? v.real() : v.imag();
}

Complex i_power(int n, double orientation) {
  const Complex unit(0.0, orientation);
  Complex r = 1.0;
  for (int j = 0; j < n; ++j) r *= unit;
  return r;
}

}  // namespace

HolomorphicSeed HolomorphicSeed::pole(SeedPart part, double x0, double y0) {
  HolomorphicSeed s;
  s.kind_ = SeedKind::Pole1;
  s.part_ = part;
  s.name_ = part == SeedPart::Re ? "pole-re" : "pole-im";
  s.x0_ = x0;
  s.y0_ = y0;
  const Complex w0(-y0, x0);
  s.f_ = [w0](Complex w, int n) {
    const Complex d = w - w0;
    if (std::abs(d) == 0.0) throw DomainError("pole seed: singular point");
    // (-1)^n n! / d^(n+1)
    double c = 1.0;
    for (int j = 1; j <= n; ++j) c *= -j;
    return c / std::pow(d, n + 1);
  };
  return s;
}

HolomorphicSeed HolomorphicSeed::root() {
  HolomorphicSeed s;
  s.kind_ = SeedKind::Root;
  s.part_ = SeedPart::Re;
  s.name_ = "root";
  s.f_ = [](Complex w, int n) {
    if (std::abs(w) == 0.0) throw DomainError("root seed: singular point");
    // d/dw (2w)^a = 2a (2w)^(a-1)
    double c = 1.0;
    for (int j = 0; j < n; ++j) c *= 2.0 * (0.5 - j);
    return c * std::pow(2.0 * w, 0.5 - n);
  };
  return s;
}

HolomorphicSeed HolomorphicSeed::tolstov() {
  HolomorphicSeed s;
  s.kind_ = SeedKind::TolstovMap;
  s.part_ = SeedPart::Im;
  s.name_ = "tolstov";
  return s;
}

HolomorphicSeed HolomorphicSeed::custom(Derivatives f, SeedPart part, std::string name) {
  if (!f) throw DomainError("custom seed: empty derivative rule");
  HolomorphicSeed s;
  s.kind_ = SeedKind::Custom;
  s.part_ = part;
  s.name_ = std::move(name);
  s.f_ = std::move(f);
  return s;
}

Complex HolomorphicSeed::potential_derivative(double x, double y, int n) const {
  if (n < 0) throw DomainError("seed: negative derivative order");
  if (kind_ == SeedKind::TolstovMap) {
    // F = -Li_0(e^(y+ix)) and d/dy acts as z d/dz.
    return -polylog_negative(std::exp(Complex(y, x)), n);
  }
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * f_(Complex(-y, x), n);
}

double HolomorphicSeed::derivative(double x, double y, int nx, int ny) const {
  if (nx < 0 || ny < 0) throw DomainError("seed: negative derivative order");
  const double orientation = kind_ == SeedKind::TolstovMap ? 1.0 : -1.0;
  return take(i_power(nx, orientation) * potential_derivative(x, y, nx + ny), part_);
}

double u0(const HolomorphicSeed& seed, double x, double y) {
  return seed.y_derivative(x, y, 0);
}

double u1(const YDerivatives& d, double x, double y) {
  const double ym = -y - 2.0;
  const double t = y + 1.0;
  return 0.5 * (0.5 * d(x, y, 2) - 0.5 * d(x, ym, 2) - t * d(x, y, 3));
}

double u2(const YDerivatives& d, double x, double y) {
  const double ym = -y - 2.0;
  const double t = y + 1.0;
  const double inner = d(x, y, 5) + 0.5 * d(x, ym, 5) - 0.5 * t * d(x, y, 6);
  return 0.25 * (0.75 * d(x, y, 4) - 0.75 * d(x, ym, 4) - t * inner);
}

double series_eval(const YDerivatives& d, double x, double y, double epsilon, int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw DomainError("series_eval: order must be 0, 1 or 2");
  }
  const double e2 = epsilon * epsilon;
  double sum = d(x, y, 0);
  if (order >= 1) sum += e2 * u1(d, x, y);
  if (order >= 2) sum += e2 * e2 * u2(d, x, y);
  return sum;
}

namespace {

YDerivatives seed_derivatives(const HolomorphicSeed& seed) {
  return [&seed](double x, double y, int n) { return seed.y_derivative(x, y, n); };
}

}  // namespace

double u1(const HolomorphicSeed& seed, double x, double y) {
  return u1(seed_derivatives(seed), x, y);
}

double u2(const HolomorphicSeed& seed, double x, double y) {
  return u2(seed_derivatives(seed), x, y);
}

double series_eval(const HolomorphicSeed& seed, double x, double y, double epsilon,
                   int order) {
  return series_eval(seed_derivatives(seed), x, y, epsilon, order);
}

HyperbolicDerivatives hyperbolic_derivatives(double z, int n) {
  if (n < 0) throw DomainError("hyperbolic_derivatives: negative order");
  // term_j = j!/(j-n)! z^(j-n) / (2j)!  (C),  / (2j+1)!  (S),  / (2j-1)!  (T)
  double fall = 1.0;  // n!/0!
  for (int j = 2; j <= n; ++j) fall *= j;
  double fact_2n = 1.0;
  for (int j = 2; j <= 2 * n; ++j) fact_2n *= j;

  double tc = fall / fact_2n;
  double ts = tc / (2.0 * n + 1.0);
  double tt = n == 0 ? 0.0 : tc * (2.0 * n);
  double c = 0.0;
  double s = 0.0;
  double t = 0.0;
  const double root = std::sqrt(std::abs(z));
  for (int j = n; j < n + 2000; ++j) {
    c += tc;
    s += ts;
    t += tt;
    const double mult = (j + 1.0) / (j + 1.0 - n) * z;
    const double next_c = tc * mult / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
    const double next_s = ts * mult / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    // T starts at j = 1; its first term for n = 0 is z / 1!.
    const double next_t = j == 0 ? z : tt * mult / ((2.0 * j) * (2.0 * j + 1.0));
    tc = next_c;
    ts = next_s;
    tt = next_t;
    if (j > root + n &&
        std::abs(tc) <= 1e-17 * std::abs(c) && std::abs(ts) <= 1e-17 * std::abs(s) &&
        std::abs(tt) <= 1e-17 * std::abs(t)) {
      break;
    }
  }
  return {c, s, t};
}

SineSeriesState series_coeff_spectral(const SineSeriesState& state, int n, double y) {
  if (n < 0) throw DomainError("series_coeff_spectral: negative order");
  const double tau = y - state.y;
  SineSeriesState out{state.half_length, y, {}};
  if (tau == 0.0) {
    if (n == 0) out.modes = state.modes;
    return out;
  }
  double inv_fact = 1.0;
  for (int j = 2; j <= n; ++j) inv_fact /= j;
  for (const SineMode& m : state.modes) {
    const double lam = state.wavenumber(m.n);
    const double z0 = lam * lam * tau * tau;
    const double delta = lam * lam * lam * lam * tau * tau;
    const HyperbolicDerivatives d = hyperbolic_derivatives(z0, n);
    const double scale = std::pow(-delta, n) * inv_fact;
    out.modes.push_back({m.n, scale * (m.a * d.c + m.b * tau * d.s),
                         scale * (m.a * d.t / tau + m.b * d.c)});
  }
  return out;
}

}  // namespace rodbend
