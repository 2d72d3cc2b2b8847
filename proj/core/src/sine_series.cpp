#include "rodbend/sine_series.hpp"

#include <cmath>
#include <numbers>

#include "rodbend/dispersion.hpp"
#include "rodbend/errors.hpp"

namespace rodbend {

double SineSeriesState::wavenumber(int n) const {
  return n * std::numbers::pi / (2.0 * half_length);
}

void SineSeriesState::validate() const {
  if (!(half_length > 0.0)) throw DomainError("SineSeriesState: L must be positive");
  int last = 0;
  for (const SineMode& m : modes) {
    if (m.n <= last) throw DomainError("SineSeriesState: mode indices must increase");
    if (!std::isfinite(m.a) || !std::isfinite(m.b)) {
      throw DomainError("SineSeriesState: non-finite coefficient");
    }
    last = m.n;
  }
}

SineSeriesState operator+(const SineSeriesState& lhs, const SineSeriesState& rhs) {
  if (lhs.half_length != rhs.half_length || lhs.y != rhs.y) {
    throw DomainError("SineSeriesState: sum needs matching L and y");
  }
  SineSeriesState out{lhs.half_length, lhs.y, {}};
  auto l = lhs.modes.begin();
  auto r = rhs.modes.begin();
  while (l != lhs.modes.end() || r != rhs.modes.end()) {
    if (r == rhs.modes.end() || (l != lhs.modes.end() && l->n < r->n)) {
      out.modes.push_back(*l++);
    } else if (l == lhs.modes.end() || r->n < l->n) {
      out.modes.push_back(*r++);
    } else {
      out.modes.push_back({l->n, l->a + r->a, l->b + r->b});
      ++l;
      ++r;
    }
  }
  return out;
}

SineSeriesState operator*(double scale, const SineSeriesState& s) {
  SineSeriesState out = s;
  for (SineMode& m : out.modes) {
    m.a *= scale;
    m.b *= scale;
  }
  return out;
}

namespace {

// sin(pi r) with exact zeros at integer r.
double sin_pi(double r) {
  r = std::fmod(r, 2.0);
  if (r < 0.0) r += 2.0;
  const double sign = r >= 1.0 ? -1.0 : 1.0;
  if (r >= 1.0) r -= 1.0;
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(std::numbers::pi * r);
}

}  // namespace

double sine_basis(int n, double half_length, double x) {
  // Scale first so that x = L lands exactly on r = n.
  return sin_pi(n * ((x + half_length) / (2.0 * half_length)));
}

SineSeriesState analyze(const std::function<double(double)>& f,
                        const std::function<double(double)>& g,
                        double half_length, int mode_count, double y,
                        const SineProjectionOptions& options) {
  if (mode_count <= 0) throw DomainError("analyze: mode count must be positive");
  if (!(half_length > 0.0)) throw DomainError("analyze: L must be positive");

  const auto a = sine_coefficients(f, -half_length, half_length, mode_count, options);
  const auto b = sine_coefficients(g, -half_length, half_length, mode_count, options);

  SineSeriesState state{half_length, y, {}};
  for (int n = 1; n <= mode_count; ++n) {
    if (std::abs(a[n - 1]) < kPruneThreshold && std::abs(b[n - 1]) < kPruneThreshold) {
      continue;
    }
    state.modes.push_back({n, a[n - 1], b[n - 1]});
  }
  return state;
}

SineSeriesState evolve(const SineSeriesState& state, double epsilon, double dy) {
  SineSeriesState out{state.half_length, state.y + dy, {}};
  out.modes.reserve(state.modes.size());
  for (const SineMode& m : state.modes) {
    const ModeState next =
        propagate_mode({m.a, m.b, state.wavenumber(m.n)}, epsilon, dy);
    out.modes.push_back({m.n, next.a, next.b});
  }
  return out;
}

double synthesize_at(const SineSeriesState& state, double x, Component component) {
  const double L = state.half_length;
  if (x < -L * (1.0 + 1e-12) || x > L * (1.0 + 1e-12)) {
    throw DomainError("synthesize: x outside [-L, L]");
  }
  double sum = 0.0;
  for (const SineMode& m : state.modes) {
    const double phi = sine_basis(m.n, L, x);
    switch (component) {
      case Component::Displacement:
        sum += m.a * phi;
        break;
      case Component::Velocity:
        sum += m.b * phi;
        break;
      case Component::Curvature: {
        const double lam = state.wavenumber(m.n);
        sum -= lam * lam * m.a * phi;
        break;
      }
    }
  }
  return sum;
}

std::vector<double> synthesize(const SineSeriesState& state,
                               std::span<const double> xs, Component component) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(synthesize_at(state, x, component));
  return out;
}

double energy(const SineSeriesState& state, double epsilon) {
  double e = 0.0;
  for (const SineMode& m : state.modes) {
    const double w2 = omega_squared(state.wavenumber(m.n), epsilon);
    e += m.b * m.b - w2 * m.a * m.a;
  }
  return e;
}

}  // namespace rodbend
