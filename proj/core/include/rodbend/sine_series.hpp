#pragma once

// Exact solver for the hinged rod u = u_xx = 0 at x = +-L, expanded in
// phi_n(x) = sin(lambda_n (x + L)), lambda_n = n pi / (2L).

#include <functional>
#include <span>
#include <vector>

#include "rodbend/sine_projection.hpp"

namespace rodbend {

inline constexpr int kDefaultModeCount = 400;
inline constexpr double kPruneThreshold = 1e-16;

struct SineMode {
  int n;
  double a;  ///< displacement coefficient
  double b;  ///< y-derivative coefficient
};

struct SineSeriesState {
  double half_length = 1.0;
  double y = 0.0;
  /// Strictly increasing in n.
  std::vector<SineMode> modes;

  double wavenumber(int n) const;
  void validate() const;
};

/// Coefficient-wise sum; both states must share L and y.
SineSeriesState operator+(const SineSeriesState& lhs, const SineSeriesState& rhs);
SineSeriesState operator*(double scale, const SineSeriesState& s);

double sine_basis(int n, double half_length, double x);

/// Projects displacement f and velocity g onto modes 1..mode_count. Modes
/// whose coefficients are both below kPruneThreshold are dropped.
SineSeriesState analyze(const std::function<double(double)>& f,
                        const std::function<double(double)>& g,
                        double half_length, int mode_count, double y,
                        const SineProjectionOptions& options = {});

/// Advances every mode by the exact propagator; y increases by dy.
SineSeriesState evolve(const SineSeriesState& state, double epsilon, double dy);

enum class Component { Displacement, Velocity, Curvature };

/// Sum over modes at x; x must lie in [-L, L].
double synthesize_at(const SineSeriesState& state, double x,
                     Component component = Component::Displacement);

std::vector<double> synthesize(const SineSeriesState& state,
                               std::span<const double> xs,
                               Component component = Component::Displacement);

/// Conserved quadratic form sum_n b_n^2 + (eps^2 l^4 - l^2) a_n^2.
double energy(const SineSeriesState& state, double epsilon);

}  // namespace rodbend
