#pragma once

// Quantitative checks of the inner/outer description of rod solutions near a
// singular point: outer series accuracy on annuli, inner Hardy profiles on a
// stretched lattice, the overlap between the two, and the growth region.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rodbend/dirichlet.hpp"
#include "rodbend/perturbation.hpp"
#include "rodbend/sine_series.hpp"

namespace rodbend {

enum class ScenarioName { PoleRe, PoleIm, Tolstov, RootEtalon, ModelMsk };

std::string_view to_string(ScenarioName name);
ScenarioName parse_scenario_name(std::string_view name);

/// Points per axis of every comparison lattice.
inline constexpr int kLatticeSize = 17;

struct Scenario {
  ScenarioName name = ScenarioName::PoleRe;
  double epsilon = 0.1;
  /// Quadrature tolerance for the whole-line etalons and Hardy integrals.
  double abs_tol = 1e-10;
  /// Horizontal shift of the singular point (whole-line scenarios only).
  double shift_x = 0.0;
  /// Modes kept by the bounded scenarios.
  int mode_count = kDefaultModeCount;
  /// Half-length of the model-solution rod.
  double half_length = 3.0;

  void validate() const;
};

/// Exact solution, outer seed and inner profile of one scenario. Building it
/// does the expensive set-up once (Dirichlet solve, sine projection).
class ScenarioModel {
 public:
  explicit ScenarioModel(const Scenario& scenario);

  const Scenario& scenario() const { return scenario_; }

  /// Admissible x range of the exact solution.
  double x_min() const;
  double x_max() const;

  double exact(double x, double y) const;
  std::vector<double> exact_row(double y, std::span<const double> xs) const;

  /// d^n U0/dy^n of the eps = 0 solution.
  double outer_derivative(double x, double y, int n) const;
  double outer(double x, double y, int order) const;

  /// Part of U0 that stays smooth at the singular point.
  double regular_part(double x, double y) const;
  /// Exponent p with eps^p (u - regular) -> inner(X, Y).
  double inner_power() const;
  double inner(double X, double Y) const;

 private:
  Scenario scenario_;
  std::optional<HolomorphicSeed> seed_;
  std::shared_ptr<const SineSeriesState> state_;  // bounded scenarios
  std::shared_ptr<const ModelMsk> msk_;
};

struct Mismatch {
  double sup = 0.0;        ///< sup |difference| over the lattice
  double reference = 0.0;  ///< sup |reference profile| over the same lattice
  int samples = 0;

  double relative() const { return reference > 0.0 ? sup / reference : sup; }
};

/// sup over the lower half-annulus r in [r_inner, r_outer] (17 radii x 17
/// angles, clipped to y >= -1 and the scenario's x range) of
/// |exact - outer series of the given order|.
Mismatch outer_mismatch(const ScenarioModel& model, double r_inner, double r_outer,
                        int order);

/// sup over the 17 x 17 lattice |X|, |Y| <= R of
/// |eps^p (exact - regular) - inner(X, Y)|; reference is sup |inner|.
Mismatch inner_mismatch(const ScenarioModel& model, double R);

/// Order-0 outer solution against the rescaled inner profile on the lower
/// half-annulus r in [2, 4] eps^(2/3); reference is sup of the rescaled
/// inner profile there.
Mismatch overlap_mismatch(const ScenarioModel& model, double inner_radius = 2.0,
                          double outer_radius = 4.0);

struct GrowthRow {
  double y;
  bool found;
  double x_left;
  double x_right;

  double width() const { return found ? x_right - x_left : 0.0; }
};

/// For each y, the hull of the x where |u| exceeds threshold times the
/// median of |u(x, -1)| over the same x lattice (nx points across the
/// scenario's x range).
std::vector<GrowthRow> growth_region_scan(const ScenarioModel& model,
                                          std::span<const double> y_values,
                                          double threshold, int nx = 401);

/// Wavenumber of the largest discrete sine coefficient of a row sampled
/// uniformly on [-L, L] (end points included).
double dominant_wavenumber(std::span<const double> row, double half_length);

/// Pearson correlation of two equally long samples.
double correlation(std::span<const double> a, std::span<const double> b);

/// Sine state on [-pi, pi] of the 2pi-periodic -sum_j e^(jy) sin(jx) at y = -1.
SineSeriesState tolstov_state(int max_harmonic = 200);

}  // namespace rodbend
