#pragma once

#include <functional>
#include <vector>

namespace rodbend {

struct SineProjectionOptions {
  /// Absolute tolerance on every coefficient.
  double abs_tol = 1e-12;
  /// Initial Simpson panels per half-period of the highest mode.
  int panels_per_oscillation = 8;
  int max_panels = 1 << 21;
};

/// Coefficients c_n = (2/W) * integral_a^b f(x) sin(n pi (x-a)/W) dx for
/// n = 1..count, W = b - a, by composite Simpson. The panel count doubles
/// (reusing earlier samples) until every coefficient's Richardson estimate
/// is below abs_tol.
std::vector<double> sine_coefficients(const std::function<double(double)>& f,
                                      double a, double b, int count,
                                      const SineProjectionOptions& options = {});

}  // namespace rodbend
