#include "rodbend/sine_projection.hpp"

#include <cmath>
#include <numbers>

#include "rodbend/errors.hpp"

namespace rodbend {

namespace {

// Simpson sums over samples[0..P] with stride; P/stride must be even.
double simpson_sine(const std::vector<double>& samples, int panels, int stride,
                    int mode, double width) {
  const int steps = panels / stride;
  const double h = width / steps;
  double sum = 0.0;
  for (int i = 1; i < steps; ++i) {
    const double s = std::sin(std::numbers::pi * mode * static_cast<double>(i) / steps);
    sum += (i % 2 == 1 ? 4.0 : 2.0) * samples[static_cast<std::size_t>(i) * stride] * s;
  }
  // The basis vanishes at both ends, so the endpoint samples drop out.
  return sum * h / 3.0;
}

}  // namespace

std::vector<double> sine_coefficients(const std::function<double(double)>& f,
                                      double a, double b, int count,
                                      const SineProjectionOptions& options) {
  if (count <= 0) throw DomainError("sine_coefficients: need at least one mode");
  if (!(b > a)) throw DomainError("sine_coefficients: empty interval");

  const double width = b - a;
  // count/2 oscillations across the interval for the top mode.
  int panels = std::max(32, options.panels_per_oscillation * (count + 1));
  panels += panels % 2;

  std::vector<double> samples(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) samples[i] = f(a + width * i / panels);

  std::vector<double> coeffs(static_cast<std::size_t>(count), 0.0);
  std::vector<int> pending(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) pending[n] = n + 1;

  const double scale = 2.0 / width;
  while (true) {
    std::vector<int> still;
    double worst = 0.0;
    for (int n : pending) {
      const double fine = scale * simpson_sine(samples, panels, 1, n, width);
      const double coarse = scale * simpson_sine(samples, panels, 2, n, width);
      const double est = std::abs(fine - coarse) / 15.0;
      coeffs[n - 1] = fine + (fine - coarse) / 15.0;
      if (est > options.abs_tol) {
        still.push_back(n);
        worst = std::max(worst, est);
      }
    }
    if (still.empty()) break;
    if (2 * panels > options.max_panels) {
      throw AccuracyError("sine_coefficients: panel budget exhausted", worst);
    }
    std::vector<double> refined(static_cast<std::size_t>(2 * panels) + 1);
    for (int i = 0; i <= panels; ++i) refined[2 * i] = samples[i];
    for (int i = 0; i < panels; ++i) {
      refined[2 * i + 1] = f(a + width * (2 * i + 1) / (2.0 * panels));
    }
    samples = std::move(refined);
    panels *= 2;
    pending = std::move(still);
  }
  return coeffs;
}

}  // namespace rodbend
