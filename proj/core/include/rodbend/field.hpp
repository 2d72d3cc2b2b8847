#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rodbend {

/// Rectangular lattice; nx, ny >= 1 (a single point per axis is allowed).
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int nx = 1;
  double y_min = 0.0;
  double y_max = 0.0;
  int ny = 1;

  std::vector<double> xs() const;
  std::vector<double> ys() const;
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  void validate() const;
};

/// Values on a Grid, stored row by row (y outer, x inner).
struct SampledField {
  std::string scenario;
  double epsilon = 0.0;
  Grid grid;
  std::vector<double> values;
  std::map<std::string, std::string> metadata;

  double at(int ix, int iy) const {
    return values[static_cast<std::size_t>(iy) * grid.nx + ix];
  }
};

/// Evaluates f at every lattice point.
SampledField sample_field(const Grid& grid,
                          const std::function<double(double, double)>& f);

}  // namespace rodbend
