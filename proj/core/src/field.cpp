#include "rodbend/field.hpp"

#include "rodbend/errors.hpp"

namespace rodbend {

namespace {

std::vector<double> axis(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

}  // namespace

std::vector<double> Grid::xs() const { return axis(x_min, x_max, nx); }
std::vector<double> Grid::ys() const { return axis(y_min, y_max, ny); }

void Grid::validate() const {
  if (nx < 1 || ny < 1) throw DomainError("Grid: need at least one point per axis");
  if (x_max < x_min || y_max < y_min) throw DomainError("Grid: inverted bounds");
}

SampledField sample_field(const Grid& grid,
                          const std::function<double(double, double)>& f) {
  grid.validate();
  SampledField field;
  field.grid = grid;
  field.values.reserve(grid.size());
  const auto xs = grid.xs();
  for (double y : grid.ys()) {
    for (double x : xs) field.values.push_back(f(x, y));
  }
  return field;
}

}  // namespace rodbend
