#pragma once

// Five-point finite-difference Laplace solve on a rectangle with Dirichlet
// data, for cross-checking the series solver.

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <functional>
#include <vector>

namespace oracle {

struct FdGrid {
  double x0, x1, y0, y1;
  int n;  // nodes per side, boundary included
  std::vector<double> u;  // row-major, y outer

  double hx() const { return (x1 - x0) / (n - 1); }
  double hy() const { return (y1 - y0) / (n - 1); }
  double at(int i, int j) const { return u[static_cast<std::size_t>(j) * n + i]; }
};

inline FdGrid fd_dirichlet(double x0, double x1, double y0, double y1, int n,
                           const std::function<double(double, double)>& boundary) {
  FdGrid g{x0, x1, y0, y1, n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  const double hx = g.hx();
  const double hy = g.hy();
  const auto xi = [&](int i) { return x0 + i * hx; };
  const auto yj = [&](int j) { return y0 + j * hy; };
  const int m = n - 2;
  const auto id = [m](int i, int j) { return (j - 1) * m + (i - 1); };
  const double cx = 1.0 / (hx * hx);
  const double cy = 1.0 / (hy * hy);

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(m) * m * 5);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m) * m);
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= m; ++i) {
      const int row = id(i, j);
      trip.emplace_back(row, row, -2.0 * (cx + cy));
      const int ni[4] = {i - 1, i + 1, i, i};
      const int nj[4] = {j, j, j - 1, j + 1};
      const double c[4] = {cx, cx, cy, cy};
      for (int q = 0; q < 4; ++q) {
        if (ni[q] == 0 || ni[q] == n - 1 || nj[q] == 0 || nj[q] == n - 1) {
          rhs[row] -= c[q] * boundary(xi(ni[q]), yj(nj[q]));
        } else {
          trip.emplace_back(row, id(ni[q], nj[q]), c[q]);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> A(m * m, m * m);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  const Eigen::VectorXd sol = lu.solve(rhs);

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool edge = i == 0 || j == 0 || i == n - 1 || j == n - 1;
      g.u[static_cast<std::size_t>(j) * n + i] = edge ? boundary(xi(i), yj(j)) : sol[id(i, j)];
    }
  }
  return g;
}

}  // namespace oracle
