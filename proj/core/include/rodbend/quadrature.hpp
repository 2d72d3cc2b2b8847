#pragma once

// Globally adaptive Gauss-Kronrod (10/21) integration over a list of
// breakpoints. Works for real- and complex-valued integrands. The error
// estimate follows the QUADPACK qk21 heuristic.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "rodbend/errors.hpp"

namespace rodbend::quad {

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  /// Integral of |f|; the scale that relative tolerances refer to.
  double abs_integral = 0.0;
  int intervals = 0;
};

struct Options {
  double abs_tol = 1e-10;
  /// Relative to the integral of |f|, so cancelling oscillatory integrands
  /// still terminate at roundoff level. Must stay above the 50 eps floor
  /// of the per-segment error estimate.
  double rel_tol = 1e-13;
  int max_intervals = 200000;
};

namespace detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208703099403, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  double abs_value;
};

template <class T, class F>
Segment<T> gauss_kronrod21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<T, 10> lower{};
  std::array<T, 10> upper{};
  const T fc = f(center);
  T kronrod = fc * kKronrodWeights[10];
  T gauss{};
  double abs_k = magnitude(fc) * kKronrodWeights[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    lower[j] = f(center - dx);
    upper[j] = f(center + dx);
    kronrod += kKronrodWeights[j] * (lower[j] + upper[j]);
    abs_k += kKronrodWeights[j] * (magnitude(lower[j]) + magnitude(upper[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (lower[j] + upper[j]);
  }

  const T mean = kronrod * 0.5;
  double asc = kKronrodWeights[10] * magnitude(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    asc += kKronrodWeights[j] *
           (magnitude(lower[j] - mean) + magnitude(upper[j] - mean));
  }

  const double scale = std::abs(half);
  asc *= scale;
  abs_k *= scale;
  double err = magnitude((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_k > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * abs_k, err);
  }
  return {a, b, kronrod * half, err, abs_k};
}

}  // namespace detail

/// Integrates f over [breakpoints.front(), breakpoints.back()], starting
/// from the given panels. Throws AccuracyError when the interval budget
/// runs out before the tolerance is met.
template <class F>
auto integrate(F&& f, std::span<const double> breakpoints,
               const Options& options = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  using Seg = detail::Segment<T>;

  Result<T> result;
  if (breakpoints.size() < 2) return result;

  std::vector<Seg> heap;
  heap.reserve(breakpoints.size() * 4);
  const auto by_error = [](const Seg& l, const Seg& r) {
    return l.error < r.error;
  };

  T total{};
  double total_err = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    heap.push_back(detail::gauss_kronrod21<T>(f, breakpoints[i], breakpoints[i + 1]));
    total += heap.back().value;
    total_err += heap.back().error;
    total_abs += heap.back().abs_value;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  const auto target = [&] {
    return std::max(options.abs_tol, options.rel_tol * total_abs);
  };

  // Segments too narrow to bisect are parked here and still counted.
  std::vector<Seg> frozen;
  while (total_err > target() && !heap.empty()) {
    if (static_cast<int>(heap.size() + frozen.size()) >= options.max_intervals) {
      throw AccuracyError("adaptive quadrature: interval budget exhausted",
                          total_err);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    Seg worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen.push_back(worst);
      continue;
    }
    Seg left = detail::gauss_kronrod21<T>(f, worst.a, mid);
    Seg right = detail::gauss_kronrod21<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  // Re-sum to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  double abs_sum = 0.0;
  for (const auto* list : {&heap, &frozen}) {
    for (const Seg& s : *list) {
      sum += s.value;
      err += s.error;
      abs_sum += s.abs_value;
    }
  }
  result.value = sum;
  result.error = err;
  result.abs_integral = abs_sum;
  result.intervals = static_cast<int>(heap.size() + frozen.size());
  if (err > std::max(options.abs_tol, options.rel_tol * abs_sum)) {
    throw AccuracyError("adaptive quadrature: tolerance not reached", err);
  }
  return result;
}

template <class F>
auto integrate(F&& f, double a, double b, const Options& options = {}) {
  const std::array<double, 2> ends{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(ends), options);
}

/// Uniform panel edges over [a, b] whose width never exceeds max_width.
inline std::vector<double> uniform_breakpoints(double a, double b, double max_width) {
  const int panels =
      std::max(1, static_cast<int>(std::ceil((b - a) / std::max(max_width, 1e-300))));
  std::vector<double> pts(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) pts[i] = a + (b - a) * i / panels;
  pts.back() = b;
  return pts;
}

}  // namespace rodbend::quad
