// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rodbend/dirichlet.hpp"
#include "rodbend/dispersion.hpp"
#include "rodbend/hardy.hpp"
#include "rodbend/matching.hpp"
#include "rodbend/perturbation.hpp"
#include "rodbend/sine_series.hpp"
#include "support/corrections.hpp"
#include "support/fd_dirichlet.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/series_oracles.hpp"

using namespace rodbend;
using Complex = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    pass = pass && ok;
  }
  void note(const std::string& s) { notes += (notes.empty() ? "" : "; ") + s; }

  std::string detail() const {
    std::string d;
    for (const std::string& f : failures) d += (d.empty() ? "failed: " : ", ") + f;
    if (!d.empty() && !notes.empty()) d += " | ";
    return d + notes;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Complex I(double nu, double X, double Y) { return hardy({nu, X, Y, 3.0}); }

Outcome hardy_origin_exactness() {
  Outcome o;
  double worst = 0.0;
  for (double nu : {-0.5, 0.0, 0.5, 1.5}) {
    const Complex v = I(nu, 0.0, 0.0);
    worst = std::max(worst, std::abs(v - oracle::hardy_origin(nu)));
  }
  o.require(worst <= 1e-10, "quadrature vs Gamma formula");
  o.note("max |I - Gamma form| " + fmt("%.2e", worst));
  return o;
}

Outcome pole_asymptotic() {
  Outcome o;
  const double r = rel(I(0.0, 0.0, -10.0), Complex(0.0997));
  o.require(r <= 1e-3, "I0(0,-10) vs 0.0997");
  double worst = 0.0;
  for (double Y = -50.0; Y <= -10.0; Y += 1.0) {
    const double scaled = std::abs(I(0.0, 0.0, Y) * Complex(-Y, 0.0) - 1.0) *
                          std::pow(std::abs(Y), 3);
    worst = std::max(worst, scaled);
  }
  o.require(worst <= 3.5, "|I0 (-Y+iX) - 1| |Y|^3 <= 3.5");
  o.note("rel " + fmt("%.2e", r) + ", max |Y|^3 err " + fmt("%.3f", worst));
  return o;
}

Outcome hardy_identities() {
  Outcome o;
  oracle::Gen gen(1001);
  double harm = 0.0;
  double rec = 0.0;
  double ibp = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double nu = gen.uniform(-0.5, 2.0);
    const double X = gen.uniform(-3.0, 3.0);
    const double Y = gen.uniform(-3.0, 1.5);
    const double mag = std::abs(I(nu, X, Y));
    const auto re = [&](double x, double y) { return I(nu, x, y).real(); };
    const auto im = [&](double x, double y) { return I(nu, x, y).imag(); };
    harm = std::max({harm, std::abs(oracle::laplacian5(re, X, Y, 2e-3)) / mag,
                     std::abs(oracle::laplacian5(im, X, Y, 2e-3)) / mag});

    const double h = 1e-3;
    const Complex next = I(nu + 1.0, X, Y);
    const Complex dY = (I(nu, X, Y + h) - I(nu, X, Y - h)) / (2 * h);
    const Complex dX = (I(nu, X + h, Y) - I(nu, X - h, Y)) / (2 * h);
    rec = std::max({rec, rel(dY, next), rel(dX, Complex(0.0, -1.0) * next)});

    const double mu = gen.uniform(0.5, 3.0);
    const Complex a = mu * I(mu - 1.0, X, Y);
    const Complex b = Complex(Y, -X) * I(mu, X, Y);
    const Complex c = 1.5 * I(mu + 2.0, X, Y);
    ibp = std::max(ibp, std::abs(a + b - c) / std::max({std::abs(a), std::abs(b), std::abs(c)}));
  }
  o.require(harm <= 1e-4, "harmonicity");
  o.require(rec <= 1e-5, "derivative recurrence");
  o.require(ibp <= 1e-8, "integration by parts");
  o.note("harmonic " + fmt("%.1e", harm) + ", recurrence " + fmt("%.1e", rec) + ", ibp " +
         fmt("%.1e", ibp));
  return o;
}

Outcome inner_root_consistency() {
  Outcome o;
  oracle::Gen gen(1002);
  double forms = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const InnerRootForms f = inner_root_forms(gen.uniform(-6.0, 6.0), gen.uniform(-6.0, 4.0));
    forms = std::max(forms, std::abs(f.combination - f.regularized) /
                                std::max(1.0, std::abs(f.regularized)));
  }
  o.require(forms <= 1e-8, "integral forms agree");

  const double origin = inner_root(0.0, 0.0);
  const double gamma_value = 3.0 * oracle::hardy_origin(1.5) / std::sqrt(2.0 * oracle::kPi);
  o.require(std::abs(origin - 0.8023881) <= 1e-7, "u_in(0,0) = 0.8023881 +/- 1e-7");

  double algebraic = 0.0;
  for (int deg = -180; deg <= 180; deg += 5) {
    const double t = deg * oracle::kPi / 180.0;
    const double X = 20.0 * std::cos(t);
    const double Y = 20.0 * std::sin(t);
    if (sector_contains(X, Y)) continue;
    algebraic = std::max(
        algebraic, std::abs(inner_root(X, Y) / inner_root_algebraic_asymptotic(X, Y) - 1.0));
  }
  o.require(algebraic <= 0.02, "algebraic asymptotic at radius 20");
  const double exponential =
      std::abs(inner_root_exponential_asymptotic(0.0, 15.0) / inner_root(0.0, 15.0) - 1.0);
  o.require(exponential <= 0.10, "exponential asymptotic at (0, 15)");

  o.note("u_in(0,0) " + fmt("%.10f", origin) + " (quoted 0.8023881, Gamma formula " +
         fmt("%.10f", gamma_value) + ", |diff| " + fmt("%.1e", std::abs(origin - gamma_value)) +
         ")");
  o.note("forms " + fmt("%.1e", forms) + ", algebraic " + fmt("%.4f", algebraic) +
         ", exponential " + fmt("%.4f", exponential));
  return o;
}

Outcome spectral_solver() {
  Outcome o;
  oracle::Gen gen(1003);
  double wronskian = 0.0;
  int seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const double eps = gen.uniform(0.01, 1.0);
    const double k = gen.uniform(0.0, 3.0) / eps;
    const double omega2 = omega_squared(k, eps);
    const double rate = omega2 > 0.0 ? std::sqrt(omega2) : 0.0;
    const double dy_max = rate > 0.0 ? std::min(5.0, 2.0 / rate) : 5.0;
    const double dy = gen.uniform(-dy_max, dy_max);
    ++seen[static_cast<int>(classify_mode(k, eps))];
    wronskian = std::max(wronskian, std::abs(mode_propagator(k, eps, dy).determinant() - 1.0));
  }
  wronskian = std::max(wronskian, std::abs(mode_propagator(10.0, 0.1, 3.0).determinant() - 1.0));
  o.require(wronskian <= 1e-12 && seen[0] > 0 && seen[2] > 0, "Wronskian");

  double energy_err = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double eps = gen.uniform(0.05, 0.3);
    const double L = gen.uniform(1.0, 3.0);
    const double dy = gen.uniform(-1.0, 1.0);
    const SineSeriesState s = oracle::random_state(gen, L, 10);
    const double e0 = energy(s, eps);
    const double e1 = energy(evolve(s, eps, dy), eps);
    energy_err = std::max(energy_err, std::abs(e1 - e0) / (1.0 + std::abs(e0)));
  }
  o.require(energy_err <= 1e-8, "energy conservation");

  double tail_excess = -std::numeric_limits<double>::infinity();
  for (int harmonics : {10, 20, 40}) {
    const SineSeriesState e = evolve(tolstov_state(harmonics), 0.0, 0.5);
    const double tail = std::exp(-(harmonics + 1) / 2.0) / (1.0 - std::exp(-0.5));
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = -oracle::kPi + 2 * oracle::kPi * i / 40.0;
      worst = std::max(worst, std::abs(synthesize_at(e, x) - oracle::tolstov_closed(x, -0.5)));
    }
    tail_excess = std::max(tail_excess, worst - tail);
  }
  o.require(tail_excess <= 1e-12, "periodic closed form within the series tail");
  o.note("max |det - 1| " + fmt("%.1e", wronskian) + ", energy " + fmt("%.1e", energy_err));
  return o;
}

Outcome perturbation_recurrence() {
  Outcome o;
  const HolomorphicSeed tolstov = HolomorphicSeed::tolstov();
  const SineSeriesState state = tolstov_state(150);
  oracle::Gen gen(1004);
  double taylor = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const double x = gen.uniform(-3.0, 3.0);
    const double y = gen.uniform(-0.9, -0.3);
    const double c1 = synthesize_at(series_coeff_spectral(state, 1, y), x);
    const double c2 = synthesize_at(series_coeff_spectral(state, 2, y), x);
    const double v1 = u1(tolstov, x, y);
    const double v2 = u2(tolstov, x, y);
    taylor = std::max({taylor, std::abs(c1 - v1) / std::max(1.0, std::abs(v1)),
                       std::abs(c2 - v2) / std::max(1.0, std::abs(v2))});
  }
  o.require(taylor <= 1e-5, "closed forms vs spectral Taylor coefficients");

  double cauchy = 0.0;
  for (const HolomorphicSeed& s :
       {HolomorphicSeed::pole(SeedPart::Re), HolomorphicSeed::pole(SeedPart::Im),
        HolomorphicSeed::root(), HolomorphicSeed::tolstov()}) {
    for (double x : {-2.5, -1.0, 0.0, 0.4, 1.7}) {
      cauchy = std::max({cauchy, std::abs(u1(s, x, -1.0)), std::abs(u2(s, x, -1.0)),
                         std::abs(oracle::u1_dy(s, x, -1.0)), std::abs(oracle::u2_dy(s, x, -1.0))});
    }
  }
  o.require(cauchy <= 1e-12, "zero Cauchy data at y = -1");
  o.note("Taylor " + fmt("%.1e", taylor) + ", Cauchy " + fmt("%.1e", cauchy));
  return o;
}

Outcome matching_trend() {
  Outcome o;
  for (ScenarioName name : {ScenarioName::PoleRe, ScenarioName::Tolstov}) {
    const std::string label(to_string(name));
    std::string trend;
    double previous = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (double eps : {0.2, 0.1, 0.05}) {
      Scenario s;
      s.name = name;
      s.epsilon = eps;
      const double r = inner_mismatch(ScenarioModel(s), 2.0).relative();
      decreasing = decreasing && r < previous;
      previous = r;
      trend += (trend.empty() ? "" : "/") + fmt("%.3f", r);
    }
    o.require(decreasing, label + " inner mismatch decreasing");
    Scenario s;
    s.name = name;
    s.epsilon = 0.1;
    const double overlap = overlap_mismatch(ScenarioModel(s)).relative();
    o.require(overlap <= 0.20, label + " overlap within 20%");
    o.note(label + " inner " + trend + ", overlap " + fmt("%.3f", overlap));
  }
  return o;
}

Outcome growth_region() {
  Outcome o;
  Scenario s;
  s.name = ScenarioName::Tolstov;
  s.epsilon = 0.1;
  std::vector<double> ys;
  for (int i = 0; i <= 50; ++i) ys.push_back(0.01 * i);
  const std::vector<GrowthRow> rows = growth_region_scan(ScenarioModel(s), ys, 20.0);
  const GrowthRow* first = nullptr;
  for (const GrowthRow& r : rows) {
    if (r.found && first == nullptr) first = &r;
  }
  o.require(!rows.front().found, "no region at y = 0");
  o.require(first != nullptr, "region appears");
  if (first == nullptr) return o;
  const double reach = std::max(std::abs(first->x_left), std::abs(first->x_right));
  o.require(reach <= 5.0 * inner_scale(0.1), "first appearance near the origin");
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    monotone = monotone && rows[i].width() >= rows[i - 1].width();
  }
  o.require(monotone, "width non-decreasing");
  o.note("first at y " + fmt("%.2f", first->y) + ", |x| <= " + fmt("%.3f", reach) +
         ", width at 0.5 " + fmt("%.3f", rows.back().width()));
  return o;
}

Outcome fastest_mode() {
  Outcome o;
  SineSeriesState broadband{oracle::kPi, 0.0, {}};
  for (int n = 1; n <= 200; ++n) broadband.modes.push_back({n, 1.0, 0.0});
  std::vector<double> xs;
  for (int i = 0; i <= 1024; ++i) xs.push_back(-oracle::kPi + 2 * oracle::kPi * i / 1024.0);
  for (double eps : {0.1, 0.05}) {
    const std::vector<double> row = synthesize(evolve(broadband, eps, 1.0), xs);
    const double k = dominant_wavenumber(row, oracle::kPi);
    const double target = 1.0 / (std::sqrt(2.0) * eps);
    o.require(std::abs(k - target) <= 0.2 * target, "dominant wavenumber at eps " + fmt("%g", eps));
    o.note("eps " + fmt("%g", eps) + ": " + fmt("%g", k) + " vs " + fmt("%.3f", target));
  }
  return o;
}

Outcome dirichlet_solver() {
  Outcome o;
  const auto h = [](double x, double y) { return x * x - y * y; };
  const RectangleSolution poly =
      solve_rectangle(oracle::problem_from_field(1.5, -2.0, 0.5, h, 200));
  double worst = 0.0;
  for (int i = 1; i < 20; ++i) {
    for (int j = 1; j < 20; ++j) {
      const double x = -1.5 + 3.0 * i / 20;
      const double y = -2.0 + 2.5 * j / 20;
      worst = std::max(worst, std::abs(poly(x, y) - h(x, y)));
    }
  }
  o.require(worst <= 1e-6, "harmonic polynomial");

  const RectangleSolution H = build_H(3.0);
  const DirichletProblem& p = H.problem();
  const auto boundary = [&](double x, double y) {
    if (y <= -3.0 + 1e-12) return p.bottom(x);
    if (y >= 1.0 - 1e-12) return p.top(x);
    return x < 0.0 ? p.left(y) : p.right(y);
  };
  const oracle::FdGrid fd = oracle::fd_dirichlet(-3.0, 3.0, -3.0, 1.0, 201, boundary);
  const double fd_diff = std::abs(fd.at(100, 100) - H(0.0, -1.0));
  o.require(fd_diff <= 1e-4, "H(0,-1;3) vs finite differences");

  oracle::Gen gen(1005);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const DirichletProblem q = oracle::random_problem(gen, 120);
    const RectangleSolution s = solve_rectangle(q);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i <= 400; ++i) {
      const double t = i / 400.0;
      const double x = -q.half_length + 2 * q.half_length * t;
      const double y = q.y_bottom + (q.y_top - q.y_bottom) * t;
      for (double v : {q.bottom(x), q.top(x), q.left(y), q.right(y)}) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    for (int k = 0; k < 25; ++k) {
      const double v = s(gen.uniform(-q.half_length, q.half_length),
                         gen.uniform(q.y_bottom, q.y_top));
      if (v < lo - 1e-8 || v > hi + 1e-8) ++violations;
    }
  }
  o.require(violations == 0, "maximum principle");
  o.note("polynomial " + fmt("%.1e", worst) + ", FD diff " + fmt("%.1e", fd_diff) +
         ", violations " + std::to_string(violations));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no runtime bound
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Hardy origin exactness", 1.0, hardy_origin_exactness},
      {2, "pole asymptotic", 5.0, pole_asymptotic},
      {3, "Hardy identities", 10.0, hardy_identities},
      {4, "inner-root consistency", 0.0, inner_root_consistency},
      {5, "spectral solver", 0.0, spectral_solver},
      {6, "perturbation recurrence", 0.0, perturbation_recurrence},
      {7, "matching trend", 120.0, matching_trend},
      {8, "growth region", 60.0, growth_region},
      {9, "fastest mode", 0.0, fastest_mode},
      {10, "Dirichlet solver", 0.0, dirichlet_solver},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && seconds >= c.budget_s) {
      o.require(false, "over the " + fmt("%g", c.budget_s) + " s budget");
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s  %-24s %7.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                seconds, o.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
