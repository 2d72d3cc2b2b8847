#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rodbend/dispersion.hpp"
#include "rodbend/errors.hpp"
#include "rodbend/matching.hpp"
#include "rodbend/sine_series.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/series_oracles.hpp"

using namespace rodbend;
using oracle::random_state;
using oracle::tolstov_closed;
using oracle::tolstov_closed_dy;

constexpr double kPi = std::numbers::pi;

TEST_CASE("analyze: single basis function") {
  const double L = 2.0;
  const SineSeriesState s = analyze([&](double x) { return std::sin(kPi * (x + L) / (2 * L)); },
                                    [](double) { return 0.0; }, L, 12, 0.0);
  REQUIRE(!s.modes.empty());
  for (const SineMode& m : s.modes) {
    if (m.n == 1) {
      CHECK(m.a == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(std::abs(m.a) <= 1e-10);
    }
    CHECK(std::abs(m.b) <= 1e-10);
  }
}

TEST_CASE("analyze: zero data gives the empty state") {
  const SineSeriesState s = analyze([](double) { return 0.0; }, [](double) { return 0.0; }, 1.0,
                                    50, 0.0);
  CHECK(s.modes.empty());
}

TEST_CASE("analyze: periodic data on L = pi picks the even modes") {
  const SineSeriesState s = analyze([](double x) { return tolstov_closed(x, -1.0); },
                                    [](double x) { return tolstov_closed_dy(x, -1.0); }, kPi,
                                    60, -1.0);
  for (const SineMode& m : s.modes) {
    if (m.n % 2 == 1) {
      CHECK(std::abs(m.a) < 1e-8);
      continue;
    }
    const int j = m.n / 2;
    // sin(jx) = (-1)^j sin(2j pi (x + pi) / (2 pi)).
    const double expected = -(j % 2 == 0 ? 1.0 : -1.0) * std::exp(-static_cast<double>(j));
    CHECK(std::abs(m.a - expected) < 1e-8);
    CHECK(std::abs(m.b - j * expected) < 1e-8);
  }
  const SineSeriesState t = tolstov_state(30);
  CHECK(t.modes.size() == 30);
  CHECK(t.modes[0].n == 2);
  CHECK(t.modes[0].a == doctest::Approx(std::exp(-1.0)));
  CHECK(t.modes[1].a == doctest::Approx(-std::exp(-2.0)));
}

TEST_CASE("evolve: Laplace-limit single mode") {
  // L = pi/2 makes the first wavenumber 1.
  const SineSeriesState s{kPi / 2, 0.0, {{1, 1.0, 0.0}}};
  CHECK(s.wavenumber(1) == doctest::Approx(1.0));
  const SineSeriesState e = evolve(s, 0.0, 1.0);
  CHECK(e.modes[0].a == doctest::Approx(1.5430806).epsilon(1e-7));
  CHECK(e.y == doctest::Approx(1.0));
}

TEST_CASE("evolve: reversibility (property)") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const double L = gen.uniform(1.0, 4.0);
    const double eps = gen.uniform(0.05, 0.5);
    const double dy = gen.uniform(-1.0, 1.0);
    const SineSeriesState s = random_state(gen, L, 12);
    const SineSeriesState back = evolve(evolve(s, eps, dy), eps, -dy);
    REQUIRE(back.modes.size() == s.modes.size());
    for (std::size_t i = 0; i < s.modes.size(); ++i) {
      CHECK(std::abs(back.modes[i].a - s.modes[i].a) < 1e-10);
      CHECK(std::abs(back.modes[i].b - s.modes[i].b) < 1e-10);
    }
    CHECK(back.y == doctest::Approx(s.y));
  }
}

TEST_CASE("evolve: linearity (property)") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    const double L = gen.uniform(1.0, 4.0);
    const double eps = gen.uniform(0.05, 0.5);
    const double dy = gen.uniform(0.0, 1.0);
    const SineSeriesState s1 = random_state(gen, L, 10);
    const SineSeriesState s2 = random_state(gen, L, 10);
    const double c = gen.uniform(-2, 2);
    const SineSeriesState lhs = evolve(s1 + c * s2, eps, dy);
    const SineSeriesState rhs = evolve(s1, eps, dy) + c * evolve(s2, eps, dy);
    for (std::size_t i = 0; i < lhs.modes.size(); ++i) {
      const double scale = 1.0 + std::abs(rhs.modes[i].a) + std::abs(rhs.modes[i].b);
      CHECK(std::abs(lhs.modes[i].a - rhs.modes[i].a) < 1e-12 * scale);
      CHECK(std::abs(lhs.modes[i].b - rhs.modes[i].b) < 1e-12 * scale);
    }
  }
}

TEST_CASE("evolve: each mode agrees with small-step integration") {
  oracle::Gen gen(23);
  const SineSeriesState s = random_state(gen, 1.0, 10);
  const double eps = 0.1;
  const SineSeriesState e = evolve(s, eps, 0.7);
  for (std::size_t i = 0; i < s.modes.size(); ++i) {
    const double k = s.wavenumber(s.modes[i].n);
    const auto [a, b] =
        oracle::rk4_mode(s.modes[i].a, s.modes[i].b, omega_squared(k, eps), 0.7, 20000);
    CHECK(e.modes[i].a == doctest::Approx(a).epsilon(1e-9));
    CHECK(e.modes[i].b == doctest::Approx(b).epsilon(1e-9));
  }
}

TEST_CASE("synthesize examples and hinged ends") {
  const SineSeriesState zero{2.0, 0.0, {}};
  const std::vector<double> xs{-2.0, -0.3, 0.0, 1.9, 2.0};
  for (double v : synthesize(zero, xs)) CHECK(v == 0.0);
  const SineSeriesState one{2.0, 0.0, {{1, 1.0, 0.0}}};
  CHECK(synthesize_at(one, 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  oracle::Gen gen(24);
  for (int trial = 0; trial < 20; ++trial) {
    const double L = gen.uniform(0.5, 5.0);
    const SineSeriesState s = random_state(gen, L, gen.integer(1, 400));
    for (double x : {-L, L}) {
      CHECK(std::abs(synthesize_at(s, x)) <= 1e-12);
      CHECK(std::abs(synthesize_at(s, x, Component::Curvature)) <= 1e-12);
      CHECK(std::abs(synthesize_at(s, x, Component::Velocity)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(synthesize_at(one, 2.5), DomainError);
}

TEST_CASE("curvature is the second x-derivative") {
  oracle::Gen gen(25);
  const SineSeriesState s = random_state(gen, 2.0, 8);
  const double h = 1e-3;
  for (double x : {-1.3, 0.2, 1.1}) {
    const double fd =
        (synthesize_at(s, x + h) - 2 * synthesize_at(s, x) + synthesize_at(s, x - h)) / (h * h);
    CHECK(synthesize_at(s, x, Component::Curvature) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("energy examples") {
  CHECK(energy(SineSeriesState{1.0, 0.0, {}}, 0.1) == 0.0);
  const SineSeriesState threshold{kPi / 2, 0.0, {{1, 1.0, 0.0}}};
  CHECK(std::abs(energy(threshold, 1.0)) < 1e-15);
}

TEST_CASE("energy is conserved (property)") {
  oracle::Gen gen(26);
  for (int trial = 0; trial < 50; ++trial) {
    const double eps = gen.uniform(0.05, 0.3);
    const double L = gen.uniform(1.0, 3.0);
    const double dy = gen.uniform(-1.0, 1.0);
    const SineSeriesState s = random_state(gen, L, 10);
    const double e0 = energy(s, eps);
    const double e1 = energy(evolve(s, eps, dy), eps);
    CHECK(std::abs(e1 - e0) <= 1e-8 * (1.0 + std::abs(e0)));
  }
}

TEST_CASE("Laplace limit of the periodic data matches the closed form") {
  for (int harmonics : {10, 20, 40}) {
    const SineSeriesState s = tolstov_state(harmonics);
    const SineSeriesState e = evolve(s, 0.0, 0.5);
    // Tail of sum_j e^(-j/2) beyond the last harmonic.
    const double tail = std::exp(-(harmonics + 1) / 2.0) / (1.0 - std::exp(-0.5));
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = -kPi + 2 * kPi * i / 40.0;
      worst = std::max(worst, std::abs(synthesize_at(e, x) - tolstov_closed(x, -0.5)));
    }
    CHECK(worst <= tail + 1e-12);
  }
}

TEST_CASE("state arithmetic guards") {
  const SineSeriesState a{1.0, 0.0, {{1, 1.0, 0.0}}};
  const SineSeriesState b{2.0, 0.0, {{1, 1.0, 0.0}}};
  CHECK_THROWS_AS(a + b, DomainError);
  SineSeriesState bad{1.0, 0.0, {{2, 1.0, 0.0}, {1, 1.0, 0.0}}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(analyze([](double) { return 0.0; }, [](double) { return 0.0; }, 1.0, 0, 0.0),
                  DomainError);
}
