#include "rodbend/matching.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "rodbend/errors.hpp"
#include "rodbend/etalon.hpp"
#include "rodbend/hardy.hpp"

namespace rodbend {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWholeLineHalfWidth = 3.0;

bool bounded(ScenarioName name) {
  return name == ScenarioName::Tolstov || name == ScenarioName::ModelMsk;
}

// Im[1/(e^z - 1) - 1/z], z = y + ix: the part of the periodic seed that is
// smooth at the origin.
double tolstov_regular(double x, double y) {
  const std::complex<double> z(y, x);
  std::complex<double> v;
  if (std::abs(z) < 0.1) {
    const std::complex<double> z2 = z * z;
    v = -0.5 + z * (1.0 / 12.0 + z2 * (-1.0 / 720.0 + z2 * (1.0 / 30240.0 - z2 / 1209600.0)));
  } else {
    v = 1.0 / (std::exp(z) - 1.0) - 1.0 / z;
  }
  return v.imag();
}

// Lower half-annulus lattice, shifted by x0.
template <class F>
void for_each_annulus_point(double r_inner, double r_outer, double x0, F&& f) {
  for (int i = 0; i < kLatticeSize; ++i) {
    const double r = r_inner + (r_outer - r_inner) * i / (kLatticeSize - 1);
    for (int j = 0; j < kLatticeSize; ++j) {
      const double theta = kPi + kPi * j / (kLatticeSize - 1);
      f(x0 + r * std::cos(theta), r * std::sin(theta));
    }
  }
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(ScenarioName name) {
  switch (name) {
    case ScenarioName::PoleRe: return "pole-re";
    case ScenarioName::PoleIm: return "pole-im";
    case ScenarioName::Tolstov: return "tolstov";
    case ScenarioName::RootEtalon: return "root-etalon";
    case ScenarioName::ModelMsk: return "model-msk";
  }
  return "?";
}

ScenarioName parse_scenario_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::erase(lower, '_');
  std::erase(lower, '-');
  if (lower == "polere") return ScenarioName::PoleRe;
  if (lower == "poleim") return ScenarioName::PoleIm;
  if (lower == "tolstov") return ScenarioName::Tolstov;
  if (lower == "rootetalon" || lower == "root") return ScenarioName::RootEtalon;
  if (lower == "modelmsk" || lower == "msk") return ScenarioName::ModelMsk;
  throw DomainError("unknown scenario: " + std::string(name));
}

void Scenario::validate() const {
  if (!(epsilon > 0.0)) throw DomainError("Scenario: epsilon must be positive");
  if (!(abs_tol > 0.0)) throw DomainError("Scenario: abs_tol must be positive");
  if (mode_count < 1) throw DomainError("Scenario: mode count must be positive");
  if (!(half_length > 0.0)) throw DomainError("Scenario: L must be positive");
  if (shift_x != 0.0 && bounded(name)) {
    throw DomainError("Scenario: shift only applies to whole-line scenarios");
  }
}

SineSeriesState tolstov_state(int max_harmonic) {
  if (max_harmonic < 1) throw DomainError("tolstov_state: need at least one harmonic");
  // sin(jx) = (-1)^j phi_{2j}(x) on L = pi.
  SineSeriesState s{kPi, -1.0, {}};
  for (int j = 1; j <= max_harmonic; ++j) {
    const double a = (j % 2 == 0 ? -1.0 : 1.0) * std::exp(-static_cast<double>(j));
    s.modes.push_back({2 * j, a, j * a});
  }
  return s;
}

ScenarioModel::ScenarioModel(const Scenario& scenario) : scenario_(scenario) {
  scenario_.validate();
  switch (scenario_.name) {
    case ScenarioName::PoleRe:
      seed_ = HolomorphicSeed::pole(SeedPart::Re);
      break;
    case ScenarioName::PoleIm:
      seed_ = HolomorphicSeed::pole(SeedPart::Im);
      break;
    case ScenarioName::RootEtalon:
      seed_ = HolomorphicSeed::root();
      break;
    case ScenarioName::Tolstov:
      seed_ = HolomorphicSeed::tolstov();
      state_ = std::make_shared<const SineSeriesState>(
          tolstov_state(std::max(1, scenario_.mode_count / 2)));
      break;
    case ScenarioName::ModelMsk:
      seed_ = HolomorphicSeed::root();
      msk_ = std::make_shared<const ModelMsk>(scenario_.half_length, scenario_.epsilon,
                                              scenario_.mode_count);
      break;
  }
}

double ScenarioModel::x_min() const {
  switch (scenario_.name) {
    case ScenarioName::Tolstov: return -kPi;
    case ScenarioName::ModelMsk: return -scenario_.half_length;
    default: return scenario_.shift_x - kWholeLineHalfWidth;
  }
}

double ScenarioModel::x_max() const {
  switch (scenario_.name) {
    case ScenarioName::Tolstov: return kPi;
    case ScenarioName::ModelMsk: return scenario_.half_length;
    default: return scenario_.shift_x + kWholeLineHalfWidth;
  }
}

double ScenarioModel::exact(double x, double y) const {
  const Scenario& s = scenario_;
  const double xs = x - s.shift_x;
  switch (s.name) {
    case ScenarioName::PoleRe:
      return evaluate_etalon(EtalonKind::PoleRe, xs, y, s.epsilon, s.abs_tol);
    case ScenarioName::PoleIm:
      return evaluate_etalon(EtalonKind::PoleIm, xs, y, s.epsilon, s.abs_tol);
    case ScenarioName::RootEtalon:
      return evaluate_etalon(EtalonKind::Root, xs, y, s.epsilon, s.abs_tol);
    case ScenarioName::Tolstov:
      if (!(y >= -1.0)) throw DomainError("scenario: needs y >= -1");
      return synthesize_at(evolve(*state_, s.epsilon, y + 1.0), x);
    case ScenarioName::ModelMsk:
      return msk_->evaluate(x, y);
  }
  throw DomainError("scenario: unknown name");
}

std::vector<double> ScenarioModel::exact_row(double y, std::span<const double> xs) const {
  if (state_) {
    if (!(y >= -1.0)) throw DomainError("scenario: needs y >= -1");
    return synthesize(evolve(*state_, scenario_.epsilon, y + 1.0), xs);
  }
  if (msk_) return msk_->evaluate(y, xs);
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(exact(x, y));
  return out;
}

double ScenarioModel::outer_derivative(double x, double y, int n) const {
  const double xs = x - scenario_.shift_x;
  const double v = seed_->y_derivative(xs, y, n);
  if (msk_) return v - msk_->harmonic_part().derivative(x, y, 0, n);
  return v;
}

double ScenarioModel::outer(double x, double y, int order) const {
  return series_eval(
      [this](double xx, double yy, int n) { return outer_derivative(xx, yy, n); }, x, y,
      scenario_.epsilon, order);
}

double ScenarioModel::regular_part(double x, double y) const {
  switch (scenario_.name) {
    case ScenarioName::Tolstov: return tolstov_regular(x, y);
    case ScenarioName::ModelMsk: return -msk_->harmonic_part()(x, y);
    default: return 0.0;
  }
}

double ScenarioModel::inner_power() const {
  switch (scenario_.name) {
    case ScenarioName::RootEtalon:
    case ScenarioName::ModelMsk:
      return -1.0 / 3.0;
    default:
      return 2.0 / 3.0;
  }
}

double ScenarioModel::inner(double X, double Y) const {
  switch (scenario_.name) {
    case ScenarioName::PoleRe:
      return inner_pole(X, Y, scenario_.abs_tol).re_part;
    case ScenarioName::PoleIm:
    case ScenarioName::Tolstov:
      return inner_pole(X, Y, scenario_.abs_tol).im_part;
    case ScenarioName::RootEtalon:
    case ScenarioName::ModelMsk:
      return inner_root(X, Y, scenario_.abs_tol);
  }
  throw DomainError("scenario: unknown name");
}

Mismatch outer_mismatch(const ScenarioModel& model, double r_inner, double r_outer,
                        int order) {
  if (!(r_inner > 0.0) || !(r_outer > r_inner)) {
    throw DomainError("outer_mismatch: need 0 < r_inner < r_outer");
  }
  Mismatch m;
  for_each_annulus_point(r_inner, r_outer, model.scenario().shift_x, [&](double x, double y) {
    if (y < -1.0 || x < model.x_min() || x > model.x_max()) return;
    const double exact = model.exact(x, y);
    const double approx = model.outer(x, y, order);
    m.sup = std::max(m.sup, std::abs(exact - approx));
    m.reference = std::max(m.reference, std::abs(exact));
    ++m.samples;
  });
  return m;
}

Mismatch inner_mismatch(const ScenarioModel& model, double R) {
  if (!(R > 0.0) || R > 3.0) throw DomainError("inner_mismatch: needs 0 < R <= 3");
  const Scenario& s = model.scenario();
  const double scale = inner_scale(s.epsilon);
  const double p = model.inner_power();
  const double gain = std::pow(s.epsilon, p);
  Mismatch m;
  for (int j = 0; j < kLatticeSize; ++j) {
    const double Y = -R + 2.0 * R * j / (kLatticeSize - 1);
    const double y = scale * Y;
    if (y < -1.0) continue;
    for (int i = 0; i < kLatticeSize; ++i) {
      const double X = -R + 2.0 * R * i / (kLatticeSize - 1);
      const double x = s.shift_x + scale * X;
      if (x < model.x_min() || x > model.x_max()) continue;
      const double outer = gain * (model.exact(x, y) - model.regular_part(x, y));
      const double inner = model.inner(X, Y);
      m.sup = std::max(m.sup, std::abs(outer - inner));
      m.reference = std::max(m.reference, std::abs(inner));
      ++m.samples;
    }
  }
  return m;
}

Mismatch overlap_mismatch(const ScenarioModel& model, double inner_radius,
                          double outer_radius) {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius)) {
    throw DomainError("overlap_mismatch: need 0 < inner_radius < outer_radius");
  }
  const Scenario& s = model.scenario();
  const double scale = inner_scale(s.epsilon);
  const double gain = std::pow(s.epsilon, -model.inner_power());
  Mismatch m;
  for_each_annulus_point(inner_radius * scale, outer_radius * scale, s.shift_x,
                         [&](double x, double y) {
    if (y < -1.0 || x < model.x_min() || x > model.x_max()) return;
    const double outer = model.outer(x, y, 0) - model.regular_part(x, y);
    const double inner = gain * model.inner((x - s.shift_x) / scale, y / scale);
    m.sup = std::max(m.sup, std::abs(outer - inner));
    m.reference = std::max(m.reference, std::abs(inner));
    ++m.samples;
  });
  return m;
}

std::vector<GrowthRow> growth_region_scan(const ScenarioModel& model,
                                          std::span<const double> y_values,
                                          double threshold, int nx) {
  if (!(threshold > 0.0)) throw DomainError("growth_region_scan: threshold must be positive");
  if (nx < 2) throw DomainError("growth_region_scan: need at least two x samples");
  std::vector<double> xs(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) {
    xs[i] = model.x_min() + (model.x_max() - model.x_min()) * i / (nx - 1);
  }
  std::vector<double> base = model.exact_row(-1.0, xs);
  for (double& v : base) v = std::abs(v);
  const double level = threshold * median(base);

  std::vector<GrowthRow> rows;
  rows.reserve(y_values.size());
  for (double y : y_values) {
    const std::vector<double> row = model.exact_row(y, xs);
    GrowthRow g{y, false, 0.0, 0.0};
    for (int i = 0; i < nx; ++i) {
      if (std::abs(row[i]) <= level) continue;
      if (!g.found) g.x_left = xs[i];
      g.found = true;
      g.x_right = xs[i];
    }
    rows.push_back(g);
  }
  return rows;
}

double dominant_wavenumber(std::span<const double> row, double half_length) {
  if (!(half_length > 0.0)) throw DomainError("dominant_wavenumber: L must be positive");
  const int m = static_cast<int>(row.size()) - 1;
  if (m < 2) throw DomainError("dominant_wavenumber: need at least three samples");
  int best = 0;
  double best_amp = 0.0;
  for (int n = 1; n < m; ++n) {
    double c = 0.0;
    for (int i = 1; i < m; ++i) {
      c += row[i] * std::sin(kPi * static_cast<double>(n) * i / m);
    }
    if (std::abs(c) > best_amp) {
      best_amp = std::abs(c);
      best = n;
    }
  }
  if (best == 0) throw DomainError("dominant_wavenumber: row has no sine content");
  return best * kPi / (2.0 * half_length);
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw DomainError("correlation: need two samples of equal length >= 2");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) throw DomainError("correlation: constant sample");
  return sab / std::sqrt(saa * sbb);
}

}  // namespace rodbend
