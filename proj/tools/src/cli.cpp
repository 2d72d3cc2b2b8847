#include "rodbend/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rodbend/dirichlet.hpp"
#include "rodbend/dispersion.hpp"
#include "rodbend/errors.hpp"
#include "rodbend/etalon.hpp"
#include "rodbend/field.hpp"
#include "rodbend/hardy.hpp"
#include "rodbend/matching.hpp"
#include "rodbend/perturbation.hpp"
#include "rodbend/sine_series.hpp"

#ifndef RODBEND_VERSION_STRING
#define RODBEND_VERSION_STRING "0.0.0"
#endif

namespace rodbend::cli {

namespace {

using json = nlohmann::ordered_json;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::string header;
  std::vector<std::vector<double>> rows;
};

struct GridFlags {
  double x_min = -1.0;
  double x_max = 1.0;
  int nx = 41;
  double y_min = -1.0;
  double y_max = 0.0;
  int ny = 11;
  double y_row = 0.0;
  CLI::Option* x_min_opt = nullptr;
  CLI::Option* x_max_opt = nullptr;
  CLI::Option* y_row_opt = nullptr;

  Grid grid() const {
    Grid g{x_min, x_max, nx, y_min, y_max, ny};
    if (y_row_opt != nullptr && y_row_opt->count() > 0) {
      g.y_min = g.y_max = y_row;
      g.ny = 1;
    } else if (ny < 2 || !(y_max > y_min)) {
      throw DomainError("grid: need ny >= 2 and y-max > y-min (or a single --y)");
    }
    if (nx < 2 || !(x_max > x_min)) throw DomainError("grid: need nx >= 2 and x-max > x-min");
    g.validate();
    return g;
  }
};

/// One subcommand: its parsed flags live in the closure of `compute`.
struct Command {
  CLI::App* app = nullptr;
  std::function<Table()> compute;
  std::function<std::string()> label;
  json derived = json::object();
  /// Effective values that differ from the parsed flags (for replay).
  json resolved = json::object();
};

void add_grid(CLI::App* sub, GridFlags& g) {
  g.x_min_opt = sub->add_option("--x-min", g.x_min, "Left end of the x lattice");
  g.x_max_opt = sub->add_option("--x-max", g.x_max, "Right end of the x lattice");
  sub->add_option("--nx", g.nx, "Points along x");
  sub->add_option("--y-min", g.y_min, "Lowest y row");
  sub->add_option("--y-max", g.y_max, "Highest y row");
  sub->add_option("--ny", g.ny, "Rows along y");
  g.y_row_opt = sub->add_option("--y", g.y_row, "Single row at this y (overrides the y range)");
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

Table grid_table(const Grid& grid, const std::function<double(double, double)>& f) {
  Table t{"x,y,value", {}};
  const std::vector<double> xs = grid.xs();
  for (double y : grid.ys()) {
    for (double x : xs) t.rows.push_back({x, y, f(x, y)});
  }
  return t;
}

Table row_table(const Grid& grid,
                const std::function<std::vector<double>(double, std::span<const double>)>& row) {
  Table t{"x,y,value", {}};
  const std::vector<double> xs = grid.xs();
  for (double y : grid.ys()) {
    const std::vector<double> vals = row(y, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], y, vals[i]});
  }
  return t;
}

std::string render(const Table& table) {
  std::string s = table.header + "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) s += ',';
      s += format_number(row[i]);
    }
    s += '\n';
  }
  return s;
}

// Numbers stay numbers in the sidecar so a config can be replayed as flags.
json scalar_value(const std::string& text) {
  if (text.empty()) return text;
  char* end = nullptr;
  const long long n = std::strtoll(text.c_str(), &end, 10);
  if (end != nullptr && *end == '\0') return n;
  const double v = std::strtod(text.c_str(), &end);
  if (end != nullptr && *end == '\0') return v;
  return text;
}

json option_value(const CLI::Option* opt) {
  std::vector<std::string> items;
  if (opt->count() > 0) {
    items = opt->results();
  } else {
    std::string d = opt->get_default_str();
    if (d.size() >= 2 && d.front() == '[' && d.back() == ']') {
      std::stringstream ss(d.substr(1, d.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) items.push_back(item);
      if (items.empty()) return json::array();
      json arr = json::array();
      for (const auto& i : items) arr.push_back(scalar_value(i));
      return arr;
    }
    if (d.empty()) return nullptr;
    return scalar_value(d);
  }
  if (opt->get_expected_max() > 1) {
    json arr = json::array();
    for (const auto& i : items) arr.push_back(scalar_value(i));
    return arr;
  }
  return items.empty() ? json(nullptr) : scalar_value(items.back());
}

json config_of(const CLI::App* sub) {
  json cfg = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    std::string key;
    if (!opt->get_lnames().empty()) {
      key = opt->get_lnames().front();
    } else if (opt->get_positional()) {
      key = opt->get_name();
    } else {
      continue;
    }
    if (key == "help" || key == "out") continue;
    if (opt->get_expected_max() == 0) continue;
    // A single-row request has no default; absent means "use the y range".
    if (key == "y" && opt->count() == 0) continue;
    cfg[key] = option_value(opt);
  }
  return cfg;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot open " + tmp + " for writing");
    f << content;
    f.flush();
    if (!f) throw IoFailure("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoFailure("cannot move output into place at " + path);
  }
}

std::vector<std::string> scenario_names() {
  return {"pole-re", "pole-im", "tolstov", "root-etalon", "model-msk"};
}

void register_dispersion(CLI::App& app, Command& c) {
  struct Flags {
    double epsilon = 0.1;
    double k_min = 0.0;
    double k_max = 12.0;
    int nk = 121;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("dispersion", "omega^2(k) and growth rate sqrt(max(0, omega^2))");
  c.app->add_option("--epsilon", f->epsilon, "Dispersion parameter");
  c.app->add_option("--k-min", f->k_min, "Smallest wavenumber");
  c.app->add_option("--k-max", f->k_max, "Largest wavenumber");
  c.app->add_option("--nk", f->nk, "Number of wavenumbers");
  c.label = [] { return std::string("dispersion"); };
  c.compute = [f, &c] {
    require_positive(f->epsilon, "epsilon");
    if (f->nk < 2 || !(f->k_max > f->k_min) || f->k_min < 0.0) {
      throw DomainError("dispersion: need 0 <= k-min < k-max and nk >= 2");
    }
    const FastestMode fm = fastest_growing_mode(f->epsilon);
    c.derived["k_star"] = fm.k_star;
    c.derived["max_rate"] = fm.rate;
    Table t{"k,omega2,rate", {}};
    for (int i = 0; i < f->nk; ++i) {
      const double k = f->k_min + (f->k_max - f->k_min) * i / (f->nk - 1);
      const double w2 = omega_squared(k, f->epsilon);
      t.rows.push_back({k, w2, w2 > 0.0 ? std::sqrt(w2) : 0.0});
    }
    return t;
  };
}

void register_hardy(CLI::App& app, Command& c) {
  struct Flags {
    double nu = 0.0;
    double X = 0.0;
    double Y = 0.0;
    double m = 3.0;
    double abs_tol = kHardyTolerance;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("hardy", "Integral of k^nu exp(k(Y - iX) - k^m/2) over k > 0");
  c.app->add_option("--nu", f->nu, "Power of k (> -1)");
  c.app->add_option("--X", f->X, "Stretched horizontal coordinate");
  c.app->add_option("--Y", f->Y, "Stretched vertical coordinate");
  c.app->add_option("--m", f->m, "Exponent of the damping term (> 1)");
  c.app->add_option("--abs-tol", f->abs_tol, "Absolute quadrature tolerance");
  c.label = [] { return std::string("inner-hardy"); };
  c.compute = [f] {
    require_positive(f->abs_tol, "abs-tol");
    const std::complex<double> v = hardy(HardyQuery{f->nu, f->X, f->Y, f->m}, f->abs_tol);
    return Table{"X,Y,re,im", {{f->X, f->Y, v.real(), v.imag()}}};
  };
}

void register_etalon(CLI::App& app, Command& c) {
  struct Flags {
    std::string kind = "pole-re";
    std::string component = "value";
    double epsilon = 0.1;
    double abs_tol = 1e-10;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("etalon", "Whole-line etalon solutions by Fourier quadrature");
  c.app->add_option("--kind", f->kind, "pole-re, pole-im, root-d2 or root");
  c.app->add_option("--component", f->component, "value or dy")
      ->check(CLI::IsMember({"value", "dy"}));
  c.app->add_option("--epsilon", f->epsilon, "Dispersion parameter");
  c.app->add_option("--abs-tol", f->abs_tol, "Absolute quadrature tolerance");
  add_grid(c.app, f->grid);
  c.label = [f] { return std::string(to_string(parse_etalon_kind(f->kind))); };
  c.compute = [f] {
    const EtalonKind kind = parse_etalon_kind(f->kind);
    require_positive(f->epsilon, "epsilon");
    require_positive(f->abs_tol, "abs-tol");
    const Grid grid = f->grid.grid();
    const EtalonComponent comp =
        f->component == "dy" ? EtalonComponent::DerivativeY : EtalonComponent::Value;
    return grid_table(grid, [&](double x, double y) {
      return evaluate_etalon(kind, x, y, f->epsilon, f->abs_tol, comp);
    });
  };
}

HolomorphicSeed seed_from_name(const std::string& name) {
  if (name == "pole-re") return HolomorphicSeed::pole(SeedPart::Re);
  if (name == "pole-im") return HolomorphicSeed::pole(SeedPart::Im);
  if (name == "root") return HolomorphicSeed::root();
  if (name == "tolstov") return HolomorphicSeed::tolstov();
  throw DomainError("unknown seed: " + name);
}

void register_series(CLI::App& app, Command& c) {
  struct Flags {
    std::string seed = "pole-re";
    int order = 2;
    double epsilon = 0.1;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("series", "Outer series U0 + eps^2 U1 + eps^4 U2");
  c.app->add_option("--seed", f->seed, "pole-re, pole-im, root or tolstov")
      ->check(CLI::IsMember({"pole-re", "pole-im", "root", "tolstov"}));
  c.app->add_option("--order", f->order, "Highest correction kept (0, 1 or 2)");
  c.app->add_option("--epsilon", f->epsilon, "Dispersion parameter");
  add_grid(c.app, f->grid);
  c.label = [f] { return f->seed; };
  c.compute = [f] {
    require_positive(f->epsilon, "epsilon");
    const HolomorphicSeed seed = seed_from_name(f->seed);
    const Grid grid = f->grid.grid();
    return grid_table(grid, [&](double x, double y) {
      return series_eval(seed, x, y, f->epsilon, f->order);
    });
  };
}

void register_dirichlet(CLI::App& app, Command& c) {
  struct Flags {
    std::string field = "H";
    double L = 3.0;
    double c1 = 1.0;
    double c2 = 0.0;
    double y_top = 1.0;
    int modes = kDirichletModes;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("dirichlet", "Harmonic fields on rectangles");
  c.app->add_option("--field", f->field, "H, S or E")->check(CLI::IsMember({"H", "S", "E"}));
  c.app->add_option("--L", f->L, "Half-length of the rectangle");
  c.app->add_option("--c1", f->c1, "Weight of the real pole trace (field E)");
  c.app->add_option("--c2", f->c2, "Weight of the imaginary pole trace (field E)");
  c.app->add_option("--y-top", f->y_top, "Top edge of the rectangle (field E)");
  c.app->add_option("--modes", f->modes, "Sine modes per side");
  add_grid(c.app, f->grid);
  c.label = [f] { return "dirichlet-" + f->field; };
  c.compute = [f, &c] {
    require_positive(f->L, "L");
    const Grid grid = f->grid.grid();
    if (f->field == "E") {
      const RectangleSolution e = build_E(f->L, f->c1, f->c2, f->y_top, f->modes);
      c.derived["boundary_residual"] = e.boundary_residual();
      return grid_table(grid, [&](double x, double y) { return e(x, y); });
    }
    const RectangleSolution h = build_H(f->L, f->modes);
    c.derived["boundary_residual"] = h.boundary_residual();
    if (f->field == "H") return grid_table(grid, [&](double x, double y) { return h(x, y); });
    return grid_table(grid, [&](double x, double y) { return build_S(h, x, y); });
  };
}

void register_solve_rod(CLI::App& app, Command& c) {
  struct Flags {
    std::string initial = "tolstov";
    std::string component = "displacement";
    double epsilon = 0.1;
    double L = 3.0;
    int mode_index = 1;
    int modes = kDefaultModeCount;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("solve-rod", "Hinged rod evolved from Cauchy data at y = -1");
  c.app->add_option("--initial", f->initial, "tolstov, model-msk or mode")
      ->check(CLI::IsMember({"tolstov", "model-msk", "mode"}));
  c.app->add_option("--component", f->component, "displacement, velocity or curvature")
      ->check(CLI::IsMember({"displacement", "velocity", "curvature"}));
  c.app->add_option("--epsilon", f->epsilon, "Dispersion parameter");
  c.app->add_option("--L", f->L, "Rod half-length (tolstov always uses pi)");
  c.app->add_option("--mode-index", f->mode_index, "Mode number for --initial mode");
  c.app->add_option("--modes", f->modes, "Modes kept in the projection");
  add_grid(c.app, f->grid);
  c.label = [f] { return "rod-" + f->initial; };
  c.compute = [f, &c] {
    require_positive(f->epsilon, "epsilon");
    if (f->modes < 1) throw DomainError("modes must be positive");
    SineSeriesState initial;
    if (f->initial == "tolstov") {
      initial = tolstov_state(std::max(1, f->modes / 2));
    } else if (f->initial == "model-msk") {
      initial = ModelMsk(f->L, f->epsilon, f->modes).state_at(-1.0);
    } else {
      require_positive(f->L, "L");
      if (f->mode_index < 1) throw DomainError("mode-index must be positive");
      initial = SineSeriesState{f->L, -1.0, {{f->mode_index, 1.0, 0.0}}};
    }
    const Grid grid = f->grid.grid();
    if (grid.y_min < -1.0) throw DomainError("solve-rod: rows must satisfy y >= -1");
    c.derived["half_length"] = initial.half_length;
    c.derived["retained_modes"] = initial.modes.size();
    const Component comp = f->component == "velocity"    ? Component::Velocity
                           : f->component == "curvature" ? Component::Curvature
                                                         : Component::Displacement;
    return row_table(grid, [&](double y, std::span<const double> xs) {
      return synthesize(evolve(initial, f->epsilon, y + 1.0), xs, comp);
    });
  };
}

void add_scenario_options(CLI::App* sub, Scenario& s) {
  sub->add_option("--epsilon", s.epsilon, "Dispersion parameter");
  sub->add_option("--abs-tol", s.abs_tol, "Absolute quadrature tolerance");
  sub->add_option("--shift-x", s.shift_x, "Horizontal shift of the singular point");
  sub->add_option("--modes", s.mode_count, "Modes kept by bounded scenarios");
  sub->add_option("--L", s.half_length, "Half-length of the model-solution rod");
}

void register_match(CLI::App& app, Command& c) {
  struct Flags {
    std::string scenario = "pole-re";
    std::string study = "inner";
    std::vector<double> epsilons{0.2, 0.1, 0.05};
    double R = 2.0;
    double r_inner = 0.3;
    double r_outer = 0.6;
    int order = 0;
    Scenario base;
  };
  auto f = std::make_shared<Flags>();
  c.app = app.add_subcommand("match", "Inner, outer and overlap mismatch studies");
  c.app->add_option("--scenario", f->scenario, "Scenario name")
      ->check(CLI::IsMember(scenario_names()));
  c.app->add_option("--study", f->study, "inner, outer or overlap")
      ->check(CLI::IsMember({"inner", "outer", "overlap"}));
  c.app->add_option("--epsilons", f->epsilons, "Comma-separated epsilon values")
      ->delimiter(',');
  c.app->add_option("--R", f->R, "Half-width of the inner lattice");
  c.app->add_option("--r-inner", f->r_inner, "Inner radius of the outer-study annulus");
  c.app->add_option("--r-outer", f->r_outer, "Outer radius of the outer-study annulus");
  c.app->add_option("--order", f->order, "Outer series order (outer study)");
  add_scenario_options(c.app, f->base);
  c.label = [f] { return f->scenario; };
  c.compute = [f] {
    if (f->epsilons.empty()) throw DomainError("match: no epsilon values");
    Table t{"epsilon,mismatch,normalized", {}};
    for (double eps : f->epsilons) {
      Scenario s = f->base;
      s.name = parse_scenario_name(f->scenario);
      s.epsilon = eps;
      const ScenarioModel model(s);
      Mismatch m;
      if (f->study == "inner") {
        m = inner_mismatch(model, f->R);
      } else if (f->study == "outer") {
        m = outer_mismatch(model, f->r_inner, f->r_outer, f->order);
      } else {
        m = overlap_mismatch(model);
      }
      t.rows.push_back({eps, m.sup, m.relative()});
    }
    return t;
  };
}

void register_scenario(CLI::App& app, Command& c) {
  struct Flags {
    std::string name = "tolstov";
    Scenario base;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  f->grid.nx = 201;
  c.app = app.add_subcommand("scenario", "Exact solution of a named scenario on a grid");
  c.app->add_option("name", f->name, "Scenario name")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  add_scenario_options(c.app, f->base);
  add_grid(c.app, f->grid);
  c.label = [f] { return f->name; };
  c.compute = [f, &c] {
    Scenario s = f->base;
    s.name = parse_scenario_name(f->name);
    const ScenarioModel model(s);
    GridFlags g = f->grid;
    if (g.x_min_opt->count() == 0) g.x_min = model.x_min();
    if (g.x_max_opt->count() == 0) g.x_max = model.x_max();
    const Grid grid = g.grid();
    if (grid.x_min < model.x_min() || grid.x_max > model.x_max()) {
      throw DomainError("scenario: x range outside the scenario's domain");
    }
    c.resolved["x-min"] = grid.x_min;
    c.resolved["x-max"] = grid.x_max;
    c.derived["inner_power"] = model.inner_power();
    return row_table(grid, [&](double y, std::span<const double> xs) {
      return model.exact_row(y, xs);
    });
  };
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rod bending under compression: solvers and matching studies", "rodbend"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", RODBEND_VERSION_STRING);

  std::vector<std::unique_ptr<Command>> commands;
  const auto add = [&](void (*reg)(CLI::App&, Command&)) {
    commands.push_back(std::make_unique<Command>());
    reg(app, *commands.back());
  };
  add(register_dispersion);
  add(register_solve_rod);
  add(register_etalon);
  add(register_hardy);
  add(register_series);
  add(register_dirichlet);
  add(register_match);
  add(register_scenario);

  std::string out_path;
  for (auto& c : commands) {
    c->app->add_option("--out", out_path, "CSV file (default: stdout); adds FILE.json");
  }

  std::vector<const char*> argv{"rodbend"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  Command* selected = nullptr;
  for (auto& c : commands) {
    if (c->app->parsed()) selected = c.get();
  }
  if (selected == nullptr) {
    err << "rodbend: no subcommand\n";
    return kUsageError;
  }

  try {
    const Table table = selected->compute();
    const std::string csv = render(table);
    if (out_path.empty()) {
      out << csv;
      out.flush();
      return kOk;
    }
    json sidecar;
    sidecar["command"] = selected->app->get_name();
    sidecar["config"] = config_of(selected->app);
    for (const auto& [key, value] : selected->resolved.items()) sidecar["config"][key] = value;
    sidecar["config"]["out"] = out_path;
    sidecar["paper_scenario"] = selected->label();
    sidecar["versions"] = {{"rodbend", RODBEND_VERSION_STRING}};
    sidecar["derived"] = selected->derived;
    sidecar["derived"]["rows"] = table.rows.size();
    sidecar["derived"]["columns"] = table.header;
    write_atomic(out_path, csv);
    write_atomic(out_path + ".json", sidecar.dump(2) + "\n");
    return kOk;
  } catch (const DomainError& e) {
    err << "rodbend: " << e.what() << '\n';
    return kUsageError;
  } catch (const AccuracyError& e) {
    err << "rodbend: " << e.what() << " (estimate " << format_number(e.estimate()) << ")\n";
    return kAccuracyError;
  } catch (const SaturationError& e) {
    err << "rodbend: " << e.what() << " (exponent " << format_number(e.exponent()) << ")\n";
    return kAccuracyError;
  } catch (const ConsistencyError& e) {
    err << "rodbend: " << e.what() << " (discrepancy " << format_number(e.discrepancy())
        << ")\n";
    return kAccuracyError;
  } catch (const IoFailure& e) {
    err << "rodbend: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "rodbend: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace rodbend::cli
