// partlim: weighted partition tables, their scaling limit, and the
// consistency checks tying the two together.
//
// Exit codes: 0 = success, 1 = a computation refused to proceed (cap or
// range exceeded, quadrature failure, stencil too close to a kink),
// 2 = invalid arguments or configuration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "partlim/partlim.hpp"

namespace {

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
  std::string config_path;
};

// Writes to --out (or stdout), always via a string buffer so a failed
// computation never leaves a half-written file behind.
int emit(const CommonOpts& c, const std::string& payload) {
  if (c.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open --out path '" << c.out_path << "'\n";
    return 2;
  }
  f << payload;
  return 0;
}

struct Config {
  double abs_tol = 1e-10;
  int max_depth = 40;
  int r_max = partlim::kDefaultRMax;
  double x_max = partlim::kDefaultXMax;
  int degree = partlim::kDefaultModelDegree;
};

// --config JSON may override any defaults above; explicit flags win over
// the config file.
Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  partlim::Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", "invalid JSON in '" + path + "': " + e.what());
  }
  if (j.contains("abs_tol")) cfg.abs_tol = j["abs_tol"].get<double>();
  if (j.contains("max_depth")) cfg.max_depth = j["max_depth"].get<int>();
  if (j.contains("r_max")) cfg.r_max = j["r_max"].get<int>();
  if (j.contains("x_max")) cfg.x_max = j["x_max"].get<double>();
  if (j.contains("degree")) cfg.degree = j["degree"].get<int>();
  return cfg;
}

partlim::QuadratureConfig quad_of(const Config& cfg) {
  partlim::QuadratureConfig q;
  q.abs_tol = cfg.abs_tol;
  q.max_depth = cfg.max_depth;
  return q;
}

std::vector<partlim::XValue> parse_x_list(const std::vector<std::string>& raw) {
  std::vector<partlim::XValue> xs;
  xs.reserve(raw.size());
  for (const auto& s : raw) xs.push_back(partlim::XValue::parse(s));
  return xs;
}

// ---- table ----------------------------------------------------------

int run_table(const CommonOpts& common, int n_max, bool want_exact, bool want_float,
              bool compare) {
  if (compare) {
    want_exact = true;
    want_float = true;
  }
  if (!want_exact && !want_float) want_float = true;  // cheap default
  std::optional<partlim::ExactTriangle> exact;
  std::optional<partlim::FloatTriangle> flt;
  if (want_exact) exact.emplace(partlim::build_exact_triangle(n_max));
  if (want_float) flt.emplace(partlim::build_float_triangle(n_max));
  if (compare) {
    double max_rel = 0.0;
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; k <= n; ++k) {
        const double e = partlim::to_double(exact->value(n, k));
        max_rel = std::max(max_rel, std::abs(flt->value(n, k) - e) / e);
      }
    std::cout << "max relative float-vs-exact error over n <= " << n_max << ": "
              << partlim::format_double(max_rel) << "\n";
    if (common.out_path.empty()) return 0;  // summary was the point
  }
  std::ostringstream buf;
  if (common.format == "json")
    buf << partlim::table_json(exact ? &*exact : nullptr, flt ? &*flt : nullptr).dump(2) << "\n";
  else
    partlim::write_table_csv(buf, exact ? &*exact : nullptr, flt ? &*flt : nullptr);
  return emit(common, buf.str());
}

// ---- limit ----------------------------------------------------------

int run_limit(const CommonOpts& common, const Config& cfg, const std::vector<std::string>& x_raw,
              int x_grid, const std::string& method, const std::string& plot_path) {
  const partlim::PiecewiseLimit pw =
      partlim::build_piecewise(cfg.r_max, quad_of(cfg), cfg.degree);
  std::vector<double> xs;
  bool explicit_points = !x_raw.empty();
  if (explicit_points) {
    for (const auto& x : parse_x_list(x_raw)) xs.push_back(x.value);
  } else {
    const double lo = 1.0 / (cfg.r_max + 1);
    const int count = x_grid > 0 ? x_grid : 200;
    for (int i = 1; i <= count; ++i) xs.push_back(lo + (1.0 - lo) * i / count);
  }
  // ODE evaluation deep in the piecewise range is much slower than the
  // quadrature path, so grids default to quadrature only; explicit
  // points get both columns unless --method says otherwise.
  bool with_ode = method == "both" || method == "ode" ||
                  (method.empty() && explicit_points);
  if (!plot_path.empty()) {
    std::vector<double> gx, gy;
    const double lo = 1.0 / (cfg.r_max + 1);
    const int samples = 1000;
    for (int i = 1; i <= samples; ++i) {
      const double x = lo + (1.0 - lo) * i / samples;
      gx.push_back(x);
      gy.push_back(partlim::eval_F(pw, x));
    }
    std::vector<double> guides;
    for (int r = 1; r <= cfg.r_max; ++r) guides.push_back(1.0 / r);
    std::ofstream f(plot_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open --plot path '" << plot_path << "'\n";
      return 2;
    }
    partlim::write_svg_plot(f, gx, gy, guides, 800, 500, "scaling limit over (1/(r_max+1), 1]");
    if (!explicit_points && common.out_path.empty()) return 0;  // plot was the point
  }
  const auto rows = partlim::limit_rows(pw, xs, with_ode);
  std::ostringstream buf;
  if (common.format == "json")
    buf << partlim::limit_json(rows).dump(2) << "\n";
  else
    partlim::write_limit_csv(buf, rows);
  return emit(common, buf.str());
}

// ---- converge -------------------------------------------------------

int run_converge(const CommonOpts& common, const Config& cfg,
                 const std::vector<std::string>& x_raw, std::vector<int> ns, int n_max,
                 bool lehmer) {
  if (lehmer) {
    if (ns.empty()) {
      const int top = n_max > 0 ? n_max : 4000;
      for (int n = 100; n <= top; n += 100) ns.push_back(n);
      if (ns.empty()) ns.push_back(top);
    }
    int table_n = n_max > 0 ? n_max : *std::max_element(ns.begin(), ns.end());
    const partlim::FloatTriangle flt = partlim::build_float_triangle(table_n);
    const partlim::LehmerReport report = partlim::lehmer_report(flt, ns);
    std::ostringstream buf;
    if (common.format == "json")
      buf << partlim::lehmer_json(report).dump(2) << "\n";
    else
      partlim::write_lehmer_csv(buf, report);
    return emit(common, buf.str());
  }
  std::vector<partlim::XValue> xs =
      x_raw.empty() ? std::vector<partlim::XValue>{partlim::XValue::from_double(0.15),
                                                   partlim::XValue::from_double(0.3),
                                                   partlim::XValue::from_double(0.45),
                                                   partlim::XValue::from_double(0.6),
                                                   partlim::XValue::from_double(0.75)}
                    : parse_x_list(x_raw);
  if (ns.empty()) ns = {500, 1000, 2000, 4000};
  const int table_n = n_max > 0 ? n_max : *std::max_element(ns.begin(), ns.end());
  const partlim::FloatTriangle flt = partlim::build_float_triangle(table_n);
  const partlim::PiecewiseLimit pw =
      partlim::build_piecewise(cfg.r_max, quad_of(cfg), cfg.degree);
  const partlim::ConvergenceReport report = partlim::convergence_report(flt, pw, xs, ns);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  std::ostringstream buf;
  if (common.format == "json")
    buf << partlim::convergence_json(report).dump(2) << "\n";
  else
    partlim::write_convergence_csv(buf, report);
  return emit(common, buf.str());
}

// ---- laplace --------------------------------------------------------

int run_laplace(const CommonOpts& common, const Config& cfg, std::vector<double> ts,
                bool delay_check, const std::vector<double>& delay_xs_user, double delay_h) {
  const partlim::PiecewiseLimit pw =
      partlim::build_piecewise(cfg.r_max, quad_of(cfg), cfg.degree);
  if (delay_check) {
    std::vector<double> xs = delay_xs_user;
    if (xs.empty()) {
      for (double x : {1.5, 2.5, 3.25, 4.5, 5.75, 6.5, 7.5, 9.5, 11.5, 13.5})
        if (x < cfg.x_max) xs.push_back(x);
    }
    std::ostringstream buf;
    if (common.format == "json") {
      partlim::Json arr = partlim::Json::array();
      for (double x : xs) {
        partlim::Json j;
        j["x"] = x;
        j["residual"] = partlim::delay_ode_residual(pw, x, delay_h);
        arr.push_back(std::move(j));
      }
      partlim::Json out;
      out["rows"] = std::move(arr);
      buf << out.dump(2) << "\n";
    } else {
      buf << "x,residual\n";
      for (double x : xs)
        buf << partlim::format_double(x) << ','
            << partlim::format_double(partlim::delay_ode_residual(pw, x, delay_h)) << '\n';
    }
    return emit(common, buf.str());
  }
  if (ts.empty()) ts = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  const partlim::LaplaceCheck check = partlim::closed_form_check(pw, ts, cfg.x_max);
  std::ostringstream buf;
  if (common.format == "json") {
    buf << partlim::laplace_json(check).dump(2) << "\n";
  } else {
    partlim::write_laplace_csv(buf, check);
    buf << "# summary: " << partlim::laplace_summary_json(check).dump() << "\n";
  }
  return emit(common, buf.str());
}

// ---- selftest -------------------------------------------------------

int run_selftest(bool quick, double perturb_gamma) {
  if (perturb_gamma != 0.0) {
    partlim::set_gamma_perturbation(perturb_gamma);
    std::cout << "note: gamma perturbed by " << partlim::format_double(perturb_gamma) << "\n";
  }
  const auto results = partlim::run_selfchecks(!quick);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "partlim: exact and floating tables of the weighted partition statistic, its\n"
      "scaling limit, and the transform/delay-equation consistency checks."};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out_path, "Write output to this path instead of stdout");
  app.add_option("--config", common.config_path, "JSON file overriding numeric defaults");

  // table
  auto* t = app.add_subcommand("table", "Build the b(n, k) triangle and export it");
  t->fallthrough();
  int t_n_max = 30;
  bool t_exact = false, t_float = false, t_compare = false;
  t->add_option("--n-max", t_n_max, "Largest n to build")->capture_default_str();
  t->add_flag("--exact", t_exact, "Build the exact rational table");
  t->add_flag("--float", t_float, "Build the double-precision table (default)");
  t->add_flag("--compare", t_compare, "Build both and print the max relative error");

  // limit
  auto* l = app.add_subcommand("limit", "Evaluate the scaling limit F(x)");
  l->fallthrough();
  std::vector<std::string> l_x;
  int l_grid = 0;
  int l_r_max = 0;
  std::string l_method;
  std::string l_plot;
  l->add_option("--x", l_x, "Evaluation points in (0, 1]; decimals or p/q ratios");
  l->add_option("--x-grid", l_grid, "Number of uniform grid points when --x is absent");
  l->add_option("--r-max", l_r_max, "Deepest interval (1/(r+1), 1/r] to build");
  l->add_option("--method", l_method, "Evaluation columns to fill")
      ->check(CLI::IsMember({"quad", "ode", "both"}));
  l->add_option("--plot", l_plot, "Write an SVG of F over the built range to this path");

  // converge
  auto* c = app.add_subcommand("converge",
                               "Scaled table entries against the limit, or row-total growth");
  c->fallthrough();
  std::vector<std::string> c_x;
  std::vector<int> c_n;
  int c_n_max = 0;
  int c_r_max = 0;
  bool c_lehmer = false;
  c->add_option("--x", c_x, "Horizontal positions; decimals or p/q ratios");
  c->add_option("--n", c_n, "Table sizes to sample");
  c->add_option("--n-max", c_n_max, "Build the table to this size");
  c->add_option("--r-max", c_r_max, "Deepest interval for the limit evaluator");
  c->add_flag("--lehmer", c_lehmer, "Report e^gamma b(n)/n growth instead");

  // laplace
  auto* p = app.add_subcommand("laplace",
                               "Truncated transform of the reciprocal view and its invariants");
  p->fallthrough();
  std::vector<double> p_t;
  double p_x_max = 0.0;
  int p_r_max = 0;
  bool p_delay = false;
  std::vector<double> p_delay_x;
  double p_delay_h = partlim::kDelayDefaultH;
  p->add_option("--t", p_t, "Transform arguments t > 0");
  p->add_option("--x-max", p_x_max, "Upper truncation point of the transform integral");
  p->add_option("--r-max", p_r_max, "Deepest interval for the underlying evaluator");
  p->add_flag("--delay-check", p_delay, "Report delay-equation residuals instead");
  p->add_option("--delay-x", p_delay_x, "Residual evaluation points (with --delay-check)");
  p->add_option("--delay-h", p_delay_h, "Difference step for the residual")
      ->capture_default_str();

  // selftest
  auto* s = app.add_subcommand("selftest", "Run the built-in consistency checks");
  s->fallthrough();
  bool s_quick = false;
  double s_perturb = 0.0;
  s->add_flag("--quick", s_quick, "Skip the slow checks");
  s->add_option("--perturb-gamma", s_perturb,
                "Shift the gamma constant to demonstrate check sensitivity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean; any parse error is a usage error
  }

  try {
    Config cfg = load_config(common.config_path);

    if (t->parsed()) {
      if (t_n_max < 1) {
        std::cerr << "error: --n-max must be >= 1\n";
        return 2;
      }
      return run_table(common, t_n_max, t_exact, t_float, t_compare);
    }

    if (l->parsed()) {
      if (l_r_max > 0) cfg.r_max = l_r_max;
      if (cfg.r_max < 1) {
        std::cerr << "error: r_max must be >= 1\n";
        return 2;
      }
      if (l_grid < 0) {
        std::cerr << "error: --x-grid must be positive\n";
        return 2;
      }
      for (const auto& raw : l_x) {
        const auto x = partlim::XValue::parse(raw);  // throws invalid_argument -> 2
        if (!(x.value > 0.0) || x.value > 1.0 + partlim::kBreakpointSlack) {
          std::cerr << "error: --x " << raw << " outside (0, 1]\n";
          return 2;
        }
      }
      return run_limit(common, cfg, l_x, l_grid, l_method, l_plot);
    }

    if (c->parsed()) {
      if (c_r_max > 0) cfg.r_max = c_r_max;
      for (int n : c_n)
        if (n < 1) {
          std::cerr << "error: --n must be >= 1\n";
          return 2;
        }
      if (c_n_max < 0 || (c_n_max > 0 && c_n_max > partlim::kFloatBudget)) {
        std::cerr << "error: --n-max outside [1, " << partlim::kFloatBudget << "]\n";
        return 2;
      }
      for (const auto& raw : c_x) {
        const auto x = partlim::XValue::parse(raw);
        if (!(x.value > 0.0) || x.value > 1.0 + partlim::kBreakpointSlack) {
          std::cerr << "error: --x " << raw << " outside (0, 1]\n";
          return 2;
        }
      }
      return run_converge(common, cfg, c_x, c_n, c_n_max, c_lehmer);
    }

    if (p->parsed()) {
      if (p_x_max > 0.0) cfg.x_max = p_x_max;
      if (p_r_max > 0) cfg.r_max = p_r_max;
      if (cfg.x_max <= 1.0) {
        std::cerr << "error: x_max must be > 1\n";
        return 2;
      }
      if (cfg.x_max > static_cast<double>(cfg.r_max)) {
        std::cerr << "error: x_max = " << cfg.x_max << " needs r_max >= " << cfg.x_max
                  << " (got " << cfg.r_max << ")\n";
        return 2;
      }
      if (!p_delay) {
        const auto& ts_check = p_t.empty() ? std::vector<double>{0.5} : p_t;
        for (double tv : ts_check) {
          if (!(tv > 0.0)) {
            std::cerr << "error: --t must be > 0\n";
            return 2;
          }
          if (tv * cfg.x_max < partlim::kLaplaceTailGuard) {
            std::cerr << "error: t * x_max = " << tv * cfg.x_max
                      << " is below the truncation guard " << partlim::kLaplaceTailGuard
                      << "; raise --x-max or --t\n";
            return 2;
          }
        }
      }
      return run_laplace(common, cfg, p_t, p_delay, p_delay_x, p_delay_h);
    }

    if (s->parsed()) return run_selftest(s_quick, s_perturb);
  } catch (const partlim::computation_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
