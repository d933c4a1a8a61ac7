// Command-line front end: run presets or config files to CSV/SVG, list the
// preset registry, run the validation suite, and sweep a parameter.
//
// Exit codes: 0 success, 1 validation failure, 2 config error, 3 I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qbank/configio.hpp"
#include "qbank/csvio.hpp"
#include "qbank/scenarios.hpp"
#include "qbank/svgplot.hpp"
#include "qbank/sweep.hpp"
#include "qbank/validate.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_config = 2;
constexpr int exit_io = 3;

struct SourceFlags {
  std::string scenario;
  std::string config;
};

qbank::scen::ScenarioSpec resolve_source(const SourceFlags& src) {
  if (src.scenario.empty() == src.config.empty())
    throw qbank::configio::ConfigError("exactly one of --scenario/--config is required");
  if (!src.scenario.empty()) return qbank::scen::get(src.scenario);
  return qbank::configio::load_file(src.config);
}

void apply_grid_overrides(qbank::scen::ScenarioSpec& spec, double t_max, int steps) {
  if (t_max > 0.0) spec.grid.t_max = t_max;
  if (steps > 0) {
    if (steps < 2) throw qbank::configio::ConfigError("--steps must be >= 2");
    spec.grid.points = steps;
  }
}

int cmd_run(const SourceFlags& src, double t_max, int steps, int quad_refine,
            const std::string& out, const std::string& svg) {
  qbank::scen::ScenarioSpec spec = resolve_source(src);
  apply_grid_overrides(spec, t_max, steps);
  const qbank::bank::QFSeries series = qbank::scen::run(spec, {quad_refine});
  qbank::csvio::write_qf_csv(out, series);
  if (!svg.empty()) qbank::svgplot::write_qf_svg(svg, series, spec.name);
  std::cout << "wrote " << out << " (" << series.size() << " rows)";
  if (!svg.empty()) std::cout << " and " << svg;
  std::cout << "\n";
  return exit_ok;
}

int cmd_list(const std::string& dump_dir) {
  for (const auto& s : qbank::scen::registry()) {
    std::cout << s.name;
    for (auto t : s.tags) std::cout << " " << qbank::scen::tag_name(t);
    std::cout << "\n";
  }
  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (const auto& s : qbank::scen::registry()) {
      const std::string path = dump_dir + "/" + s.name + ".cfg";
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      if (!f) throw qbank::csvio::IoError("cannot open for writing: " + path);
      f << qbank::configio::dump(s);
    }
    std::cout << "configs dumped to " << dump_dir << "\n";
  }
  return exit_ok;
}

int cmd_validate(int quad_refine, bool inject_u_sign_flip) {
  qbank::validate::Options opt;
  opt.quad_refine = quad_refine;
  opt.inject_u_sign_flip = inject_u_sign_flip;
  const auto results = qbank::validate::run_all(opt);
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  if (failed) {
    std::cout << failed << " of " << results.size() << " checks failed\n";
    return exit_validation;
  }
  std::cout << "all " << results.size() << " checks passed\n";
  return exit_ok;
}

int cmd_sweep(const SourceFlags& src, const std::string& param, double from, double to,
              int steps, const std::string& metric, int quad_refine, const std::string& out) {
  qbank::sweep::SweepConfig cfg;
  cfg.base = resolve_source(src);
  try {
    cfg.parameter = qbank::sweep::parameter_from_name(param);
    cfg.metric = qbank::sweep::metric_from_name(metric);
  } catch (const std::out_of_range& e) {
    throw qbank::configio::ConfigError(e.what());
  }
  cfg.from = from;
  cfg.to = to;
  cfg.steps = steps;
  try {
    qbank::sweep::check_sweep(cfg);
  } catch (const std::invalid_argument& e) {
    throw qbank::configio::ConfigError(e.what());
  }
  const auto rows = qbank::sweep::run_sweep(cfg, {quad_refine});
  qbank::csvio::write_sweep_csv(out, rows);
  std::cout << "wrote " << out << " (" << rows.size() << " rows)\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-bank open quantum dynamics simulator"};
  app.require_subcommand(1);

  SourceFlags src;
  double t_max = 0.0;
  int steps = 0;
  int quad_refine = 0;
  std::string out, svg;

  CLI::App* run = app.add_subcommand("run", "compute a time series, write CSV (and SVG)");
  run->add_option("--scenario", src.scenario, "preset name (see `list`)");
  run->add_option("--config", src.config, "config file path");
  run->add_option("--t-max", t_max, "override grid end time");
  run->add_option("--steps", steps, "override grid point count");
  run->add_option("--quad-refine", quad_refine, "Simpson refinement factor (0 = auto)");
  run->add_option("--out", out, "output CSV path")->required();
  run->add_option("--svg", svg, "optional SVG plot path");

  std::string dump_dir;
  CLI::App* list = app.add_subcommand("list", "print preset names and tags");
  list->add_option("--dump-dir", dump_dir, "also write one config file per preset");

  bool inject_flip = false;
  CLI::App* validate = app.add_subcommand("validate", "run the full validation suite");
  validate->add_option("--quad-refine", quad_refine, "force a Simpson refinement factor");
  validate->add_flag("--inject-u-sign-flip", inject_flip,
                     "test hook: corrupt one U entry to prove the suite notices");

  std::string param, metric = "tail-amplitude";
  double from = 0.0, to = 0.0;
  int sweep_steps = 2;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a tail metric along one parameter");
  sweep->add_option("--scenario", src.scenario, "base preset name");
  sweep->add_option("--config", src.config, "base config file");
  sweep->add_option("--param", param,
                    "one of mu_acm, mu_cm, lambda1, lambda2, omega1, omega2, "
                    "Omega1, Omega2, N1, N2")
      ->required();
  sweep->add_option("--from", from, "first value")->required();
  sweep->add_option("--to", to, "last value")->required();
  sweep->add_option("--steps", sweep_steps, "number of sweep points (>= 2)")->required();
  sweep->add_option("--metric", metric, "tail-mean | tail-amplitude | final-value (on n1)");
  sweep->add_option("--quad-refine", quad_refine, "Simpson refinement factor (0 = auto)");
  sweep->add_option("--out", out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }

  try {
    if (run->parsed()) return cmd_run(src, t_max, steps, quad_refine, out, svg);
    if (list->parsed()) return cmd_list(dump_dir);
    if (validate->parsed()) return cmd_validate(quad_refine, inject_flip);
    if (sweep->parsed())
      return cmd_sweep(src, param, from, to, sweep_steps, metric, quad_refine, out);
  } catch (const qbank::csvio::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const qbank::configio::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
