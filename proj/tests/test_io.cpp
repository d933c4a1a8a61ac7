#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qbank/configio.hpp"
#include "qbank/csvio.hpp"
#include "qbank/scenarios.hpp"
#include "qbank/svgplot.hpp"
#include "qbank/sweep.hpp"
#include "qbank/tolerances.hpp"

using namespace qbank;

namespace {

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

bank::QFSeries small_series() {
  const auto& preset = scen::get("fig7-r1-left");
  scen::ScenarioSpec s = preset;
  s.grid = {5.0, 51};
  return scen::run(s, {});
}

}  // namespace

TEST_CASE("complex literal round trip") {
  for (linalg::cplx v : {linalg::cplx(0, 0), linalg::cplx(1, 0), linalg::cplx(0.5, -0.5),
                         linalg::cplx(-0.25, 1e-3), linalg::cplx(3e8, -2.5e-7)}) {
    const std::string text = configio::format_complex(v);
    CHECK(configio::parse_complex(text) == v);
  }
  CHECK(configio::format_complex({0.5, -0.5}) == "0.5-0.5i");
  CHECK(configio::parse_complex("1e-3+2e-4i") == linalg::cplx(1e-3, 2e-4));
  CHECK_THROWS_AS(configio::parse_complex("1+2"), configio::ConfigError);
  CHECK_THROWS_AS(configio::parse_complex("banana+0i"), configio::ConfigError);
}

TEST_CASE("config parser diagnostics") {
  CHECK_THROWS_AS(configio::parse("[bank1] omega=1"), configio::ConfigError);  // missing keys
  CHECK_THROWS_AS(configio::parse("[mystery] a=1"), configio::ConfigError);
  const std::string good = configio::dump(scen::get("fig8-top-left"));
  CHECK_THROWS_AS(configio::parse(good + "[bank1] typo=1\n"), configio::ConfigError);
  CHECK_THROWS_AS(configio::parse(good + "[tags] wobbly\n"), configio::ConfigError);

  // unnormalized amplitudes are a config error, not a crash
  std::string broken = good;
  const size_t pos = broken.find("a11=");
  broken.replace(pos, broken.find('\n', pos) - pos, "a11=0.5+0i");
  CHECK_THROWS_AS(configio::parse(broken), configio::ConfigError);
}

TEST_CASE("config accepts multi-line sections and comments") {
  const std::string text =
      "# a custom run\n"
      "[bank1]\n omega=1 lambda=0\n Omega=1 N=0\n"
      "[bank2] omega=2 lambda=0 Omega=1 N=0\n"
      "[coupling] mu_acm=0 mu_cm=0\n"
      "[initial] a00=0+0i a10=0+0i a01=1+0i a11=0+0i\n"
      "[grid] t_max=4 points=41\n";
  const scen::ScenarioSpec s = configio::parse(text);
  CHECK(s.name == "custom");
  CHECK(s.model.bank2.omega == 2.0);
  CHECK(std::abs(s.model.initial.a01() - 1.0) == 0.0);
  CHECK(s.grid.points == 41);

  // free evolution of a sharp state: constant columns
  const auto series = scen::run(s, {});
  for (int i = 0; i < series.size(); ++i) {
    CHECK(std::abs(series.n1[i]) < 1e-12);
    CHECK(std::abs(series.n2[i] - 1.0) < 1e-12);
  }
}

TEST_CASE("sweeping N1 moves the final value across the unit interval") {
  sweep::SweepConfig cfg;
  cfg.base = scen::get("fig7-r1-left");
  cfg.parameter = sweep::Parameter::N1;
  cfg.from = 0.0;
  cfg.to = 1.0;
  cfg.steps = 5;
  cfg.metric = sweep::Metric::final_value;
  const auto rows = sweep::run_sweep(cfg, {});
  REQUIRE(rows.size() == 5);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].second > rows[i - 1].second);
  CHECK(rows.front().second == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(rows.back().second == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("csv writes the pinned header and 15 significant digits") {
  const bank::QFSeries s = small_series();
  const std::string text = csvio::render_qf_csv(s);
  CHECK(text.rfind("t,n1,n2,mu1,mu2,dmu1,dmu2,res1,res2\n", 0) == 0);
  // second line, first value: t = 0 in full scientific form
  const size_t line2 = text.find('\n') + 1;
  CHECK(text.substr(line2, 20) == "0.00000000000000e+00");
}

TEST_CASE("csv round trip reproduces the series") {
  const bank::QFSeries s = small_series();
  const auto path = temp_path("qbank_roundtrip.csv");
  csvio::write_qf_csv(path.string(), s);
  const bank::QFSeries back = csvio::read_qf_csv(path.string());
  REQUIRE(back.size() == s.size());
  double worst = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    worst = std::max(worst, std::abs(back.n1[i] - s.n1[i]));
    worst = std::max(worst, std::abs(back.res2[i] - s.res2[i]));
    worst = std::max(worst, std::abs(back.times[i] - s.times[i]));
  }
  CHECK(worst < tol::csv_round_trip);
  std::filesystem::remove(path);
}

TEST_CASE("csv output is deterministic") {
  const bank::QFSeries a = small_series();
  const bank::QFSeries b = small_series();
  CHECK(csvio::render_qf_csv(a) == csvio::render_qf_csv(b));
}

TEST_CASE("csv write failure raises an io error") {
  const bank::QFSeries s = small_series();
  CHECK_THROWS_AS(csvio::write_qf_csv("/nonexistent-dir/x.csv", s), csvio::IoError);
}

TEST_CASE("svg plot carries a dotted and a solid polyline") {
  const std::string svg = svgplot::render_qf_svg(small_series(), "sample");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray=\"2,4\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("n1(t)") != std::string::npos);
  CHECK(svg.find("n2(t)") != std::string::npos);
}

TEST_CASE("sweep parameter application") {
  const bank::ModelSpec base = scen::get("fig8-top-left").model;
  CHECK(sweep::with_parameter(base, sweep::Parameter::mu_cm, 7.0).coupling.mu_cm == 7.0);
  CHECK(sweep::with_parameter(base, sweep::Parameter::N1, 0.25).bank1.Nres == 0.25);
  CHECK(sweep::with_parameter(base, sweep::Parameter::Omega2, 0.7).bank2.Omega == 0.7);
}

TEST_CASE("sweep config validation") {
  sweep::SweepConfig cfg;
  cfg.base = scen::get("fig8-top-left");
  cfg.parameter = sweep::Parameter::N1;
  cfg.from = 0.0;
  cfg.to = 1.5;
  cfg.steps = 3;
  CHECK_THROWS_AS(sweep::check_sweep(cfg), std::invalid_argument);
  cfg.to = 1.0;
  cfg.steps = 1;
  CHECK_THROWS_AS(sweep::check_sweep(cfg), std::invalid_argument);
  cfg.steps = 2;
  CHECK_NOTHROW(sweep::check_sweep(cfg));
  CHECK_THROWS_AS(sweep::parameter_from_name("bogus"), std::out_of_range);
  CHECK_THROWS_AS(sweep::metric_from_name("bogus"), std::out_of_range);
}

TEST_CASE("sweep metrics") {
  bank::QFSeries s;
  for (int i = 0; i < 100; ++i) {
    s.times.push_back(i);
    s.n1.push_back(i < 75 ? 5.0 : (i % 2 ? 1.0 : 0.0));
    s.n2.push_back(0.0);
  }
  CHECK(sweep::evaluate_metric(s, sweep::Metric::tail_amplitude) == 1.0);
  CHECK(sweep::evaluate_metric(s, sweep::Metric::final_value) == 1.0);
  // tail covers indices 75..99: thirteen odd slots worth 1.0, twelve zeros
  CHECK(sweep::evaluate_metric(s, sweep::Metric::tail_mean) ==
        doctest::Approx(0.52).epsilon(1e-12));
}

TEST_CASE("sweep rows and steps") {
  sweep::SweepConfig cfg;
  cfg.base = scen::get("fig8-top-left");
  cfg.base.grid = {1.0, 201};
  cfg.parameter = sweep::Parameter::mu_cm;
  cfg.from = 0.0;
  cfg.to = 30.0;
  cfg.steps = 2;
  cfg.metric = sweep::Metric::tail_amplitude;
  const auto rows = sweep::run_sweep(cfg, {});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == 0.0);
  CHECK(rows[1].first == 30.0);
  // no co-movement coupling means a stationary sharp state; amplitude grows with mu_cm
  CHECK(rows[0].second < 1e-9);
  CHECK(rows[1].second > rows[0].second);

  const std::string csv = csvio::render_sweep_csv(rows);
  CHECK(csv.rfind("value,metric\n", 0) == 0);

  cfg.steps = 4;
  const auto curve = sweep::run_sweep(cfg, {});
  for (size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].second > curve[i - 1].second);
}
