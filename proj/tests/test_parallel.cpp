#include <doctest.h>

#include <cstring>

#include "qbank/scenarios.hpp"
#include "qbank/sweep.hpp"

using namespace qbank;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  for (const char* name :
       {"fig7-r3-left", "fig8-top-left", "fig14-psi3", "appB-fig1-right", "predprey-detuned"}) {
    const auto& preset = scen::get(name);
    const auto serial =
        bank::quantum_functions(preset.model, preset.grid, {}, bank::Exec::serial);
    const auto parallel =
        bank::quantum_functions(preset.model, preset.grid, {}, bank::Exec::parallel);
    CHECK(bitwise_equal(serial.n1, parallel.n1));
    CHECK(bitwise_equal(serial.n2, parallel.n2));
    CHECK(bitwise_equal(serial.mu1, parallel.mu1));
    CHECK(bitwise_equal(serial.dmu1, parallel.dmu1));
    CHECK(bitwise_equal(serial.res1, parallel.res1));
    CHECK(bitwise_equal(serial.res2, parallel.res2));
  }
}

TEST_CASE("repeated parallel runs are deterministic") {
  const auto& preset = scen::get("fig18-psi2");
  const auto a = bank::quantum_functions(preset.model, preset.grid, {}, bank::Exec::parallel);
  const auto b = bank::quantum_functions(preset.model, preset.grid, {}, bank::Exec::parallel);
  CHECK(bitwise_equal(a.n1, b.n1));
  CHECK(bitwise_equal(a.res2, b.res2));
}

TEST_CASE("parallel sweep equals pointwise serial evaluation") {
  sweep::SweepConfig cfg;
  cfg.base = scen::get("fig8-top-left");
  cfg.base.grid = {1.0, 101};
  cfg.parameter = sweep::Parameter::mu_acm;
  cfg.from = 0.0;
  cfg.to = 100.0;
  cfg.steps = 5;
  cfg.metric = sweep::Metric::final_value;
  const auto rows = sweep::run_sweep(cfg, {});
  REQUIRE(rows.size() == 5);
  for (const auto& [value, metric] : rows) {
    const bank::ModelSpec m = sweep::with_parameter(cfg.base.model, cfg.parameter, value);
    const auto s = bank::quantum_functions(m, cfg.base.grid, {}, bank::Exec::serial);
    CHECK(metric == sweep::evaluate_metric(s, cfg.metric));
  }
}
