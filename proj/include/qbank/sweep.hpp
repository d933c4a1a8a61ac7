#pragma once

#include <string>
#include <vector>

#include "qbank/scenarios.hpp"

namespace qbank::sweep {

enum class Parameter { mu_acm, mu_cm, lambda1, lambda2, omega1, omega2, Omega1, Omega2, N1, N2 };
enum class Metric { tail_mean, tail_amplitude, final_value };

Parameter parameter_from_name(const std::string& name);  // throws std::out_of_range
Metric metric_from_name(const std::string& name);
const char* parameter_name(Parameter p);
const char* metric_name(Metric m);

struct SweepConfig {
  scen::ScenarioSpec base;
  Parameter parameter = Parameter::mu_cm;
  double from = 0.0;
  double to = 0.0;
  int steps = 2;  // ≥ 2
  Metric metric = Metric::tail_amplitude;
};

/// Throws std::invalid_argument on from > to, steps < 2, or N values
/// leaving [0, 1].
void check_sweep(const SweepConfig& cfg);

bank::ModelSpec with_parameter(const bank::ModelSpec& base, Parameter p, double value);

/// Metrics are evaluated on n1 over the last quarter of the grid.
double evaluate_metric(const bank::QFSeries& s, Metric m);

/// One (value, metric) row per sweep point; points may run in parallel.
std::vector<std::pair<double, double>> run_sweep(const SweepConfig& cfg,
                                                 const bank::QuadratureConfig& quad);

}  // namespace qbank::sweep
