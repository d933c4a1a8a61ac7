#include "qbank/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace qbank::sweep {

namespace {

struct ParamEntry {
  Parameter p;
  const char* name;
};

constexpr ParamEntry param_table[] = {
    {Parameter::mu_acm, "mu_acm"},   {Parameter::mu_cm, "mu_cm"},
    {Parameter::lambda1, "lambda1"}, {Parameter::lambda2, "lambda2"},
    {Parameter::omega1, "omega1"},   {Parameter::omega2, "omega2"},
    {Parameter::Omega1, "Omega1"},   {Parameter::Omega2, "Omega2"},
    {Parameter::N1, "N1"},           {Parameter::N2, "N2"}};

struct MetricEntry {
  Metric m;
  const char* name;
};

constexpr MetricEntry metric_table[] = {{Metric::tail_mean, "tail-mean"},
                                        {Metric::tail_amplitude, "tail-amplitude"},
                                        {Metric::final_value, "final-value"}};

}  // namespace

Parameter parameter_from_name(const std::string& name) {
  for (const auto& e : param_table)
    if (name == e.name) return e.p;
  throw std::out_of_range("unknown sweep parameter: " + name);
}

Metric metric_from_name(const std::string& name) {
  for (const auto& e : metric_table)
    if (name == e.name) return e.m;
  throw std::out_of_range("unknown sweep metric: " + name);
}

const char* parameter_name(Parameter p) {
  for (const auto& e : param_table)
    if (e.p == p) return e.name;
  return "?";
}

const char* metric_name(Metric m) {
  for (const auto& e : metric_table)
    if (e.m == m) return e.name;
  return "?";
}

void check_sweep(const SweepConfig& cfg) {
  if (cfg.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(cfg.from <= cfg.to)) throw std::invalid_argument("sweep: need from <= to");
  if (cfg.parameter == Parameter::N1 || cfg.parameter == Parameter::N2) {
    if (cfg.from < 0.0 || cfg.to > 1.0)
      throw std::invalid_argument("sweep: N values must stay in [0, 1]");
  }
}

bank::ModelSpec with_parameter(const bank::ModelSpec& base, Parameter p, double value) {
  bank::ModelSpec m = base;
  switch (p) {
    case Parameter::mu_acm: m.coupling.mu_acm = value; break;
    case Parameter::mu_cm: m.coupling.mu_cm = value; break;
    case Parameter::lambda1: m.bank1.lambda = value; break;
    case Parameter::lambda2: m.bank2.lambda = value; break;
    case Parameter::omega1: m.bank1.omega = value; break;
    case Parameter::omega2: m.bank2.omega = value; break;
    case Parameter::Omega1: m.bank1.Omega = value; break;
    case Parameter::Omega2: m.bank2.Omega = value; break;
    case Parameter::N1: m.bank1.Nres = value; break;
    case Parameter::N2: m.bank2.Nres = value; break;
  }
  return m;
}

double evaluate_metric(const bank::QFSeries& s, Metric m) {
  const int from = scen::tail_start(s);
  switch (m) {
    case Metric::tail_mean: {
      double sum = 0.0;
      for (int i = from; i < s.size(); ++i) sum += s.n1[i];
      return sum / (s.size() - from);
    }
    case Metric::tail_amplitude:
      return scen::tail_peak_to_peak(s.n1, from);
    case Metric::final_value:
      return s.n1.back();
  }
  return 0.0;
}

std::vector<std::pair<double, double>> run_sweep(const SweepConfig& cfg,
                                                 const bank::QuadratureConfig& quad) {
  check_sweep(cfg);
  const int n = cfg.steps;
  std::vector<std::pair<double, double>> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    const double v = cfg.from + (cfg.to - cfg.from) * i / (n - 1);
    const bank::ModelSpec m = with_parameter(cfg.base.model, cfg.parameter, v);
    // each point is pure; the inner kernels run serial to avoid nesting
    const bank::QFSeries s = bank::quantum_functions(m, cfg.base.grid, quad, bank::Exec::serial);
    rows[i] = {v, evaluate_metric(s, cfg.metric)};
  }
  return rows;
}

}  // namespace qbank::sweep
