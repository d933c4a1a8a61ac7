#include "qbank/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "qbank/eig.hpp"
#include "qbank/oracle.hpp"
#include "qbank/predprey.hpp"
#include "qbank/scenarios.hpp"
#include "qbank/tolerances.hpp"

namespace qbank::validate {

using bank::InitialState;
using bank::ModelSpec;
using bank::QFSeries;
using bank::TimeGrid;
using linalg::CMatrix;
using linalg::cplx;

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

struct Suite {
  Options opt;
  std::vector<CheckResult> results;
  std::map<std::string, QFSeries> cache;

  bank::QuadratureConfig quad() const { return {opt.quad_refine}; }

  const QFSeries& series(const std::string& name) {
    auto it = cache.find(name);
    if (it == cache.end())
      it = cache.emplace(name, scen::run(scen::get(name), quad())).first;
    return it->second;
  }

  void add(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  void car_suite();
  void predprey_vs_oracle();
  void closed_system_equivalence();
  void u_structure();
  void ode_residual();
  void rk4_cross_check();
  void quadrature_convergence();
  void stationarity();
  void sharp_interference();
  void decomposition_and_range();
  void scenario_tags();
  void fig7_asymptotics();
  void mu_regime_comparison();
  void alpha_amplification();
};

void Suite::car_suite() {
  const CMatrix b1 = fock::annihilator(1).matrix;
  const CMatrix b2 = fock::annihilator(2).matrix;
  const CMatrix ops[2] = {b1, b2};
  const CMatrix id = CMatrix::identity(4);
  double worst = 0.0;
  auto anti = [](const CMatrix& x, const CMatrix& y) {
    return linalg::matmul(x, y) + linalg::matmul(y, x);
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const CMatrix bi = ops[i], bj = ops[j];
      CMatrix lhs = anti(bi, linalg::adjoint(bj));
      if (i == j) lhs -= id;
      worst = std::max(worst, lhs.max_abs());
      worst = std::max(worst, anti(bi, bj).max_abs());
      worst = std::max(worst, anti(linalg::adjoint(bi), linalg::adjoint(bj)).max_abs());
    }
  for (const CMatrix& b : ops) worst = std::max(worst, linalg::matmul(b, b).max_abs());
  add("car-identities", worst < tol::car_identity, "max residual " + num(worst));
}

void Suite::predprey_vs_oracle() {
  double worst = 0.0;
  const TimeGrid grid{20.0, 2001};
  for (double w1 : {1.0, 2.0})
    for (double w2 : {1.0, 2.0, 3.0})
      for (double lam : {0.0, 0.5, 2.0}) {
        const predprey::Params p{w1, w2, lam};
        const CMatrix h = predprey::hamiltonian_matrix(p);
        for (int k1 : {0, 1})
          for (int k2 : {0, 1}) {
            const oracle::ClosedSystemSpec cs(h, fock::basis_state(k1, k2));
            const auto [o1, o2] = oracle::exact_occupations(cs, grid);
            for (int i = 0; i < grid.points; ++i) {
              const auto [c1, c2] = predprey::densities_closed_form(p, k1, k2, grid.time(i));
              worst = std::max({worst, std::abs(c1 - o1[i]), std::abs(c2 - o2[i])});
            }
          }
      }
  add("predprey-vs-oracle", worst < tol::closed_form_vs_oracle, "max deviation " + num(worst));
}

void Suite::closed_system_equivalence() {
  double worst = 0.0;
  for (const char* name : {"fig8-top-left", "fig8-top-right", "fig8-bottom-left",
                           "fig8-bottom-right", "fig9-left", "fig9-right"}) {
    const scen::ScenarioSpec& preset = scen::get(name);
    for (int k = 1; k <= 4; ++k) {
      ModelSpec m = preset.model;
      m.initial = scen::initial_choice(k);
      const QFSeries qf = bank::quantum_functions(m, preset.grid, quad());
      const oracle::ClosedSystemSpec cs(oracle::closed_hamiltonian(m), m.initial.to_state());
      const auto [o1, o2] = oracle::exact_occupations(cs, preset.grid);
      for (int i = 0; i < qf.size(); ++i)
        worst = std::max({worst, std::abs(qf.n1[i] - o1[i]), std::abs(qf.n2[i] - o2[i])});
    }
  }
  add("closed-system-equivalence", worst < tol::closed_form_vs_oracle,
      "max deviation " + num(worst));
}

void Suite::u_structure() {
  // rows 3-4 of U are fixed by rows 1-2: lower blocks are the negated
  // conjugates of the upper ones
  double worst = 0.0;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    const CMatrix u = bank::build_u(s.model);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        worst = std::max(worst, std::abs(u(r + 2, c + 2) + std::conj(u(r, c))));
        worst = std::max(worst, std::abs(u(r + 2, c) + std::conj(u(r, c + 2))));
      }
  }
  add("u-adjoint-structure", worst == 0.0, "max residual " + num(worst));
}

void Suite::ode_residual() {
  const double h = tol::ode_residual_step;
  double worst = 0.0;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    const CMatrix u = bank::build_u(s.model);
    const CMatrix iu = cplx(0.0, 1.0) * u;
    const linalg::EigenDecomposition d = linalg::eigen(u);
    for (int k = 1; k <= 50; ++k) {
      const double t = s.grid.t_max * k / 50.0;
      const CMatrix vp = linalg::expm_from_eigen(d, cplx(0.0, t + h));
      const CMatrix vm = linalg::expm_from_eigen(d, cplx(0.0, t - h));
      const CMatrix v = linalg::expm_from_eigen(d, cplx(0.0, t));
      const CMatrix deriv = cplx(1.0 / (2.0 * h)) * (vp - vm);
      worst = std::max(worst, linalg::max_abs_diff(deriv, linalg::matmul(iu, v)));
    }
  }
  add("propagator-ode-residual", worst < tol::ode_residual, "max residual " + num(worst));
}

void Suite::rk4_cross_check() {
  double worst = 0.0;
  for (const char* name : {"fig10-psi1", "fig14-psi1", "fig18-psi1"}) {
    const CMatrix u = bank::build_u(scen::get(name).model);
    const oracle::PropagatorSamples rk = oracle::ode_propagator(u, 5.0, 1e-3);
    const linalg::EigenDecomposition d = linalg::eigen(u);
    for (double t : {1.0, 2.0, 5.0}) {
      const CMatrix exact = linalg::expm_from_eigen(d, cplx(0.0, t));
      worst = std::max(worst, linalg::max_abs_diff(rk.at_time(t), exact));
    }
  }
  add("rk4-vs-expm", worst < tol::rk4_vs_expm, "max deviation " + num(worst));
}

void Suite::quadrature_convergence() {
  // one reservoir configuration per distinct (banks, coupling) tuple; the
  // initial state does not enter the reservoir terms
  std::vector<std::string> names;
  for (int r = 1; r <= 4; ++r)
    for (const char* side : {"-left", "-right"})
      names.push_back("fig7-r" + std::to_string(r) + side);
  for (int fig = 10; fig <= 21; ++fig) names.push_back("fig" + std::to_string(fig) + "-psi1");
  double worst = 0.0;
  for (const std::string& name : names) {
    const scen::ScenarioSpec& s = scen::get(name);
    const int r = bank::effective_refine(s.model, s.grid.step(), quad());
    const QFSeries coarse = bank::quantum_functions(s.model, s.grid, {r});
    const QFSeries fine = bank::quantum_functions(s.model, s.grid, {2 * r});
    for (int i = 0; i < coarse.size(); ++i)
      worst = std::max({worst, std::abs(coarse.res1[i] - fine.res1[i]),
                        std::abs(coarse.res2[i] - fine.res2[i])});
  }
  add("quadrature-convergence", worst < tol::quad_halving,
      "max halving change " + num(worst) + " over " + std::to_string(names.size()) +
          " configurations");
}

void Suite::stationarity() {
  // hopping-only coupling: the empty and doubly-occupied states are blocked
  // and must stay put; the singly-occupied ones oscillate and must agree with
  // the two-agent closed form
  ModelSpec m;
  m.bank1 = {20.0, 0.0, 0.1, 0.0};
  m.bank2 = {60.0, 0.0, 0.1, 0.0};
  m.coupling = {30.0, 0.0};
  const TimeGrid grid{2.0, 2001};

  double tv_worst = 0.0, point_worst = 0.0;
  for (int k : {0, 1}) {
    m.initial = InitialState::sharp(k, k);
    const QFSeries s = bank::quantum_functions(m, grid, quad());
    double tv1 = 0.0, tv2 = 0.0;
    for (int i = 1; i < s.size(); ++i) {
      tv1 += std::abs(s.n1[i] - s.n1[i - 1]);
      tv2 += std::abs(s.n2[i] - s.n2[i - 1]);
    }
    tv_worst = std::max({tv_worst, tv1, tv2});
    for (int i = 0; i < s.size(); ++i)
      point_worst = std::max({point_worst, std::abs(s.n1[i] - k), std::abs(s.n2[i] - k)});
  }
  add("stationarity-blocked-states",
      tv_worst < tol::stationary_variation && point_worst < tol::stationary_pointwise,
      "total variation " + num(tv_worst) + ", pointwise " + num(point_worst));

  double dev = 0.0;
  const predprey::Params pp{20.0, 60.0, 30.0};
  for (const auto& [k, l] : {std::pair{1, 0}, std::pair{0, 1}}) {
    m.initial = InitialState::sharp(k, l);
    const QFSeries s = bank::quantum_functions(m, grid, quad());
    for (int i = 0; i < s.size(); ++i) {
      const auto [c1, c2] = predprey::densities_closed_form(pp, k, l, s.times[i]);
      dev = std::max({dev, std::abs(s.n1[i] - c1), std::abs(s.n2[i] - c2)});
    }
  }
  add("singly-occupied-rabi-consistency", dev < tol::closed_form_vs_oracle,
      "max deviation from two-agent closed form " + num(dev) +
          " (these states oscillate; amplitude 4mu^2/delta^2)");
}

void Suite::sharp_interference() {
  double worst = 0.0;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    const CMatrix u = bank::build_u(s.model);
    const linalg::EigenDecomposition d = linalg::eigen(u);
    for (int k = 1; k <= 10; ++k) {
      const CMatrix v = linalg::expm_from_eigen(d, cplx(0.0, s.grid.t_max * k / 10.0));
      for (int k1 : {0, 1})
        for (int k2 : {0, 1}) {
          const auto [d1, d2] = bank::delta_mu_terms(v, InitialState::sharp(k1, k2));
          worst = std::max({worst, std::abs(d1), std::abs(d2)});
        }
    }
  }
  add("sharp-interference-zero", worst < tol::sharp_interference, "max |dmu| " + num(worst));
}

void Suite::decomposition_and_range() {
  double id_worst = 0.0, lo = 0.0, hi = 1.0;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    const QFSeries& q = series(s.name);
    for (int i = 0; i < q.size(); ++i) {
      id_worst = std::max(
          {id_worst, std::abs(q.n1[i] - (q.mu1[i] + q.dmu1[i] + q.res1[i])),
           std::abs(q.n2[i] - (q.mu2[i] + q.dmu2[i] + q.res2[i]))});
      lo = std::min({lo, q.n1[i], q.n2[i]});
      hi = std::max({hi, q.n1[i], q.n2[i]});
    }
  }
  add("decomposition-identity", id_worst < tol::decomposition_identity,
      "max |n - (mu+dmu+res)| " + num(id_worst));
  add("range-property", lo >= -tol::range_slack && hi <= 1.0 + tol::range_slack,
      "range [" + num(lo) + ", " + num(hi) + "]");
}

void Suite::scenario_tags() {
  int failures = 0;
  std::string first_fail;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    const QFSeries& q = series(s.name);
    for (scen::Tag t : s.tags) {
      bool ok = true;
      std::string detail;
      switch (t) {
        case scen::Tag::monotone_to_n: ok = scen::eval_monotone_to_n(q, s.model, &detail); break;
        case scen::Tag::stationary: ok = scen::eval_stationary(q, &detail); break;
        case scen::Tag::oscillatory: ok = scen::eval_oscillatory(q, &detail); break;
        case scen::Tag::indistinguishable_tail:
          ok = scen::eval_indistinguishable_tail(q, &detail);
          break;
      }
      if (!ok) {
        ++failures;
        if (first_fail.empty())
          first_fail = s.name + " [" + scen::tag_name(t) + "]: " + detail;
      }
    }
  }
  add("scenario-tags", failures == 0,
      failures == 0 ? "all preset tags hold" : std::to_string(failures) + " failing, first: " +
                                                   first_fail);
}

void Suite::fig7_asymptotics() {
  double worst = 0.0;
  for (const scen::ScenarioSpec& s : scen::registry()) {
    if (s.name.rfind("fig7", 0) != 0) continue;
    const QFSeries& q = series(s.name);
    auto gap_at = [&](double rate, const std::vector<double>& n, double target) {
      const double T = std::clamp(10.0 / rate, 5.0, 50.0);
      const int idx = std::min(q.size() - 1, static_cast<int>(std::lround(T / s.grid.step())));
      return std::abs(n[idx] - target);
    };
    const double r1 = std::numbers::pi * s.model.bank1.lambda * s.model.bank1.lambda /
                      s.model.bank1.Omega;
    const double r2 = std::numbers::pi * s.model.bank2.lambda * s.model.bank2.lambda /
                      s.model.bank2.Omega;
    worst = std::max({worst, gap_at(r1, q.n1, s.model.bank1.Nres),
                      gap_at(r2, q.n2, s.model.bank2.Nres)});
  }
  add("fig7-asymptotics", worst < tol::asymptotic_gap, "max |n_j(T) - N_j| " + num(worst));
}

void Suite::mu_regime_comparison() {
  // Compared per matched (N1, N2): strictly on the sharp-state panels, and
  // via the per-N aggregate over all four initial states. The superposition
  // panels alone are not strictly ordered in the far tail: their
  // oscillations sit at the amplitude-cancellation floor in both coupling
  // regimes, so only the aggregate reflects the regime.
  bool ok = true;
  std::string detail;
  double tail_diff_worst = 0.0;
  for (int fig = 14; fig <= 17; ++fig) {
    double agg_cm = 0.0, agg_acm = 0.0;
    for (int psi = 1; psi <= 4; ++psi) {
      const std::string strong_cm = "fig" + std::to_string(fig) + "-psi" + std::to_string(psi);
      const std::string strong_acm =
          "fig" + std::to_string(fig + 4) + "-psi" + std::to_string(psi);
      const QFSeries& a = series(strong_cm);
      const QFSeries& b = series(strong_acm);
      const double pp_cm = scen::tail_peak_to_peak(a.n1, scen::tail_start(a));
      const double pp_acm = scen::tail_peak_to_peak(b.n1, scen::tail_start(b));
      agg_cm = std::max(agg_cm, pp_cm);
      agg_acm = std::max(agg_acm, pp_acm);
      if (psi == 1 && !(pp_acm < pp_cm)) {
        ok = false;
        if (detail.empty())
          detail = strong_acm + " tail pp " + num(pp_acm) + " !< " + num(pp_cm);
      }
      for (int i = scen::tail_start(b); i < b.size(); ++i)
        tail_diff_worst = std::max(tail_diff_worst, std::abs(b.n1[i] - b.n2[i]));
    }
    if (!(agg_acm < agg_cm)) {
      ok = false;
      if (detail.empty())
        detail = "fig" + std::to_string(fig + 4) + " family aggregate " + num(agg_acm) +
                 " !< " + num(agg_cm);
    }
  }
  if (tail_diff_worst >= tol::tail_gap) ok = false;
  if (detail.empty())
    detail = "tail amplitudes ordered; max tail |n1-n2| " + num(tail_diff_worst);
  add("mu-regime-comparison", ok, detail);
}

void Suite::alpha_amplification() {
  const QFSeries& re = series("appB-fig1-left");
  const QFSeries& im = series("appB-fig1-right");
  auto peak = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };
  const double p_re = std::max(peak(re.dmu1), peak(re.dmu2));
  const double p_im = std::max(peak(im.dmu1), peak(im.dmu2));
  add("alpha-complex-amplification", p_im > p_re,
      "peak |dmu|: complex " + num(p_im) + " vs real " + num(p_re));
}

}  // namespace

std::vector<CheckResult> run_all(const Options& opt) {
  bank::testing::inject_u_sign_flip(opt.inject_u_sign_flip);
  Suite suite;
  suite.opt = opt;
  try {
    suite.car_suite();
    suite.predprey_vs_oracle();
    suite.closed_system_equivalence();
    suite.u_structure();
    suite.ode_residual();
    suite.rk4_cross_check();
    suite.quadrature_convergence();
    suite.stationarity();
    suite.sharp_interference();
    suite.decomposition_and_range();
    suite.scenario_tags();
    suite.fig7_asymptotics();
    suite.mu_regime_comparison();
    suite.alpha_amplification();
  } catch (...) {
    bank::testing::inject_u_sign_flip(false);
    throw;
  }
  bank::testing::inject_u_sign_flip(false);
  return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qbank::validate
