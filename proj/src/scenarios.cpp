#include "qbank/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qbank/tolerances.hpp"

namespace qbank::scen {

using bank::BankParams;
using bank::Coupling;
using bank::InitialState;
using linalg::cplx;

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::monotone_to_n: return "monotone-to-N";
    case Tag::stationary: return "stationary";
    case Tag::oscillatory: return "oscillatory";
    case Tag::indistinguishable_tail: return "indistinguishable-tail";
  }
  return "?";
}

Tag tag_from_name(const std::string& name) {
  for (Tag t : {Tag::monotone_to_n, Tag::stationary, Tag::oscillatory,
                Tag::indistinguishable_tail})
    if (name == tag_name(t)) return t;
  throw std::out_of_range("unknown tag: " + name);
}

InitialState initial_alpha_real() {  // also the second comparison state
  return InitialState::from_amplitudes(0.5, 0.5, 0.5, 0.5);
}

InitialState initial_alpha_complex() {
  return InitialState::from_amplitudes(cplx(0, 0.5), cplx(0, -0.5), 0.5, -0.5);
}

InitialState initial_choice(int k) {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  switch (k) {
    case 1: return InitialState::sharp(1, 1);
    case 2: return initial_alpha_real();
    case 3: return InitialState::from_amplitudes(0.5, cplx(0, 0.5), -0.5, cplx(0, -0.5));
    case 4: return InitialState::from_amplitudes(inv_sqrt3, inv_sqrt3, inv_sqrt3, 0.0);
  }
  throw std::out_of_range("initial-state index");
}

namespace {

std::vector<ScenarioSpec> build_registry() {
  std::vector<ScenarioSpec> out;

  // --- family 1: no bank-bank interaction, environments active (fig7) ---
  {
    const TimeGrid grid{10.0, 1001};
    const BankParams bank1{1.0, 0.5, 0.1, 0.0};
    struct Row { double omega2, Omega2, lambda2; };
    const Row rows[4] = {{2.0, 0.1, 0.5}, {2.0, 1.0, 3.0}, {2.0, 1.0, 8.0}, {2.0, 1.0, 8.0}};
    for (int rix = 0; rix < 4; ++rix) {
      for (const bool left : {true, false}) {
        ScenarioSpec s;
        s.name = "fig7-r" + std::to_string(rix + 1) + (left ? "-left" : "-right");
        s.model.bank1 = bank1;
        s.model.bank2 = {rows[rix].omega2, rows[rix].lambda2, rows[rix].Omega2, 0.0};
        if (rix < 3) {
          s.model.bank1.Nres = 0.0;
          s.model.bank2.Nres = left ? 1.0 : 0.0;
        } else {
          s.model.bank1.Nres = left ? 0.2 : 0.3;
          s.model.bank2.Nres = left ? 0.8 : 0.6;
        }
        s.model.coupling = {0.0, 0.0};
        s.model.initial = InitialState::sharp(1, 1);
        s.grid = grid;
        s.tags = {Tag::monotone_to_n};
        out.push_back(std::move(s));
      }
    }
  }

  // --- family 2: banks only, no environments (fig8, fig9) ---
  {
    const TimeGrid grid{2.0, 2001};
    struct Panel { const char* name; double ma, mc; };
    const Panel panels[4] = {{"fig8-top-left", 100.0, 10.0},
                             {"fig8-top-right", 100.0, 30.0},
                             {"fig8-bottom-left", 0.0, 10.0},
                             {"fig8-bottom-right", 0.0, 30.0}};
    for (const Panel& p : panels) {
      ScenarioSpec s;
      s.name = p.name;
      s.model.bank1 = {1.0, 0.0, 0.1, 0.0};
      s.model.bank2 = {2.0, 0.0, 0.1, 0.0};
      s.model.coupling = {p.ma, p.mc};
      s.model.initial = InitialState::sharp(1, 1);
      s.grid = grid;
      s.tags = {Tag::oscillatory};
      s.note = "omega2 not stated in the source caption; set to 2";
      out.push_back(std::move(s));
    }
    for (const bool left : {true, false}) {
      ScenarioSpec s;
      s.name = left ? "fig9-left" : "fig9-right";
      s.model.bank1 = {20.0, 0.0, 0.1, 0.0};
      s.model.bank2 = {60.0, 0.0, 0.1, 0.0};
      s.model.coupling = {30.0, 0.0};
      s.model.initial = left ? initial_choice(2) : initial_choice(4);
      s.grid = grid;
      s.tags = {Tag::oscillatory};
      out.push_back(std::move(s));
    }
  }

  // --- family 3: everything active (fig10..fig21) ---
  {
    const TimeGrid grid{2.5, 2001};
    struct Fig { int id; double ma, mc, N1, N2; };
    const Fig figs[12] = {
        {10, 2.0, 10.0, 0.0, 1.0}, {11, 2.0, 10.0, 1.0, 0.0}, {12, 2.0, 10.0, 1.0, 1.0},
        {13, 2.0, 10.0, 0.0, 0.0}, {14, 2.0, 25.0, 0.0, 1.0}, {15, 2.0, 25.0, 1.0, 0.0},
        {16, 2.0, 25.0, 1.0, 1.0}, {17, 2.0, 25.0, 0.0, 0.0}, {18, 25.0, 2.0, 0.0, 1.0},
        {19, 25.0, 2.0, 1.0, 0.0}, {20, 25.0, 2.0, 1.0, 1.0}, {21, 25.0, 2.0, 0.0, 0.0}};
    for (const Fig& f : figs) {
      for (int psi = 1; psi <= 4; ++psi) {
        ScenarioSpec s;
        s.name = "fig" + std::to_string(f.id) + "-psi" + std::to_string(psi);
        s.model.bank1 = {1.0, 0.2, 0.1, f.N1};
        s.model.bank2 = {2.0, 0.3, 0.1, f.N2};
        s.model.coupling = {f.ma, f.mc};
        s.model.initial = initial_choice(psi);
        s.grid = grid;
        s.tags = {Tag::oscillatory};
        if (f.ma == 25.0) s.tags.insert(Tag::indistinguishable_tail);
        if (f.id == 21) s.note = "source caption repeats (2,25); the section text fixes (25,2)";
        out.push_back(std::move(s));
      }
    }
  }

  // --- family 4: real vs complex amplitudes (App. B) ---
  {
    const TimeGrid grid{5.0, 5001};
    const BankParams c1_bank1{1.0, 0.5, 0.1, 0.0};
    const BankParams c1_bank2{2.0, 0.5, 0.1, 0.0};
    struct Fig { int id; double ma, mc, N1, N2; };
    const Fig figs[4] = {{1, 200.0, 0.0, 0.0, 1.0},
                         {2, 200.0, 0.0, 1.0, 1.0},
                         {3, 0.0, 200.0, 0.0, 1.0},
                         {4, 0.0, 200.0, 1.0, 1.0}};
    for (const Fig& f : figs) {
      for (const bool left : {true, false}) {
        ScenarioSpec s;
        s.name = "appB-fig" + std::to_string(f.id) + (left ? "-left" : "-right");
        s.model.bank1 = c1_bank1;
        s.model.bank2 = c1_bank2;
        s.model.bank1.Nres = f.N1;
        s.model.bank2.Nres = f.N2;
        s.model.coupling = {f.ma, f.mc};
        s.model.initial = left ? initial_alpha_real() : initial_alpha_complex();
        s.grid = grid;
        if (!left) s.tags = {Tag::oscillatory};  // same-phase amplitudes show no evident oscillation
        out.push_back(std::move(s));
      }
    }
    // second parameter set, same panel layout for figs 1 and 3
    const BankParams c2_bank1{1.2, 0.4, 0.3, 0.0};
    const BankParams c2_bank2{3.0, 0.4, 0.3, 0.0};
    const Fig c2figs[2] = {{1, 100.0, 0.0, 0.0, 1.0}, {3, 0.0, 100.0, 0.0, 1.0}};
    for (const Fig& f : c2figs) {
      for (const bool left : {true, false}) {
        ScenarioSpec s;
        s.name = "appB-c2-fig" + std::to_string(f.id) + (left ? "-left" : "-right");
        s.model.bank1 = c2_bank1;
        s.model.bank2 = c2_bank2;
        s.model.bank1.Nres = f.N1;
        s.model.bank2.Nres = f.N2;
        s.model.coupling = {f.ma, f.mc};
        s.model.initial = left ? initial_alpha_real() : initial_alpha_complex();
        s.grid = grid;
        if (!left) s.tags = {Tag::oscillatory};  // same-phase amplitudes show no evident oscillation
        s.note =
            "lambda values given inconsistently in the source (0.4 for both banks); "
            "couplings not fixed for this set, 100 chosen";
        out.push_back(std::move(s));
      }
    }
  }

  // --- family 5: the two-agent closed model as presets ---
  {
    const TimeGrid grid{20.0, 2001};
    struct P { const char* name; double w1, w2, lam; Tag tag; };
    const P presets[3] = {{"predprey-resonant", 1.0, 1.0, 0.5, Tag::oscillatory},
                          {"predprey-detuned", 1.0, 3.0, 2.0, Tag::oscillatory},
                          {"predprey-free", 1.0, 2.0, 0.0, Tag::stationary}};
    for (const P& p : presets) {
      ScenarioSpec s;
      s.name = p.name;
      s.model.bank1 = {p.w1, 0.0, 1.0, 0.0};
      s.model.bank2 = {p.w2, 0.0, 1.0, 0.0};
      s.model.coupling = {p.lam, 0.0};
      s.model.initial = InitialState::sharp(1, 0);
      s.grid = grid;
      s.tags = {p.tag};
      out.push_back(std::move(s));
    }
  }

  return out;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = [] {
    std::map<std::string, std::string> m;
    for (const char* stem : {"appB-fig1", "appB-fig2", "appB-fig3", "appB-fig4",
                             "appB-c2-fig1", "appB-c2-fig3"}) {
      m[std::string(stem) + "-alphaR"] = std::string(stem) + "-left";
      m[std::string(stem) + "-alphaC"] = std::string(stem) + "-right";
    }
    return m;
  }();
  return a;
}

}  // namespace

const std::vector<ScenarioSpec>& registry() {
  static const std::vector<ScenarioSpec> reg = build_registry();
  return reg;
}

const ScenarioSpec& get(const std::string& name) {
  std::string key = name;
  if (auto it = aliases().find(key); it != aliases().end()) key = it->second;
  for (const ScenarioSpec& s : registry())
    if (s.name == key) return s;
  throw std::out_of_range("unknown scenario: " + name);
}

int tail_start(const QFSeries& s) { return (3 * s.size()) / 4; }

double tail_peak_to_peak(const std::vector<double>& y, int from) {
  double lo = y[from], hi = y[from];
  for (size_t i = from; i < y.size(); ++i) {
    lo = std::min(lo, y[i]);
    hi = std::max(hi, y[i]);
  }
  return hi - lo;
}

namespace {

double total_variation(const std::vector<double>& y) {
  double tv = 0.0;
  for (size_t i = 1; i < y.size(); ++i) tv += std::abs(y[i] - y[i - 1]);
  return tv;
}

// Detrend by first differences: direction reversals of the series. Steps
// below 1e-12 are treated as flat so a numerically constant series counts
// as zero reversals.
int sign_changes_detrended(const std::vector<double>& y) {
  int changes = 0;
  int prev = 0;
  for (size_t i = 1; i < y.size(); ++i) {
    const double d = y[i] - y[i - 1];
    if (std::abs(d) <= 1e-12) continue;
    const int s = d > 0.0 ? 1 : -1;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

bool monotone_toward(const std::vector<double>& y, double target, std::string* why) {
  const double start = y.front();
  double worst = 0.0;
  for (size_t i = 1; i < y.size(); ++i) {
    const double d = y[i] - y[i - 1];
    if (target < start) worst = std::max(worst, d);        // should not rise
    else if (target > start) worst = std::max(worst, -d);  // should not fall
    else worst = std::max(worst, std::abs(d));
  }
  const double gap = std::abs(y.back() - target);
  if (why) {
    std::ostringstream os;
    os << "worst wrong-sign step " << worst << ", final gap " << gap;
    *why = os.str();
  }
  return worst <= tol::monotone_slack && gap < tol::asymptotic_gap;
}

}  // namespace

bool eval_monotone_to_n(const QFSeries& s, const ModelSpec& m, std::string* detail) {
  std::string w1, w2;
  const bool ok1 = monotone_toward(s.n1, m.bank1.Nres, &w1);
  const bool ok2 = monotone_toward(s.n2, m.bank2.Nres, &w2);
  if (detail) *detail = "n1: " + w1 + "; n2: " + w2;
  return ok1 && ok2;
}

bool eval_stationary(const QFSeries& s, std::string* detail) {
  const double tv = std::max(total_variation(s.n1), total_variation(s.n2));
  if (detail) *detail = "total variation " + std::to_string(tv);
  return tv < tol::stationary_variation;
}

bool eval_oscillatory(const QFSeries& s, std::string* detail) {
  const int c1 = sign_changes_detrended(s.n1);
  const int c2 = sign_changes_detrended(s.n2);
  if (detail)
    *detail = "sign changes n1=" + std::to_string(c1) + ", n2=" + std::to_string(c2);
  return c1 >= 3 && c2 >= 3;
}

bool eval_indistinguishable_tail(const QFSeries& s, std::string* detail) {
  const int from = tail_start(s);
  double worst = 0.0;
  for (int i = from; i < s.size(); ++i) worst = std::max(worst, std::abs(s.n1[i] - s.n2[i]));
  if (detail) *detail = "tail max |n1-n2| = " + std::to_string(worst);
  return worst < tol::tail_gap;
}

QFSeries run(const ScenarioSpec& spec, const bank::QuadratureConfig& quad,
             std::vector<TagReport>* reports, bank::Exec exec) {
  QFSeries series = bank::quantum_functions(spec.model, spec.grid, quad, exec);
  if (reports) {
    reports->clear();
    for (Tag t : spec.tags) {
      TagReport r{t, false, {}};
      switch (t) {
        case Tag::monotone_to_n: r.pass = eval_monotone_to_n(series, spec.model, &r.detail); break;
        case Tag::stationary: r.pass = eval_stationary(series, &r.detail); break;
        case Tag::oscillatory: r.pass = eval_oscillatory(series, &r.detail); break;
        case Tag::indistinguishable_tail:
          r.pass = eval_indistinguishable_tail(series, &r.detail);
          break;
      }
      reports->push_back(std::move(r));
    }
  }
  return series;
}

}  // namespace qbank::scen
