#include "qbank/bankmodel.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "qbank/eig.hpp"
#include "qbank/tolerances.hpp"

namespace qbank::bank {

namespace {

std::atomic<bool> g_u_sign_flip{false};

double sq(double x) { return x * x; }

}  // namespace

namespace testing {
void inject_u_sign_flip(bool enable) { g_u_sign_flip.store(enable); }
}  // namespace testing

InitialState InitialState::sharp(int k, int l) {
  InitialState s;
  s.alpha[fock::basis_index(k, l)] = 1.0;
  return s;
}

InitialState InitialState::from_amplitudes(cplx a00, cplx a10, cplx a01, cplx a11) {
  InitialState s;
  s.alpha = {a00, a01, a10, a11};
  const double n = std::norm(a00) + std::norm(a01) + std::norm(a10) + std::norm(a11);
  if (std::abs(n - 1.0) > tol::input_norm)
    throw std::invalid_argument("InitialState: |alpha|^2 = " + std::to_string(n) +
                                ", expected 1");
  return s;
}

fock::StateVector InitialState::to_state() const { return fock::superposition(alpha); }

void check_spec(const ModelSpec& spec) {
  for (const BankParams* b : {&spec.bank1, &spec.bank2}) {
    if (!std::isfinite(b->omega) || !std::isfinite(b->lambda) || !std::isfinite(b->Omega) ||
        !std::isfinite(b->Nres))
      throw std::invalid_argument("ModelSpec: non-finite bank parameter");
    if (b->Omega <= 0.0) throw std::invalid_argument("ModelSpec: Omega must be positive");
    if (b->Nres < 0.0 || b->Nres > 1.0)
      throw std::invalid_argument("ModelSpec: N must lie in [0, 1]");
  }
  if (!std::isfinite(spec.coupling.mu_acm) || !std::isfinite(spec.coupling.mu_cm))
    throw std::invalid_argument("ModelSpec: non-finite coupling");
  double n = 0.0;
  for (const cplx& a : spec.initial.alpha) n += std::norm(a);
  if (std::abs(n - 1.0) > tol::input_norm)
    throw std::invalid_argument("ModelSpec: initial amplitudes not normalized");
}

cplx nu(const BankParams& bank) {
  return cplx(std::numbers::pi * sq(bank.lambda) / bank.Omega, bank.omega);
}

CMatrix build_u(const ModelSpec& spec) {
  const cplx i{0.0, 1.0};
  const cplx nu1 = nu(spec.bank1);
  const cplx nu2 = nu(spec.bank2);
  const double ma = spec.coupling.mu_acm;
  const double mc = spec.coupling.mu_cm;

  CMatrix u(4, 4);
  u(0, 0) = i * nu1;
  u(0, 1) = -ma;
  u(0, 3) = -mc;
  u(1, 0) = -ma;
  u(1, 1) = i * nu2;
  u(1, 2) = mc;
  u(2, 1) = mc;
  u(2, 2) = i * std::conj(nu1);
  u(2, 3) = ma;
  u(3, 0) = -mc;
  u(3, 2) = ma;
  u(3, 3) = i * std::conj(nu2);
  if (g_u_sign_flip.load()) u(0, 3) = -u(0, 3);
  return u;
}

CMatrix propagator(const CMatrix& u, double t) {
  if (u.rows() != 4 || u.cols() != 4) throw std::invalid_argument("propagator: 4x4 U required");
  return linalg::expm(cplx(0.0, t) * u);
}

namespace {

struct Rows {
  std::array<cplx, 4> r1{}, r2{};
};

std::pair<double, double> mu_terms_rows(const Rows& v, const InitialState& a) {
  const double A00 = std::norm(a.a00()), A01 = std::norm(a.a01());
  const double A10 = std::norm(a.a10()), A11 = std::norm(a.a11());
  const double m1 = std::norm(v.r1[0]) * (A10 + A11) + std::norm(v.r1[1]) * (A01 + A11) +
                    std::norm(v.r1[2]) * (A00 + A01) + std::norm(v.r1[3]) * (A00 + A10);
  const double m2 = std::norm(v.r2[0]) * (A10 + A11) + std::norm(v.r2[1]) * (A01 + A11) +
                    std::norm(v.r2[2]) * (A00 + A01) + std::norm(v.r2[3]) * (A00 + A10);
  return {m1, m2};
}

std::pair<double, double> delta_mu_rows(const Rows& v, const InitialState& a) {
  const cplx x = std::conj(a.a10()) * a.a01();
  const cplx y = std::conj(a.a11()) * a.a00();
  const cplx z = std::conj(a.a01()) * a.a10();
  auto one = [&](const std::array<cplx, 4>& r) {
    return 2.0 * std::real(std::conj(r[0]) * r[1] * x + std::conj(r[0]) * r[3] * y) -
           2.0 * std::real(std::conj(r[1]) * r[2] * y + std::conj(r[2]) * r[3] * z);
  };
  return {one(v.r1), one(v.r2)};
}

// Evaluates the first two rows of V(τ) = e^{iUτ}. One eigendecomposition of U
// is reused for every τ; if the eigenvector basis is ill conditioned the
// evaluation falls back to the Padé exponential per point.
class RowEvaluator {
 public:
  explicit RowEvaluator(const CMatrix& u) : u_(u) {
    try {
      const linalg::EigenDecomposition d = linalg::eigen(u);
      if (d.condition_estimate < tol::eigen_condition_max) {
        use_eigen_ = true;
        for (int m = 0; m < 4; ++m) {
          lam_[m] = d.values[m];
          for (int k = 0; k < 4; ++k) {
            p1_[m][k] = d.vectors(0, m) * d.vectors_inverse(m, k);
            p2_[m][k] = d.vectors(1, m) * d.vectors_inverse(m, k);
          }
        }
      }
    } catch (const std::runtime_error&) {
      // keep the Padé fallback
    }
  }

  Rows operator()(double tau) const {
    Rows out;
    if (use_eigen_) {
      for (int m = 0; m < 4; ++m) {
        const cplx e = std::exp(cplx(0.0, tau) * lam_[m]);
        for (int k = 0; k < 4; ++k) {
          out.r1[k] += p1_[m][k] * e;
          out.r2[k] += p2_[m][k] * e;
        }
      }
    } else {
      const CMatrix v = linalg::expm_pade(cplx(0.0, tau) * u_);
      for (int k = 0; k < 4; ++k) {
        out.r1[k] = v(0, k);
        out.r2[k] = v(1, k);
      }
    }
    return out;
  }

 private:
  CMatrix u_;
  bool use_eigen_ = false;
  std::array<cplx, 4> lam_{};
  cplx p1_[4][4]{}, p2_[4][4]{};
};

Rows rows_of(const CMatrix& v) {
  Rows out;
  for (int k = 0; k < 4; ++k) {
    out.r1[k] = v(0, k);
    out.r2[k] = v(1, k);
  }
  return out;
}

int round_up_even(int n) { return (n % 2 == 0) ? n : n + 1; }

int auto_refine(double step, double rate) {
  const double want = step * rate * 20.0;
  int f = want <= 4.0 ? 4 : static_cast<int>(std::ceil(want));
  if (f > 4096) f = 4096;
  return round_up_even(f);
}

struct ReservoirWeights {
  double c1, c2, N1, N2;
  bool active;
};

ReservoirWeights weights_of(const ModelSpec& spec) {
  ReservoirWeights w{};
  w.c1 = 2.0 * std::numbers::pi * sq(spec.bank1.lambda) / spec.bank1.Omega;
  w.c2 = 2.0 * std::numbers::pi * sq(spec.bank2.lambda) / spec.bank2.Omega;
  w.N1 = spec.bank1.Nres;
  w.N2 = spec.bank2.Nres;
  w.active = (spec.bank1.lambda != 0.0) || (spec.bank2.lambda != 0.0);
  return w;
}

std::pair<double, double> integrands(const Rows& v, const ReservoirWeights& w) {
  const double g1 = w.c1 * (std::norm(v.r1[0]) * w.N1 + std::norm(v.r1[2]) * (1.0 - w.N1)) +
                    w.c2 * (std::norm(v.r1[1]) * w.N2 + std::norm(v.r1[3]) * (1.0 - w.N2));
  const double g2 = w.c1 * (std::norm(v.r2[0]) * w.N1 + std::norm(v.r2[2]) * (1.0 - w.N1)) +
                    w.c2 * (std::norm(v.r2[1]) * w.N2 + std::norm(v.r2[3]) * (1.0 - w.N2));
  return {g1, g2};
}

}  // namespace

std::pair<double, double> mu_terms(const CMatrix& v, const InitialState& alpha) {
  if (v.rows() != 4 || v.cols() != 4) throw std::invalid_argument("mu_terms: 4x4 V required");
  return mu_terms_rows(rows_of(v), alpha);
}

std::pair<double, double> delta_mu_terms(const CMatrix& v, const InitialState& alpha) {
  if (v.rows() != 4 || v.cols() != 4)
    throw std::invalid_argument("delta_mu_terms: 4x4 V required");
  return delta_mu_rows(rows_of(v), alpha);
}

int effective_refine(const ModelSpec& spec, double step, const QuadratureConfig& quad) {
  if (quad.refine < 0) throw std::invalid_argument("QuadratureConfig: refine must be >= 0");
  if (quad.refine > 0) return quad.refine;
  if (!(step > 0.0)) throw std::invalid_argument("effective_refine: step must be positive");
  const double rate = 2.0 * build_u(spec).norm_inf();
  return auto_refine(step, rate);
}

std::pair<double, double> reservoir_terms(const ModelSpec& spec, double t,
                                          const QuadratureConfig& quad) {
  check_spec(spec);
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("reservoir_terms: bad time");
  if (quad.refine < 0) throw std::invalid_argument("QuadratureConfig: refine must be >= 0");
  const ReservoirWeights w = weights_of(spec);
  if (t == 0.0 || !w.active) return {0.0, 0.0};

  const CMatrix u = build_u(spec);
  const double base = t / 256.0;
  const int factor =
      quad.refine > 0 ? quad.refine : auto_refine(base, 2.0 * u.norm_inf());
  const long m = 256L * factor;  // even interval count
  const double h = t / static_cast<double>(m);

  const RowEvaluator rows(u);
  double s1 = 0.0, s2 = 0.0;
  auto g = [&](long k) { return integrands(rows(h * static_cast<double>(k)), w); };
  for (long k = 0; k < m; k += 2) {
    const auto [a1, a2] = g(k);
    const auto [b1, b2] = g(k + 1);
    const auto [c1, c2] = g(k + 2);
    s1 += h / 3.0 * (a1 + 4.0 * b1 + c1);
    s2 += h / 3.0 * (a2 + 4.0 * b2 + c2);
  }
  return {s1, s2};
}

QFSeries quantum_functions(const ModelSpec& spec, const TimeGrid& grid,
                           const QuadratureConfig& quad, Exec exec) {
  check_spec(spec);
  if (grid.points < 2) throw std::invalid_argument("TimeGrid: at least 2 points required");
  if (!(grid.t_max > 0.0)) throw std::invalid_argument("TimeGrid: t_max must be positive");

  const int pts = grid.points;
  const double h = grid.step();
  const ReservoirWeights w = weights_of(spec);
  const CMatrix u = build_u(spec);
  const int r = w.active ? effective_refine(spec, h, quad) : 1;
  const double hf = h / r;
  const long n_fine = static_cast<long>(pts - 1) * r;

  const RowEvaluator rows(u);
  std::vector<Rows> coarse(pts);
  std::vector<double> g1, g2;
  if (w.active) {
    g1.assign(n_fine + 1, 0.0);
    g2.assign(n_fine + 1, 0.0);
  }

  // Table fill: every fine grid node is independent, so the loop is the
  // parallel kernel; the serial variant is the reference implementation.
  auto kernel = [&](long k) {
    const Rows v = rows(hf * static_cast<double>(k));
    if (w.active) {
      const auto [a, b] = integrands(v, w);
      g1[k] = a;
      g2[k] = b;
    }
    if (k % r == 0) coarse[k / r] = v;
  };
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long k = 0; k <= n_fine; ++k) kernel(k);
  } else {
    for (long k = 0; k <= n_fine; ++k) kernel(k);
  }

  QFSeries out;
  out.times.resize(pts);
  out.n1.resize(pts);
  out.n2.resize(pts);
  out.mu1.resize(pts);
  out.mu2.resize(pts);
  out.dmu1.resize(pts);
  out.dmu2.resize(pts);
  out.res1.assign(pts, 0.0);
  out.res2.assign(pts, 0.0);

  if (w.active) {
    // Composite Simpson prefix over the fine grid; pair sums advance only at
    // even nodes, a 3/8 tail covers odd output offsets (odd refine only).
    double acc1 = 0.0, acc2 = 0.0;
    long mark = 0;
    auto advance_to = [&](long e) {
      for (; mark < e; mark += 2) {
        acc1 += hf / 3.0 * (g1[mark] + 4.0 * g1[mark + 1] + g1[mark + 2]);
        acc2 += hf / 3.0 * (g2[mark] + 4.0 * g2[mark + 1] + g2[mark + 2]);
      }
    };
    for (int i = 1; i < pts; ++i) {
      const long m = static_cast<long>(i) * r;
      if (m % 2 == 0) {
        advance_to(m);
        out.res1[i] = acc1;
        out.res2[i] = acc2;
      } else if (m == 1) {
        out.res1[i] = hf / 2.0 * (g1[0] + g1[1]);
        out.res2[i] = hf / 2.0 * (g2[0] + g2[1]);
      } else if (mark <= m - 3) {
        advance_to(m - 3);
        const double t1 = 3.0 * hf / 8.0 *
                          (g1[m - 3] + 3.0 * g1[m - 2] + 3.0 * g1[m - 1] + g1[m]);
        const double t2 = 3.0 * hf / 8.0 *
                          (g2[m - 3] + 3.0 * g2[m - 2] + 3.0 * g2[m - 1] + g2[m]);
        out.res1[i] = acc1 + t1;
        out.res2[i] = acc2 + t2;
      } else {
        // refine == 1 only: the pair sum already covers [0, m-1], close with
        // the single remaining interval
        out.res1[i] = acc1 + hf / 2.0 * (g1[m - 1] + g1[m]);
        out.res2[i] = acc2 + hf / 2.0 * (g2[m - 1] + g2[m]);
      }
    }
  }

  for (int i = 0; i < pts; ++i) {
    out.times[i] = grid.time(i);
    const auto [m1, m2] = mu_terms_rows(coarse[i], spec.initial);
    const auto [d1, d2] = delta_mu_rows(coarse[i], spec.initial);
    out.mu1[i] = m1;
    out.mu2[i] = m2;
    out.dmu1[i] = d1;
    out.dmu2[i] = d2;
    out.n1[i] = m1 + d1 + out.res1[i];
    out.n2[i] = m2 + d2 + out.res2[i];
  }
  return out;
}

}  // namespace qbank::bank
