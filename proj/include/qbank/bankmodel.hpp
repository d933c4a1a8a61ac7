#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qbank/cmatrix.hpp"
#include "qbank/fock.hpp"

namespace qbank::bank {

using linalg::cplx;
using linalg::CMatrix;

/// One bank plus its environment: free frequency ω (marginal cost of changing
/// money creation), environment coupling λ, dispersion slope Ω (> 0) and the
/// environment's target debt-deposit ratio N ∈ [0, 1].
struct BankParams {
  double omega = 0.0;
  double lambda = 0.0;
  double Omega = 1.0;
  double Nres = 0.0;
};

struct Coupling {
  double mu_acm = 0.0;  // anti-co-movement strength
  double mu_cm = 0.0;   // co-movement strength
};

/// The four initial amplitudes α_{k,l}, flat index 2k+l like fock.
struct InitialState {
  std::array<cplx, 4> alpha{};

  cplx a00() const { return alpha[0]; }
  cplx a01() const { return alpha[1]; }
  cplx a10() const { return alpha[2]; }
  cplx a11() const { return alpha[3]; }

  static InitialState sharp(int k, int l);
  /// Validates Σ|α|² == 1 within tol::input_norm; throws otherwise.
  static InitialState from_amplitudes(cplx a00, cplx a10, cplx a01, cplx a11);

  fock::StateVector to_state() const;
};

struct ModelSpec {
  BankParams bank1, bank2;
  Coupling coupling;
  InitialState initial;
};

/// Throws std::invalid_argument when a structural invariant is violated
/// (Ω ≤ 0, N outside [0,1], non-finite values, unnormalized α).
void check_spec(const ModelSpec& spec);

/// Uniform grid 0, h, …, t_max with `points` samples.
struct TimeGrid {
  double t_max = 10.0;
  int points = 1001;

  double step() const { return t_max / (points - 1); }
  double time(int i) const { return step() * i; }
};

struct QuadratureConfig {
  /// Subdivisions of the output step used by the Simpson rule for the
  /// reservoir integrals; 0 picks an even factor automatically from the
  /// stiffness bound 2‖U‖∞. Negative values are rejected.
  int refine = 0;
};

/// ν_j = iω_j + π λ_j² / Ω_j.
cplx nu(const BankParams& bank);

/// The 4×4 evolution generator acting on (b1, b2, b1†, b2†):
///   [  iν1   −μacm   0     −μcm ]
///   [ −μacm   iν2    μcm    0   ]
///   [  0      μcm    iν̄1   μacm ]
///   [ −μcm    0      μacm   iν̄2 ]
CMatrix build_u(const ModelSpec& spec);

/// V(t) = e^{iUt}.
CMatrix propagator(const CMatrix& u, double t);

/// Bank-only occupation pieces (μ1, μ2) from the first two rows of V.
std::pair<double, double> mu_terms(const CMatrix& v, const InitialState& alpha);

/// Interference pieces (δμ1, δμ2); identically zero for sharp initial states.
std::pair<double, double> delta_mu_terms(const CMatrix& v, const InitialState& alpha);

/// Environment pieces (n1_B(t), n2_B(t)) by composite Simpson over [0, t].
std::pair<double, double> reservoir_terms(const ModelSpec& spec, double t,
                                          const QuadratureConfig& quad);

/// Time series of the quantum functions and their decomposition. The stored
/// identity n_j = μ_j + δμ_j + res_j holds by construction.
struct QFSeries {
  std::vector<double> times;
  std::vector<double> n1, n2;
  std::vector<double> mu1, mu2;
  std::vector<double> dmu1, dmu2;
  std::vector<double> res1, res2;

  int size() const { return static_cast<int>(times.size()); }
};

enum class Exec { serial, parallel };

QFSeries quantum_functions(const ModelSpec& spec, const TimeGrid& grid,
                           const QuadratureConfig& quad, Exec exec = Exec::parallel);

/// The Simpson refinement factor quantum_functions will use for this spec and
/// output step (resolves refine == 0 to the automatic choice).
int effective_refine(const ModelSpec& spec, double step, const QuadratureConfig& quad);

namespace testing {
/// Test hook: flips the sign of the (1,4) entry of U (the −μ_cm slot) so
/// mutation checks can confirm the validation suite notices.
void inject_u_sign_flip(bool enable);
}  // namespace testing

}  // namespace qbank::bank
