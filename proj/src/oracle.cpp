#include "qbank/oracle.hpp"

#include <cmath>

#include "qbank/eig.hpp"
#include "qbank/tolerances.hpp"

namespace qbank::oracle {

using linalg::cplx;

ClosedSystemSpec::ClosedSystemSpec(CMatrix h, fock::StateVector psi0)
    : hamiltonian(std::move(h)), initial(psi0) {
  if (hamiltonian.rows() != 4 || hamiltonian.cols() != 4)
    throw std::invalid_argument("ClosedSystemSpec: 4x4 Hamiltonian required");
  if (linalg::max_abs_diff(hamiltonian, linalg::adjoint(hamiltonian)) > tol::hermiticity)
    throw std::invalid_argument("ClosedSystemSpec: Hamiltonian not Hermitian");
}

CMatrix closed_hamiltonian(const bank::ModelSpec& spec) {
  if (spec.bank1.lambda != 0.0 || spec.bank2.lambda != 0.0)
    throw std::invalid_argument(
        "closed_hamiltonian: reservoir couplings must vanish (closed systems only)");
  const CMatrix b1 = fock::annihilator(1).matrix;
  const CMatrix b2 = fock::annihilator(2).matrix;
  const CMatrix b1d = linalg::adjoint(b1);
  const CMatrix b2d = linalg::adjoint(b2);
  const CMatrix hop = linalg::matmul(b1d, b2) + linalg::matmul(b2d, b1);
  const CMatrix pair = linalg::matmul(b1d, b2d) + linalg::matmul(b2, b1);
  return cplx(spec.bank1.omega) * fock::number_op(1).matrix +
         cplx(spec.bank2.omega) * fock::number_op(2).matrix +
         cplx(spec.coupling.mu_acm) * hop + cplx(spec.coupling.mu_cm) * pair;
}

std::pair<std::vector<double>, std::vector<double>> exact_occupations(
    const ClosedSystemSpec& spec, const bank::TimeGrid& grid) {
  if (grid.points < 1) throw std::invalid_argument("exact_occupations: empty grid");
  const linalg::EigenDecomposition d = linalg::eigen(spec.hamiltonian);

  // Ψ(t) = W e^{−iΛt} W⁻¹ Ψ0
  std::vector<cplx> psi0(spec.initial.amplitudes.begin(), spec.initial.amplitudes.end());
  const std::vector<cplx> modes = linalg::matvec(d.vectors_inverse, psi0);

  const CMatrix num1 = fock::number_op(1).matrix;
  const CMatrix num2 = fock::number_op(2).matrix;

  std::vector<double> n1(grid.points), n2(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid.time(i);
    fock::StateVector psi;
    for (int r = 0; r < 4; ++r) {
      cplx s = 0.0;
      for (int m = 0; m < 4; ++m)
        s += d.vectors(r, m) * std::exp(cplx(0.0, -t) * d.values[m]) * modes[m];
      psi.amplitudes[r] = s;
    }
    n1[i] = std::real(fock::expectation(psi, num1));
    n2[i] = std::real(fock::expectation(psi, num2));
  }
  return {std::move(n1), std::move(n2)};
}

const CMatrix& PropagatorSamples::at_time(double t) const {
  const double k = t / dt;
  const long idx = std::lround(k);
  if (idx < 0 || idx >= static_cast<long>(v.size()) || std::abs(k - idx) > 1e-9)
    throw std::invalid_argument("PropagatorSamples: time is not a stored sample");
  return v[idx];
}

PropagatorSamples ode_propagator(const CMatrix& u, double t_max, double dt) {
  if (u.rows() != 4 || u.cols() != 4) throw std::invalid_argument("ode_propagator: 4x4 U required");
  if (!(dt > 0.0) || dt > t_max) throw std::invalid_argument("ode_propagator: need 0 < dt <= t_max");
  const CMatrix iu = cplx(0.0, 1.0) * u;
  if (iu.norm_inf() * dt > 1.0)
    throw std::invalid_argument("ode_propagator: step too large for stability (norm*dt > 1)");

  const long steps = std::lround(t_max / dt);
  PropagatorSamples out;
  out.dt = dt;
  out.v.reserve(steps + 1);
  CMatrix v = CMatrix::identity(4);
  out.v.push_back(v);
  for (long s = 0; s < steps; ++s) {
    const CMatrix k1 = matmul(iu, v);
    const CMatrix k2 = matmul(iu, v + cplx(dt / 2.0) * k1);
    const CMatrix k3 = matmul(iu, v + cplx(dt / 2.0) * k2);
    const CMatrix k4 = matmul(iu, v + cplx(dt) * k3);
    v += cplx(dt / 6.0) * (k1 + cplx(2.0) * k2 + cplx(2.0) * k3 + k4);
    out.v.push_back(v);
  }
  return out;
}

}  // namespace qbank::oracle
