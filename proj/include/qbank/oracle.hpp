#pragma once

#include <utility>
#include <vector>

#include "qbank/bankmodel.hpp"
#include "qbank/fock.hpp"

namespace qbank::oracle {

using linalg::CMatrix;

/// A closed (reservoir-free) system on the 4-dimensional space. The
/// constructor checks Hermiticity.
struct ClosedSystemSpec {
  CMatrix hamiltonian;
  fock::StateVector initial;

  ClosedSystemSpec(CMatrix h, fock::StateVector psi0);
};

/// The bank Hamiltonian restricted to λ1 = λ2 = 0:
///   ω1 n̂1 + ω2 n̂2 + μacm (b1†b2 + b2†b1) + μcm (b1†b2† + b2 b1),
/// built from the fock operators. Throws when either λ is nonzero.
CMatrix closed_hamiltonian(const bank::ModelSpec& spec);

/// ⟨n̂1⟩, ⟨n̂2⟩ along the grid via Ψ(t) = e^{−iHt} Ψ0 (fully independent of
/// the closed-form route through V(t)).
std::pair<std::vector<double>, std::vector<double>> exact_occupations(
    const ClosedSystemSpec& spec, const bank::TimeGrid& grid);

/// Classical RK4 solution of V' = iU·V, V(0) = I, sampled at multiples of dt.
struct PropagatorSamples {
  double dt = 0.0;
  std::vector<CMatrix> v;  // v[k] = V(k·dt)

  const CMatrix& at_time(double t) const;  // t must be (close to) a sample
};

/// Throws std::invalid_argument when dt > t_max or the step is outside the
/// stability budget ‖iU‖∞ · dt > 1.
PropagatorSamples ode_propagator(const CMatrix& u, double t_max, double dt);

}  // namespace qbank::oracle
