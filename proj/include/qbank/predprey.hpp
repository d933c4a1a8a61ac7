#pragma once

#include <utility>

#include "qbank/cmatrix.hpp"

namespace qbank::predprey {

/// Two-agent closed system: H = ω1 n̂1 + ω2 n̂2 + λ (b1†b2 + b2†b1).
struct Params {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double lambda = 0.0;  // ≥ 0
};

/// δ = sqrt((ω1 − ω2)² + 4λ²).
double delta(const Params& p);

/// Occupation densities at time t for the initial basis state (n1, n2):
///   n1(t) = n1 (ω1−ω2)²/δ² + (4λ²/δ²)(n1 cos²(δt/2) + n2 sin²(δt/2))
/// and symmetrically for n2(t). Both stay in [0, 1]; for δ = 0 the
/// densities are constant.
std::pair<double, double> densities_closed_form(const Params& p, int n1, int n2, double t);

/// The Hamiltonian as a 4×4 matrix over the fock basis.
linalg::CMatrix hamiltonian_matrix(const Params& p);

}  // namespace qbank::predprey
