#pragma once

#include <array>

#include "qbank/cmatrix.hpp"

namespace qbank::fock {

using linalg::cplx;
using linalg::CMatrix;

// Two fermionic modes on a 4-dimensional space. Basis vectors are labelled
// by the occupation pair (k, l) with flat index 2k + l, so the ordering is
// (0,0), (0,1), (1,0), (1,1). The ladder operators use the Jordan–Wigner
// construction with mode order (1, 2):
//   b1 = s− ⊗ I,   b2 = sz ⊗ s−,   s− = [[0,1],[0,0]].
// With this convention φ11 = b1† b2† φ00 carries a plus sign.

constexpr int dim = 4;

inline int basis_index(int k, int l) { return 2 * k + l; }

enum class OpKind { annihilator, creator, number };

struct ModeOperator {
  int mode;      // 1 or 2
  OpKind kind;
  CMatrix matrix;  // 4×4
};

ModeOperator annihilator(int mode);
ModeOperator creator(int mode);
ModeOperator number_op(int mode);

struct StateVector {
  std::array<cplx, dim> amplitudes{};  // indexed by basis_index(k, l)

  double norm_squared() const;
};

/// φ_{k,l}; k, l ∈ {0, 1}.
StateVector basis_state(int k, int l);

/// Σ α_{k,l} φ_{k,l}. Rejects amplitudes whose total probability deviates
/// from 1 by more than tol::input_norm (no silent renormalization); the
/// exception message carries the computed norm.
StateVector superposition(const std::array<cplx, dim>& alphas);

/// ⟨state, op·state⟩.
cplx expectation(const StateVector& state, const CMatrix& op);

}  // namespace qbank::fock
