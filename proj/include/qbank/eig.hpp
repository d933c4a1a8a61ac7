#pragma once

#include "qbank/cmatrix.hpp"

namespace qbank::linalg {

/// A = vectors · diag(values) · vectors_inverse.
struct EigenDecomposition {
  std::vector<cplx> values;
  CMatrix vectors;          // columns are right eigenvectors
  CMatrix vectors_inverse;
  double condition_estimate = 0.0;  // ‖W‖∞ · ‖W⁻¹‖∞
};

/// Signals that the iterative eigensolver did not converge; callers fall
/// back to the Padé exponential.
struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EigenDecomposition eigen(const CMatrix& a);

/// e^A reconstructed from a decomposition of A, optionally of scale·A.
CMatrix expm_from_eigen(const EigenDecomposition& d, cplx scale = 1.0);

/// Scaling-and-squaring Padé exponential (degree 13 ladder).
CMatrix expm_pade(const CMatrix& a);

/// Matrix exponential. Uses the eigendecomposition when the eigenvector
/// condition estimate is below tol::eigen_condition_max, otherwise the
/// Padé path; non-convergence of the eigensolver also falls through to Padé.
CMatrix expm(const CMatrix& a);

}  // namespace qbank::linalg
