#include "qbank/fock.hpp"

#include <cmath>
#include <sstream>

#include "qbank/tolerances.hpp"

namespace qbank::fock {

namespace {

CMatrix kron2(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  CMatrix out(dim, dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a[2 * i + j] * b[2 * k + l];
  return out;
}

// per-mode 2×2 blocks in the |0⟩,|1⟩ basis
const std::array<cplx, 4> s_minus = {0, 1, 0, 0};
const std::array<cplx, 4> s_z = {1, 0, 0, -1};
const std::array<cplx, 4> id2 = {1, 0, 0, 1};

CMatrix annihilator_matrix(int mode) {
  if (mode == 1) return kron2(s_minus, id2);
  if (mode == 2) return kron2(s_z, s_minus);
  throw std::invalid_argument("fock: mode must be 1 or 2");
}

}  // namespace

ModeOperator annihilator(int mode) {
  return {mode, OpKind::annihilator, annihilator_matrix(mode)};
}

ModeOperator creator(int mode) {
  return {mode, OpKind::creator, linalg::adjoint(annihilator_matrix(mode))};
}

ModeOperator number_op(int mode) {
  const CMatrix b = annihilator_matrix(mode);
  return {mode, OpKind::number, linalg::matmul(linalg::adjoint(b), b)};
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amplitudes) s += std::norm(a);
  return s;
}

StateVector basis_state(int k, int l) {
  if ((k != 0 && k != 1) || (l != 0 && l != 1))
    throw std::invalid_argument("basis_state: occupations must be 0 or 1");
  StateVector v;
  v.amplitudes[basis_index(k, l)] = 1.0;
  return v;
}

StateVector superposition(const std::array<cplx, dim>& alphas) {
  double n = 0.0;
  for (const cplx& a : alphas) n += std::norm(a);
  if (std::abs(n - 1.0) > tol::input_norm) {
    std::ostringstream msg;
    msg << "superposition: amplitudes not normalized, |alpha|^2 = " << n;
    throw std::invalid_argument(msg.str());
  }
  StateVector v;
  v.amplitudes = alphas;
  return v;
}

cplx expectation(const StateVector& state, const CMatrix& op) {
  if (op.rows() != dim || op.cols() != dim)
    throw std::invalid_argument("expectation: 4x4 operator required");
  cplx s = 0.0;
  for (int i = 0; i < dim; ++i) {
    cplx row = 0.0;
    for (int j = 0; j < dim; ++j) row += op(i, j) * state.amplitudes[j];
    s += std::conj(state.amplitudes[i]) * row;
  }
  return s;
}

}  // namespace qbank::fock
