#include "qbank/predprey.hpp"

#include <cmath>

#include "qbank/fock.hpp"

namespace qbank::predprey {

double delta(const Params& p) {
  const double d = p.omega1 - p.omega2;
  return std::sqrt(d * d + 4.0 * p.lambda * p.lambda);
}

std::pair<double, double> densities_closed_form(const Params& p, int n1, int n2, double t) {
  if ((n1 != 0 && n1 != 1) || (n2 != 0 && n2 != 1))
    throw std::invalid_argument("densities_closed_form: occupations must be 0 or 1");
  if (!std::isfinite(t)) throw std::invalid_argument("densities_closed_form: non-finite time");
  const double d = delta(p);
  if (d == 0.0) return {static_cast<double>(n1), static_cast<double>(n2)};

  const double dw = p.omega1 - p.omega2;
  const double det = dw * dw / (d * d);
  const double mix = 4.0 * p.lambda * p.lambda / (d * d);
  const double c2 = std::cos(d * t / 2.0) * std::cos(d * t / 2.0);
  const double s2 = std::sin(d * t / 2.0) * std::sin(d * t / 2.0);
  const double r1 = n1 * det + mix * (n1 * c2 + n2 * s2);
  const double r2 = n2 * det + mix * (n2 * c2 + n1 * s2);
  return {r1, r2};
}

linalg::CMatrix hamiltonian_matrix(const Params& p) {
  using linalg::CMatrix;
  const CMatrix n1 = fock::number_op(1).matrix;
  const CMatrix n2 = fock::number_op(2).matrix;
  const CMatrix b1 = fock::annihilator(1).matrix;
  const CMatrix b2 = fock::annihilator(2).matrix;
  const CMatrix hop = linalg::matmul(linalg::adjoint(b1), b2) +
                      linalg::matmul(linalg::adjoint(b2), b1);
  return linalg::cplx(p.omega1) * n1 + linalg::cplx(p.omega2) * n2 + linalg::cplx(p.lambda) * hop;
}

}  // namespace qbank::predprey
