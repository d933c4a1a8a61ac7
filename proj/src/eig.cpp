#include "qbank/eig.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qbank/tolerances.hpp"

namespace qbank::linalg {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

EigenDecomposition eigen(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigen: square matrix required");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) throw EigenFailure("eigen: solver did not converge");

  EigenDecomposition d;
  d.values.resize(a.rows());
  for (int i = 0; i < a.rows(); ++i) d.values[i] = solver.eigenvalues()(i);
  d.vectors = from_eigen(solver.eigenvectors());
  d.vectors_inverse = inverse(d.vectors);
  d.condition_estimate = d.vectors.norm_inf() * d.vectors_inverse.norm_inf();
  return d;
}

CMatrix expm_from_eigen(const EigenDecomposition& d, cplx scale) {
  const int n = d.vectors.rows();
  CMatrix scaled(n, n);  // W · diag(exp(scale·λ))
  for (int i = 0; i < n; ++i) {
    const cplx e = std::exp(scale * d.values[i]);
    for (int r = 0; r < n; ++r) scaled(r, i) = d.vectors(r, i) * e;
  }
  return matmul(scaled, d.vectors_inverse);
}

namespace {

// Padé numerator/denominator pairs for exp, per the usual 3/5/7/9/13 ladder.
void pade3(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static const double b[] = {120., 60., 12., 1.};
  const CMatrix a2 = matmul(a, a);
  const CMatrix id = CMatrix::identity(a.rows());
  u = matmul(a, cplx(b[3]) * a2 + cplx(b[1]) * id);
  v = cplx(b[2]) * a2 + cplx(b[0]) * id;
}

void pade5(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static const double b[] = {30240., 15120., 3360., 420., 30., 1.};
  const CMatrix a2 = matmul(a, a);
  const CMatrix a4 = matmul(a2, a2);
  const CMatrix id = CMatrix::identity(a.rows());
  u = matmul(a, cplx(b[5]) * a4 + cplx(b[3]) * a2 + cplx(b[1]) * id);
  v = cplx(b[4]) * a4 + cplx(b[2]) * a2 + cplx(b[0]) * id;
}

void pade7(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
  const CMatrix a2 = matmul(a, a);
  const CMatrix a4 = matmul(a2, a2);
  const CMatrix a6 = matmul(a4, a2);
  const CMatrix id = CMatrix::identity(a.rows());
  u = matmul(a, cplx(b[7]) * a6 + cplx(b[5]) * a4 + cplx(b[3]) * a2 + cplx(b[1]) * id);
  v = cplx(b[6]) * a6 + cplx(b[4]) * a4 + cplx(b[2]) * a2 + cplx(b[0]) * id;
}

void pade9(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static const double b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                             2162160., 110880., 3960., 90., 1.};
  const CMatrix a2 = matmul(a, a);
  const CMatrix a4 = matmul(a2, a2);
  const CMatrix a6 = matmul(a4, a2);
  const CMatrix a8 = matmul(a6, a2);
  const CMatrix id = CMatrix::identity(a.rows());
  u = matmul(a, cplx(b[9]) * a8 + cplx(b[7]) * a6 + cplx(b[5]) * a4 + cplx(b[3]) * a2 +
                    cplx(b[1]) * id);
  v = cplx(b[8]) * a8 + cplx(b[6]) * a6 + cplx(b[4]) * a4 + cplx(b[2]) * a2 + cplx(b[0]) * id;
}

void pade13(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
  const CMatrix a2 = matmul(a, a);
  const CMatrix a4 = matmul(a2, a2);
  const CMatrix a6 = matmul(a4, a2);
  const CMatrix id = CMatrix::identity(a.rows());
  CMatrix w = cplx(b[13]) * a6 + cplx(b[11]) * a4 + cplx(b[9]) * a2;
  w = matmul(a6, w);
  w += cplx(b[7]) * a6 + cplx(b[5]) * a4 + cplx(b[3]) * a2 + cplx(b[1]) * id;
  u = matmul(a, w);
  v = matmul(a6, cplx(b[12]) * a6 + cplx(b[10]) * a4 + cplx(b[8]) * a2);
  v += cplx(b[6]) * a6 + cplx(b[4]) * a4 + cplx(b[2]) * a2 + cplx(b[0]) * id;
}

}  // namespace

CMatrix expm_pade(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm_pade: square matrix required");
  const double norm = a.norm_one();
  CMatrix u, v;
  int squarings = 0;
  if (norm < 1.495585217958292e-2) {
    pade3(a, u, v);
  } else if (norm < 2.539398330063230e-1) {
    pade5(a, u, v);
  } else if (norm < 9.504178996162932e-1) {
    pade7(a, u, v);
  } else if (norm < 2.097847961257068e0) {
    pade9(a, u, v);
  } else {
    const double theta13 = 5.371920351148152;
    std::frexp(norm / theta13, &squarings);
    if (squarings < 0) squarings = 0;
    const double down = std::ldexp(1.0, -squarings);
    CMatrix scaled = a;
    scaled *= cplx(down);
    pade13(scaled, u, v);
  }
  CMatrix numer = v + u;
  CMatrix denom = v - u;
  CMatrix result = LuFactors(denom).solve(numer);
  for (int i = 0; i < squarings; ++i) result = matmul(result, result);
  return result;
}

CMatrix expm(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: square matrix required");
  if (!a.all_finite()) throw std::invalid_argument("expm: non-finite entries");
  try {
    const EigenDecomposition d = eigen(a);
    if (d.condition_estimate < tol::eigen_condition_max) return expm_from_eigen(d);
  } catch (const EigenFailure&) {
    // fall through
  } catch (const std::runtime_error&) {
    // singular eigenvector matrix: defective case, Padé handles it
  }
  return expm_pade(a);
}

}  // namespace qbank::linalg
