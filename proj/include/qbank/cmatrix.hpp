#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace qbank::linalg {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Small sizes only (the model lives on a
/// 4-dimensional space); everything is by value.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("CMatrix: non-positive dimension");
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<cplx>& data() const { return a_; }

  bool all_finite() const;
  double max_abs() const;    // entrywise max modulus
  double norm_inf() const;   // max absolute row sum
  double norm_one() const;   // max absolute column sum

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

 private:
  int rows_, cols_;
  std::vector<cplx> a_;
};

/// Standard matrix product. Throws std::invalid_argument on a.cols != b.rows.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

/// Matrix–vector product.
std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);

/// Entrywise max modulus of a − b; dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// LU factorization with partial pivoting, kept for repeated solves.
class LuFactors {
 public:
  explicit LuFactors(const CMatrix& a);  // throws std::runtime_error if singular
  std::vector<cplx> solve(const std::vector<cplx>& rhs) const;
  CMatrix solve(const CMatrix& rhs) const;

 private:
  int n_;
  std::vector<cplx> lu_;
  std::vector<int> perm_;
};

/// Inverse via LU. Throws std::runtime_error if numerically singular.
CMatrix inverse(const CMatrix& a);

}  // namespace qbank::linalg
