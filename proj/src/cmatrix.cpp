#include "qbank/cmatrix.hpp"

#include <cmath>

namespace qbank::linalg {

bool CMatrix::all_finite() const {
  for (const cplx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::norm_inf() const {
  double m = 0.0;
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
    m = std::max(m, s);
  }
  return m;
}

double CMatrix::norm_one() const {
  double m = 0.0;
  for (int c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (int r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    m = std::max(m, s);
  }
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix +: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix -: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (cplx& v : a_) v *= s;
  return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: a.cols != b.rows");
  CMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<cplx> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

LuFactors::LuFactors(const CMatrix& a) : n_(a.rows()), lu_(a.data()), perm_(a.rows()) {
  if (a.rows() != a.cols()) throw std::invalid_argument("LuFactors: square matrix required");
  const int n = n_;
  auto at = [&](int r, int c) -> cplx& { return lu_[static_cast<size_t>(r) * n + c]; };
  for (int i = 0; i < n; ++i) perm_[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(at(k, k));
    for (int r = k + 1; r < n; ++r) {
      const double v = std::abs(at(r, k));
      if (v > best) { best = v; piv = r; }
    }
    if (best == 0.0) throw std::runtime_error("LuFactors: singular matrix");
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      std::swap(perm_[k], perm_[piv]);
    }
    for (int r = k + 1; r < n; ++r) {
      const cplx f = at(r, k) / at(k, k);
      at(r, k) = f;
      for (int c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
    }
  }
}

std::vector<cplx> LuFactors::solve(const std::vector<cplx>& rhs) const {
  const int n = n_;
  if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("LuFactors::solve: size mismatch");
  auto at = [&](int r, int c) -> const cplx& { return lu_[static_cast<size_t>(r) * n + c]; };
  std::vector<cplx> y(n);
  for (int i = 0; i < n; ++i) {
    cplx s = rhs[perm_[i]];
    for (int j = 0; j < i; ++j) s -= at(i, j) * y[j];
    y[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    cplx s = y[i];
    for (int j = i + 1; j < n; ++j) s -= at(i, j) * y[j];
    y[i] = s / at(i, i);
  }
  return y;
}

CMatrix LuFactors::solve(const CMatrix& rhs) const {
  if (rhs.rows() != n_) throw std::invalid_argument("LuFactors::solve: shape mismatch");
  CMatrix out(n_, rhs.cols());
  std::vector<cplx> col(n_);
  for (int c = 0; c < rhs.cols(); ++c) {
    for (int r = 0; r < n_; ++r) col[r] = rhs(r, c);
    const std::vector<cplx> x = solve(col);
    for (int r = 0; r < n_; ++r) out(r, c) = x[r];
  }
  return out;
}

CMatrix inverse(const CMatrix& a) {
  return LuFactors(a).solve(CMatrix::identity(a.rows()));
}

}  // namespace qbank::linalg
