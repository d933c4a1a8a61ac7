#include <doctest.h>

#include <random>

#include "qbank/eig.hpp"
#include "qbank/fock.hpp"
#include "qbank/tolerances.hpp"

using namespace qbank;
using linalg::CMatrix;
using linalg::cplx;

TEST_CASE("full CAR suite") {
  const CMatrix b[2] = {fock::annihilator(1).matrix, fock::annihilator(2).matrix};
  const CMatrix id = CMatrix::identity(4);
  auto anti = [](const CMatrix& x, const CMatrix& y) {
    return matmul(x, y) + matmul(y, x);
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix mixed = anti(b[i], adjoint(b[j]));
      if (i == j) mixed -= id;
      CHECK(mixed.max_abs() < tol::car_identity);
      CHECK(anti(b[i], b[j]).max_abs() < tol::car_identity);
      CHECK(anti(adjoint(b[i]), adjoint(b[j])).max_abs() < tol::car_identity);
    }
}

TEST_CASE("pauli exclusion: b squared vanishes exactly") {
  for (int mode : {1, 2}) {
    const CMatrix b = fock::annihilator(mode).matrix;
    CHECK(matmul(b, b).max_abs() == 0.0);
    CHECK(matmul(adjoint(b), adjoint(b)).max_abs() == 0.0);
  }
}

TEST_CASE("mode operator construction invariants") {
  for (int mode : {1, 2}) {
    const auto b = fock::annihilator(mode);
    const auto bd = fock::creator(mode);
    const auto n = fock::number_op(mode);
    CHECK(linalg::max_abs_diff(bd.matrix, adjoint(b.matrix)) == 0.0);
    CHECK(linalg::max_abs_diff(n.matrix, matmul(bd.matrix, b.matrix)) == 0.0);
  }
  CHECK_THROWS_AS(fock::annihilator(3), std::invalid_argument);
}

TEST_CASE("number operators have eigenvalues 0 and 1 with multiplicity two") {
  for (int mode : {1, 2}) {
    const CMatrix n = fock::number_op(mode).matrix;
    const auto e = linalg::eigen(n);
    int zeros = 0, ones = 0;
    for (const cplx& v : e.values) {
      if (std::abs(v) < 1e-13) ++zeros;
      if (std::abs(v - 1.0) < 1e-13) ++ones;
    }
    CHECK(zeros == 2);
    CHECK(ones == 2);
  }
}

TEST_CASE("basis states are simultaneous number eigenvectors") {
  const CMatrix n1 = fock::number_op(1).matrix;
  const CMatrix n2 = fock::number_op(2).matrix;
  for (int k : {0, 1})
    for (int l : {0, 1}) {
      const fock::StateVector phi = fock::basis_state(k, l);
      CHECK(phi.norm_squared() == doctest::Approx(1.0).epsilon(tol::state_norm));
      CHECK(std::real(fock::expectation(phi, n1)) == doctest::Approx(k).epsilon(1e-14));
      CHECK(std::real(fock::expectation(phi, n2)) == doctest::Approx(l).epsilon(1e-14));
    }
}

TEST_CASE("vacuum is annihilated and ladder action is exact") {
  const CMatrix b1 = fock::annihilator(1).matrix;
  const CMatrix b2 = fock::annihilator(2).matrix;
  const auto vac = fock::basis_state(0, 0);
  const std::vector<cplx> vacv(vac.amplitudes.begin(), vac.amplitudes.end());

  for (const CMatrix* b : {&b1, &b2}) {
    const auto out = matvec(*b, vacv);
    for (const cplx& v : out) CHECK(std::abs(v) == 0.0);
  }

  // b1 φ10 = φ00
  const auto phi10 = fock::basis_state(1, 0);
  const auto out = matvec(b1, {phi10.amplitudes.begin(), phi10.amplitudes.end()});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(out[i] - vac.amplitudes[i]) == 0.0);
}

TEST_CASE("phi11 is built in the order b1-dagger then b2-dagger") {
  const CMatrix b1d = fock::creator(1).matrix;
  const CMatrix b2d = fock::creator(2).matrix;
  const auto vac = fock::basis_state(0, 0);
  const auto step = matvec(b2d, {vac.amplitudes.begin(), vac.amplitudes.end()});
  const auto built = matvec(b1d, step);
  const auto phi11 = fock::basis_state(1, 1);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(built[i] - phi11.amplitudes[i]) == 0.0);

  // swapped order flips the sign
  const auto step2 = matvec(b1d, {vac.amplitudes.begin(), vac.amplitudes.end()});
  const auto swapped = matvec(b2d, step2);
  CHECK(std::abs(swapped[fock::basis_index(1, 1)] + 1.0) == 0.0);
}

TEST_CASE("superposition accepts unit amplitudes and rejects others") {
  const auto sharp = fock::superposition({1.0, 0.0, 0.0, 0.0});
  CHECK(std::abs(sharp.amplitudes[0] - 1.0) == 0.0);

  const auto equal = fock::superposition({0.5, 0.5, 0.5, 0.5});
  CHECK(std::real(fock::expectation(equal, fock::number_op(1).matrix)) ==
        doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_WITH_AS(fock::superposition({0.8, 0.4, 0.0, 0.0}),
                       doctest::Contains("0.8"), std::invalid_argument);
}

TEST_CASE("expectations of number operators stay in [0,1]") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const CMatrix n1 = fock::number_op(1).matrix;
  const CMatrix n2 = fock::number_op(2).matrix;
  for (int trial = 0; trial < 200; ++trial) {
    std::array<cplx, 4> a;
    double norm = 0.0;
    for (cplx& v : a) {
      v = cplx(u(rng), u(rng));
      norm += std::norm(v);
    }
    for (cplx& v : a) v /= std::sqrt(norm);
    const auto psi = fock::superposition(a);
    for (const CMatrix* n : {&n1, &n2}) {
      const cplx e = fock::expectation(psi, *n);
      CHECK(std::abs(e.imag()) < 1e-14);  // Hermitian operator
      CHECK(e.real() >= -1e-14);
      CHECK(e.real() <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("expectation examples") {
  const auto phi11 = fock::basis_state(1, 1);
  CHECK(std::real(fock::expectation(phi11, fock::number_op(1).matrix)) == 1.0);
  const auto vac = fock::basis_state(0, 0);
  CHECK(std::real(fock::expectation(vac, fock::number_op(2).matrix)) == 0.0);
}
