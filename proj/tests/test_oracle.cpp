#include <doctest.h>

#include <cmath>

#include "qbank/eig.hpp"
#include "qbank/oracle.hpp"
#include "qbank/scenarios.hpp"
#include "qbank/tolerances.hpp"

using namespace qbank;
using bank::ModelSpec;
using bank::TimeGrid;
using linalg::CMatrix;
using linalg::cplx;

TEST_CASE("closed_hamiltonian refuses open systems") {
  ModelSpec m = scen::get("fig7-r1-left").model;  // lambda != 0
  CHECK_THROWS_AS(oracle::closed_hamiltonian(m), std::invalid_argument);
}

TEST_CASE("closed_hamiltonian structure") {
  ModelSpec m;
  m.bank1 = {1.0, 0.0, 1.0, 0.0};
  m.bank2 = {2.0, 0.0, 1.0, 0.0};
  m.initial = bank::InitialState::sharp(0, 0);

  SUBCASE("diagonal when uncoupled") {
    const CMatrix h = oracle::closed_hamiltonian(m);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(std::abs(h(i, j)) == 0.0);
  }

  SUBCASE("hermitian for pair coupling") {
    m.coupling = {0.0, 30.0};
    const CMatrix h = oracle::closed_hamiltonian(m);
    CHECK(linalg::max_abs_diff(h, adjoint(h)) == 0.0);
  }

  SUBCASE("hermitian for the fig9 parameters") {
    m.bank1.omega = 20.0;
    m.bank2.omega = 60.0;
    m.coupling = {30.0, 0.0};
    const CMatrix h = oracle::closed_hamiltonian(m);
    CHECK(linalg::max_abs_diff(h, adjoint(h)) == 0.0);
    const auto e = linalg::eigen(h);
    for (const auto& v : e.values) CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("spec constructor enforces hermiticity") {
  CMatrix notherm(4, 4);
  notherm(0, 1) = cplx(0, 1);
  CHECK_THROWS_AS(oracle::ClosedSystemSpec(notherm, fock::basis_state(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("stationary eigenstate stays put") {
  CMatrix h(4, 4);
  h(1, 1) = 2.0;
  h(2, 2) = 1.0;
  h(3, 3) = 3.0;
  const oracle::ClosedSystemSpec cs(h, fock::basis_state(1, 0));
  const auto [n1, n2] = oracle::exact_occupations(cs, {5.0, 101});
  for (int i = 0; i < 101; ++i) {
    CHECK(std::abs(n1[i] - 1.0) < 1e-12);
    CHECK(std::abs(n2[i]) < 1e-12);
  }
}

TEST_CASE("resonant hopping gives the cos^2 law") {
  ModelSpec m;
  m.bank1 = {1.0, 0.0, 1.0, 0.0};
  m.bank2 = {1.0, 0.0, 1.0, 0.0};
  m.coupling = {0.5, 0.0};
  m.initial = bank::InitialState::sharp(1, 0);
  const oracle::ClosedSystemSpec cs(oracle::closed_hamiltonian(m), fock::basis_state(1, 0));
  const TimeGrid grid{12.0, 241};
  const auto [n1, n2] = oracle::exact_occupations(cs, grid);
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid.time(i);
    CHECK(n1[i] == doctest::Approx(std::cos(t / 2) * std::cos(t / 2)).epsilon(1e-10));
    CHECK(n2[i] == doctest::Approx(std::sin(t / 2) * std::sin(t / 2)).epsilon(1e-10));
  }
}

TEST_CASE("closed evolution is unitary and norm conserving") {
  const ModelSpec m = scen::get("fig9-left").model;
  const CMatrix h = oracle::closed_hamiltonian(m);
  for (double t : {0.2, 0.9, 1.7}) {
    const CMatrix v = linalg::expm(cplx(0, -t) * h);
    CHECK(linalg::max_abs_diff(matmul(v, adjoint(v)), CMatrix::identity(4)) <
          tol::unitarity);
    const auto psi0 = m.initial.to_state();
    const auto amps = matvec(v, {psi0.amplitudes.begin(), psi0.amplitudes.end()});
    double norm = 0.0;
    for (const cplx& a : amps) norm += std::norm(a);
    CHECK(std::abs(norm - 1.0) < tol::norm_conservation);
  }
}

TEST_CASE("occupation sum is conserved exactly when mu_cm = 0") {
  ModelSpec m = scen::get("fig9-right").model;  // mu_cm = 0
  const oracle::ClosedSystemSpec cs(oracle::closed_hamiltonian(m), m.initial.to_state());
  const TimeGrid grid{2.0, 201};
  const auto [n1, n2] = oracle::exact_occupations(cs, grid);
  const double total0 = n1[0] + n2[0];
  for (int i = 0; i < grid.points; ++i)
    CHECK(std::abs(n1[i] + n2[i] - total0) < tol::norm_conservation);
}

TEST_CASE("rk4 reproduces trivial and diagonal propagators") {
  const oracle::PropagatorSamples zero = oracle::ode_propagator(CMatrix(4, 4), 1.0, 0.01);
  for (const CMatrix& v : zero.v)
    CHECK(linalg::max_abs_diff(v, CMatrix::identity(4)) == 0.0);

  CMatrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = -2.0;
  u(2, 2) = cplx(0, 1);
  u(3, 3) = 0.5;
  const oracle::PropagatorSamples d = oracle::ode_propagator(u, 2.0, 1e-3);
  const CMatrix& v = d.at_time(2.0);
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(v(k, k) - std::exp(cplx(0, 2.0) * u(k, k))) < 1e-8);
}

TEST_CASE("rk4 matches the exponential on the full model") {
  const CMatrix u = bank::build_u(scen::get("fig10-psi1").model);
  const oracle::PropagatorSamples rk = oracle::ode_propagator(u, 5.0, 1e-3);
  const auto d = linalg::eigen(u);
  for (double t : {1.0, 2.0, 5.0}) {
    const CMatrix exact = linalg::expm_from_eigen(d, cplx(0, t));
    CHECK(linalg::max_abs_diff(rk.at_time(t), exact) < tol::rk4_vs_expm);
  }
}

TEST_CASE("rk4 error drops by at least 12x when the step is halved") {
  const CMatrix u = bank::build_u(scen::get("fig18-psi1").model);
  const auto d = linalg::eigen(u);
  const CMatrix exact = linalg::expm_from_eigen(d, cplx(0, 2.0));
  const double big = linalg::max_abs_diff(oracle::ode_propagator(u, 2.0, 4e-3).at_time(2.0),
                                          exact);
  const double small = linalg::max_abs_diff(oracle::ode_propagator(u, 2.0, 2e-3).at_time(2.0),
                                            exact);
  CHECK(big / small >= 12.0);
}

TEST_CASE("rk4 rejects unstable or inconsistent steps") {
  const CMatrix u = bank::build_u(scen::get("fig8-top-left").model);  // norm ~ 112
  CHECK_THROWS_AS(oracle::ode_propagator(u, 1.0, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(oracle::ode_propagator(u, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::ode_propagator(u, 1.0, 0.0), std::invalid_argument);
}
