#pragma once

// Central table of numeric tolerances. Every threshold the library or the
// test suites compare against lives here, so a bound is changed in exactly
// one place.

namespace qbank::tol {

// linear algebra
inline constexpr double car_identity = 1e-13;        // anticommutator identities
inline constexpr double adjoint_algebra = 1e-13;     // (AB)† == B†A†
inline constexpr double eigen_residual = 1e-10;      // ‖A·W − W·Λ‖ / ‖A‖
inline constexpr double eigen_inverse = 1e-10;       // ‖W·W⁻¹ − I‖
inline constexpr double eigen_condition_max = 1e8;   // cond(W) cutoff before Padé fallback
inline constexpr double expm_inverse_product = 1e-9; // ‖e^A e^-A − I‖
inline constexpr double expm_cross_path = 1e-9;      // eigen path vs Padé path

// states
inline constexpr double state_norm = 1e-12;          // constructed state vectors
inline constexpr double input_norm = 1e-9;           // accepted amplitude input
inline constexpr double hermiticity = 1e-12;

// dynamics
inline constexpr double closed_form_vs_oracle = 1e-8;
inline constexpr double density_sum = 1e-10;
inline constexpr double periodicity = 1e-9;
inline constexpr double unitarity = 1e-10;
inline constexpr double norm_conservation = 1e-10;
inline constexpr double ode_residual = 1e-4;         // central difference, h = 1e-5
inline constexpr double ode_residual_step = 1e-5;
inline constexpr double rk4_vs_expm = 1e-6;          // at dt = 1e-3
inline constexpr double decomposition_identity = 1e-12;
inline constexpr double sharp_interference = 1e-12;
inline constexpr double stationary_variation = 1e-9;
inline constexpr double stationary_pointwise = 1e-10;

// scenario-level properties
inline constexpr double asymptotic_gap = 0.02;       // |n_j(T) − N_j|
inline constexpr double tail_gap = 0.02;             // tail max |n1 − n2|
inline constexpr double quad_halving = 1e-6;
inline constexpr double range_slack = 1e-3;          // n_j in [−slack, 1+slack]
inline constexpr double monotone_slack = 1e-6;       // wrong-sign forward difference

// I/O
inline constexpr double csv_round_trip = 1e-10;

}  // namespace qbank::tol
