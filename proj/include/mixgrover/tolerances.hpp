#pragma once

#include <cstdint>

namespace mixgrover {

/// Numerical thresholds shared by every module. All arithmetic is double
/// precision; nothing else in the library hard-codes a tolerance.
struct Tolerances {
  double norm = 1e-10;              // unit-norm check for states
  double axis_norm = 1e-8;          // reflection axes must be unit norm
  double unitary = 1e-10;           // max |U^dag U - I|
  double hermitian = 1e-10;         // DensityMatrix Hermiticity
  double hermitian_input = 1e-8;    // eigensolver input Hermiticity
  double trace = 1e-10;             // DensityMatrix trace
  double psd = 1e-10;               // eigenvalue slack below zero
  double probability_sum = 1e-10;   // ensemble weights sum to one
  double component_norm = 1e-8;     // ensemble components unit norm
  double completion_residual = 1e-8;  // Gram-Schmidt skip threshold
  double omega_match = 1e-10;       // shared frequency across components
  double singular_omega = 1e-6;     // 3-point fit degenerate near k*pi/2
  double fit_residual = 1e-6;       // triggers least-squares fallback
  double useless_p_max = 1e-12;     // P_max below this never succeeds
  double flat_amplitude = 1e-12;    // amplitude below this: no oscillation
  double zero_amplitude = 1e-12;    // phase of a smaller amplitude is 0
  double phase_branch = 1e-10;      // snap 2*phi near -pi onto +pi
  double curve_slack = 1e-10;       // SuccessCurve values within [-s, 1+s]

  std::int64_t max_horizon = 1'000'000;
  std::int64_t fit_window_cap = 1 << 16;
  int min_lsq_points = 16;
  int max_dense_qubits = 10;    // dense unitaries, density matrices, full ensembles
};

inline constexpr Tolerances kTol{};

}  // namespace mixgrover
