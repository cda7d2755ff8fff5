#pragma once

#include <cstdint>

#include "phasegauge/linalg/complex_symmetric.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::linalg {

/// D = Q T Q^T, Q unitary, T complex symmetric tridiagonal with real
/// nonnegative off-diagonal.
struct Tridiagonalization {
  CMatrix q;
  CVector diagonal;      // alpha_1 .. alpha_n
  RVector off_diagonal;  // beta_1 .. beta_{n-1}

  CMatrix t() const;
};

struct LanczosOptions {
  // Off-diagonal below breakdown_tolerance * max(1, ||D||_max) ends the
  // current Krylov block; the recurrence restarts from a fresh vector.
  double breakdown_tolerance = 1e-12;
  // Reorthogonalize against all previous vectors once the estimated loss of
  // orthogonality exceeds this level. Kept far below sqrt(eps) so that Q
  // meets the 1e-10 unitarity contract, not just semi-orthogonality.
  double orthogonality_threshold = 1e-12;
  int max_restart_attempts = 8;
  std::uint64_t seed = 0x5eedULL;
};

/// Lanczos recurrence D conj(q_j) = beta_{j-1} q_{j-1} + alpha_j q_j +
/// beta_j q_{j+1} with modified partial reorthogonalization and restart.
Tridiagonalization lanczos_tridiagonalize(const ComplexSymmetricMatrix& d,
                                          const LanczosOptions& options = {});

}  // namespace phasegauge::linalg
