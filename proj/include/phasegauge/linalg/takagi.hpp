#pragma once

#include "phasegauge/linalg/complex_symmetric.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::linalg {

inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kSigmaClamp = 1e-14;

/// D = U diag(sigma) U^T with U unitary and sigma nonincreasing, nonnegative.
struct TakagiFactorization {
  CMatrix u;
  RVector sigma;
};

/// B with D = B B^T.
struct NoiseMatrix {
  CMatrix entries;

  Index rows() const noexcept { return entries.rows(); }
  Index cols() const noexcept { return entries.cols(); }
};

enum class TakagiStrategy {
  // Eigendecomposition of the real symmetric 2n x 2n embedding
  // [[Re D, Im D], [Im D, -Re D]], whose eigenpairs come in +-sigma pairs.
  kRealEmbedding,
  // Unitary Lanczos reduction to complex symmetric tridiagonal form first,
  // then the embedding solver on the tridiagonal matrix.
  kLanczosTridiagonal,
};

struct TakagiOptions {
  TakagiStrategy strategy = TakagiStrategy::kRealEmbedding;
  double residual_tolerance = kResidualTolerance;
  int max_refinements = 2;
};

TakagiFactorization takagi_factorize(const ComplexSymmetricMatrix& d,
                                     const TakagiOptions& options = {});

/// B = U diag(sqrt(sigma)).
NoiseMatrix noise_matrix_from_takagi(const TakagiFactorization& f);

/// Convenience: noise_matrix_from_takagi(takagi_factorize(d, options)).
NoiseMatrix takagi_noise_matrix(const ComplexSymmetricMatrix& d,
                                const TakagiOptions& options = {});

/// ||U Sigma U^T - D||_max.
double takagi_residual(const ComplexSymmetricMatrix& d,
                       const TakagiFactorization& f);

/// ||B B^T - D||_max.
double noise_residual(const ComplexSymmetricMatrix& d, const NoiseMatrix& b);

/// ||U^H U - I||_max.
double unitarity_defect(const CMatrix& u);

}  // namespace phasegauge::linalg
