#pragma once

#include "phasegauge/types.hpp"

namespace phasegauge::linalg {

/// Dense complex symmetric matrix (D == D^T, not Hermitian).
///
/// Symmetry holds exactly by construction: every write goes to both mirrored
/// slots, and conversion from a dense matrix rejects anything that is not
/// bitwise symmetric.
class ComplexSymmetricMatrix {
 public:
  ComplexSymmetricMatrix() = default;
  explicit ComplexSymmetricMatrix(Index n);

  /// Throws InvalidMatrix if `m` is not square or not exactly symmetric.
  static ComplexSymmetricMatrix from_dense(const CMatrix& m);

  /// Symmetrizes (m + m^T) / 2; for use with products like B B^T that are
  /// symmetric only up to rounding.
  static ComplexSymmetricMatrix symmetrized(const CMatrix& m);

  Index size() const noexcept { return data_.rows(); }
  Complex operator()(Index j, Index k) const { return data_(j, k); }
  void set(Index j, Index k, Complex value);

  const CMatrix& dense() const noexcept { return data_; }
  double max_abs() const;
  bool all_finite() const;

 private:
  CMatrix data_;
};

double max_abs(const CMatrix& m);

}  // namespace phasegauge::linalg
