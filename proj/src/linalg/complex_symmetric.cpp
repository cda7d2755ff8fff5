#include "phasegauge/linalg/complex_symmetric.hpp"

#include <cmath>

#include "phasegauge/errors.hpp"

namespace phasegauge::linalg {

ComplexSymmetricMatrix::ComplexSymmetricMatrix(Index n)
    : data_(CMatrix::Zero(n, n)) {}

ComplexSymmetricMatrix ComplexSymmetricMatrix::from_dense(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidMatrix("complex symmetric matrix must be square");
  }
  for (Index j = 0; j < m.rows(); ++j) {
    for (Index k = j + 1; k < m.cols(); ++k) {
      if (m(j, k) != m(k, j)) {
        throw InvalidMatrix("matrix is not symmetric");
      }
    }
  }
  ComplexSymmetricMatrix out;
  out.data_ = m;
  return out;
}

ComplexSymmetricMatrix ComplexSymmetricMatrix::symmetrized(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidMatrix("complex symmetric matrix must be square");
  }
  ComplexSymmetricMatrix out(m.rows());
  for (Index j = 0; j < m.rows(); ++j) {
    out.data_(j, j) = m(j, j);
    for (Index k = j + 1; k < m.cols(); ++k) {
      out.set(j, k, 0.5 * (m(j, k) + m(k, j)));
    }
  }
  return out;
}

void ComplexSymmetricMatrix::set(Index j, Index k, Complex value) {
  data_(j, k) = value;
  data_(k, j) = value;
}

double ComplexSymmetricMatrix::max_abs() const { return linalg::max_abs(data_); }

bool ComplexSymmetricMatrix::all_finite() const {
  for (Index k = 0; k < data_.cols(); ++k) {
    for (Index j = 0; j < data_.rows(); ++j) {
      const Complex v = data_(j, k);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  // Squared moduli avoid a hypot call per entry; redo with hypot on overflow.
  const double squared = m.cwiseAbs2().maxCoeff();
  return std::isfinite(squared) ? std::sqrt(squared) : m.cwiseAbs().maxCoeff();
}

}  // namespace phasegauge::linalg
