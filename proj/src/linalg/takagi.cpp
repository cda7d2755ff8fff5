#include "phasegauge/linalg/takagi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "phasegauge/errors.hpp"
#include "phasegauge/linalg/lanczos.hpp"

namespace phasegauge::linalg {
namespace {

// Columns whose norm drops below this after projection are linearly
// dependent on earlier ones (u and i*u both taken from the null space).
constexpr double kDependentColumn = 0.5;

void project_out(const CMatrix& u, Index upto, Eigen::Ref<CVector> v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index k = 0; k < upto; ++k) {
      v -= u.col(k).dot(v) * u.col(k);
    }
  }
}

// Makes the columns of u orthonormal in order, taking the first `first` as
// already orthonormal. A dependent column is replaced by the standard basis
// vector with the largest component outside the span of the previous columns.
void orthonormalize_columns(CMatrix& u, Index first = 0) {
  const Index n = u.rows();
  for (Index j = first; j < u.cols(); ++j) {
    CVector v = u.col(j);
    project_out(u, j, v);
    double norm = v.norm();
    if (norm < kDependentColumn) {
      // For orthonormal previous columns, e_k keeps 1 - sum |u(k, i)|^2 of
      // its squared norm after projection.
      Index best = 0;
      double best_left = -1.0;
      for (Index e = 0; e < n; ++e) {
        const double left = 1.0 - u.row(e).head(j).squaredNorm();
        if (left > best_left) {
          best_left = left;
          best = e;
        }
      }
      v = CVector::Unit(n, best);
      project_out(u, j, v);
      norm = v.norm();
    }
    u.col(j) = v / norm;
  }
}

TakagiFactorization embedding_takagi(const CMatrix& d) {
  const Index n = d.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  const Eigen::MatrixXd re = d.real();
  const Eigen::MatrixXd im = d.imag();
  m.topLeftCorner(n, n) = re;
  m.topRightCorner(n, n) = im;
  m.bottomLeftCorner(n, n) = im;
  m.bottomRightCorner(n, n) = -re;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw FactorizationFailed("symmetric eigensolver did not converge",
                              std::numeric_limits<double>::infinity());
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  TakagiFactorization f{CMatrix(n, n), RVector(n)};
  for (Index i = 0; i < n; ++i) {
    const Index col = 2 * n - 1 - i;
    const double s = values(col);
    f.sigma(i) = s < kSigmaClamp ? 0.0 : s;
    f.u.col(i) = vectors.col(col).head(n).cast<Complex>() +
                 kI * vectors.col(col).tail(n).cast<Complex>();
  }
  orthonormalize_columns(f.u);
  return f;
}

// Splits the indices into two groups such that D vanishes inside each group,
// i.e. D = [[0, C], [C^T, 0]] after a permutation. Returns the group of every
// index, or nothing if D has a nonzero diagonal, an odd cycle, or is zero.
std::optional<std::vector<int>> bipartition(const CMatrix& d) {
  const Index n = d.rows();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Index> queue;
  bool any = false;
  for (Index start = 0; start < n; ++start) {
    if (d(start, start) != Complex{}) return std::nullopt;
    if (side[start] >= 0) continue;
    side[start] = 0;
    queue.assign(1, start);
    while (!queue.empty()) {
      const Index i = queue.back();
      queue.pop_back();
      for (Index j = 0; j < n; ++j) {
        if (j == i || d(i, j) == Complex{}) continue;
        any = true;
        if (side[j] < 0) {
          side[j] = 1 - side[i];
          queue.push_back(j);
        } else if (side[j] == side[i]) {
          return std::nullopt;
        }
      }
    }
  }
  if (!any) return std::nullopt;
  return side;
}

struct SmallSvd {
  CMatrix left;   // p x p unitary
  CMatrix right;  // q x q unitary
  RVector values; // q values, descending
};

// One-sided Jacobi SVD of a tall matrix (p >= q): rotates the columns of
// W = C V until they are orthogonal, then C = P S V^H with P_k = W_k / S_k.
// Much cheaper than the general solvers at the sizes the models produce.
SmallSvd jacobi_svd(const CMatrix& c) {
  const Index p = c.rows();
  const Index q = c.cols();
  CMatrix w = c;
  CMatrix v = CMatrix::Identity(q, q);
  constexpr double kOrthogonal = 1e-15;
  // Columns below this squared norm are left alone: they end up in the null
  // space, and rotating rounding noise would only cost sweeps.
  const double negligible = 1e-24 * c.squaredNorm();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (Index i = 0; i + 1 < q; ++i) {
      for (Index j = i + 1; j < q; ++j) {
        const double alpha = w.col(i).squaredNorm();
        const double beta = w.col(j).squaredNorm();
        const Complex g = w.col(i).dot(w.col(j));
        const double mag = std::abs(g);
        if (std::min(alpha, beta) <= negligible) continue;
        if (mag <= kOrthogonal * std::sqrt(alpha * beta) || mag == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        const Complex phase = g / mag;
        for (CMatrix* m : {&w, &v}) {
          for (Index r = 0; r < m->rows(); ++r) {
            const Complex a = (*m)(r, i);
            const Complex b = (*m)(r, j);
            (*m)(r, i) = cs * a - sn * std::conj(phase) * b;
            (*m)(r, j) = sn * phase * a + cs * b;
          }
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<Index> order(static_cast<std::size_t>(q));
  RVector norms(q);
  for (Index k = 0; k < q; ++k) {
    order[k] = k;
    norms(k) = w.col(k).norm();
  }
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return norms(a) > norms(b); });
  const double largest = q > 0 ? norms(order[0]) : 0.0;

  SmallSvd svd{CMatrix::Zero(p, p), CMatrix(q, q), RVector(q)};
  Index valid = 0;
  for (Index k = 0; k < q; ++k) {
    const Index src = order[k];
    svd.values(k) = norms(src);
    svd.right.col(k) = v.col(src);
    // Below this the direction of W_k is noise; s_k then adds at most
    // 1e-11 * s_max to the residual whatever P_k is.
    if (norms(src) > 1e-11 * largest) {
      svd.left.col(k) = w.col(src) / norms(src);
      ++valid;
    }
  }
  orthonormalize_columns(svd.left, valid);
  return svd;
}

// With C = P S Q^H, the columns [p_k; conj(q_k)] / sqrt(2) and
// i [p_k; -conj(q_k)] / sqrt(2) both carry s_k. Left singular vectors beyond
// the rank complete the basis with sigma = 0.
TakagiFactorization bipartite_takagi(const CMatrix& d,
                                     const std::vector<int>& side) {
  const Index n = d.rows();
  std::vector<Index> rows;
  std::vector<Index> cols;
  rows.reserve(static_cast<std::size_t>(n));
  cols.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) (side[i] == 0 ? rows : cols).push_back(i);
  if (rows.size() < cols.size()) std::swap(rows, cols);
  const Index p = static_cast<Index>(rows.size());
  const Index q = static_cast<Index>(cols.size());
  CMatrix c(p, q);
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < q; ++j) c(i, j) = d(rows[i], cols[j]);
  }
  const SmallSvd svd = jacobi_svd(c);
  const double scale = 1.0 / std::sqrt(2.0);

  TakagiFactorization f{CMatrix::Zero(n, n), RVector::Zero(n)};
  Index col = 0;
  for (Index k = 0; k < q; ++k, col += 2) {
    const double s = svd.values(k) < kSigmaClamp ? 0.0 : svd.values(k);
    f.sigma(col) = s;
    f.sigma(col + 1) = s;
    for (Index i = 0; i < p; ++i) {
      f.u(rows[i], col) = scale * svd.left(i, k);
      f.u(rows[i], col + 1) = scale * kI * svd.left(i, k);
    }
    for (Index j = 0; j < q; ++j) {
      const Complex r = std::conj(svd.right(j, k));
      f.u(cols[j], col) = scale * r;
      f.u(cols[j], col + 1) = -scale * kI * r;
    }
  }
  for (Index k = q; k < p; ++k, ++col) {
    for (Index i = 0; i < p; ++i) f.u(rows[i], col) = svd.left(i, k);
  }
  return f;
}

TakagiFactorization dense_takagi(const CMatrix& d) {
  if (const auto side = bipartition(d)) return bipartite_takagi(d, *side);
  return embedding_takagi(d);
}

}  // namespace

TakagiFactorization takagi_factorize(const ComplexSymmetricMatrix& d,
                                     const TakagiOptions& options) {
  if (!d.all_finite()) {
    throw InvalidMatrix("takagi_factorize: non-finite entries");
  }
  const Index n = d.size();
  if (n == 0) return {CMatrix(0, 0), RVector(0)};

  TakagiFactorization f;
  if (options.strategy == TakagiStrategy::kLanczosTridiagonal) {
    const Tridiagonalization tri = lanczos_tridiagonalize(d);
    const TakagiFactorization inner = embedding_takagi(tri.t());
    f.u = tri.q * inner.u;
    f.sigma = inner.sigma;
  } else {
    f = dense_takagi(d.dense());
  }

  const double bound = options.residual_tolerance * std::max(1.0, d.max_abs());
  double residual = takagi_residual(d, f);
  for (int round = 0; round < options.max_refinements && residual > bound;
       ++round) {
    // U^H D conj(U) is diagonal up to the current error; factorize it and fold
    // the correction back into U.
    const CMatrix inner = f.u.adjoint() * d.dense() * f.u.conjugate();
    const TakagiFactorization step =
        embedding_takagi(ComplexSymmetricMatrix::symmetrized(inner).dense());
    f.u = f.u * step.u;
    f.sigma = step.sigma;
    residual = takagi_residual(d, f);
  }
  if (!(residual <= bound)) {
    std::ostringstream msg;
    msg << "takagi_factorize: residual " << residual << " exceeds " << bound;
    throw FactorizationFailed(msg.str(), residual);
  }
  return f;
}

NoiseMatrix noise_matrix_from_takagi(const TakagiFactorization& f) {
  RVector root(f.sigma.size());
  for (Index i = 0; i < f.sigma.size(); ++i) {
    root(i) = f.sigma(i) < kSigmaClamp ? 0.0 : std::sqrt(f.sigma(i));
  }
  return {f.u * root.cast<Complex>().asDiagonal()};
}

NoiseMatrix takagi_noise_matrix(const ComplexSymmetricMatrix& d,
                                const TakagiOptions& options) {
  return noise_matrix_from_takagi(takagi_factorize(d, options));
}

double takagi_residual(const ComplexSymmetricMatrix& d,
                       const TakagiFactorization& f) {
  const CMatrix& dense = d.dense();
  const Index n = dense.rows();
  std::vector<Index> active;
  active.reserve(static_cast<std::size_t>(f.sigma.size()));
  for (Index k = 0; k < f.sigma.size(); ++k) {
    if (f.sigma(k) != 0.0) active.push_back(k);
  }
  // Both sides are symmetric, so the upper triangle suffices.
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) {
      Complex rebuilt{0.0, 0.0};
      for (Index k : active) rebuilt += f.sigma(k) * f.u(i, k) * f.u(j, k);
      worst = std::max(worst, std::norm(rebuilt - dense(i, j)));
    }
  }
  if (std::isfinite(worst)) return std::sqrt(worst);
  const CMatrix scaled = f.u * f.sigma.cast<Complex>().asDiagonal();
  return max_abs(scaled * f.u.transpose() - dense);
}

double noise_residual(const ComplexSymmetricMatrix& d, const NoiseMatrix& b) {
  return max_abs(b.entries * b.entries.transpose() - d.dense());
}

double unitarity_defect(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()));
}

}  // namespace phasegauge::linalg
