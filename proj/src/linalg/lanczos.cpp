#include "phasegauge/linalg/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "phasegauge/errors.hpp"

namespace phasegauge::linalg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void orthogonalize_against(const CMatrix& q, Index count, CVector& v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index k = 0; k < count; ++k) {
      v -= q.col(k).dot(v) * q.col(k);
    }
  }
}

}  // namespace

CMatrix Tridiagonalization::t() const {
  const Index n = diagonal.size();
  CMatrix out = CMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    out(j, j) = diagonal(j);
    if (j + 1 < n) {
      out(j, j + 1) = off_diagonal(j);
      out(j + 1, j) = off_diagonal(j);
    }
  }
  return out;
}

Tridiagonalization lanczos_tridiagonalize(const ComplexSymmetricMatrix& d,
                                          const LanczosOptions& options) {
  const Index n = d.size();
  if (!d.all_finite()) {
    throw InvalidMatrix("lanczos_tridiagonalize: non-finite entries");
  }
  Tridiagonalization out{CMatrix::Zero(n, n), CVector::Zero(n),
                         RVector::Zero(std::max<Index>(n - 1, 0))};
  if (n == 0) return out;

  const double norm = std::max(1.0, d.max_abs());
  const double breakdown = options.breakdown_tolerance * norm;
  const double local = kEps * static_cast<double>(n) * norm;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;

  // omega_prev[k] ~ |q_{j-1}^H q_k|, omega_cur[k] ~ |q_j^H q_k|.
  std::vector<double> omega_prev(n, 0.0);
  std::vector<double> omega_cur(n, 0.0);
  std::vector<double> omega_next(n, 0.0);
  omega_cur[0] = 1.0;
  bool reorthogonalize_next = false;

  CVector q = CVector::Unit(n, 0);
  for (Index j = 0; j < n; ++j) {
    out.q.col(j) = q;
    CVector w = d.dense() * q.conjugate();
    if (j > 0) w -= out.off_diagonal(j - 1) * out.q.col(j - 1);
    out.diagonal(j) = q.dot(w);
    w -= out.diagonal(j) * q;
    if (j + 1 == n) break;

    double beta = w.norm();
    bool restarted = false;
    if (beta > breakdown) {
      // Magnitude form of the omega recurrence; the antilinear operator
      // conj-mixes the alpha terms, so |alpha_k| + |alpha_j| replaces the
      // usual alpha_k - alpha_j.
      double worst = 0.0;
      for (Index k = 0; k < j; ++k) {
        double est = (std::abs(out.diagonal(k)) + std::abs(out.diagonal(j))) *
                     omega_cur[k];
        est += out.off_diagonal(k) * omega_cur[k + 1];
        if (k > 0) est += out.off_diagonal(k - 1) * omega_cur[k - 1];
        if (j > 0) est += out.off_diagonal(j - 1) * omega_prev[k];
        omega_next[k] = est / beta + local / beta;
        worst = std::max(worst, omega_next[k]);
      }
      omega_next[j] = local / beta;
      const bool forced = reorthogonalize_next;
      reorthogonalize_next = false;
      if (forced || worst > options.orthogonality_threshold) {
        // Modified partial orthogonalization: this vector and the next one.
        orthogonalize_against(out.q, j + 1, w);
        beta = w.norm();
        std::fill(omega_next.begin(), omega_next.begin() + j + 1, kEps);
        reorthogonalize_next = !forced;
      }
    }
    if (beta <= breakdown) {
      // Invariant subspace found: restart from a random vector orthogonal to
      // everything so far and decouple the tridiagonal blocks.
      bool found = false;
      for (int attempt = 0; attempt < options.max_restart_attempts; ++attempt) {
        CVector r(n);
        for (Index k = 0; k < n; ++k) r(k) = Complex(gauss(rng), gauss(rng));
        r /= r.norm();
        orthogonalize_against(out.q, j + 1, r);
        const double rn = r.norm();
        if (rn > 0.5) {
          w = r / rn;
          found = true;
          break;
        }
      }
      if (!found) {
        throw TridiagonalizationFailed(
            "lanczos_tridiagonalize: restart budget exhausted");
      }
      beta = 0.0;
      restarted = true;
      std::fill(omega_next.begin(), omega_next.begin() + j + 1, kEps);
      reorthogonalize_next = false;
    }
    out.off_diagonal(j) = beta;
    q = restarted ? w : CVector(w / beta);
    omega_next[j + 1] = 1.0;
    std::swap(omega_prev, omega_cur);
    std::swap(omega_cur, omega_next);
  }
  return out;
}

}  // namespace phasegauge::linalg
