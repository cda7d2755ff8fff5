#include <algorithm>
#include <cmath>

#include "phasegauge/engine/integrator.hpp"
#include "phasegauge/errors.hpp"

namespace phasegauge::engine {

CVector stratonovich_correction(const models::ModelSpec& spec, const CVector& z,
                                const models::GaugeSpec& gauge) {
  if (gauge.kind == models::GaugeSpec::Kind::kTakagi) {
    throw UnsupportedGauge(
        "stratonovich_correction: numerical noise matrices are Ito-only");
  }
  const CMatrix b = models::analytic_noise_matrix(spec, z, gauge);
  const Index n = b.rows();
  CVector correction = CVector::Zero(n);
  for (Index j = 0; j < n; ++j) {
    // Entries are polynomials in z, so a real-direction central difference
    // gives the complex derivative.
    const double h = 1e-5 * std::max(1.0, std::abs(z(j)));
    CVector plus = z;
    CVector minus = z;
    plus(j) += h;
    minus(j) -= h;
    const CMatrix derivative = (models::analytic_noise_matrix(spec, plus, gauge) -
                                models::analytic_noise_matrix(spec, minus, gauge)) /
                               (2.0 * h);
    // sum_k B_jk dB_ik/dz_j for every i.
    correction += derivative * b.row(j).transpose();
  }
  return -0.5 * correction;
}

}  // namespace phasegauge::engine
