#pragma once

#include <cmath>
#include <span>

#include "phasegauge/linalg/takagi.hpp"
#include "phasegauge/models/models.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::engine::detail {

/// In-place Euler-Maruyama update shared by the public step function and the
/// trajectory loops. The Kerr model runs on scalars; it needs ~1e5 steps per
/// trajectory at the benchmark parameters.
class Stepper {
 public:
  Stepper(const models::ModelSpec& spec, const models::GaugeSpec& gauge,
          const linalg::TakagiOptions& takagi, bool noise_enabled);

  Index noise_width() const noexcept { return width_; }

  /// Throws FactorizationFailed / InvalidMatrix from the Takagi gauge.
  void step(CVector& z, double dt, std::span<const double> eta) const;

 private:
  void kerr_step(CVector& z, double dt, std::span<const double> eta) const;

  models::ModelSpec spec_;
  models::GaugeSpec gauge_;
  linalg::TakagiOptions takagi_;
  bool noise_enabled_;
  Index width_;
  bool kerr_closed_form_;
  models::KerrParams kerr_;
  Complex kerr_pre_;
  double cosh_g_ = 1.0;
  double sinh_g_ = 0.0;
};

}  // namespace phasegauge::engine::detail
