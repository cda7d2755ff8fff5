#include "phasegauge/engine/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phasegauge/engine/rng.hpp"
#include "phasegauge/errors.hpp"
#include "propagate.hpp"
#include "stepper.hpp"

namespace phasegauge::engine {

using models::GaugeSpec;
using models::ModelSpec;

namespace detail {

Stepper::Stepper(const ModelSpec& spec, const GaugeSpec& gauge,
                 const linalg::TakagiOptions& takagi, bool noise_enabled)
    : spec_(spec),
      gauge_(gauge),
      takagi_(takagi),
      noise_enabled_(noise_enabled),
      width_(models::noise_width(spec, gauge)),
      kerr_closed_form_(false) {
  if (const auto* p = std::get_if<models::KerrParams>(&spec_)) {
    kerr_ = *p;
    kerr_closed_form_ = gauge.kind != GaugeSpec::Kind::kTakagi;
    if (gauge.kind == GaugeSpec::Kind::kGamma) {
      kerr_pre_ = -kI * std::sqrt(kI * p->chi);
      cosh_g_ = std::cosh(gauge.gamma);
      sinh_g_ = std::sinh(gauge.gamma);
    } else {
      kerr_pre_ = std::sqrt(kI * p->chi);
    }
  }
}

void Stepper::kerr_step(CVector& z, double dt, std::span<const double> eta) const {
  const Complex z1 = z(0);
  const Complex z2 = z(1);
  const double w = kerr_.omega;
  const double chi = kerr_.chi;
  const Complex a1 = -kI * (w * z1 + chi * z2 * z1 * z1);
  const Complex a2 = -kI * (-w * z2 - chi * z1 * z2 * z2);
  Complex b1{0.0, 0.0};
  Complex b2{0.0, 0.0};
  if (noise_enabled_) {
    if (gauge_.kind == GaugeSpec::Kind::kGamma) {
      b1 = kerr_pre_ * (cosh_g_ * z1 * eta[0] + kI * sinh_g_ * z1 * eta[1]);
      b2 = kerr_pre_ * (-sinh_g_ * z2 * eta[0] - kI * cosh_g_ * z2 * eta[1]);
    } else {
      b1 = kerr_pre_ * kI * z1 * eta[0];
      b2 = -kerr_pre_ * z2 * eta[1];
    }
  }
  const double root = std::sqrt(dt);
  z(0) = z1 + a1 * dt + b1 * root;
  z(1) = z2 + a2 * dt + b2 * root;
}

void Stepper::step(CVector& z, double dt, std::span<const double> eta) const {
  if (kerr_closed_form_) {
    kerr_step(z, dt, eta);
    return;
  }
  CVector next = z + models::drift(spec_, z) * dt;
  if (noise_enabled_) {
    next += noise_increment(spec_, gauge_, z, eta, takagi_) * std::sqrt(dt);
  }
  z = std::move(next);
}

bool is_spike(const CVector& z, double limit) noexcept {
  for (Index j = 0; j < z.size(); ++j) {
    const Complex v = z(j);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return true;
    if (std::abs(v) > limit) return true;
  }
  return false;
}

std::optional<double> propagate(const ModelSpec& spec,
                                const IntegratorConfig& config,
                                std::size_t trajectory_index,
                                const SampleSink& sink) {
  const Stepper stepper(spec, config.gauge, config.takagi, config.noise_enabled);
  NoiseStream noise(config.master_seed, trajectory_index);
  std::vector<double> eta(static_cast<std::size_t>(stepper.noise_width()), 0.0);

  CVector z = models::initial_state(spec).z;
  const double limit =
      config.spike_threshold * std::max(1.0, z.cwiseAbs().maxCoeff());
  const std::size_t steps = step_count(config);
  const std::size_t stride = config.output_stride;

  sink(0, z);
  for (std::size_t k = 1; k <= steps; ++k) {
    if (config.noise_enabled) noise.fill(eta);
    const double t = static_cast<double>(k) * config.dt;
    try {
      stepper.step(z, config.dt, eta);
    } catch (const FactorizationFailed&) {
      return t;
    } catch (const InvalidMatrix&) {
      return t;
    }
    if (is_spike(z, limit)) return t;
    if (k % stride == 0) sink(k / stride, z);
  }
  return std::nullopt;
}

}  // namespace detail

void validate(const IntegratorConfig& config) {
  const auto fail = [](const std::string& what) { throw InvalidParameter(what); };
  if (!(config.dt > 0.0) || !std::isfinite(config.dt)) fail("dt must be positive");
  if (!(config.t_max >= config.dt) || !std::isfinite(config.t_max)) {
    fail("t_max must be finite and at least dt");
  }
  if (config.n_traj == 0) fail("n_traj must be positive");
  if (!(config.spike_threshold > 1.0)) fail("spike_threshold must exceed 1");
  if (config.output_stride == 0) fail("output_stride must be positive");
  if (config.threads == 0) fail("threads must be positive");
}

std::size_t step_count(const IntegratorConfig& config) {
  return static_cast<std::size_t>(std::llround(config.t_max / config.dt));
}

std::vector<double> output_grid(const IntegratorConfig& config) {
  const std::size_t steps = step_count(config);
  std::vector<double> grid;
  for (std::size_t k = 0; k <= steps; k += config.output_stride) {
    grid.push_back(static_cast<double>(k) * config.dt);
  }
  return grid;
}

CVector noise_increment(const ModelSpec& spec, const GaugeSpec& gauge,
                        const CVector& z, std::span<const double> eta,
                        const linalg::TakagiOptions& takagi) {
  const Index width = models::noise_width(spec, gauge);
  if (static_cast<Index>(eta.size()) != width) {
    std::ostringstream msg;
    msg << gauge.label() << " gauge consumes " << width << " real noises, got "
        << eta.size();
    throw InvalidNoiseShape(msg.str());
  }
  switch (gauge.kind) {
    case GaugeSpec::Kind::kAnalytic:
      return models::analytic_noise_term(spec, z, models::make_complex_noises(eta));
    case GaugeSpec::Kind::kGamma:
      return models::gamma_noise_term(std::get<models::KerrParams>(spec), z,
                                      gauge.gamma, eta);
    case GaugeSpec::Kind::kTakagi: {
      const linalg::NoiseMatrix b =
          linalg::takagi_noise_matrix(models::diffusion_matrix(spec, z), takagi);
      const Eigen::Map<const RVector> noise(eta.data(), width);
      return b.entries * noise.cast<Complex>();
    }
  }
  throw UnsupportedGauge("unknown gauge");
}

models::PhaseSpaceState euler_maruyama_step(const ModelSpec& spec,
                                            const GaugeSpec& gauge,
                                            const models::PhaseSpaceState& state,
                                            double dt, std::span<const double> eta,
                                            const linalg::TakagiOptions& takagi) {
  const detail::Stepper stepper(spec, gauge, takagi, true);
  if (static_cast<Index>(eta.size()) != stepper.noise_width()) {
    throw InvalidNoiseShape("euler_maruyama_step: wrong number of real noises");
  }
  if (state.z.size() != models::dimension(spec)) {
    throw ModelDimensionError("euler_maruyama_step: state dimension mismatch");
  }
  models::PhaseSpaceState next = state;
  stepper.step(next.z, dt, eta);
  next.t = state.t + dt;
  return next;
}

Trajectory integrate_trajectory(const ModelSpec& spec,
                                const IntegratorConfig& config,
                                std::size_t trajectory_index) {
  validate(config);
  models::validate(spec, config.noise_enabled);
  models::validate_gauge(spec, config.gauge);
  Trajectory out;
  out.spike_time = detail::propagate(
      spec, config, trajectory_index, [&](std::size_t g, const CVector& z) {
        out.times.push_back(static_cast<double>(g * config.output_stride) *
                            config.dt);
        out.samples.push_back(z);
      });
  return out;
}

}  // namespace phasegauge::engine
