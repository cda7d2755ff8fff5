#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phasegauge/linalg/takagi.hpp"
#include "phasegauge/models/models.hpp"
#include "phasegauge/observables/ensemble.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::engine {

inline constexpr double kDefaultDt = 1e-3;
inline constexpr std::size_t kDefaultOutputStride = 10;
inline constexpr double kDefaultSpikeThreshold = 1e3;

struct IntegratorConfig {
  double dt = kDefaultDt;
  double t_max = 1.0;
  std::size_t n_traj = 1000;
  std::uint64_t master_seed = 0;
  // A trajectory spikes once max_j |z_j| exceeds
  // spike_threshold * max(1, ||z(0)||_inf), or on any non-finite entry.
  double spike_threshold = kDefaultSpikeThreshold;
  models::GaugeSpec gauge;
  std::size_t output_stride = kDefaultOutputStride;
  bool noise_enabled = true;
  unsigned threads = 1;
  // Number of leading trajectories whose raw samples are kept in the result.
  std::size_t keep_traces = 0;
  linalg::TakagiOptions takagi;
};

/// Throws InvalidParameter naming the offending field.
void validate(const IntegratorConfig& config);

/// round(t_max / dt).
std::size_t step_count(const IntegratorConfig& config);

/// Output times k * output_stride * dt up to t_max.
std::vector<double> output_grid(const IntegratorConfig& config);

/// b(z, eta) for the given gauge; eta holds noise_width(spec, gauge) real
/// normals. Takagi gauge refactorizes D(z) on every call.
CVector noise_increment(const models::ModelSpec& spec,
                        const models::GaugeSpec& gauge, const CVector& z,
                        std::span<const double> eta,
                        const linalg::TakagiOptions& takagi = {});

/// z' = z + a(z) dt + b(z, eta) sqrt(dt) (Ito, explicit).
models::PhaseSpaceState euler_maruyama_step(
    const models::ModelSpec& spec, const models::GaugeSpec& gauge,
    const models::PhaseSpaceState& state, double dt,
    std::span<const double> eta, const linalg::TakagiOptions& takagi = {});

struct Trajectory {
  std::vector<double> times;
  std::vector<CVector> samples;
  std::optional<double> spike_time;
};

/// Deterministic in (config.master_seed, trajectory_index).
Trajectory integrate_trajectory(const models::ModelSpec& spec,
                                const IntegratorConfig& config,
                                std::size_t trajectory_index);

/// Mean and standard error of each observable over the trajectories that
/// have not spiked yet, at every output time.
observables::EnsembleResult run_ensemble(
    const models::ModelSpec& spec, const IntegratorConfig& config,
    std::span<const observables::ObservableSpec> observables);

/// Convenience overload using observable_catalog(spec).
observables::EnsembleResult run_ensemble(const models::ModelSpec& spec,
                                         const IntegratorConfig& config);

/// SC_i = -1/2 sum_{j,k} B_jk dB_ik/dz_j for a closed-form gauge, with the
/// derivatives taken by central differences. Takagi gauge is rejected.
CVector stratonovich_correction(
    const models::ModelSpec& spec, const CVector& z,
    const models::GaugeSpec& gauge = models::GaugeSpec::analytic());

}  // namespace phasegauge::engine
