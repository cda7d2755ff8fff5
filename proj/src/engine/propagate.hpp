#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "phasegauge/engine/integrator.hpp"

namespace phasegauge::engine::detail {

/// Receives (grid index, state) at every output time before the spike.
using SampleSink = std::function<void(std::size_t, const CVector&)>;

bool is_spike(const CVector& z, double limit) noexcept;

/// Runs one trajectory from the initial state; returns its spike time.
std::optional<double> propagate(const models::ModelSpec& spec,
                                const IntegratorConfig& config,
                                std::size_t trajectory_index,
                                const SampleSink& sink);

}  // namespace phasegauge::engine::detail
