#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phasegauge/models/models.hpp"
#include "phasegauge/observables/statistics.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::observables {

/// Per-trajectory quantity whose ensemble mean is a physical expectation
/// value. Composite observables (products, sums) are evaluated on each
/// trajectory before averaging.
struct ObservableSpec {
  std::string name;
  std::function<Complex(const CVector&)> evaluate;
};

struct Estimate {
  Complex mean;
  StandardError error;
};

/// One point per time-grid entry; empty where fewer than two trajectories
/// survive.
struct ObservableSeries {
  std::string name;
  std::vector<std::optional<Estimate>> points;
};

/// Raw phase-space samples of one trajectory on the output grid, up to its
/// spike.
struct TrajectoryTrace {
  std::size_t index = 0;
  std::vector<CVector> samples;
  std::optional<double> spike_time;
};

struct EnsembleResult {
  models::ModelKind model = models::ModelKind::kKerr;
  std::vector<double> time_grid;
  std::vector<ObservableSeries> series;
  std::vector<std::size_t> n_surviving;
  std::vector<std::optional<double>> spike_times;
  // Earliest spike across the ensemble, t_max if none.
  double practical_time = 0.0;
  std::vector<TrajectoryTrace> traces;

  /// Throws std::out_of_range for an unknown name.
  const ObservableSeries& series_named(const std::string& name) const;
};

}  // namespace phasegauge::observables
