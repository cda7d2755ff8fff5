#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "phasegauge/engine/integrator.hpp"
#include "phasegauge/errors.hpp"
#include "phasegauge/observables/observables.hpp"
#include "propagate.hpp"

namespace phasegauge::engine {
namespace {

// Trajectories per reduction block. Blocks are merged strictly in index
// order, so the result does not depend on the thread count.
constexpr std::size_t kBlockSize = 32;

using Accumulators = std::vector<observables::MomentAccumulator>;  // grid x obs

}  // namespace

observables::EnsembleResult run_ensemble(
    const models::ModelSpec& spec, const IntegratorConfig& config,
    std::span<const observables::ObservableSpec> tracked) {
  validate(config);
  models::validate(spec, config.noise_enabled);
  models::validate_gauge(spec, config.gauge);
  if (tracked.empty()) throw InvalidParameter("observable list must be nonempty");

  observables::EnsembleResult result;
  result.model = models::kind_of(spec);
  result.time_grid = output_grid(config);
  const std::size_t n_grid = result.time_grid.size();
  const std::size_t n_obs = tracked.size();
  const std::size_t n_blocks = (config.n_traj + kBlockSize - 1) / kBlockSize;

  result.spike_times.assign(config.n_traj, std::nullopt);
  const std::size_t n_traces = std::min(config.keep_traces, config.n_traj);
  result.traces.resize(n_traces);

  Accumulators total(n_grid * n_obs);
  std::map<std::size_t, Accumulators> pending;
  std::size_t next_to_merge = 0;
  std::mutex merge_mutex;
  std::atomic<std::size_t> next_block{0};

  const auto work = [&] {
    for (;;) {
      const std::size_t block = next_block.fetch_add(1);
      if (block >= n_blocks) return;
      Accumulators local(n_grid * n_obs);
      const std::size_t begin = block * kBlockSize;
      const std::size_t end = std::min(begin + kBlockSize, config.n_traj);
      for (std::size_t traj = begin; traj < end; ++traj) {
        observables::TrajectoryTrace* trace =
            traj < n_traces ? &result.traces[traj] : nullptr;
        const auto spike = detail::propagate(
            spec, config, traj, [&](std::size_t g, const CVector& z) {
              for (std::size_t o = 0; o < n_obs; ++o) {
                local[g * n_obs + o].add(tracked[o].evaluate(z));
              }
              if (trace != nullptr) trace->samples.push_back(z);
            });
        result.spike_times[traj] = spike;
        if (trace != nullptr) {
          trace->index = traj;
          trace->spike_time = spike;
        }
      }
      const std::lock_guard lock(merge_mutex);
      pending.emplace(block, std::move(local));
      for (auto it = pending.find(next_to_merge); it != pending.end();
           it = pending.find(next_to_merge)) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i].merge(it->second[i]);
        pending.erase(it);
        ++next_to_merge;
      }
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(config.threads, n_blocks));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }

  result.series.resize(n_obs);
  for (std::size_t o = 0; o < n_obs; ++o) {
    auto& series = result.series[o];
    series.name = tracked[o].name;
    series.points.resize(n_grid);
    for (std::size_t g = 0; g < n_grid; ++g) {
      const auto& acc = total[g * n_obs + o];
      if (const auto err = acc.standard_error()) {
        series.points[g] = observables::Estimate{acc.mean(), *err};
      }
    }
  }
  result.n_surviving.resize(n_grid);
  for (std::size_t g = 0; g < n_grid; ++g) {
    result.n_surviving[g] = total[g * n_obs].count();
  }

  result.practical_time = static_cast<double>(step_count(config)) * config.dt;
  for (const auto& spike : result.spike_times) {
    if (spike) result.practical_time = std::min(result.practical_time, *spike);
  }
  return result;
}

observables::EnsembleResult run_ensemble(const models::ModelSpec& spec,
                                         const IntegratorConfig& config) {
  const auto catalog = observables::observable_catalog(spec);
  return run_ensemble(spec, config, catalog);
}

}  // namespace phasegauge::engine
