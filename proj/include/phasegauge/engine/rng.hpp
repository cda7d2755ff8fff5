#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace phasegauge::engine {

/// Independent Gaussian stream for one trajectory, seeded from
/// (master_seed, trajectory_index) only, so results never depend on which
/// worker ran the trajectory.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t master_seed, std::uint64_t trajectory_index);

  /// Fills eta with iid standard normal draws in order.
  void fill(std::span<double> eta);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace phasegauge::engine
