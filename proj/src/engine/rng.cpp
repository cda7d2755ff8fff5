#include "phasegauge/engine/rng.hpp"

namespace phasegauge::engine {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::seed_seq make_seed(std::uint64_t master_seed, std::uint64_t index) {
  const std::uint64_t a = mix64(master_seed);
  const std::uint64_t b = mix64(a ^ mix64(index + 0x632be59bd9b4e019ULL));
  return std::seed_seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                       static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t master_seed,
                         std::uint64_t trajectory_index) {
  std::seed_seq seq = make_seed(master_seed, trajectory_index);
  engine_.seed(seq);
}

void NoiseStream::fill(std::span<double> eta) {
  for (double& e : eta) e = normal_(engine_);
}

}  // namespace phasegauge::engine
