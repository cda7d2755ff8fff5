#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "phasegauge/types.hpp"

namespace phasegauge::observables {

/// Standard errors of the real and imaginary parts, computed separately.
struct StandardError {
  double re = 0.0;
  double im = 0.0;
};

/// Sample standard deviation / sqrt(count) per component; missing for fewer
/// than two values.
std::optional<StandardError> standard_error(std::span<const Complex> values);

/// Streaming mean/variance (Welford) with Chan's pairwise merge. Merging in a
/// fixed order gives bit-identical results regardless of how the values were
/// partitioned across workers.
class MomentAccumulator {
 public:
  void add(Complex value) noexcept;
  void merge(const MomentAccumulator& other) noexcept;

  std::size_t count() const noexcept { return count_; }
  Complex mean() const noexcept { return {mean_re_, mean_im_}; }
  std::optional<StandardError> standard_error() const noexcept;

 private:
  std::size_t count_ = 0;
  double mean_re_ = 0.0;
  double mean_im_ = 0.0;
  double m2_re_ = 0.0;
  double m2_im_ = 0.0;
};

}  // namespace phasegauge::observables
