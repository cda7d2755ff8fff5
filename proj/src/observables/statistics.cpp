#include "phasegauge/observables/statistics.hpp"

#include <cmath>

namespace phasegauge::observables {

std::optional<StandardError> standard_error(std::span<const Complex> values) {
  const std::size_t count = values.size();
  if (count < 2) return std::nullopt;
  double sum_re = 0.0;
  double sum_im = 0.0;
  for (const Complex& v : values) {
    sum_re += v.real();
    sum_im += v.imag();
  }
  const double n = static_cast<double>(count);
  const double mean_re = sum_re / n;
  const double mean_im = sum_im / n;
  double ss_re = 0.0;
  double ss_im = 0.0;
  for (const Complex& v : values) {
    ss_re += (v.real() - mean_re) * (v.real() - mean_re);
    ss_im += (v.imag() - mean_im) * (v.imag() - mean_im);
  }
  return StandardError{std::sqrt(ss_re / (n - 1.0) / n),
                       std::sqrt(ss_im / (n - 1.0) / n)};
}

void MomentAccumulator::add(Complex value) noexcept {
  ++count_;
  const double n = static_cast<double>(count_);
  const double d_re = value.real() - mean_re_;
  const double d_im = value.imag() - mean_im_;
  mean_re_ += d_re / n;
  mean_im_ += d_im / n;
  m2_re_ += d_re * (value.real() - mean_re_);
  m2_im_ += d_im * (value.imag() - mean_im_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double d_re = other.mean_re_ - mean_re_;
  const double d_im = other.mean_im_ - mean_im_;
  mean_re_ += d_re * nb / n;
  mean_im_ += d_im * nb / n;
  m2_re_ += other.m2_re_ + d_re * d_re * na * nb / n;
  m2_im_ += other.m2_im_ + d_im * d_im * na * nb / n;
  count_ += other.count_;
}

std::optional<StandardError> MomentAccumulator::standard_error() const noexcept {
  if (count_ < 2) return std::nullopt;
  const double n = static_cast<double>(count_);
  return StandardError{std::sqrt(m2_re_ / (n - 1.0) / n),
                       std::sqrt(m2_im_ / (n - 1.0) / n)};
}

}  // namespace phasegauge::observables
