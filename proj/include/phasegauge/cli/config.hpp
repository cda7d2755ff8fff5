#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "phasegauge/engine/integrator.hpp"
#include "phasegauge/errors.hpp"
#include "phasegauge/models/models.hpp"

namespace phasegauge::cli {

/// Rejected configuration; field() is the flag or config key at fault.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

inline constexpr const char* kSeedEnv = "PHASEGAUGE_SEED";
inline constexpr const char* kThreadsEnv = "PHASEGAUGE_THREADS";

/// Every setting a user can give. Unset fields fall back to the layer below:
/// flags over config file over environment over built-in defaults.
struct RunOverrides {
  std::optional<std::string> model;
  std::optional<std::string> gauge;
  std::optional<std::size_t> n_traj;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::optional<std::size_t> stride;
  std::optional<std::uint64_t> seed;
  std::optional<double> spike_threshold;
  std::optional<unsigned> threads;
  std::optional<std::size_t> traces;
  std::optional<bool> no_noise;
  std::optional<std::string> output;

  std::optional<double> omega, chi, n_bosons;
  std::optional<double> j_hop, u_int;
  std::optional<double> delta1, kappa, n_mol0;

  /// Fields set here replace the ones in base.
  RunOverrides layered_over(const RunOverrides& base) const;
};

struct RunConfig {
  models::ModelSpec model;
  engine::IntegratorConfig integrator;
  std::filesystem::path output;
};

models::ModelSpec parse_model(std::string_view name);

/// "analytic", "gamma=<float>" or "takagi".
models::GaugeSpec parse_gauge(std::string_view text);

/// 1e-3, shrunk for Kerr so that (|omega| + |chi| N) dt <= 1e-3: explicit
/// Euler multiplies alpha alpha^+ by 1 + (chi N dt)^2 per step.
double default_dt(const models::ModelSpec& spec);

/// Output stride giving a grid spacing of about 0.01.
std::size_t default_stride(double dt);

/// Reads a JSON object; unknown keys and wrong types are ConfigErrors.
RunOverrides load_config_file(const std::filesystem::path& path);
RunOverrides parse_config_json(std::string_view text);

/// PHASEGAUGE_SEED / PHASEGAUGE_THREADS. Malformed values are ConfigErrors.
RunOverrides environment_overrides();

/// Applies defaults and validates. Errors name the offending field.
RunConfig resolve(const RunOverrides& overrides);

}  // namespace phasegauge::cli
