#include "phasegauge/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phasegauge::cli {
namespace {

using nlohmann::json;

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

template <typename T>
std::optional<T> read_key(const json& obj, const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
    return v.get<std::string>();
  } else if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
    return v.get<bool>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_unsigned()) {
      throw ConfigError(key, "expected a non-negative integer");
    }
    return v.get<T>();
  } else {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<T>();
  }
}

template <typename T>
T parse_env_integer(const char* name, const char* text) {
  T value{};
  const char* end = text + std::char_traits<char>::length(text);
  const auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc{} || ptr != end || ptr == text) {
    throw ConfigError(name, std::string("not a non-negative integer: '") + text + "'");
  }
  return value;
}

void require_positive(const char* field, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(field, "must be a positive finite number");
  }
}

void require_finite(const char* field, double value) {
  if (!std::isfinite(value)) throw ConfigError(field, "must be finite");
}

}  // namespace

RunOverrides RunOverrides::layered_over(const RunOverrides& base) const {
  RunOverrides out = base;
  take(out.model, model);
  take(out.gauge, gauge);
  take(out.n_traj, n_traj);
  take(out.t_max, t_max);
  take(out.dt, dt);
  take(out.stride, stride);
  take(out.seed, seed);
  take(out.spike_threshold, spike_threshold);
  take(out.threads, threads);
  take(out.traces, traces);
  take(out.no_noise, no_noise);
  take(out.output, output);
  take(out.omega, omega);
  take(out.chi, chi);
  take(out.n_bosons, n_bosons);
  take(out.j_hop, j_hop);
  take(out.u_int, u_int);
  take(out.delta1, delta1);
  take(out.kappa, kappa);
  take(out.n_mol0, n_mol0);
  return out;
}

models::ModelSpec parse_model(std::string_view name) {
  if (name == "kerr") return models::KerrParams{};
  if (name == "hubbard") return models::HubbardParams{};
  if (name == "fermi-bose") return models::FermiBoseParams{};
  throw ConfigError("model", "unknown model '" + std::string(name) +
                                 "' (expected kerr, hubbard or fermi-bose)");
}

models::GaugeSpec parse_gauge(std::string_view text) {
  if (text == "analytic") return models::GaugeSpec::analytic();
  if (text == "takagi") return models::GaugeSpec::takagi();
  if (text.starts_with("gamma=")) {
    const std::string value(text.substr(6));
    double gamma = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), gamma);
    if (ec == std::errc{} && ptr == value.data() + value.size() && !value.empty() &&
        std::isfinite(gamma)) {
      return models::GaugeSpec::gamma_gauge(gamma);
    }
  }
  throw ConfigError("gauge", "expected analytic, takagi or gamma=<float>, got '" +
                                 std::string(text) + "'");
}

double default_dt(const models::ModelSpec& spec) {
  constexpr double kBase = engine::kDefaultDt;
  if (const auto* p = std::get_if<models::KerrParams>(&spec)) {
    const double rate = std::abs(p->omega) + std::abs(p->chi) * p->n_bosons;
    return kBase / std::max(1.0, rate);
  }
  return kBase;
}

std::size_t default_stride(double dt) {
  return static_cast<std::size_t>(std::max(1.0, std::round(1e-2 / dt)));
}

RunOverrides parse_config_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "top level must be an object");

  static const char* const kKeys[] = {
      "model",  "gauge",   "n_traj",   "t_max", "dt",    "stride", "seed",
      "spike_threshold",   "threads",  "traces", "no_noise", "output", "omega",
      "chi",    "n_bosons", "j_hop",   "u_int", "delta1", "kappa", "n_mol0"};
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError(key, "unknown config key");
  }

  RunOverrides o;
  o.model = read_key<std::string>(doc, "model");
  o.gauge = read_key<std::string>(doc, "gauge");
  o.n_traj = read_key<std::size_t>(doc, "n_traj");
  o.t_max = read_key<double>(doc, "t_max");
  o.dt = read_key<double>(doc, "dt");
  o.stride = read_key<std::size_t>(doc, "stride");
  o.seed = read_key<std::uint64_t>(doc, "seed");
  o.spike_threshold = read_key<double>(doc, "spike_threshold");
  o.threads = read_key<unsigned>(doc, "threads");
  o.traces = read_key<std::size_t>(doc, "traces");
  o.no_noise = read_key<bool>(doc, "no_noise");
  o.output = read_key<std::string>(doc, "output");
  o.omega = read_key<double>(doc, "omega");
  o.chi = read_key<double>(doc, "chi");
  o.n_bosons = read_key<double>(doc, "n_bosons");
  o.j_hop = read_key<double>(doc, "j_hop");
  o.u_int = read_key<double>(doc, "u_int");
  o.delta1 = read_key<double>(doc, "delta1");
  o.kappa = read_key<double>(doc, "kappa");
  o.n_mol0 = read_key<double>(doc, "n_mol0");
  return o;
}

RunOverrides load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_json(text.str());
}

RunOverrides environment_overrides() {
  RunOverrides o;
  if (const char* seed = std::getenv(kSeedEnv); seed && *seed) {
    o.seed = parse_env_integer<std::uint64_t>(kSeedEnv, seed);
  }
  if (const char* threads = std::getenv(kThreadsEnv); threads && *threads) {
    o.threads = parse_env_integer<unsigned>(kThreadsEnv, threads);
  }
  return o;
}

RunConfig resolve(const RunOverrides& o) {
  if (!o.model) throw ConfigError("model", "required");
  RunConfig config{parse_model(*o.model), {}, {}};

  const auto misplaced = [&](const char* field, const auto& value, const char* model) {
    if (value) {
      throw ConfigError(field, std::string("only applies to --model ") + model);
    }
  };
  std::visit(
      [&](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, models::KerrParams>) {
          p.omega = o.omega.value_or(p.omega);
          p.chi = o.chi.value_or(p.chi);
          p.n_bosons = o.n_bosons.value_or(p.n_bosons);
        } else {
          misplaced("omega", o.omega, "kerr");
          misplaced("chi", o.chi, "kerr");
          misplaced("n-bosons", o.n_bosons, "kerr");
        }
        if constexpr (std::is_same_v<P, models::HubbardParams>) {
          p.j_hop = o.j_hop.value_or(p.j_hop);
          p.u_int = o.u_int.value_or(p.u_int);
        } else {
          misplaced("j", o.j_hop, "hubbard");
          misplaced("u", o.u_int, "hubbard");
        }
        if constexpr (std::is_same_v<P, models::FermiBoseParams>) {
          p.delta1 = o.delta1.value_or(p.delta1);
          p.kappa = o.kappa.value_or(p.kappa);
          p.n_mol0 = o.n_mol0.value_or(p.n_mol0);
        } else {
          misplaced("delta1", o.delta1, "fermi-bose");
          misplaced("kappa", o.kappa, "fermi-bose");
          misplaced("n-mol0", o.n_mol0, "fermi-bose");
        }
      },
      config.model);

  if (o.omega) require_finite("omega", *o.omega);
  if (o.chi) require_finite("chi", *o.chi);
  if (o.n_bosons) require_positive("n-bosons", *o.n_bosons);
  if (o.j_hop) require_finite("j", *o.j_hop);
  if (o.u_int) require_finite("u", *o.u_int);
  if (o.delta1) require_finite("delta1", *o.delta1);
  if (o.kappa) require_finite("kappa", *o.kappa);
  if (o.n_mol0 && !(*o.n_mol0 >= 0.0 && std::isfinite(*o.n_mol0))) {
    throw ConfigError("n-mol0", "must be a non-negative finite number");
  }

  auto& ic = config.integrator;
  ic.gauge = parse_gauge(o.gauge.value_or("analytic"));
  try {
    models::validate_gauge(config.model, ic.gauge);
  } catch (const UnsupportedGauge& e) {
    throw ConfigError("gauge", e.what());
  }
  ic.noise_enabled = !o.no_noise.value_or(false);
  try {
    models::validate(config.model, ic.noise_enabled);
  } catch (const InvalidParameter& e) {
    throw ConfigError("model parameters", e.what());
  }

  ic.dt = o.dt.value_or(default_dt(config.model));
  require_positive("dt", ic.dt);
  ic.t_max = o.t_max.value_or(1.0);
  require_positive("t-max", ic.t_max);
  if (ic.t_max < ic.dt) throw ConfigError("t-max", "must be at least dt");
  ic.n_traj = o.n_traj.value_or(1000);
  if (ic.n_traj == 0) throw ConfigError("n-traj", "must be positive");
  ic.output_stride = o.stride.value_or(default_stride(ic.dt));
  if (ic.output_stride == 0) throw ConfigError("stride", "must be positive");
  ic.master_seed = o.seed.value_or(0);
  ic.spike_threshold = o.spike_threshold.value_or(engine::kDefaultSpikeThreshold);
  if (!(ic.spike_threshold > 1.0) || !std::isfinite(ic.spike_threshold)) {
    throw ConfigError("spike-threshold", "must be a finite number above 1");
  }
  ic.threads = o.threads.value_or(1);
  if (ic.threads == 0) throw ConfigError("threads", "must be positive");
  ic.keep_traces = std::min(o.traces.value_or(0), ic.n_traj);
  config.output = o.output.value_or("");
  return config;
}

}  // namespace phasegauge::cli
