#include <CLI11.hpp>

#include "phasegauge/cli/commands.hpp"
#include "phasegauge/cli/csv.hpp"

namespace phasegauge::cli {
namespace {

template <typename T>
CLI::Option* bind_optional(CLI::App* app, const std::string& name, std::optional<T>& dst,
                  const std::string& help) {
  return app->add_option_function<T>(name, [&dst](const T& v) { dst = v; }, help);
}

void add_run_options(CLI::App* app, RunOverrides& o, std::string& config_path) {
  bind_optional(app, "--model", o.model, "kerr, hubbard or fermi-bose");
  bind_optional(app, "--gauge", o.gauge, "analytic, gamma=<float> (kerr only) or takagi");
  bind_optional(app, "--n-traj", o.n_traj, "number of trajectories");
  bind_optional(app, "--t-max", o.t_max, "final time");
  bind_optional(app, "--dt", o.dt, "time step (kerr default 1e-3/(|omega|+|chi|N))");
  bind_optional(app, "--stride", o.stride, "steps between output rows");
  bind_optional(app, "--seed", o.seed, "master seed (env PHASEGAUGE_SEED)");
  bind_optional(app, "--spike-threshold", o.spike_threshold,
       "spike once max|z| exceeds this times max(1, max|z(0)|)");
  bind_optional(app, "--threads", o.threads, "worker threads (env PHASEGAUGE_THREADS)");
  bind_optional(app, "--traces", o.traces, "number of trajectories kept raw");
  app->add_flag_function("--no-noise", [&o](std::int64_t) { o.no_noise = true; },
                         "drop the noise term (mean-field dynamics)");
  bind_optional(app, "-o,--output", o.output, "output CSV path (default stdout)");
  bind_optional(app, "--omega", o.omega, "kerr: mode frequency");
  bind_optional(app, "--chi", o.chi, "kerr: nonlinearity");
  bind_optional(app, "--n-bosons", o.n_bosons, "kerr: mean boson number N");
  bind_optional(app, "--j", o.j_hop, "hubbard: hopping J");
  bind_optional(app, "--u", o.u_int, "hubbard: on-site interaction U");
  bind_optional(app, "--delta1", o.delta1, "fermi-bose: detuning");
  bind_optional(app, "--kappa", o.kappa, "fermi-bose: coupling");
  bind_optional(app, "--n-mol0", o.n_mol0, "fermi-bose: initial molecule number");
  app->add_option("--config", config_path, "JSON config file; flags win");
}

RunConfig gather(const RunOverrides& flags, const std::string& config_path) {
  RunOverrides merged = environment_overrides();
  if (!config_path.empty()) merged = load_config_file(config_path).layered_over(merged);
  return resolve(flags.layered_over(merged));
}

void deliver(const RunConfig& config, const std::string& csv, std::ostream& out) {
  if (config.output.empty()) {
    out << csv;
  } else {
    write_text_file(config.output, csv);
  }
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic phase-space dynamics with interchangeable diffusion gauges"};
  app.require_subcommand(1);

  RunOverrides run_flags;
  std::string run_config;
  auto* run = app.add_subcommand("run", "simulate an ensemble and write the CSV");
  add_run_options(run, run_flags, run_config);

  RunOverrides ref_flags;
  std::string ref_config;
  std::string ref_kind = "exact";
  auto* ref = app.add_subcommand("reference", "write an exact or mean-field series");
  add_run_options(ref, ref_flags, ref_config);
  ref->add_option("--kind", ref_kind, "exact or meanfield");

  std::string figure;
  std::string output_dir = "benchmark";
  std::optional<std::uint64_t> bench_seed;
  std::optional<unsigned> bench_threads;
  double traj_scale = 1.0;
  auto* bench = app.add_subcommand("benchmark", "run every series of a figure");
  bench->add_option("figure", figure, "fig1 .. fig6")->required();
  bench->add_option("--output-dir", output_dir, "directory for CSVs and summary");
  bind_optional(bench, "--seed", bench_seed, "master seed (env PHASEGAUGE_SEED)");
  bind_optional(bench, "--threads", bench_threads, "worker threads (env PHASEGAUGE_THREADS)");
  bench->add_option("--traj-scale", traj_scale, "multiply trajectory counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      const RunConfig config = gather(run_flags, run_config);
      deliver(config, run_csv(config), out);
    } else if (*ref) {
      const ReferenceKind kind = parse_reference_kind(ref_kind);
      const RunConfig config = gather(ref_flags, ref_config);
      deliver(config, reference_csv(config, kind), out);
    } else {
      const RunOverrides env = environment_overrides();
      BenchmarkOptions options;
      options.output_dir = output_dir;
      options.seed = bench_seed.value_or(env.seed.value_or(0));
      options.threads = bench_threads.value_or(env.threads.value_or(1));
      options.traj_scale = traj_scale;
      out << run_benchmark(figure, options).text();
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedGauge& e) {
    err << "error: gauge: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedInitialState& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace phasegauge::cli
