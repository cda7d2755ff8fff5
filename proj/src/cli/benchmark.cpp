#include <algorithm>
#include <cmath>
#include <sstream>

#include "phasegauge/cli/commands.hpp"
#include "phasegauge/cli/csv.hpp"
#include "phasegauge/engine/integrator.hpp"
#include "phasegauge/reference/reference.hpp"

namespace phasegauge::cli {
namespace {

constexpr double kOptimalGamma = 3.1985;
constexpr std::size_t kFanSize = 20;
// Absolute stderr above which a series is no longer plotted as reliable.
constexpr double kFlagTolerance = 0.05;
// Deviations below this are invisible on the plots. Without the floor the
// O(dt) Euler bias at early Hubbard times, where the stderr is ~1e-7, would
// flag a series that is visually on top of the exact curve.
constexpr double kVisibleDeviation = 1e-3;

struct GaugeRun {
  std::string tag;
  models::GaugeSpec gauge;
  std::size_t n_traj;
  double t_max;
  std::size_t traces;
};

struct FigurePlan {
  models::ModelSpec model;
  std::string tracked;  // observable the reliability flag is judged on
  double reference_t_max;
  std::vector<GaugeRun> runs;
};

FigurePlan plan_for(std::string_view figure) {
  const models::KerrParams kerr{0.0, 1e-2, 1e4};
  const auto analytic = models::GaugeSpec::analytic();
  const auto gamma = models::GaugeSpec::gamma_gauge(kOptimalGamma);
  const auto takagi = models::GaugeSpec::takagi();
  if (figure == "fig1") {
    return {kerr, "correlator", 3.0,
            {{"analytic", analytic, kFanSize, 3.0, kFanSize},
             {"gamma", gamma, kFanSize, 3.0, kFanSize}}};
  }
  if (figure == "fig2") {
    return {kerr, "correlator", 3.0,
            {{"analytic", analytic, 10000, 1.0, 0},
             {"gamma_n100", gamma, 100, 3.0, 0},
             {"gamma", gamma, 10000, 3.0, 0}}};
  }
  if (figure == "fig3" || figure == "fig4") {
    return {models::HubbardParams{1.0, 1.0}, "site_occupation", 2.0,
            {{"analytic", analytic, 1000, 2.0, kFanSize},
             {"takagi", takagi, 1000, 2.0, kFanSize}}};
  }
  if (figure == "fig5" || figure == "fig6") {
    return {models::FermiBoseParams{1.0, 2.0, 1.0}, "n_mol", 2.0,
            {{"analytic", analytic, 1000, 2.0, kFanSize},
             {"takagi", takagi, 1000, 2.0, kFanSize}}};
  }
  throw ConfigError("figure", "unknown figure '" + std::string(figure) +
                                  "' (expected fig1..fig6)");
}

std::optional<double> reliable_until(const observables::EnsembleResult& result,
                                     const std::string& name,
                                     const reference::ReferenceSeries& exact) {
  const auto& series = result.series_named(name).points;
  const auto& oracle = exact.named(name);
  std::optional<double> last_good;
  for (std::size_t k = 0; k < result.time_grid.size() && k < oracle.size(); ++k) {
    const auto& p = series[k];
    if (!p) return last_good;
    const double err = std::hypot(p->error.re, p->error.im);
    const double dev = std::abs(p->mean - oracle[k]);
    const bool off = dev > 3.0 * err && dev > kVisibleDeviation;
    if (off || err > kFlagTolerance) return last_good;
    last_good = result.time_grid[k];
  }
  return std::nullopt;
}

}  // namespace

double BenchmarkSummary::ratio() const {
  if (gauges.size() < 2 || gauges.front().practical_time <= 0.0) return 0.0;
  return gauges.back().practical_time / gauges.front().practical_time;
}

std::string BenchmarkSummary::text() const {
  std::ostringstream out;
  out << figure << ": practical_time";
  for (const auto& g : gauges) out << ' ' << g.gauge << '=' << format_number(g.practical_time);
  out << " ratio=" << format_number(ratio()) << '\n';
  for (const auto& g : gauges) {
    out << figure << ": " << g.gauge << " reliable_until=";
    out << (g.reliable_until ? format_number(*g.reliable_until) : std::string("end"));
    out << '\n';
  }
  return out.str();
}

BenchmarkSummary run_benchmark(std::string_view figure, const BenchmarkOptions& options) {
  const FigurePlan plan = plan_for(figure);
  if (!(options.traj_scale > 0.0)) throw ConfigError("traj-scale", "must be positive");
  if (options.threads == 0) throw ConfigError("threads", "must be positive");

  BenchmarkSummary summary;
  summary.figure = std::string(figure);
  const auto emit = [&](const std::string& name, const std::string& content) {
    const auto path = options.output_dir / (summary.figure + "_" + name);
    write_text_file(path, content);
    summary.files.push_back(path);
  };

  const double dt = default_dt(plan.model);
  engine::IntegratorConfig grid_config;
  grid_config.dt = dt;
  grid_config.t_max = plan.reference_t_max;
  grid_config.output_stride = default_stride(dt);
  const auto grid = engine::output_grid(grid_config);
  const auto exact = reference::exact_series(plan.model, grid);
  {
    std::ostringstream out;
    write_reference_csv(out, exact);
    emit("exact.csv", out.str());
  }
  {
    std::ostringstream out;
    write_reference_csv(out, reference::meanfield_series(plan.model, grid));
    emit("meanfield.csv", out.str());
  }

  for (const auto& run : plan.runs) {
    engine::IntegratorConfig config = grid_config;
    config.t_max = run.t_max;
    config.gauge = run.gauge;
    config.master_seed = options.seed;
    config.threads = options.threads;
    config.n_traj = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(run.n_traj * options.traj_scale)));
    config.keep_traces = std::min(run.traces, config.n_traj);
    const auto result = engine::run_ensemble(plan.model, config);

    std::ostringstream csv;
    write_ensemble_csv(csv, result);
    emit(run.tag + ".csv", csv.str());
    if (config.keep_traces > 0) {
      std::ostringstream traces;
      write_traces_csv(traces, result);
      emit(run.tag + "_traces.csv", traces.str());
    }
    if (run.tag.find("_n") == std::string::npos) {
      summary.gauges.push_back(
          {run.tag, result.practical_time, reliable_until(result, plan.tracked, exact)});
    }
  }
  emit("summary.txt", summary.text());
  return summary;
}

}  // namespace phasegauge::cli
