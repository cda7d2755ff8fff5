#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phasegauge/cli/config.hpp"

namespace phasegauge::cli {

/// CSV text of one stochastic ensemble run.
std::string run_csv(const RunConfig& config);

enum class ReferenceKind { kExact, kMeanField };

ReferenceKind parse_reference_kind(std::string_view text);

/// CSV text of an oracle on the grid the same config would sample.
std::string reference_csv(const RunConfig& config, ReferenceKind kind);

struct GaugeOutcome {
  std::string gauge;
  double practical_time = 0.0;
  // Last grid time before the series first leaves the oracle by more than
  // three stderr, or its stderr passes the flag tolerance; empty if never.
  std::optional<double> reliable_until;
};

struct BenchmarkSummary {
  std::string figure;
  std::vector<GaugeOutcome> gauges;
  std::vector<std::filesystem::path> files;

  /// Practical-time ratio of the last gauge to the first one.
  double ratio() const;
  std::string text() const;
};

struct BenchmarkOptions {
  std::filesystem::path output_dir = "benchmark";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Scales every trajectory count (for quick looks); 1 = full figure sizes.
  double traj_scale = 1.0;
};

/// "fig1".."fig6"; anything else is a ConfigError on "figure".
BenchmarkSummary run_benchmark(std::string_view figure,
                               const BenchmarkOptions& options);

/// Full command line front end. Returns the process exit code.
int run_app(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace phasegauge::cli
