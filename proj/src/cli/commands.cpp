#include "phasegauge/cli/commands.hpp"

#include <sstream>

#include "phasegauge/cli/csv.hpp"
#include "phasegauge/engine/integrator.hpp"
#include "phasegauge/reference/reference.hpp"

namespace phasegauge::cli {

std::string run_csv(const RunConfig& config) {
  const auto result = engine::run_ensemble(config.model, config.integrator);
  std::ostringstream out;
  write_ensemble_csv(out, result);
  return out.str();
}

ReferenceKind parse_reference_kind(std::string_view text) {
  if (text == "exact") return ReferenceKind::kExact;
  if (text == "meanfield") return ReferenceKind::kMeanField;
  throw ConfigError("kind", "expected exact or meanfield, got '" + std::string(text) + "'");
}

std::string reference_csv(const RunConfig& config, ReferenceKind kind) {
  const auto grid = engine::output_grid(config.integrator);
  const auto series = kind == ReferenceKind::kExact
                          ? reference::exact_series(config.model, grid)
                          : reference::meanfield_series(config.model, grid);
  std::ostringstream out;
  write_reference_csv(out, series);
  return out.str();
}

}  // namespace phasegauge::cli
