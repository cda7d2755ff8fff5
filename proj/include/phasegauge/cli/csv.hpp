#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "phasegauge/observables/ensemble.hpp"
#include "phasegauge/reference/reference.hpp"

namespace phasegauge::cli {

inline constexpr const char* kCsvHeader =
    "time,observable,re_mean,im_mean,re_stderr,im_stderr,n_surviving";
inline constexpr const char* kTraceHeader = "time,trajectory,variable,re,im";

/// Shortest text that reads back to the same double ("%.17g" class).
std::string format_number(double value);

/// One row per (time, observable) with an estimate; times where fewer than
/// two trajectories survive or any cell is non-finite are left out. Ends
/// with "# practical_time=<value>".
void write_ensemble_csv(std::ostream& out,
                        const observables::EnsembleResult& result);

/// Same columns; stderr cells are 0 and n_surviving is empty.
void write_reference_csv(std::ostream& out,
                         const reference::ReferenceSeries& series);

/// Raw samples of the kept trajectories, variables named z1..zn.
void write_traces_csv(std::ostream& out,
                      const observables::EnsembleResult& result);

/// Writes content to path, creating parent directories; IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace phasegauge::cli
