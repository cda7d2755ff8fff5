#include "phasegauge/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "phasegauge/cli/config.hpp"

namespace phasegauge::cli {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

void write_ensemble_csv(std::ostream& out, const observables::EnsembleResult& result) {
  out << kCsvHeader << '\n';
  for (std::size_t k = 0; k < result.time_grid.size(); ++k) {
    for (const auto& s : result.series) {
      const auto& point = s.points[k];
      if (!point) continue;
      const Complex err{point->error.re, point->error.im};
      if (!finite(point->mean) || !finite(err)) continue;
      out << format_number(result.time_grid[k]) << ',' << s.name << ','
          << format_number(point->mean.real()) << ','
          << format_number(point->mean.imag()) << ',' << format_number(err.real())
          << ',' << format_number(err.imag()) << ',' << result.n_surviving[k]
          << '\n';
    }
  }
  out << "# practical_time=" << format_number(result.practical_time) << '\n';
}

void write_reference_csv(std::ostream& out, const reference::ReferenceSeries& series) {
  out << kCsvHeader << '\n';
  for (std::size_t k = 0; k < series.time_grid.size(); ++k) {
    for (const auto& [name, values] : series.series) {
      if (!finite(values[k])) continue;
      out << format_number(series.time_grid[k]) << ',' << name << ','
          << format_number(values[k].real()) << ',' << format_number(values[k].imag())
          << ",0,0,\n";
    }
  }
}

void write_traces_csv(std::ostream& out, const observables::EnsembleResult& result) {
  out << kTraceHeader << '\n';
  for (const auto& trace : result.traces) {
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
      const CVector& z = trace.samples[k];
      for (Index j = 0; j < z.size(); ++j) {
        if (!finite(z(j))) continue;
        out << format_number(result.time_grid[k]) << ',' << trace.index << ",z"
            << j + 1 << ',' << format_number(z(j).real()) << ','
            << format_number(z(j).imag()) << '\n';
      }
    }
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace phasegauge::cli
