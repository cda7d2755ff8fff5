#include <cmath>

#include "phasegauge/observables/observables.hpp"
#include "phasegauge/reference/reference.hpp"

namespace phasegauge::reference {
namespace {

void rk4_step(const models::ModelSpec& spec, CVector& z, double h) {
  const CVector k1 = models::drift(spec, z);
  const CVector k2 = models::drift(spec, z + 0.5 * h * k1);
  const CVector k3 = models::drift(spec, z + 0.5 * h * k2);
  const CVector k4 = models::drift(spec, z + h * k3);
  z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

ReferenceSeries meanfield_series(const models::ModelSpec& spec,
                                 std::span<const double> t_grid, double dt) {
  const auto catalog = observables::observable_catalog(spec);
  ReferenceSeries out;
  out.time_grid.assign(t_grid.begin(), t_grid.end());
  out.series.reserve(catalog.size());
  for (const auto& obs : catalog) out.series.push_back({obs.name, {}});

  CVector z = models::initial_state(spec).z;
  double t = 0.0;
  for (double target : t_grid) {
    // Equal substeps no longer than dt between consecutive output times.
    const double span = target - t;
    if (span > 0.0) {
      const auto substeps = static_cast<long>(std::ceil(span / dt - 1e-9));
      const double h = span / static_cast<double>(substeps);
      for (long s = 0; s < substeps; ++s) rk4_step(spec, z, h);
      t = target;
    }
    for (std::size_t o = 0; o < catalog.size(); ++o) {
      out.series[o].second.push_back(catalog[o].evaluate(z));
    }
  }
  if (models::kind_of(spec) == models::ModelKind::kKerr) {
    out.series.push_back({"correlator_abs", moduli(out.named("correlator"))});
  }
  return out;
}

}  // namespace phasegauge::reference
