#pragma once

#include <vector>

#include "phasegauge/models/models.hpp"
#include "phasegauge/observables/ensemble.hpp"

namespace phasegauge::observables {

/// Tracked observables per model:
///   kerr:       correlator = z2 / sqrt(N)
///   hubbard:    site_occupation = z1, n_tot = z1 + z4 + z5 + z8,
///               energy = -J (z2 + z3 + z6 + z7) + U (z1 z5 + z4 z8)
///   fermi-bose: n_mol = z4 z5, n_tot = z1 + z4 z5,
///               energy = 2 Delta_1 z1 + i kappa (z4 z3 - z5 z2)
std::vector<ObservableSpec> observable_catalog(const models::ModelSpec& spec);

/// <z2(t)> / sqrt(N), the normalized <a^dag(t) a(0)>.
ObservableSeries kerr_correlator(const EnsembleResult& ensemble);

struct HubbardSeries {
  ObservableSeries n_tot;
  ObservableSeries energy;
  ObservableSeries site_occupation;
};
HubbardSeries hubbard_observables(const EnsembleResult& ensemble);

struct FermiBoseSeries {
  ObservableSeries n_mol;
  ObservableSeries n_tot;
  ObservableSeries energy;
};
FermiBoseSeries fermi_bose_observables(const EnsembleResult& ensemble);

}  // namespace phasegauge::observables
