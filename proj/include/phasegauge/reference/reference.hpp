#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phasegauge/models/models.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::reference {

/// Number-state basis used by an exact solver.
struct FockBasis {
  models::ModelKind model = models::ModelKind::kHubbard;
  std::vector<std::string> labels;

  std::size_t dimension() const noexcept { return labels.size(); }
};

/// |v| as real numbers; Kerr references carry it as "correlator_abs".
std::vector<Complex> moduli(const std::vector<Complex>& values);

/// Two-site Hubbard, sector N_up = N_down = 1. Modes are ordered
/// (1 up, 1 down, 2 up, 2 down); labels read "<site of up>,<site of down>".
FockBasis hubbard_basis();

/// Molecule / atom-pair states |m, p> of the one-mode Fermi-Bose model with
/// m + p = total, p in {0, 1}.
FockBasis fermi_bose_basis(int total);

/// |0> .. |cutoff> for the Kerr oscillator.
FockBasis kerr_basis(int cutoff);

/// Observable name -> values on a time grid. Names match the observable
/// catalog of the same model.
struct ReferenceSeries {
  std::vector<double> time_grid;
  std::vector<std::pair<std::string, std::vector<Complex>>> series;

  /// Throws std::out_of_range for an unknown name.
  const std::vector<Complex>& named(const std::string& name) const;
};

/// Exact propagation by eigendecomposition from both particles on site 1.
/// Series: site_occupation (<n_1,up>), n_tot, energy.
ReferenceSeries hubbard_exact(const models::HubbardParams& params,
                              std::span<const double> t_grid);

enum class InitialMolecules {
  // Coherent molecular field |alpha = sqrt(N_m(0))>, zero atoms: the state
  // the phase-space initial condition z = (0, 0, 0, sqrt N, sqrt N) encodes.
  kCoherent,
  // Exactly N_m(0) molecules (integer N_m(0) only).
  kNumberState,
};

/// Exact propagation in the conserved sectors m + p = N.
/// Series: n_mol, n_tot, energy.
ReferenceSeries fermi_bose_exact(
    const models::FermiBoseParams& params, std::span<const double> t_grid,
    InitialMolecules initial = InitialMolecules::kCoherent);

/// Closed form <a^dag(t) a(0)> / N = e^{i omega t} exp(N (e^{i chi t} - 1))
/// for a coherent initial state. Series: correlator, correlator_abs.
ReferenceSeries kerr_exact_correlator(const models::KerrParams& params,
                                      std::span<const double> t_grid);

/// The same correlator by Heisenberg propagation of a coherent state in
/// |0> .. |cutoff>; the check for the closed form.
ReferenceSeries kerr_fock_correlator(const models::KerrParams& params,
                                     std::span<const double> t_grid, int cutoff);

/// Dispatches to the exact solver of the model.
ReferenceSeries exact_series(const models::ModelSpec& spec,
                             std::span<const double> t_grid);

inline constexpr double kMeanFieldDt = 1e-4;

/// Noiseless drift (Gross-Pitaevskii, Hartree-Fock or pairing mean field)
/// integrated with classical RK4; returns the catalog observables (plus
/// correlator_abs for Kerr).
ReferenceSeries meanfield_series(const models::ModelSpec& spec,
                                 std::span<const double> t_grid,
                                 double dt = kMeanFieldDt);

}  // namespace phasegauge::reference
