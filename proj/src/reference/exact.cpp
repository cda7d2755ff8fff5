#include <cmath>
#include <stdexcept>

#include "phasegauge/errors.hpp"
#include "phasegauge/reference/reference.hpp"

namespace phasegauge::reference {
namespace {

// Hermitian generator with precomputed eigenbasis:
// psi(t) = V exp(-i E t) V^H psi(0).
class Propagator {
 public:
  explicit Propagator(const CMatrix& hamiltonian) : solver_(hamiltonian) {}

  CVector evolve(const CVector& psi0, double t) const {
    const CVector coeffs = solver_.eigenvectors().adjoint() * psi0;
    CVector phased(coeffs.size());
    for (Index i = 0; i < coeffs.size(); ++i) {
      phased(i) = std::exp(-kI * solver_.eigenvalues()(i) * t) * coeffs(i);
    }
    return solver_.eigenvectors() * phased;
  }

 private:
  Eigen::SelfAdjointEigenSolver<CMatrix> solver_;
};

Complex expectation(const CVector& psi, const CMatrix& op) {
  return psi.dot(op * psi);
}

// Jordan-Wigner annihilation operator for mode `mode` of `modes` fermionic
// modes; basis index bit m is the occupation of mode m.
CMatrix annihilator(int mode, int modes) {
  const int dim = 1 << modes;
  CMatrix c = CMatrix::Zero(dim, dim);
  for (int state = 0; state < dim; ++state) {
    if ((state >> mode & 1) == 0) continue;
    int parity = 0;
    for (int m = 0; m < mode; ++m) parity += state >> m & 1;
    c(state & ~(1 << mode), state) = parity % 2 == 0 ? 1.0 : -1.0;
  }
  return c;
}

double poisson_weight(double mean, int n) {
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

}  // namespace

std::vector<Complex> moduli(const std::vector<Complex>& values) {
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const Complex& v : values) out.emplace_back(std::abs(v), 0.0);
  return out;
}

const std::vector<Complex>& ReferenceSeries::named(const std::string& name) const {
  for (const auto& [key, values] : series) {
    if (key == name) return values;
  }
  throw std::out_of_range("reference series has no observable named '" + name + "'");
}

FockBasis hubbard_basis() {
  return {models::ModelKind::kHubbard, {"1,1", "1,2", "2,1", "2,2"}};
}

FockBasis fermi_bose_basis(int total) {
  FockBasis basis{models::ModelKind::kFermiBose, {}};
  basis.labels.push_back("m=" + std::to_string(total) + ",p=0");
  if (total >= 1) basis.labels.push_back("m=" + std::to_string(total - 1) + ",p=1");
  return basis;
}

FockBasis kerr_basis(int cutoff) {
  FockBasis basis{models::ModelKind::kKerr, {}};
  for (int n = 0; n <= cutoff; ++n) basis.labels.push_back(std::to_string(n));
  return basis;
}

ReferenceSeries hubbard_exact(const models::HubbardParams& params,
                              std::span<const double> t_grid) {
  // Modes 0..3 = (1 up, 1 down, 2 up, 2 down).
  constexpr int kModes = 4;
  std::vector<CMatrix> c;
  for (int m = 0; m < kModes; ++m) c.push_back(annihilator(m, kModes));
  const auto number = [&](int m) -> CMatrix { return c[m].adjoint() * c[m]; };

  const int dim = 1 << kModes;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int spin = 0; spin < 2; ++spin) {
    const int a = spin;      // site 1
    const int b = 2 + spin;  // site 2
    h -= params.j_hop * (c[a].adjoint() * c[b] + c[b].adjoint() * c[a]);
  }
  h += params.u_int * (number(0) * number(1) + number(2) * number(3));

  // Restrict to one up and one down particle. Sector states in the order of
  // hubbard_basis(): (up site, down site) = (1,1), (1,2), (2,1), (2,2).
  const int up_mode[2] = {0, 2};
  const int down_mode[2] = {1, 3};
  CMatrix embed = CMatrix::Zero(dim, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // c^dag_up c^dag_down |0>, applied in mode order.
      const int first = std::min(up_mode[i], down_mode[j]);
      const int second = std::max(up_mode[i], down_mode[j]);
      CVector vac = CVector::Zero(dim);
      vac(0) = 1.0;
      embed.col(2 * i + j) = c[first].adjoint() * (c[second].adjoint() * vac);
    }
  }
  const CMatrix h_sector = embed.adjoint() * h * embed;
  const CMatrix n1_up = embed.adjoint() * number(0) * embed;
  CMatrix n_total = CMatrix::Zero(4, 4);
  for (int m = 0; m < kModes; ++m) n_total += embed.adjoint() * number(m) * embed;

  CVector psi0 = CVector::Zero(4);
  psi0(0) = 1.0;
  const Propagator propagator(h_sector);
  ReferenceSeries out;
  out.time_grid.assign(t_grid.begin(), t_grid.end());
  std::vector<Complex> occupation, n_tot, energy;
  for (double t : t_grid) {
    const CVector psi = propagator.evolve(psi0, t);
    occupation.push_back(expectation(psi, n1_up));
    n_tot.push_back(expectation(psi, n_total));
    energy.push_back(expectation(psi, h_sector));
  }
  out.series = {{"site_occupation", occupation}, {"n_tot", n_tot}, {"energy", energy}};
  return out;
}

ReferenceSeries fermi_bose_exact(const models::FermiBoseParams& params,
                                 std::span<const double> t_grid,
                                 InitialMolecules initial) {
  const double n0 = params.n_mol0;
  // Sector weights P(N) of the initial molecule number.
  std::vector<std::pair<int, double>> sectors;
  if (initial == InitialMolecules::kNumberState) {
    if (n0 < 0.0 || std::floor(n0) != n0) {
      throw UnsupportedInitialState(
          "fermi_bose_exact: number-state initial condition needs integer N_m(0)");
    }
    sectors.emplace_back(static_cast<int>(n0), 1.0);
  } else if (n0 == 0.0) {
    sectors.emplace_back(0, 1.0);
  } else {
    const int cutoff =
        static_cast<int>(std::ceil(n0 + 12.0 * std::sqrt(n0) + 30.0));
    for (int n = 0; n <= cutoff; ++n) sectors.emplace_back(n, poisson_weight(n0, n));
  }

  ReferenceSeries out;
  out.time_grid.assign(t_grid.begin(), t_grid.end());
  std::vector<Complex> n_mol(t_grid.size()), n_tot(t_grid.size()),
      energy(t_grid.size());
  for (const auto& [total, weight] : sectors) {
    if (total == 0) {
      continue;  // vacuum: no molecules, no atoms, zero energy
    }
    // Basis |total, 0>, |total - 1, 1>.
    CMatrix h(2, 2);
    const double g = params.kappa * std::sqrt(static_cast<double>(total));
    h << 0.0, kI * g, -kI * g, 2.0 * params.delta1;
    CMatrix molecules = CMatrix::Zero(2, 2);
    molecules(0, 0) = total;
    molecules(1, 1) = total - 1;
    CMatrix atoms = CMatrix::Zero(2, 2);  // per-spin occupation n_1
    atoms(1, 1) = 1.0;
    const Propagator propagator(h);
    const CVector psi0 = CVector::Unit(2, 0);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      const CVector psi = propagator.evolve(psi0, t_grid[i]);
      const Complex m = expectation(psi, molecules);
      n_mol[i] += weight * m;
      n_tot[i] += weight * (m + expectation(psi, atoms));
      energy[i] += weight * expectation(psi, h);
    }
  }
  out.series = {{"n_mol", n_mol}, {"n_tot", n_tot}, {"energy", energy}};
  return out;
}

ReferenceSeries kerr_exact_correlator(const models::KerrParams& params,
                                      std::span<const double> t_grid) {
  ReferenceSeries out;
  out.time_grid.assign(t_grid.begin(), t_grid.end());
  std::vector<Complex> values;
  for (double t : t_grid) {
    values.push_back(std::exp(kI * params.omega * t) *
                     std::exp(params.n_bosons * (std::exp(kI * params.chi * t) - 1.0)));
  }
  out.series = {{"correlator", values}, {"correlator_abs", moduli(values)}};
  return out;
}

ReferenceSeries kerr_fock_correlator(const models::KerrParams& params,
                                     std::span<const double> t_grid, int cutoff) {
  const int dim = cutoff + 1;
  const double alpha = std::sqrt(params.n_bosons);
  RVector energies(dim);
  CVector psi(dim);
  for (int n = 0; n < dim; ++n) {
    energies(n) = params.omega * n + 0.5 * params.chi * n * (n - 1.0);
    psi(n) = std::exp(-0.5 * params.n_bosons + n * std::log(alpha) -
                      0.5 * std::lgamma(n + 1.0));
  }
  // a|psi>, then <psi| e^{iHt} a^dag e^{-iHt} a |psi>.
  CVector lowered = CVector::Zero(dim);
  for (int n = 1; n < dim; ++n) lowered(n - 1) = std::sqrt(static_cast<double>(n)) * psi(n);

  ReferenceSeries out;
  out.time_grid.assign(t_grid.begin(), t_grid.end());
  std::vector<Complex> values;
  for (double t : t_grid) {
    CVector forward(dim);
    for (int n = 0; n < dim; ++n) forward(n) = std::exp(-kI * energies(n) * t) * lowered(n);
    CVector raised = CVector::Zero(dim);
    for (int n = 0; n + 1 < dim; ++n) raised(n + 1) = std::sqrt(n + 1.0) * forward(n);
    Complex value{0.0, 0.0};
    for (int n = 0; n < dim; ++n) {
      value += std::conj(psi(n)) * std::exp(kI * energies(n) * t) * raised(n);
    }
    values.push_back(value / params.n_bosons);
  }
  out.series = {{"correlator", values}, {"correlator_abs", moduli(values)}};
  return out;
}

ReferenceSeries exact_series(const models::ModelSpec& spec,
                             std::span<const double> t_grid) {
  if (const auto* p = std::get_if<models::KerrParams>(&spec)) {
    return kerr_exact_correlator(*p, t_grid);
  }
  if (const auto* p = std::get_if<models::HubbardParams>(&spec)) {
    return hubbard_exact(*p, t_grid);
  }
  return fermi_bose_exact(std::get<models::FermiBoseParams>(spec), t_grid);
}

}  // namespace phasegauge::reference
