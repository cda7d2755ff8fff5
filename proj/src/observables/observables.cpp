#include "phasegauge/observables/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phasegauge/errors.hpp"

namespace phasegauge::observables {
namespace {

void require_model(const EnsembleResult& ensemble, models::ModelKind expected) {
  if (ensemble.model != expected) {
    throw ModelMismatch(std::string("expected a ") +
                        std::string(models::model_name(expected)) +
                        " ensemble, got " +
                        std::string(models::model_name(ensemble.model)));
  }
}

}  // namespace

const ObservableSeries& EnsembleResult::series_named(
    const std::string& name) const {
  for (const auto& s : series) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("ensemble has no observable named '" + name + "'");
}

std::vector<ObservableSpec> observable_catalog(const models::ModelSpec& spec) {
  using models::FermiBoseParams;
  using models::HubbardParams;
  using models::KerrParams;
  if (const auto* p = std::get_if<KerrParams>(&spec)) {
    const double scale = 1.0 / std::sqrt(p->n_bosons);
    return {{"correlator", [scale](const CVector& z) { return z(1) * scale; }}};
  }
  if (const auto* p = std::get_if<HubbardParams>(&spec)) {
    const double J = p->j_hop;
    const double U = p->u_int;
    return {
        {"site_occupation", [](const CVector& z) { return z(0); }},
        {"n_tot", [](const CVector& z) { return z(0) + z(3) + z(4) + z(7); }},
        {"energy",
         [J, U](const CVector& z) {
           return -J * (z(1) + z(2) + z(5) + z(6)) +
                  U * (z(0) * z(4) + z(3) * z(7));
         }},
    };
  }
  const auto& p = std::get<FermiBoseParams>(spec);
  const double d1 = p.delta1;
  const double kappa = p.kappa;
  return {
      {"n_mol", [](const CVector& z) { return z(3) * z(4); }},
      {"n_tot", [](const CVector& z) { return z(0) + z(3) * z(4); }},
      {"energy",
       [d1, kappa](const CVector& z) {
         return 2.0 * d1 * z(0) + kI * kappa * (z(3) * z(2) - z(4) * z(1));
       }},
  };
}

ObservableSeries kerr_correlator(const EnsembleResult& ensemble) {
  require_model(ensemble, models::ModelKind::kKerr);
  return ensemble.series_named("correlator");
}

HubbardSeries hubbard_observables(const EnsembleResult& ensemble) {
  require_model(ensemble, models::ModelKind::kHubbard);
  return {ensemble.series_named("n_tot"), ensemble.series_named("energy"),
          ensemble.series_named("site_occupation")};
}

FermiBoseSeries fermi_bose_observables(const EnsembleResult& ensemble) {
  require_model(ensemble, models::ModelKind::kFermiBose);
  return {ensemble.series_named("n_mol"), ensemble.series_named("n_tot"),
          ensemble.series_named("energy")};
}

}  // namespace phasegauge::observables
