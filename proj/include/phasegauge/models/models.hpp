#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "phasegauge/linalg/complex_symmetric.hpp"
#include "phasegauge/types.hpp"

namespace phasegauge::models {

/// Single-mode Kerr oscillator H = omega a^dag a + chi/2 a^dag a^dag a a,
/// positive-P variables z = (alpha, alpha^+).
struct KerrParams {
  double omega = 0.0;
  double chi = 1e-2;
  double n_bosons = 1e4;
};

/// Two-site Fermi-Hubbard chain; z = (n_11u, n_12u, n_21u, n_22u, n_11d,
/// n_12d, n_21d, n_22d).
struct HubbardParams {
  double j_hop = 1.0;
  double u_int = 1.0;
};

/// One-mode molecular dissociation; z = (n_1, m_1, m_1^+, alpha, alpha^+).
struct FermiBoseParams {
  double delta1 = 1.0;
  double kappa = 2.0;
  double n_mol0 = 1.0;
};

using ModelSpec = std::variant<KerrParams, HubbardParams, FermiBoseParams>;

enum class ModelKind { kKerr, kHubbard, kFermiBose };

ModelKind kind_of(const ModelSpec& spec) noexcept;
std::string_view model_name(ModelKind kind) noexcept;
/// Phase-space dimension n: 2, 8 or 5.
Index dimension(ModelKind kind) noexcept;
inline Index dimension(const ModelSpec& spec) noexcept {
  return dimension(kind_of(spec));
}

/// Throws InvalidParameter naming the offending field.
void validate(const ModelSpec& spec, bool noise_enabled = true);

struct GaugeSpec {
  enum class Kind { kAnalytic, kGamma, kTakagi };

  Kind kind = Kind::kAnalytic;
  double gamma = 0.0;

  static GaugeSpec analytic() { return {Kind::kAnalytic, 0.0}; }
  static GaugeSpec gamma_gauge(double g) { return {Kind::kGamma, g}; }
  static GaugeSpec takagi() { return {Kind::kTakagi, 0.0}; }

  /// "analytic", "gamma=<value>" or "takagi".
  std::string label() const;
};

/// Throws UnsupportedGauge for a gamma gauge on a non-Kerr model.
void validate_gauge(const ModelSpec& spec, const GaugeSpec& gauge);

/// Number of real Gaussian noises consumed per step.
Index noise_width(const ModelSpec& spec, const GaugeSpec& gauge);

struct PhaseSpaceState {
  CVector z;
  double t = 0.0;
};

PhaseSpaceState initial_state(const ModelSpec& spec);

/// Drift vector a(z).
CVector drift(const ModelSpec& spec, const CVector& z);

/// Diffusion matrix D(z), filled element type by element type.
linalg::ComplexSymmetricMatrix diffusion_matrix(const ModelSpec& spec,
                                                const CVector& z);

/// Closed-form noise matrix B(z) acting on real noises: the standard
/// positive-P matrix or B(gamma) for Kerr, the 8x8 Hubbard matrix, the 5x4
/// Fermi-Bose matrix. Takagi gauge is rejected with UnsupportedGauge.
CMatrix analytic_noise_matrix(const ModelSpec& spec, const CVector& z,
                              const GaugeSpec& gauge = GaugeSpec::analytic());

/// b(z, xi) of the standard analytic gauge written with complex noises.
/// xi has length 1 (Kerr: xi = (eta_1 + i eta_2)/sqrt 2), 4 (Hubbard) or
/// 2 (Fermi-Bose). With xi = make_complex_noises(eta) this equals
/// analytic_noise_matrix(spec, z) * eta exactly.
CVector analytic_noise_term(const ModelSpec& spec, const CVector& z,
                            const CVector& xi);

/// b(z, eta) = B(gamma) eta for the Kerr model, eta of length 2.
CVector gamma_noise_term(const KerrParams& params, const CVector& z,
                         double gamma, std::span<const double> eta);

/// xi_j = (eta_{2j} + i eta_{2j+1}) / sqrt 2. Odd length -> InvalidNoiseShape.
CVector make_complex_noises(std::span<const double> eta);

/// Number of complex noises analytic_noise_term expects.
Index complex_noise_count(ModelKind kind) noexcept;

}  // namespace phasegauge::models
