#include "phasegauge/models/models.hpp"

#include <cmath>
#include <sstream>

#include "phasegauge/errors.hpp"

namespace phasegauge::models {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_dimension(const ModelSpec& spec, const CVector& z) {
  const Index n = dimension(spec);
  if (z.size() != n) {
    std::ostringstream msg;
    msg << model_name(kind_of(spec)) << ": expected state of dimension " << n
        << ", got " << z.size();
    throw ModelDimensionError(msg.str());
  }
}

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw InvalidParameter(std::string(field) + " must be finite");
  }
}

// ---- Kerr -----------------------------------------------------------------

CVector kerr_drift(const KerrParams& p, const CVector& z) {
  CVector a(2);
  a(0) = -kI * (p.omega * z(0) + p.chi * z(1) * z(0) * z(0));
  a(1) = -kI * (-p.omega * z(1) - p.chi * z(0) * z(1) * z(1));
  return a;
}

linalg::ComplexSymmetricMatrix kerr_diffusion(const KerrParams& p,
                                              const CVector& z) {
  linalg::ComplexSymmetricMatrix d(2);
  const Complex pre = kI * p.chi;
  d.set(0, 0, pre * -(z(0) * z(0)));
  d.set(1, 1, pre * (z(1) * z(1)));
  return d;
}

CMatrix kerr_standard_b(const KerrParams& p, const CVector& z) {
  const Complex pre = std::sqrt(kI * p.chi);
  CMatrix b = CMatrix::Zero(2, 2);
  b(0, 0) = pre * kI * z(0);
  b(1, 1) = -pre * z(1);
  return b;
}

CMatrix kerr_gamma_b(const KerrParams& p, const CVector& z, double gamma) {
  const Complex pre = -kI * std::sqrt(kI * p.chi);
  const double c = std::cosh(gamma);
  const double s = std::sinh(gamma);
  CMatrix b(2, 2);
  b(0, 0) = pre * c * z(0);
  b(0, 1) = pre * kI * s * z(0);
  b(1, 0) = pre * -s * z(1);
  b(1, 1) = pre * -kI * c * z(1);
  return b;
}

// ---- Hubbard --------------------------------------------------------------

CVector hubbard_drift(const HubbardParams& p, const CVector& z) {
  const double J = p.j_hop;
  const double U = p.u_int;
  CVector a(8);
  a(0) = J * (z(1) - z(2));
  a(1) = J * (z(0) - z(3)) + U * (z(4) - z(7)) * z(1);
  a(2) = J * (z(3) - z(0)) + U * (z(7) - z(4)) * z(2);
  a(3) = J * (z(2) - z(1));
  a(4) = J * (z(5) - z(6));
  a(5) = J * (z(4) - z(7)) + U * (z(0) - z(3)) * z(5);
  a(6) = J * (z(7) - z(4)) + U * (z(3) - z(0)) * z(6);
  a(7) = J * (z(6) - z(5));
  return kI * a;
}

linalg::ComplexSymmetricMatrix hubbard_diffusion(const HubbardParams& p,
                                                 const CVector& z) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2), z4 = z(3);
  const Complex z5 = z(4), z6 = z(5), z7 = z(6), z8 = z(7);
  const Complex h1 = 1.0 - z1, h4 = 1.0 - z4, h5 = 1.0 - z5, h8 = 1.0 - z8;
  const Complex pre = kI * p.u_int / 2.0;

  linalg::ComplexSymmetricMatrix d(8);
  // Element types d_jk, 1-based as in the model definition.
  const auto put = [&](int j, int k, Complex v) { d.set(j - 1, k - 1, pre * v); };
  put(1, 6, 2.0 * z6 * (z2 * z3 + z1 * h1));
  put(1, 7, -2.0 * z7 * (z2 * z3 + z1 * h1));
  put(2, 5, 2.0 * z2 * (z6 * z7 + z5 * h5));
  put(2, 6, 2.0 * z2 * z6 * (z4 + z8 - z1 - z5));
  put(2, 7, 2.0 * z2 * z7 * (z1 + z8 - z4 - z5));
  put(2, 8, -2.0 * z2 * (z6 * z7 + z8 * h8));
  put(3, 5, -2.0 * z3 * (z6 * z7 + z5 * h5));
  put(3, 6, 2.0 * z3 * z6 * (z4 + z5 - z1 - z8));
  put(3, 7, 2.0 * z3 * z7 * (z1 + z5 - z4 - z8));
  put(3, 8, 2.0 * z3 * (z6 * z7 + z8 * h8));
  put(4, 6, -2.0 * z6 * (z2 * z3 + z4 * h4));
  put(4, 7, 2.0 * z7 * (z2 * z3 + z4 * h4));
  return d;
}

CMatrix hubbard_b(const HubbardParams& p, const CVector& z) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2), z4 = z(3);
  const Complex z5 = z(4), z6 = z(5), z7 = z(6), z8 = z(7);
  const Complex h1 = 1.0 - z1, h4 = 1.0 - z4, h5 = 1.0 - z5, h8 = 1.0 - z8;
  const Complex i = kI;
  CMatrix b(8, 8);
  b << i * h1 * z1, -h1 * z1, -i * z2 * z3, z2 * z3, h1 * z1, i * h1 * z1,
      -z2 * z3, -i * z2 * z3,
      //
      -i * z1 * z2, z1 * z2, i * h4 * z2, -h4 * z2, h1 * z2, i * h1 * z2,
      -z2 * z4, -i * z2 * z4,
      //
      i * h1 * z3, -h1 * z3, -i * z3 * z4, z3 * z4, -z1 * z3, -i * z1 * z3,
      h4 * z3, i * h4 * z3,
      //
      -i * z2 * z3, z2 * z3, i * h4 * z4, -h4 * z4, -z2 * z3, -i * z2 * z3,
      h4 * z4, i * h4 * z4,
      //
      i * h5 * z5, h5 * z5, -i * z6 * z7, -z6 * z7, h5 * z5, -i * h5 * z5,
      -z6 * z7, i * z6 * z7,
      //
      -i * z5 * z6, -z5 * z6, i * h8 * z6, h8 * z6, h5 * z6, -i * h5 * z6,
      -z6 * z8, i * z6 * z8,
      //
      i * h5 * z7, h5 * z7, -i * z7 * z8, -z7 * z8, -z5 * z7, i * z5 * z7,
      h8 * z7, -i * h8 * z7,
      //
      -i * z6 * z7, -z6 * z7, i * h8 * z8, h8 * z8, -z6 * z7, i * z6 * z7,
      h8 * z8, -i * h8 * z8;
  return std::sqrt(kI * p.u_int / 2.0) * b;
}

CVector hubbard_noise_term(const HubbardParams& p, const CVector& z,
                           const CVector& xi) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2), z4 = z(3);
  const Complex z5 = z(4), z6 = z(5), z7 = z(6), z8 = z(7);
  const Complex h1 = 1.0 - z1, h4 = 1.0 - z4, h5 = 1.0 - z5, h8 = 1.0 - z8;
  const Complex x1 = xi(0), x2 = xi(1), x3 = xi(2), x4 = xi(3);
  const Complex c1 = std::conj(x1), c2 = std::conj(x2);
  const Complex c3 = std::conj(x3), c4 = std::conj(x4);
  const Complex i = kI;
  CVector b(8);
  b(0) = i * (h1 * z1 * x1 - z2 * z3 * x2) + h1 * z1 * x3 - z2 * z3 * x4;
  b(1) = i * (h4 * z2 * x2 - z1 * z2 * x1) + h1 * z2 * x3 - z2 * z4 * x4;
  b(2) = i * (h1 * z3 * x1 - z3 * z4 * x2) + h4 * z3 * x4 - z1 * z3 * x3;
  b(3) = i * (h4 * z4 * x2 - z2 * z3 * x1) + h4 * z4 * x4 - z2 * z3 * x3;
  b(4) = i * (h5 * z5 * c1 - z6 * z7 * c2) + h5 * z5 * c3 - z6 * z7 * c4;
  b(5) = i * (h8 * z6 * c2 - z5 * z6 * c1) + h5 * z6 * c3 - z6 * z8 * c4;
  b(6) = i * (h5 * z7 * c1 - z7 * z8 * c2) + h8 * z7 * c4 - z5 * z7 * c3;
  b(7) = i * (h8 * z8 * c2 - z6 * z7 * c1) + h8 * z8 * c4 - z6 * z7 * c3;
  return std::sqrt(kI * p.u_int) * b;
}

// ---- Fermi-Bose -----------------------------------------------------------

CVector fermi_bose_drift(const FermiBoseParams& p, const CVector& z) {
  const double k = p.kappa;
  const double d1 = p.delta1;
  CVector a(5);
  a(0) = k * (z(2) * z(3) + z(1) * z(4));
  a(1) = -2.0 * kI * d1 * z(1) + k * z(3) * (1.0 - 2.0 * z(0));
  a(2) = 2.0 * kI * d1 * z(2) + k * z(4) * (1.0 - 2.0 * z(0));
  a(3) = -k * z(1);
  a(4) = -k * z(2);
  return a;
}

linalg::ComplexSymmetricMatrix fermi_bose_diffusion(const FermiBoseParams& p,
                                                    const CVector& z) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2);
  linalg::ComplexSymmetricMatrix d(5);
  const auto put = [&](int j, int k, Complex v) {
    d.set(j - 1, k - 1, p.kappa * v);
  };
  put(1, 4, z1 * z2);
  put(1, 5, z1 * z3);
  put(2, 4, z2 * z2);
  put(2, 5, -z1 * z1);
  put(3, 4, -z1 * z1);
  put(3, 5, z3 * z3);
  return d;
}

CMatrix fermi_bose_b(const FermiBoseParams& p, const CVector& z) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2);
  const Complex i = kI;
  const Complex zero{0.0, 0.0};
  const Complex one{1.0, 0.0};
  CMatrix b(5, 4);
  b << z1 * z2, -i * z1 * z2, z1 * z3, -i * z1 * z3,
      //
      z2 * z2, -i * z2 * z2, -z1 * z1, i * z1 * z1,
      //
      -z1 * z1, i * z1 * z1, z3 * z3, -i * z3 * z3,
      //
      one, i, zero, zero,
      //
      zero, zero, one, i;
  return std::sqrt(p.kappa / 2.0) * b;
}

CVector fermi_bose_noise_term(const FermiBoseParams& p, const CVector& z,
                              const CVector& xi) {
  const Complex z1 = z(0), z2 = z(1), z3 = z(2);
  const Complex c1 = std::conj(xi(0)), c2 = std::conj(xi(1));
  CVector b(5);
  b(0) = z1 * z2 * c1 + z1 * z3 * c2;
  b(1) = z2 * z2 * c1 - z1 * z1 * c2;
  b(2) = -z1 * z1 * c1 + z3 * z3 * c2;
  b(3) = xi(0);
  b(4) = xi(1);
  return std::sqrt(p.kappa) * b;
}

}  // namespace

ModelKind kind_of(const ModelSpec& spec) noexcept {
  return std::visit(
      Overloaded{[](const KerrParams&) { return ModelKind::kKerr; },
                 [](const HubbardParams&) { return ModelKind::kHubbard; },
                 [](const FermiBoseParams&) { return ModelKind::kFermiBose; }},
      spec);
}

std::string_view model_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::kKerr:
      return "kerr";
    case ModelKind::kHubbard:
      return "hubbard";
    case ModelKind::kFermiBose:
      return "fermi-bose";
  }
  return "unknown";
}

Index dimension(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::kKerr:
      return 2;
    case ModelKind::kHubbard:
      return 8;
    case ModelKind::kFermiBose:
      return 5;
  }
  return 0;
}

Index complex_noise_count(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::kKerr:
      return 1;
    case ModelKind::kHubbard:
      return 4;
    case ModelKind::kFermiBose:
      return 2;
  }
  return 0;
}

void validate(const ModelSpec& spec, bool noise_enabled) {
  std::visit(
      Overloaded{
          [&](const KerrParams& p) {
            require_finite(p.omega, "omega");
            require_finite(p.chi, "chi");
            require_finite(p.n_bosons, "n_bosons");
            if (!(p.n_bosons > 0.0)) {
              throw InvalidParameter("n_bosons must be positive");
            }
            if (noise_enabled && p.chi == 0.0) {
              throw InvalidParameter("chi must be nonzero when noise is enabled");
            }
          },
          [](const HubbardParams& p) {
            require_finite(p.j_hop, "j_hop");
            require_finite(p.u_int, "u_int");
          },
          [](const FermiBoseParams& p) {
            require_finite(p.delta1, "delta1");
            require_finite(p.kappa, "kappa");
            require_finite(p.n_mol0, "n_mol0");
            if (p.kappa < 0.0) throw InvalidParameter("kappa must be >= 0");
            if (p.n_mol0 < 0.0) throw InvalidParameter("n_mol0 must be >= 0");
          }},
      spec);
}

std::string GaugeSpec::label() const {
  switch (kind) {
    case Kind::kAnalytic:
      return "analytic";
    case Kind::kTakagi:
      return "takagi";
    case Kind::kGamma: {
      std::ostringstream out;
      out << "gamma=" << gamma;
      return out.str();
    }
  }
  return "unknown";
}

void validate_gauge(const ModelSpec& spec, const GaugeSpec& gauge) {
  if (gauge.kind == GaugeSpec::Kind::kGamma) {
    if (kind_of(spec) != ModelKind::kKerr) {
      throw UnsupportedGauge("gamma gauge is only defined for the kerr model");
    }
    if (!std::isfinite(gauge.gamma)) {
      throw UnsupportedGauge("gamma must be finite");
    }
  }
}

Index noise_width(const ModelSpec& spec, const GaugeSpec& gauge) {
  validate_gauge(spec, gauge);
  if (gauge.kind == GaugeSpec::Kind::kTakagi) return dimension(spec);
  switch (kind_of(spec)) {
    case ModelKind::kKerr:
      return 2;
    case ModelKind::kHubbard:
      return 8;
    case ModelKind::kFermiBose:
      return 4;
  }
  return 0;
}

PhaseSpaceState initial_state(const ModelSpec& spec) {
  return std::visit(
      Overloaded{[](const KerrParams& p) {
                   const double r = std::sqrt(p.n_bosons);
                   CVector z(2);
                   z << r, r;
                   return PhaseSpaceState{z, 0.0};
                 },
                 [](const HubbardParams&) {
                   CVector z = CVector::Zero(8);
                   z(0) = 1.0;
                   z(4) = 1.0;
                   return PhaseSpaceState{z, 0.0};
                 },
                 [](const FermiBoseParams& p) {
                   const double r = std::sqrt(p.n_mol0);
                   CVector z = CVector::Zero(5);
                   z(3) = r;
                   z(4) = r;
                   return PhaseSpaceState{z, 0.0};
                 }},
      spec);
}

CVector drift(const ModelSpec& spec, const CVector& z) {
  require_dimension(spec, z);
  return std::visit(
      Overloaded{[&](const KerrParams& p) { return kerr_drift(p, z); },
                 [&](const HubbardParams& p) { return hubbard_drift(p, z); },
                 [&](const FermiBoseParams& p) { return fermi_bose_drift(p, z); }},
      spec);
}

linalg::ComplexSymmetricMatrix diffusion_matrix(const ModelSpec& spec,
                                                const CVector& z) {
  require_dimension(spec, z);
  return std::visit(
      Overloaded{
          [&](const KerrParams& p) { return kerr_diffusion(p, z); },
          [&](const HubbardParams& p) { return hubbard_diffusion(p, z); },
          [&](const FermiBoseParams& p) { return fermi_bose_diffusion(p, z); }},
      spec);
}

CMatrix analytic_noise_matrix(const ModelSpec& spec, const CVector& z,
                              const GaugeSpec& gauge) {
  require_dimension(spec, z);
  validate_gauge(spec, gauge);
  if (gauge.kind == GaugeSpec::Kind::kTakagi) {
    throw UnsupportedGauge("takagi gauge has no closed-form noise matrix");
  }
  return std::visit(
      Overloaded{[&](const KerrParams& p) {
                   return gauge.kind == GaugeSpec::Kind::kGamma
                              ? kerr_gamma_b(p, z, gauge.gamma)
                              : kerr_standard_b(p, z);
                 },
                 [&](const HubbardParams& p) { return hubbard_b(p, z); },
                 [&](const FermiBoseParams& p) { return fermi_bose_b(p, z); }},
      spec);
}

CVector analytic_noise_term(const ModelSpec& spec, const CVector& z,
                            const CVector& xi) {
  require_dimension(spec, z);
  const ModelKind kind = kind_of(spec);
  if (xi.size() != complex_noise_count(kind)) {
    std::ostringstream msg;
    msg << model_name(kind) << ": expected " << complex_noise_count(kind)
        << " complex noises, got " << xi.size();
    throw InvalidNoiseShape(msg.str());
  }
  return std::visit(
      Overloaded{[&](const KerrParams& p) {
                   // Unpack the two real noises carried by one complex noise.
                   const double eta[2] = {std::sqrt(2.0) * xi(0).real(),
                                          std::sqrt(2.0) * xi(0).imag()};
                   const Complex pre = std::sqrt(kI * p.chi);
                   CVector b(2);
                   b(0) = pre * kI * z(0) * eta[0];
                   b(1) = -pre * z(1) * eta[1];
                   return b;
                 },
                 [&](const HubbardParams& p) {
                   return hubbard_noise_term(p, z, xi);
                 },
                 [&](const FermiBoseParams& p) {
                   return fermi_bose_noise_term(p, z, xi);
                 }},
      spec);
}

CVector gamma_noise_term(const KerrParams& params, const CVector& z,
                         double gamma, std::span<const double> eta) {
  if (z.size() != 2) throw ModelDimensionError("kerr: expected state of dimension 2");
  if (eta.size() != 2) throw InvalidNoiseShape("gamma gauge consumes 2 real noises");
  const CMatrix b = kerr_gamma_b(params, z, gamma);
  return b.col(0) * eta[0] + b.col(1) * eta[1];
}

CVector make_complex_noises(std::span<const double> eta) {
  if (eta.size() % 2 != 0) {
    throw InvalidNoiseShape("make_complex_noises: odd number of real noises");
  }
  const double scale = 1.0 / std::sqrt(2.0);
  CVector xi(static_cast<Index>(eta.size() / 2));
  for (Index j = 0; j < xi.size(); ++j) {
    xi(j) = Complex(eta[2 * j], eta[2 * j + 1]) * scale;
  }
  return xi;
}

}  // namespace phasegauge::models
