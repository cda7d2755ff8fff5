#include <gtest/gtest.h>

#include <random>

#include "phasegauge/errors.hpp"
#include "phasegauge/models/models.hpp"
#include "support/random.hpp"
#include "support/symbolic_models.hpp"

using namespace phasegauge;
using namespace phasegauge::models;
using testsupport::evaluate;

namespace {

constexpr double kTol = 1e-12;

double scale_of(const CMatrix& m) { return std::max(1.0, linalg::max_abs(m)); }

std::vector<double> normals(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  std::vector<double> eta(n);
  for (double& e : eta) e = g(rng);
  return eta;
}

}  // namespace

TEST(Models, DimensionsAndNames) {
  EXPECT_EQ(dimension(KerrParams{}), 2);
  EXPECT_EQ(dimension(HubbardParams{}), 8);
  EXPECT_EQ(dimension(FermiBoseParams{}), 5);
  EXPECT_EQ(model_name(ModelKind::kFermiBose), "fermi-bose");
  EXPECT_EQ(noise_width(HubbardParams{}, GaugeSpec::analytic()), 8);
  EXPECT_EQ(noise_width(FermiBoseParams{}, GaugeSpec::analytic()), 4);
  EXPECT_EQ(noise_width(KerrParams{}, GaugeSpec::gamma_gauge(1.0)), 2);
  EXPECT_EQ(noise_width(FermiBoseParams{}, GaugeSpec::takagi()), 5);
  EXPECT_EQ(GaugeSpec::takagi().label(), "takagi");
  EXPECT_EQ(GaugeSpec::gamma_gauge(3.1985).label(), "gamma=3.1985");
}

TEST(Models, InitialStates) {
  const auto kerr = initial_state(KerrParams{0.0, 1e-2, 1e4}).z;
  EXPECT_EQ(kerr(0), Complex(100.0));
  EXPECT_EQ(kerr(1), Complex(100.0));
  const auto hub = initial_state(HubbardParams{}).z;
  EXPECT_EQ(hub(0), Complex(1.0));
  EXPECT_EQ(hub(4), Complex(1.0));
  EXPECT_EQ(hub.cwiseAbs().sum(), 2.0);
  const auto fb = initial_state(FermiBoseParams{1.0, 2.0, 4.0}).z;
  EXPECT_EQ(fb(3) * fb(4), Complex(4.0));
  EXPECT_EQ(fb(0), Complex(0.0));
}

TEST(Models, ValidationErrors) {
  EXPECT_THROW(validate(KerrParams{0.0, 1e-2, -1.0}), InvalidParameter);
  EXPECT_THROW(validate(FermiBoseParams{1.0, -1.0, 1.0}), InvalidParameter);
  EXPECT_THROW(validate(HubbardParams{std::nan(""), 1.0}), InvalidParameter);
  EXPECT_THROW(validate_gauge(HubbardParams{}, GaugeSpec::gamma_gauge(1.0)), UnsupportedGauge);
  EXPECT_NO_THROW(validate_gauge(KerrParams{}, GaugeSpec::gamma_gauge(3.1985)));
  EXPECT_THROW(drift(HubbardParams{}, CVector::Zero(5)), ModelDimensionError);
  EXPECT_THROW(analytic_noise_matrix(KerrParams{}, CVector::Ones(2), GaugeSpec::takagi()),
               UnsupportedGauge);
  const std::vector<double> odd(3, 0.0);
  EXPECT_THROW(make_complex_noises(odd), InvalidNoiseShape);
  EXPECT_THROW(analytic_noise_term(HubbardParams{}, CVector::Zero(8), CVector::Zero(3)),
               InvalidNoiseShape);
}

TEST(Models, DriftMatchesTranscription) {
  std::mt19937_64 rng(1);
  const Complex i = kI;
  for (int rep = 0; rep < 20; ++rep) {
    const KerrParams kp{0.7, 0.3, 5.0};
    const CVector z = testsupport::random_state(rng, 2);
    CVector a(2);
    a << -i * (kp.omega * z(0) + kp.chi * z(1) * z(0) * z(0)),
        -i * (-kp.omega * z(1) - kp.chi * z(0) * z(1) * z(1));
    EXPECT_LE((drift(kp, z) - a).cwiseAbs().maxCoeff(), kTol);

    const HubbardParams hp{0.8, 1.3};
    const CVector y = testsupport::random_state(rng, 8);
    const double J = hp.j_hop, U = hp.u_int;
    CVector h(8);
    h << J * (y(1) - y(2)), J * (y(0) - y(3)) + U * (y(4) - y(7)) * y(1),
        J * (y(3) - y(0)) + U * (y(7) - y(4)) * y(2), J * (y(2) - y(1)),
        J * (y(5) - y(6)), J * (y(4) - y(7)) + U * (y(0) - y(3)) * y(5),
        J * (y(7) - y(4)) + U * (y(3) - y(0)) * y(6), J * (y(6) - y(5));
    EXPECT_LE((drift(hp, y) - i * h).cwiseAbs().maxCoeff(), kTol);

    const FermiBoseParams fp{1.1, 2.0, 1.0};
    const CVector w = testsupport::random_state(rng, 5);
    const double d1 = fp.delta1, k = fp.kappa;
    CVector f(5);
    f << k * (w(2) * w(3) + w(1) * w(4)), -2.0 * i * d1 * w(1) + k * w(3) * (1.0 - 2.0 * w(0)),
        2.0 * i * d1 * w(2) + k * w(4) * (1.0 - 2.0 * w(0)), -k * w(1), -k * w(2);
    EXPECT_LE((drift(fp, w) - f).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(Models, DiffusionMatchesTranscription) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const CVector zk = testsupport::random_state(rng, 2, 3.0);
    const CVector zh = testsupport::random_state(rng, 8);
    const CVector zf = testsupport::random_state(rng, 5);
    const auto dk = evaluate(testsupport::kerr_d(0.01), zk);
    const auto dh = evaluate(testsupport::hubbard_d(1.7), zh);
    const auto df = evaluate(testsupport::fermi_bose_d(2.0), zf);
    EXPECT_LE(linalg::max_abs(diffusion_matrix(KerrParams{0.0, 0.01, 9.0}, zk).dense() - dk),
              kTol * scale_of(dk));
    EXPECT_LE(linalg::max_abs(diffusion_matrix(HubbardParams{1.0, 1.7}, zh).dense() - dh),
              kTol * scale_of(dh));
    EXPECT_LE(linalg::max_abs(diffusion_matrix(FermiBoseParams{1.0, 2.0, 1.0}, zf).dense() - df),
              kTol * scale_of(df));
  }
}

TEST(Models, NoiseMatricesMatchTranscription) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const CVector zk = testsupport::random_state(rng, 2, 3.0);
    const CVector zh = testsupport::random_state(rng, 8);
    const CVector zf = testsupport::random_state(rng, 5);
    for (double gamma : {0.0, 0.5, 3.1985}) {
      const auto bk = evaluate(testsupport::kerr_b(0.02, gamma), zk);
      const auto got = analytic_noise_matrix(KerrParams{0.0, 0.02, 9.0}, zk,
                                             GaugeSpec::gamma_gauge(gamma));
      EXPECT_LE(linalg::max_abs(got - bk), kTol * scale_of(bk));
    }
    const auto bs = evaluate(testsupport::kerr_standard_b(0.02), zk);
    EXPECT_LE(linalg::max_abs(analytic_noise_matrix(KerrParams{0.0, 0.02, 9.0}, zk) - bs),
              kTol * scale_of(bs));
    const auto bh = evaluate(testsupport::hubbard_b(1.3), zh);
    EXPECT_LE(linalg::max_abs(analytic_noise_matrix(HubbardParams{1.0, 1.3}, zh) - bh),
              kTol * scale_of(bh));
    const auto bf = evaluate(testsupport::fermi_bose_b(2.5), zf);
    EXPECT_LE(linalg::max_abs(analytic_noise_matrix(FermiBoseParams{1.0, 2.5, 1.0}, zf) - bf),
              kTol * scale_of(bf));
  }
}

TEST(Models, ComplexNoiseTermEqualsMatrixTimesRealNoise) {
  std::mt19937_64 rng(4);
  const std::vector<ModelSpec> specs = {KerrParams{0.3, 0.02, 9.0}, HubbardParams{1.0, 1.0},
                                        FermiBoseParams{1.0, 2.0, 1.0}};
  for (const auto& spec : specs) {
    for (int rep = 0; rep < 50; ++rep) {
      const CVector z = testsupport::random_state(rng, static_cast<int>(dimension(spec)));
      const auto eta = normals(rng, static_cast<int>(noise_width(spec, GaugeSpec::analytic())));
      const CMatrix b = analytic_noise_matrix(spec, z);
      const Eigen::Map<const RVector> e(eta.data(), static_cast<Index>(eta.size()));
      const CVector expected = b * e.cast<Complex>();
      const CVector got = analytic_noise_term(spec, z, make_complex_noises(eta));
      EXPECT_LE((got - expected).cwiseAbs().maxCoeff(), kTol * scale_of(b));
    }
  }
  const KerrParams kp{0.0, 0.01, 1e4};
  for (int rep = 0; rep < 20; ++rep) {
    const CVector z = testsupport::random_state(rng, 2, 100.0);
    const auto eta = normals(rng, 2);
    const CMatrix b = analytic_noise_matrix(kp, z, GaugeSpec::gamma_gauge(3.1985));
    const Eigen::Map<const RVector> e(eta.data(), 2);
    const CVector expected = b * e.cast<Complex>();
    EXPECT_LE((gamma_noise_term(kp, z, 3.1985, eta) - expected).cwiseAbs().maxCoeff(),
              kTol * scale_of(b));
  }
}
