#pragma once

// Closed-form noise and diffusion matrices written out term by term as
// polynomials, independent of the library's numeric implementation.

#include <cmath>

#include "polynomial.hpp"

namespace testsupport {

struct Vars {
  int n;
  Polynomial operator()(int one_based) const { return Polynomial::variable(n, one_based - 1); }
  Polynomial c(Complex v) const { return Polynomial::constant(n, v); }
  Polynomial hole(int one_based) const { return c(1.0) - (*this)(one_based); }
};

inline const Complex kI{0.0, 1.0};

inline PolyMatrix kerr_b(double chi, double gamma) {
  const Vars z{2};
  const Complex s = std::sqrt(kI * chi);
  const Complex pre = -kI * s;
  const double ch = std::cosh(gamma), sh = std::sinh(gamma);
  return {{z(1) * (pre * ch), z(1) * (pre * kI * sh)},
          {z(2) * (-pre * sh), z(2) * (-pre * kI * ch)}};
}

inline PolyMatrix kerr_standard_b(double chi) {
  const Vars z{2};
  const Complex s = std::sqrt(kI * chi);
  return {{z(1) * (s * kI), z.c(0.0)}, {z.c(0.0), z(2) * (-s)}};
}

inline PolyMatrix kerr_d(double chi) {
  const Vars z{2};
  const Complex s = kI * chi;
  return {{z(1) * z(1) * (-s), z.c(0.0)}, {z.c(0.0), z(2) * z(2) * s}};
}

inline PolyMatrix hubbard_b(double u) {
  const Vars z{8};
  const auto h = [&](int j) { return z.hole(j); };
  const Complex i = kI;
  // Rows transcribed in order; h(j) is the hole variable 1 - z_j.
  PolyMatrix b = {
      {h(1) * z(1) * i, h(1) * z(1) * -1.0, z(2) * z(3) * -i, z(2) * z(3),
       h(1) * z(1), h(1) * z(1) * i, z(2) * z(3) * -1.0, z(2) * z(3) * -i},
      {z(1) * z(2) * -i, z(1) * z(2), h(4) * z(2) * i, h(4) * z(2) * -1.0,
       h(1) * z(2), h(1) * z(2) * i, z(2) * z(4) * -1.0, z(2) * z(4) * -i},
      {h(1) * z(3) * i, h(1) * z(3) * -1.0, z(3) * z(4) * -i, z(3) * z(4),
       z(1) * z(3) * -1.0, z(1) * z(3) * -i, h(4) * z(3), h(4) * z(3) * i},
      {z(2) * z(3) * -i, z(2) * z(3), h(4) * z(4) * i, h(4) * z(4) * -1.0,
       z(2) * z(3) * -1.0, z(2) * z(3) * -i, h(4) * z(4), h(4) * z(4) * i},
      {h(5) * z(5) * i, h(5) * z(5), z(6) * z(7) * -i, z(6) * z(7) * -1.0,
       h(5) * z(5), h(5) * z(5) * -i, z(6) * z(7) * -1.0, z(6) * z(7) * i},
      {z(5) * z(6) * -i, z(5) * z(6) * -1.0, h(8) * z(6) * i, h(8) * z(6),
       h(5) * z(6), h(5) * z(6) * -i, z(6) * z(8) * -1.0, z(6) * z(8) * i},
      {h(5) * z(7) * i, h(5) * z(7), z(7) * z(8) * -i, z(7) * z(8) * -1.0,
       z(5) * z(7) * -1.0, z(5) * z(7) * i, h(8) * z(7), h(8) * z(7) * -i},
      {z(6) * z(7) * -i, z(6) * z(7) * -1.0, h(8) * z(8) * i, h(8) * z(8),
       z(6) * z(7) * -1.0, z(6) * z(7) * i, h(8) * z(8), h(8) * z(8) * -i},
  };
  const Complex scale = std::sqrt(kI * u / 2.0);
  for (auto& row : b) {
    for (auto& e : row) e = e * scale;
  }
  return b;
}

inline PolyMatrix hubbard_d(double u) {
  const Vars z{8};
  const auto h = [&](int j) { return z.hole(j); };
  PolyMatrix d(8, std::vector<Polynomial>(8, z.c(0.0)));
  const auto put = [&](int j, int k, const Polynomial& v) {
    d[j - 1][k - 1] = v * (kI * u / 2.0);
    d[k - 1][j - 1] = v * (kI * u / 2.0);
  };
  put(1, 6, z(6) * (z(2) * z(3) + z(1) * h(1)) * 2.0);
  put(1, 7, z(7) * (z(2) * z(3) + z(1) * h(1)) * -2.0);
  put(2, 5, z(2) * (z(6) * z(7) + z(5) * h(5)) * 2.0);
  put(2, 6, z(2) * z(6) * (z(4) + z(8) - z(1) - z(5)) * 2.0);
  put(2, 7, z(2) * z(7) * (z(1) + z(8) - z(4) - z(5)) * 2.0);
  put(2, 8, z(2) * (z(6) * z(7) + z(8) * h(8)) * -2.0);
  put(3, 5, z(3) * (z(6) * z(7) + z(5) * h(5)) * -2.0);
  put(3, 6, z(3) * z(6) * (z(4) + z(5) - z(1) - z(8)) * 2.0);
  put(3, 7, z(3) * z(7) * (z(1) + z(5) - z(4) - z(8)) * 2.0);
  put(3, 8, z(3) * (z(6) * z(7) + z(8) * h(8)) * 2.0);
  put(4, 6, z(6) * (z(2) * z(3) + z(4) * h(4)) * -2.0);
  put(4, 7, z(7) * (z(2) * z(3) + z(4) * h(4)) * 2.0);
  return d;
}

inline PolyMatrix fermi_bose_b(double kappa) {
  const Vars z{5};
  const Complex i = kI;
  PolyMatrix b = {
      {z(1) * z(2), z(1) * z(2) * -i, z(1) * z(3), z(1) * z(3) * -i},
      {z(2) * z(2), z(2) * z(2) * -i, z(1) * z(1) * -1.0, z(1) * z(1) * i},
      {z(1) * z(1) * -1.0, z(1) * z(1) * i, z(3) * z(3), z(3) * z(3) * -i},
      {z.c(1.0), z.c(i), z.c(0.0), z.c(0.0)},
      {z.c(0.0), z.c(0.0), z.c(1.0), z.c(i)},
  };
  const double scale = std::sqrt(kappa / 2.0);
  for (auto& row : b) {
    for (auto& e : row) e = e * Complex(scale);
  }
  return b;
}

inline PolyMatrix fermi_bose_d(double kappa) {
  const Vars z{5};
  PolyMatrix d(5, std::vector<Polynomial>(5, z.c(0.0)));
  const auto put = [&](int j, int k, const Polynomial& v) {
    d[j - 1][k - 1] = v * Complex(kappa);
    d[k - 1][j - 1] = v * Complex(kappa);
  };
  put(1, 4, z(1) * z(2));
  put(1, 5, z(1) * z(3));
  put(2, 4, z(2) * z(2));
  put(2, 5, z(1) * z(1) * -1.0);
  put(3, 4, z(1) * z(1) * -1.0);
  put(3, 5, z(3) * z(3));
  return d;
}

}  // namespace testsupport
