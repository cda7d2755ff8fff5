#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace testsupport {

inline Eigen::VectorXcd random_state(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::VectorXcd z(n);
  for (int j = 0; j < n; ++j) z(j) = {g(rng), g(rng)};
  return z;
}

inline Eigen::MatrixXcd random_symmetric(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      m(r, c) = {g(rng), g(rng)};
      m(c, r) = m(r, c);
    }
  }
  return m;
}

/// Singular values by one-sided Jacobi, descending.
inline Eigen::VectorXd svd_values(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
}

}  // namespace testsupport
