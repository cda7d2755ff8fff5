#pragma once

// Multivariate complex polynomials with exact differentiation. Used as an
// independent symbolic oracle for the closed-form noise matrices.

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace testsupport {

using Complex = std::complex<double>;
using Exponents = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int vars = 0) : vars_(vars) {}

  static Polynomial constant(int vars, Complex c) {
    Polynomial p(vars);
    if (c != Complex{}) p.terms_[Exponents(vars, 0)] = c;
    return p;
  }
  static Polynomial variable(int vars, int j) {
    Polynomial p(vars);
    Exponents e(vars, 0);
    e[j] = 1;
    p.terms_[e] = 1.0;
    return p;
  }

  int vars() const { return vars_; }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.terms_[e] += c;
    out.prune();
    return out;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial out(vars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(vars_);
        for (int j = 0; j < vars_; ++j) e[j] = ea[j] + eb[j];
        out.terms_[e] += ca * cb;
      }
    }
    out.prune();
    return out;
  }
  Polynomial operator*(Complex s) const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c *= s;
    out.prune();
    return out;
  }

  Polynomial derivative(int j) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponents d = e;
      --d[j];
      out.terms_[d] += c * static_cast<double>(e[j]);
    }
    out.prune();
    return out;
  }

  Complex operator()(const Eigen::VectorXcd& z) const {
    Complex sum{};
    for (const auto& [e, c] : terms_) {
      Complex term = c;
      for (int j = 0; j < vars_; ++j) {
        for (int p = 0; p < e[j]; ++p) term *= z(j);
      }
      sum += term;
    }
    return sum;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
    }
  }

  int vars_;
  std::map<Exponents, Complex> terms_;
};

inline Polynomial operator*(Complex s, const Polynomial& p) { return p * s; }

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Eigen::MatrixXcd evaluate(const PolyMatrix& m, const Eigen::VectorXcd& z) {
  Eigen::MatrixXcd out(m.size(), m.front().size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = m[r][c](z);
  }
  return out;
}

/// SC_i = -1/2 sum_{j,k} B_jk d B_ik / d z_j, built symbolically.
inline std::vector<Polynomial> stratonovich_symbolic(const PolyMatrix& b) {
  const int n = static_cast<int>(b.size());
  const int m = static_cast<int>(b.front().size());
  const int vars = b.front().front().vars();
  std::vector<Polynomial> sc(n, Polynomial(vars));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < m; ++k) sc[i] = sc[i] + b[j][k] * b[i][k].derivative(j);
    }
    sc[i] = sc[i] * Complex(-0.5);
  }
  return sc;
}

/// D = B B^T, built symbolically.
inline PolyMatrix outer_symbolic(const PolyMatrix& b) {
  const std::size_t n = b.size();
  const int vars = b.front().front().vars();
  PolyMatrix d(n, std::vector<Polynomial>(n, Polynomial(vars)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < b[r].size(); ++k) d[r][c] = d[r][c] + b[r][k] * b[c][k];
    }
  }
  return d;
}

}  // namespace testsupport
