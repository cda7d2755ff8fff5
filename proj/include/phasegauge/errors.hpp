#pragma once

#include <stdexcept>
#include <string>

namespace phasegauge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or non-square input handed to a factorization.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// Takagi residual still above tolerance after the refinement budget.
class FactorizationFailed : public Error {
 public:
  FactorizationFailed(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class TridiagonalizationFailed : public Error {
 public:
  using Error::Error;
};

class ModelDimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGauge : public Error {
 public:
  using Error::Error;
};

class InvalidNoiseShape : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedInitialState : public Error {
 public:
  using Error::Error;
};

}  // namespace phasegauge
