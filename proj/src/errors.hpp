#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace convsolve {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownFilter : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Which factor of a product equation A X C = s B turned out singular.
enum class FactorSide { Left, Right };

class SingularFactor : public Error {
 public:
  SingularFactor(FactorSide side, const std::string& condition = "")
      : Error(std::string("singular ") +
              (side == FactorSide::Left ? "left" : "right") + " factor" +
              (condition.empty() ? "" : " (" + condition + ")")),
        side_(side),
        condition_(condition) {}

  FactorSide side() const { return side_; }
  const std::string& condition() const { return condition_; }

 private:
  FactorSide side_;
  std::string condition_;
};

class CommonEigenvalue : public Error {
 public:
  using Error::Error;
};

class ResonantPair : public Error {
 public:
  using Error::Error;
};

class SingularOperator : public Error {
 public:
  SingularOperator(const std::string& what, std::complex<double> witness)
      : Error(what), witness_(witness) {}

  std::complex<double> witness() const { return witness_; }

 private:
  std::complex<double> witness_;
};

class ResidualCheckFailed : public Error {
 public:
  ResidualCheckFailed(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace convsolve
