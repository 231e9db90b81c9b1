// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace opalg {

// Base class for all structured errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long a, long b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NotInvertible : public Error {
 public:
  NotInvertible(double smallest_sv, double cutoff)
      : Error("matrix not invertible: smallest singular value " + std::to_string(smallest_sv) +
              " <= cutoff " + std::to_string(cutoff) + " (0 lies in the spectrum)"),
        smallest_singular_value(smallest_sv) {}
  double smallest_singular_value;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double res) : Error(what), residual(res) {}
  double residual;
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

class NotSelfAdjoint : public PreconditionViolation {
 public:
  explicit NotSelfAdjoint(double defect)
      : PreconditionViolation("element is not self-adjoint: ||A - A*|| = " + std::to_string(defect)),
        defect(defect) {}
  double defect;
};

class NotNormal : public PreconditionViolation {
 public:
  explicit NotNormal(double defect)
      : PreconditionViolation("element is not normal: ||AA* - A*A|| = " + std::to_string(defect)),
        defect(defect) {}
  double defect;
};

class NotPositive : public PreconditionViolation {
 public:
  explicit NotPositive(double offending_eigenvalue)
      : PreconditionViolation("element is not positive: eigenvalue " +
                              std::to_string(offending_eigenvalue) + " below tolerance"),
        eigenvalue(offending_eigenvalue) {}
  double eigenvalue;
};

class NotAState : public PreconditionViolation {
 public:
  explicit NotAState(const std::string& why) : PreconditionViolation("functional is not a state: " + why) {}
};

class NotCommutative : public PreconditionViolation {
 public:
  NotCommutative(std::size_t i, std::size_t j, double defect)
      : PreconditionViolation("basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute: ||[A,B]|| = " + std::to_string(defect)) {}
};

// Raised for malformed files or configuration on the CLI paths.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

}  // namespace opalg
