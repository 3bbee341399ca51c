// Copyright 2026 The qca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCA_ERRORS_HPP
#define QCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qca {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad inputs: out-of-range parameters, violated preconditions, malformed
/// configuration. Maps to CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotUnitaryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The POVM positivity constraint 2*mu/(1+mu^2) >= w failed.
class ConstraintViolatedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Requested a post-measurement state for an outcome of (near-)zero
/// Born probability.
class ZeroProbabilityOutcomeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Eigensolver iteration budget exhausted.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The attack cannot match Bob's observed rates. Maps to CLI exit code 3.
class InfeasibleError : public Error {
 public:
  enum class Kind { Rate, Error };

  InfeasibleError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Monitor input too short (or empty) to evaluate the statistic.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// File I/O or parse failures. Maps to CLI exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qca

#endif  // QCA_ERRORS_HPP
