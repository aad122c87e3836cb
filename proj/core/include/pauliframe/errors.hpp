// Copyright 2026 The pauliframe Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pframe {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A vector that should be a unit ket is not.
class NormError : public Error {
 public:
  NormError(const std::string& what, double deviation)
      : Error(what), deviation(deviation) {}
  double deviation;
};

class HermiticityError : public Error {
 public:
  HermiticityError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

class TraceError : public Error {
 public:
  TraceError(const std::string& what, double deviation)
      : Error(what), deviation(deviation) {}
  double deviation;
};

class NegativityError : public Error {
 public:
  NegativityError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

/// Projector span has rank below n^2; no right inverse exists.
class NotRepresentative : public Error {
 public:
  NotRepresentative(const std::string& what, int rank, int required)
      : Error(what), rank(rank), required(required) {}
  int rank;
  int required;
};

class NotAffineReconstructible : public Error {
 public:
  NotAffineReconstructible(const std::string& what, int rank_deficiency)
      : Error(what), rank_deficiency(rank_deficiency) {}
  int rank_deficiency;
};

class NotUnitary : public Error {
 public:
  NotUnitary(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// Kraus operators do not satisfy sum_k V_k^dag V_k = Id.
class TraceConditionViolated : public Error {
 public:
  TraceConditionViolated(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// A probability tensor whose outcome groups do not sum to one.
class InconsistentProbabilities : public Error {
 public:
  InconsistentProbabilities(const std::string& what, double worst_deviation,
                            std::vector<int> worst_axes)
      : Error(what),
        worst_deviation(worst_deviation),
        worst_axes(std::move(worst_axes)) {}
  double worst_deviation;
  /// Axis assignment (mu_1..mu_m, values 1..3) of the worst group.
  std::vector<int> worst_axes;
};

/// Bad qubit/tensor index (out of range or repeated).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a circuit or exchange file; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

/// Structurally valid input with an out-of-range value.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what, int line = 0)
      : Error(what), line(line) {}
  int line;
};

/// Request exceeds a dense-work ceiling.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pframe
