// Copyright 2026 The Authors.
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

#ifndef POLYQ_ERROR_HPP_
#define POLYQ_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyq {

enum class ErrorKind {
  kInvalidInput,
  kAxiomViolation,
  kNotAPolymatroid,
  kNotABase,
  kNotABasis,
  kNotAMatroid,
  kBoxOverflow,
  kDegreeCheckFailed,
  kVariableMismatch,
  kNotDivisible,
  kOrderDependenceDetected,
  kPartitionViolation,
  kNonTermination,
  kNotAPartition,
  kSTooSmall,
  kIdentityFailed,
  kNotACircuitHyperplane,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kNotAPolymatroid: return "NotAPolymatroid";
    case ErrorKind::kNotABase: return "NotABase";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kNotAMatroid: return "NotAMatroid";
    case ErrorKind::kBoxOverflow: return "BoxOverflow";
    case ErrorKind::kDegreeCheckFailed: return "DegreeCheckFailed";
    case ErrorKind::kVariableMismatch: return "VariableMismatch";
    case ErrorKind::kNotDivisible: return "NotDivisible";
    case ErrorKind::kOrderDependenceDetected: return "OrderDependenceDetected";
    case ErrorKind::kPartitionViolation: return "PartitionViolation";
    case ErrorKind::kNonTermination: return "NonTermination";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kSTooSmall: return "STooSmall";
    case ErrorKind::kIdentityFailed: return "IdentityFailed";
    case ErrorKind::kNotACircuitHyperplane: return "NotACircuitHyperplane";
  }
  return "Unknown";
}

// Integrity failures mean an identity that must hold for every valid input
// was violated, i.e. a bug rather than bad input.
inline bool is_integrity_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegreeCheckFailed:
    case ErrorKind::kNotDivisible:
    case ErrorKind::kOrderDependenceDetected:
    case ErrorKind::kPartitionViolation:
    case ErrorKind::kNonTermination:
    case ErrorKind::kNotAPartition:
    case ErrorKind::kIdentityFailed:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by rank-function validation. `axiom` is 1, 2 or 3; the witnesses are
// subset bitmasks (bit i-1 for element i) exhibiting the violation.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, std::uint32_t first, std::uint32_t second,
                 const std::string& message)
      : Error(ErrorKind::kAxiomViolation,
              "P" + std::to_string(axiom) + " " + message),
        axiom_(axiom),
        first_(first),
        second_(second) {}

  int axiom() const noexcept { return axiom_; }
  std::uint32_t first_witness() const noexcept { return first_; }
  std::uint32_t second_witness() const noexcept { return second_; }

 private:
  int axiom_;
  std::uint32_t first_;
  std::uint32_t second_;
};

}  // namespace polyq

#endif  // POLYQ_ERROR_HPP_
