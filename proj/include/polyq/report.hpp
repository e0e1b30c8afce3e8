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

#ifndef POLYQ_REPORT_HPP_
#define POLYQ_REPORT_HPP_

#include <string>

#include "polyq/error.hpp"
#include "polyq/polynomial.hpp"

namespace polyq {

// Outcome of one identity check. `detail` carries both sides on failure.
struct IdentityReport {
  std::string name;
  bool passed = false;
  std::string detail;

  void require() const {
    if (!passed) throw Error(ErrorKind::kIdentityFailed, name + ": " + detail);
  }
};

inline IdentityReport compare_polynomials(std::string name,
                                          const BivariatePolynomial& lhs,
                                          const BivariatePolynomial& rhs) {
  IdentityReport out{std::move(name), lhs == rhs, ""};
  out.detail = out.passed ? lhs.to_string()
                          : "lhs = " + lhs.to_string() +
                                ", rhs = " + rhs.to_string();
  return out;
}

}  // namespace polyq

#endif  // POLYQ_REPORT_HPP_
