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

// Direct sums, s-duals, slices and circuit-hyperplane relaxation, each with
// the identity it satisfies for Q'.

#ifndef POLYQ_CONSTRUCTIONS_HPP_
#define POLYQ_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "polyq/core_model.hpp"
#include "polyq/error.hpp"
#include "polyq/geometry.hpp"
#include "polyq/polynomial.hpp"
#include "polyq/report.hpp"
#include "polyq/tutte.hpp"

namespace polyq {

// Elements of m2 become n1+1 .. n1+n2.
inline Polymatroid direct_sum(const Polymatroid& m1, const Polymatroid& m2) {
  const int n1 = m1.n(), n = m1.n() + m2.n();
  if (n > kMaxGroundSize) {
    throw Error(ErrorKind::kInvalidInput,
                "direct sum has " + std::to_string(n) + " elements");
  }
  const std::uint32_t low = SubsetKey::full(n1).bits();
  std::vector<int> values(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    values[s] = m1.rank(SubsetKey(s & low)) + m2.rank(SubsetKey(s >> n1));
  }
  return Polymatroid(validate_rank_function(n, std::move(values)));
}

// r*(S) = s|S| + r(E - S) - r(E), so P(M*) = s*1 - P(M). With s = 1 on a
// matroid this is the usual dual.
inline Polymatroid s_dual(const Polymatroid& m, int s) {
  if (s < m.max_singleton_rank()) {
    throw Error(ErrorKind::kSTooSmall,
                "s = " + std::to_string(s) + " is below the largest singleton "
                "rank " + std::to_string(m.max_singleton_rank()));
  }
  const int n = m.n();
  std::vector<int> values(std::size_t{1} << n);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    const SubsetKey rest = SubsetKey(a).complement(n);
    values[a] = s * SubsetKey(a).size() + m.rank(rest) - m.total_rank();
  }
  return Polymatroid(validate_rank_function(n, std::move(values)));
}

struct SliceFamily {
  Element element = 0;
  int k_min = 0;
  int k_max = 0;
  std::vector<Polymatroid> levels;  // levels[k - k_min], on E - a
  std::vector<std::size_t> base_counts;

  const Polymatroid& deletion() const { return levels.front(); }
  const Polymatroid& contraction() const { return levels.back(); }
};

// Groups bases by their a-coordinate and rebuilds each group, with a
// projected away, as a polymatroid on n - 1 elements.
inline SliceFamily slices(const Polymatroid& m, Element a) {
  require_element(m, a);
  if (m.n() < 2) {
    throw Error(ErrorKind::kInvalidInput, "slices need at least two elements");
  }
  const auto bases = enumerate_bases(m);
  SliceFamily fam;
  fam.element = a;
  fam.k_min = fam.k_max = bases.front()[a - 1];
  for (const auto& b : bases) {
    fam.k_min = std::min(fam.k_min, b[a - 1]);
    fam.k_max = std::max(fam.k_max, b[a - 1]);
  }
  std::vector<std::vector<LatticePoint>> groups(fam.k_max - fam.k_min + 1);
  for (const auto& b : bases) {
    LatticePoint p = b;
    p.erase(p.begin() + (a - 1));
    groups[b[a - 1] - fam.k_min].push_back(std::move(p));
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) {
      throw Error(ErrorKind::kNotAPolymatroid,
                  "no base has x_" + std::to_string(a) + " = " +
                      std::to_string(fam.k_min + static_cast<int>(i)));
    }
    fam.base_counts.push_back(groups[i].size());
    fam.levels.push_back(Polymatroid::from_bases(m.n() - 1, groups[i]));
  }
  return fam;
}

// Q'_M = (x-1) Q'_{M\a} + (y-1) Q'_{M/a} + sum over every a-slice N of Q'_N.
inline IdentityReport slice_recurrence_check(const Polymatroid& m, Element a,
                                             const BivariatePolynomial& q) {
  const SliceFamily fam = slices(m, a);
  const BivariatePolynomial one = BivariatePolynomial::constant(1);
  BivariatePolynomial rhs = (BivariatePolynomial::x() - one) *
                                q_prime(fam.deletion()) +
                            (BivariatePolynomial::y() - one) *
                                q_prime(fam.contraction());
  for (const Polymatroid& level : fam.levels) rhs += q_prime(level);
  return compare_polynomials("slice recurrence at " + std::to_string(a), q,
                             rhs);
}

inline IdentityReport slice_recurrence_check(const Polymatroid& m, Element a) {
  return slice_recurrence_check(m, a, q_prime(m));
}

// C is dependent with every proper subset independent, and is a flat of
// rank r(M) - 1.
inline bool is_circuit_hyperplane(const Polymatroid& m, SubsetKey c) {
  require_matroid(m);
  if (c.empty() || !c.subset_of(SubsetKey::full(m.n()))) return false;
  const int r = m.total_rank();
  if (m.rank(c) != c.size() - 1 || m.rank(c) != r - 1) return false;
  for (Element e : c.elements()) {
    if (m.rank(c.without(e)) != c.size() - 1) return false;
  }
  for (Element e = 1; e <= m.n(); ++e) {
    if (!c.contains(e) && m.rank(c.with(e)) != r) return false;
  }
  return true;
}

inline Polymatroid relax_circuit_hyperplane(const Polymatroid& m,
                                            SubsetKey c) {
  if (!is_circuit_hyperplane(m, c)) {
    throw Error(ErrorKind::kNotACircuitHyperplane,
                to_string(c) + " is not a circuit-hyperplane");
  }
  std::vector<std::uint32_t> sets;
  for (SubsetKey b : basis_sets(m)) sets.push_back(b.bits());
  sets.push_back(c.bits());
  return detail::matroid_from_sets(m.n(), sets);
}

// Q'_M = Q'_{M'} - x^{n-r-1} y^{r-1}.
inline IdentityReport relaxation_check(const Polymatroid& m, SubsetKey c) {
  const Polymatroid relaxed = relax_circuit_hyperplane(m, c);
  const int n = m.n(), r = m.total_rank();
  return compare_polynomials(
      "relaxation of " + to_string(c), q_prime(m),
      q_prime(relaxed) - BivariatePolynomial::monomial(1, n - r - 1, r - 1));
}

// Q'_{M1 + M2} = (x + y - 1) Q'_{M1} Q'_{M2}.
inline IdentityReport direct_sum_check(const Polymatroid& m1,
                                       const Polymatroid& m2) {
  const BivariatePolynomial s = BivariatePolynomial::x() +
                                BivariatePolynomial::y() -
                                BivariatePolynomial::constant(1);
  return compare_polynomials("direct sum", q_prime(direct_sum(m1, m2)),
                             s * q_prime(m1) * q_prime(m2));
}

// Q'_{M*}(x, y) = Q'_M(y, x).
inline IdentityReport s_dual_check(const Polymatroid& m, int s) {
  return compare_polynomials("s-dual with s = " + std::to_string(s),
                             q_prime(s_dual(m, s)), q_prime(m).swapped());
}

// T_{M*}(x, y) = T_M(y, x) for the matroid dual.
inline IdentityReport tutte_duality_check(const Polymatroid& m) {
  require_matroid(m);
  return compare_polynomials("Tutte duality", tutte_subset_sum(s_dual(m, 1)),
                             tutte_subset_sum(m).swapped());
}

// sum_{k <= min(t,u)} Q_{M1+M2}(t-k, u-k)
//     = sum_{t1 <= t, u1 <= u} Q_{M1}(t1, u1) Q_{M2}(t-t1, u-u1).
inline IdentityReport convolution_check(const Polymatroid& m1,
                                        const Polymatroid& m2, int t, int u) {
  if (t < 0 || u < 0) {
    throw Error(ErrorKind::kInvalidInput, "t and u must be nonnegative");
  }
  const Polymatroid sum = direct_sum(m1, m2);
  Integer lhs = 0, rhs = 0;
  for (int k = 0; k <= std::min(t, u); ++k) {
    lhs += count_lattice_points(sum, {t - k, u - k});
  }
  for (int t1 = 0; t1 <= t; ++t1) {
    for (int u1 = 0; u1 <= u; ++u1) {
      rhs += Integer(count_lattice_points(m1, {t1, u1})) *
             count_lattice_points(m2, {t - t1, u - u1});
    }
  }
  IdentityReport rep{"convolution at (" + std::to_string(t) + "," +
                         std::to_string(u) + ")",
                     lhs == rhs, ""};
  rep.detail = "lhs = " + lhs.str() + ", rhs = " + rhs.str();
  return rep;
}

}  // namespace polyq

#endif  // POLYQ_CONSTRUCTIONS_HPP_
