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

// Transfer activities of polymatroid bases, the internal and external
// polynomials, and the simplex partition of P + t*Nabla (or P + u*Delta)
// indexed by bases.

#ifndef POLYQ_ACTIVITY_HPP_
#define POLYQ_ACTIVITY_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "polyq/core_model.hpp"
#include "polyq/error.hpp"
#include "polyq/geometry.hpp"
#include "polyq/polynomial.hpp"
#include "polyq/report.hpp"
#include "polyq/tutte.hpp"

namespace polyq {

struct ActivityRecord {
  BaseVector base;
  SubsetKey int_active;
  SubsetKey ext_active;
  int iota = 0;
  int epsilon = 0;
  int iota_bar = 0;
  int epsilon_bar = 0;
};

// u is internally active when no unit can move from u to a smaller element,
// externally active when none can move from a smaller element to u.
inline ActivityRecord kalman_activities(const Polymatroid& m,
                                        std::span<const int> x,
                                        const Ordering& order) {
  require_ordering(m, order);
  require_base(m, x);
  const int n = m.n();
  ActivityRecord rec;
  rec.base.assign(x.begin(), x.end());
  for (Element u = 1; u <= n; ++u) {
    bool internal = true, external = true;
    for (Element v = 1; v <= n; ++v) {
      if (!order.less(v, u)) continue;
      if (internal && transfer_possible(m, x, u, v)) internal = false;
      if (external && transfer_possible(m, x, v, u)) external = false;
    }
    if (internal) rec.int_active = rec.int_active.with(u);
    if (external) rec.ext_active = rec.ext_active.with(u);
  }
  rec.iota = rec.int_active.size();
  rec.epsilon = rec.ext_active.size();
  rec.iota_bar = n - rec.iota;
  rec.epsilon_bar = n - rec.epsilon;
  return rec;
}

inline std::vector<ActivityRecord> activity_table(const Polymatroid& m,
                                                  const Ordering& order) {
  std::vector<ActivityRecord> out;
  for (const auto& b : enumerate_bases(m)) {
    out.push_back(kalman_activities(m, b, order));
  }
  return out;
}

// Sum over bases of xi^iota eta^epsilon; depends on the order in general.
inline BivariatePolynomial activity_enumerator(const Polymatroid& m,
                                               const Ordering& order) {
  BivariatePolynomial out(kActivityVariables);
  for (const auto& rec : activity_table(m, order)) {
    out += BivariatePolynomial::monomial(1, rec.iota, rec.epsilon,
                                         kActivityVariables);
  }
  return out;
}

namespace detail {

inline BivariatePolynomial inactive_polynomial(const Polymatroid& m,
                                               const Ordering& order,
                                               bool internal) {
  BivariatePolynomial out(kActivityVariables);
  for (const auto& rec : activity_table(m, order)) {
    out += internal ? BivariatePolynomial::monomial(1, rec.iota_bar, 0,
                                                    kActivityVariables)
                    : BivariatePolynomial::monomial(1, 0, rec.epsilon_bar,
                                                    kActivityVariables);
  }
  return out;
}

inline BivariatePolynomial order_checked(const Polymatroid& m,
                                         const Ordering& order,
                                         bool internal) {
  const BivariatePolynomial result = inactive_polynomial(m, order, internal);
  for (const Ordering& other :
       {Ordering::natural(m.n()), Ordering::reversed(m.n())}) {
    const BivariatePolynomial again = inactive_polynomial(m, other, internal);
    if (again != result) {
      throw Error(ErrorKind::kOrderDependenceDetected,
                  std::string(internal ? "I_M" : "X_M") + " is " +
                      result.to_string() + " under " + order.to_string() +
                      " but " + again.to_string() + " under " +
                      other.to_string());
    }
  }
  return result;
}

}  // namespace detail

// I_M(xi) = sum xi^{iota_bar}, in the xi variable. Recomputed under the
// natural and reversed orders as an independence check.
inline BivariatePolynomial internal_polynomial(const Polymatroid& m,
                                               const Ordering& order) {
  return detail::order_checked(m, order, true);
}

// X_M(eta) = sum eta^{epsilon_bar}, in the eta variable.
inline BivariatePolynomial external_polynomial(const Polymatroid& m,
                                               const Ordering& order) {
  return detail::order_checked(m, order, false);
}

// Throws OrderDependenceDetected unless I_M and X_M agree across `orders`.
inline void check_order_invariance(const Polymatroid& m,
                                   const std::vector<Ordering>& orders) {
  if (orders.empty()) return;
  const auto i0 = detail::inactive_polynomial(m, orders.front(), true);
  const auto x0 = detail::inactive_polynomial(m, orders.front(), false);
  for (const Ordering& o : orders) {
    const auto i1 = detail::inactive_polynomial(m, o, true);
    const auto x1 = detail::inactive_polynomial(m, o, false);
    if (i1 != i0 || x1 != x0) {
      throw Error(ErrorKind::kOrderDependenceDetected,
                  "orders " + orders.front().to_string() + " and " +
                      o.to_string() + " disagree");
    }
  }
}

// xi Q'(xi, 1) = sum xi^iota and eta Q'(1, eta) = sum eta^epsilon.
inline std::vector<IdentityReport> kalman_specialization(
    const Polymatroid& m, const BivariatePolynomial& qprime,
    const Ordering& order) {
  BivariatePolynomial lhs_int(kActivityVariables), lhs_ext(kActivityVariables);
  for (const auto& [e, c] : qprime.terms()) {
    lhs_int += BivariatePolynomial::monomial(c, e.x + 1, 0, kActivityVariables);
    lhs_ext += BivariatePolynomial::monomial(c, 0, e.y + 1, kActivityVariables);
  }
  BivariatePolynomial rhs_int(kActivityVariables), rhs_ext(kActivityVariables);
  for (const auto& rec : activity_table(m, order)) {
    rhs_int += BivariatePolynomial::monomial(1, rec.iota, 0, kActivityVariables);
    rhs_ext +=
        BivariatePolynomial::monomial(1, 0, rec.epsilon, kActivityVariables);
  }
  return {compare_polynomials("internal specialization", lhs_int, rhs_int),
          compare_polynomials("external specialization", lhs_ext, rhs_ext)};
}

enum class PartitionSide { kInternal, kExternal };

struct SimplexCell {
  BaseVector base;
  SubsetKey directions;  // the active elements spanning the simplex
  int dimension = 0;
  long long assigned = 0;
};

struct ActivityPartitionReport {
  PartitionSide side = PartitionSide::kInternal;
  int t = 0;
  std::vector<SimplexCell> cells;
  long long total_points = 0;
};

// Assigns every lattice point g of P + t*Nabla to a base f by walking back
// to P: at each step add the order-smallest e_j that keeps the point in the
// sum with one fewer copy of Nabla. Checks that g - f lies in
// t * conv{-e_i : i internally active at f} and that each such simplex is
// hit exactly binom(t + d, d) times, d = iota(f) - 1. The external side
// mirrors this with Delta, subtraction and external activity.
inline ActivityPartitionReport activity_partition_check(
    const Polymatroid& m, int t, PartitionSide side, const Ordering& order) {
  require_ordering(m, order);
  if (t < 1) throw Error(ErrorKind::kInvalidInput, "t must be >= 1");
  const bool internal = side == PartitionSide::kInternal;
  const int n = m.n();
  const int step = internal ? 1 : -1;
  auto in_sum = [&](std::span<const int> q, int s) {
    return member_minkowski(m, q, internal ? MinkowskiConfig{s, 0}
                                           : MinkowskiConfig{0, s});
  };

  ActivityPartitionReport report{side, t, {}, 0};
  std::map<BaseVector, std::size_t> index;
  for (const auto& rec : activity_table(m, order)) {
    const SubsetKey dirs = internal ? rec.int_active : rec.ext_active;
    index[rec.base] = report.cells.size();
    report.cells.push_back({rec.base, dirs, dirs.size() - 1, 0});
  }

  auto violation = [&](std::span<const int> g, const std::string& why) {
    std::string pt = "(";
    for (int i = 0; i < n; ++i) pt += (i ? "," : "") + std::to_string(g[i]);
    return Error(ErrorKind::kPartitionViolation, why + " at g = " + pt + ")");
  };

  const MinkowskiConfig cfg =
      internal ? MinkowskiConfig{t, 0} : MinkowskiConfig{0, t};
  for_each_lattice_point(m, cfg, [&](std::span<const int> g) {
    ++report.total_points;
    LatticePoint cur(g.begin(), g.end());
    for (int s = t; s >= 1; --s) {
      bool moved = false;
      for (Element e : order.sequence()) {
        cur[e - 1] += step;
        if (in_sum(cur, s - 1)) {
          moved = true;
          break;
        }
        cur[e - 1] -= step;
      }
      if (!moved) throw violation(g, "greedy walk is stuck");
    }
    auto it = index.find(cur);
    if (it == index.end()) throw violation(g, "walk did not end at a base");
    SimplexCell& cell = report.cells[it->second];
    for (int i = 0; i < n; ++i) {
      const int diff = (g[i] - cur[i]) * step;  // <= 0 along directions
      if (diff > 0 || (diff != 0 && !cell.directions.contains(i + 1))) {
        throw violation(g, "point outside the simplex attached at its base");
      }
    }
    ++cell.assigned;
  });

  long long expected_total = 0;
  for (const SimplexCell& cell : report.cells) {
    const long long expected =
        static_cast<long long>(binomial(t + cell.dimension, cell.dimension));
    if (cell.assigned != expected) {
      throw violation(cell.base, "simplex received " +
                                     std::to_string(cell.assigned) +
                                     " points, expected " +
                                     std::to_string(expected));
    }
    expected_total += expected;
  }
  if (expected_total != report.total_points) {
    throw Error(ErrorKind::kPartitionViolation, "point totals disagree");
  }
  return report;
}

}  // namespace polyq

#endif  // POLYQ_ACTIVITY_HPP_
