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

// Combinatorics of the top degree part of Q': the exchange algorithm that
// picks a basis for each split E = X u Y, Dawson interval partitions, and the
// coefficient checks they imply.

#ifndef POLYQ_STRUCTURE_HPP_
#define POLYQ_STRUCTURE_HPP_

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "polyq/activity.hpp"
#include "polyq/core_model.hpp"
#include "polyq/error.hpp"
#include "polyq/geometry.hpp"
#include "polyq/polynomial.hpp"
#include "polyq/report.hpp"
#include "polyq/tutte.hpp"

namespace polyq {

// X u Y = E and X n Y = {1}.
struct PartitionXY {
  SubsetKey x;
  SubsetKey y;

  static PartitionXY from_x(int n, SubsetKey x) {
    const SubsetKey one = SubsetKey::singleton(1);
    return {x | one, x.complement(n) | one};
  }

  void validate(int n) const {
    if ((x | y) != SubsetKey::full(n) || (x & y) != SubsetKey::singleton(1)) {
      throw Error(ErrorKind::kInvalidInput,
                  "need X u Y = E and X n Y = {1}, got X = " + to_string(x) +
                      ", Y = " + to_string(y));
    }
  }
};

// All 2^{n-1} splits, ordered by the bitmask of X.
inline std::vector<PartitionXY> all_partitions(int n) {
  std::vector<PartitionXY> out;
  for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (n - 1)); ++rest) {
    out.push_back(PartitionXY::from_x(n, SubsetKey(rest << 1)));
  }
  return out;
}

struct ExchangeRun {
  SubsetKey basis;
  int steps = 0;
};

// Repeatedly scan b_1 < ... < b_r: (a) swap b_j for the largest x in X above
// it that keeps a basis; otherwise (b) if b_j is in Y, swap it for the
// smallest z below it that keeps a basis. Restart after every swap. Each
// swap must strictly increase B xor Y in colex order; the number of swaps is
// capped at #bases * n^2.
inline ExchangeRun run_exchange(const Polymatroid& m, const PartitionXY& p,
                                SubsetKey start) {
  require_matroid(m);
  const int n = m.n();
  p.validate(n);
  require_basis(m, start);
  const long long cap =
      static_cast<long long>(basis_sets(m).size()) * n * n;
  SubsetKey cur = start;
  int steps = 0;
  while (true) {
    std::optional<SubsetKey> next;
    for (Element b : cur.elements()) {
      for (Element x = n; x > b && !next; --x) {
        if (p.x.contains(x) && !cur.contains(x) &&
            is_basis(m, cur.without(b).with(x))) {
          next = cur.without(b).with(x);
        }
      }
      if (next) break;
      if (p.y.contains(b)) {
        for (Element z = 1; z < b && !next; ++z) {
          if (!cur.contains(z) && is_basis(m, cur.without(b).with(z))) {
            next = cur.without(b).with(z);
          }
        }
      }
      if (next) break;
    }
    if (!next) return {cur, steps};
    if (!((cur ^ p.y) < (*next ^ p.y))) {
      throw Error(ErrorKind::kNonTermination,
                  "B xor Y did not increase: " + to_string(cur) + " -> " +
                      to_string(*next));
    }
    cur = *next;
    if (++steps > cap) {
      throw Error(ErrorKind::kNonTermination,
                  "exchange exceeded " + std::to_string(cap) + " steps");
    }
  }
}

inline SubsetKey find_basis_for_partition(const Polymatroid& m,
                                          const PartitionXY& p,
                                          SubsetKey start) {
  return run_exchange(m, p, start).basis;
}

// No element of X externally inactive and no element of Y internally
// inactive at B, with transfer activities under `order`.
inline bool activity_characterization(const Polymatroid& m,
                                      const PartitionXY& p, SubsetKey b,
                                      const Ordering& order) {
  const ActivityRecord rec = kalman_activities(m, indicator(b, m.n()), order);
  return p.x.subset_of(rec.ext_active) && p.y.subset_of(rec.int_active);
}

// Bases satisfying the characterization; exactly one is expected.
inline std::vector<SubsetKey> characterized_bases(const Polymatroid& m,
                                                  const PartitionXY& p,
                                                  const Ordering& order) {
  std::vector<SubsetKey> out;
  for (SubsetKey b : basis_sets(m)) {
    if (activity_characterization(m, p, b, order)) out.push_back(b);
  }
  return out;
}

struct TopDegreeFace {
  PartitionXY partition;
  SubsetKey basis;
};

// One face per split. Each basis is checked to be the unique basis meeting
// the activity characterization under the natural order.
inline std::vector<TopDegreeFace> top_degree_faces(const Polymatroid& m) {
  const auto bases = basis_sets(m);
  const Ordering natural = Ordering::natural(m.n());
  std::vector<TopDegreeFace> out;
  for (const PartitionXY& p : all_partitions(m.n())) {
    const SubsetKey b = find_basis_for_partition(m, p, bases.front());
    const auto chosen = characterized_bases(m, p, natural);
    if (chosen.size() != 1 || chosen.front() != b) {
      throw Error(ErrorKind::kIdentityFailed,
                  "activity characterization does not single out " +
                      to_string(b) + " for X = " + to_string(p.x));
    }
    out.push_back({p, b});
  }
  return out;
}

struct DawsonPart {
  SubsetKey s;
  SubsetKey t;
  SubsetKey basis;
};

// Colex order relative to `order`: compare by the largest differing element.
inline bool colex_less(SubsetKey a, SubsetKey b, const Ordering& order) {
  const SubsetKey diff = a ^ b;
  if (diff.empty()) return false;
  Element top = 0;
  for (Element e : diff.elements()) {
    if (top == 0 || order.less(top, e)) top = e;
  }
  return b.contains(top);
}

// Intervals [B - Int(B), B u Ext(B)]; checked to partition 2^E and to be
// sorted by T whenever sorted by S (both in colex order). Parts are returned
// in that order.
inline std::vector<DawsonPart> dawson_partition(const Polymatroid& m,
                                                const Ordering& order) {
  const int n = m.n();
  std::vector<DawsonPart> parts;
  for (SubsetKey b : basis_sets(m)) {
    const StandardActivities a = standard_activities(m, b, order);
    parts.push_back({b - a.internal, b | a.external, b});
  }
  std::vector<int> cover(std::size_t{1} << n, 0);
  for (const DawsonPart& part : parts) {
    const SubsetKey free = part.t - part.s;
    // Enumerate the subsets of `free`.
    std::uint32_t sub = free.bits();
    while (true) {
      ++cover[(part.s | SubsetKey(sub)).bits()];
      if (sub == 0) break;
      sub = (sub - 1) & free.bits();
    }
  }
  for (std::uint32_t a = 0; a < cover.size(); ++a) {
    if (cover[a] != 1) {
      throw Error(ErrorKind::kNotAPartition,
                  to_string(SubsetKey(a)) + " lies in " +
                      std::to_string(cover[a]) + " intervals");
    }
  }
  std::sort(parts.begin(), parts.end(),
            [&](const DawsonPart& a, const DawsonPart& b) {
              return colex_less(a.s, b.s, order);
            });
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!colex_less(parts[i - 1].t, parts[i].t, order)) {
      throw Error(ErrorKind::kNotAPartition,
                  "ordering property fails between " +
                      to_string(parts[i - 1].t) + " and " +
                      to_string(parts[i].t));
    }
  }
  return parts;
}

inline std::vector<DawsonPart> dawson_partition(const Polymatroid& m) {
  return dawson_partition(m, Ordering::natural(m.n()));
}

// Sum over parts and over A <= C inside [S, T] of x^{n-|C|} y^{|A|}. Checked
// against the closed form sum y^{|S|} x^{n-|T|} (x+y+1)^{|T - S|}.
inline BivariatePolynomial interval_enumerator(const Polymatroid& m,
                                               const Ordering& order) {
  const int n = m.n();
  const BivariatePolynomial x = BivariatePolynomial::x();
  const BivariatePolynomial y = BivariatePolynomial::y();
  const BivariatePolynomial cube = x + y + x.one();
  BivariatePolynomial brute, closed;
  for (const DawsonPart& part : dawson_partition(m, order)) {
    const std::uint32_t free = (part.t - part.s).bits();
    for (std::uint32_t a = free;; a = (a - 1) & free) {
      const std::uint32_t rest = free & ~a;
      for (std::uint32_t c = rest;; c = (c - 1) & rest) {
        const int size_a = part.s.size() + std::popcount(a);
        const int size_c = size_a + std::popcount(c);
        brute += BivariatePolynomial::monomial(1, n - size_c, size_a);
        if (c == 0) break;
      }
      if (a == 0) break;
    }
    closed += BivariatePolynomial::monomial(1, n - part.t.size(),
                                            part.s.size()) *
              pow(cube, (part.t - part.s).size());
  }
  if (brute != closed) {
    throw Error(ErrorKind::kIdentityFailed,
                "interval sum " + brute.to_string() + " != closed form " +
                    closed.to_string());
  }
  return closed;
}

// The same sum with the other orientation, x^{|A|} y^{n-|C|}.
inline BivariatePolynomial interval_enumerator_swapped(const Polymatroid& m,
                                                       const Ordering& order) {
  return interval_enumerator(m, order).swapped();
}

// Each split's basis B has X inside the Dawson interval of B.
inline IdentityReport cube_grouping_check(const Polymatroid& m) {
  const auto parts = dawson_partition(m);
  IdentityReport rep{"cube grouping", true, ""};
  for (const TopDegreeFace& face : top_degree_faces(m)) {
    const auto it = std::find_if(
        parts.begin(), parts.end(),
        [&](const DawsonPart& p) { return p.basis == face.basis; });
    if (!(it->s.subset_of(face.partition.x) &&
          face.partition.x.subset_of(it->t))) {
      rep.passed = false;
      rep.detail = "X = " + to_string(face.partition.x) + " not in [" +
                   to_string(it->s) + ", " + to_string(it->t) + "]";
      return rep;
    }
  }
  rep.detail = std::to_string(parts.size()) + " cubes";
  return rep;
}

// (-1)^{n-1} Q'(-x, -y).
inline BivariatePolynomial alternated(const BivariatePolynomial& q, int n) {
  const BivariatePolynomial flipped = q.sign_substituted(-1, -1);
  return (n - 1) % 2 ? -flipped : flipped;
}

struct CoefficientReport {
  IdentityReport alternation;
  IdentityReport top_degree;
  std::optional<IdentityReport> grading;  // matroids only

  bool all_passed() const {
    return alternation.passed && top_degree.passed &&
           (!grading || grading->passed);
  }
};

inline CoefficientReport coefficient_report(const Polymatroid& m,
                                            const BivariatePolynomial& q) {
  const int n = m.n();
  const BivariatePolynomial alt = alternated(q, n);
  CoefficientReport rep;
  rep.alternation = {"sign alternation", true, alt.to_string()};
  for (const auto& [e, c] : alt.terms()) {
    if (c < 0) {
      rep.alternation.passed = false;
      rep.alternation.detail =
          "coefficient " + c.str() + " at x^" + std::to_string(e.x) + " y^" +
          std::to_string(e.y) + " in " + alt.to_string();
      break;
    }
  }
  rep.top_degree = compare_polynomials(
      "top degree", q.homogeneous_part(n - 1),
      pow(BivariatePolynomial::x() + BivariatePolynomial::y(), n - 1));
  if (m.is_matroid()) {
    const BivariatePolynomial cube =
        BivariatePolynomial::x() + BivariatePolynomial::y() +
        BivariatePolynomial::constant(1);
    rep.grading = compare_polynomials(
        "interval grading", cube * alt,
        interval_enumerator(m, Ordering::natural(n)));
  }
  return rep;
}

inline CoefficientReport coefficient_report(const Polymatroid& m) {
  return coefficient_report(m, q_prime(m));
}

}  // namespace polyq

#endif  // POLYQ_STRUCTURE_HPP_
