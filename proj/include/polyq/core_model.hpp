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

// Ground sets, rank functions, polymatroid recognition, bases and transfers.

#ifndef POLYQ_CORE_MODEL_HPP_
#define POLYQ_CORE_MODEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyq/detail/lattice_walk.hpp"
#include "polyq/error.hpp"
#include "polyq/subset.hpp"

namespace polyq {

inline constexpr int kMaxGroundSize = 16;

// An integer vector indexed by the ground set (coordinate e-1 for element e).
using LatticePoint = std::vector<int>;
using BaseVector = LatticePoint;

class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1 || n > kMaxGroundSize) {
      throw Error(ErrorKind::kInvalidInput,
                  "ground set size must be in 1.." +
                      std::to_string(kMaxGroundSize) + ", got " +
                      std::to_string(n));
    }
  }

  int size() const { return n_; }
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  SubsetKey full() const { return SubsetKey::full(n_); }
  bool contains(Element e) const { return e >= 1 && e <= n_; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

class RankFunction {
 public:
  // Checks P1 (r(empty) = 0), P2 on every covering pair S < S+i and P3 on
  // every diamond (S+i, S+j); these local forms are equivalent to the full
  // monotonicity and submodularity axioms.
  static RankFunction validate(int n, std::vector<int> values) {
    const GroundSet ground(n);
    if (values.size() != ground.subset_count()) {
      throw Error(ErrorKind::kInvalidInput,
                  "rank table must list all " +
                      std::to_string(ground.subset_count()) +
                      " subsets, got " + std::to_string(values.size()));
    }
    if (values[0] != 0) {
      throw AxiomViolation(1, 0, 0,
                           "r({}) = " + std::to_string(values[0]) + " != 0");
    }
    const std::uint32_t limit = static_cast<std::uint32_t>(values.size());
    for (std::uint32_t s = 0; s < limit; ++s) {
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bi = std::uint32_t{1} << i;
        if (s & bi) continue;
        if (values[s] > values[s | bi]) {
          throw AxiomViolation(
              2, s, s | bi,
              "r(" + to_string(SubsetKey(s)) + ") > r(" +
                  to_string(SubsetKey(s | bi)) + ")");
        }
        for (int j = i + 1; j < n; ++j) {
          const std::uint32_t bj = std::uint32_t{1} << j;
          if (s & bj) continue;
          if (values[s | bi | bj] + values[s] >
              values[s | bi] + values[s | bj]) {
            throw AxiomViolation(
                3, s | bi, s | bj,
                "submodularity fails for " + to_string(SubsetKey(s | bi)) +
                    " and " + to_string(SubsetKey(s | bj)));
          }
        }
      }
    }
    return RankFunction(ground, std::move(values));
  }

  GroundSet ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int operator()(SubsetKey s) const { return values_[s.bits()]; }
  int total() const { return values_.back(); }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const RankFunction&, const RankFunction&) = default;

 private:
  RankFunction(GroundSet ground, std::vector<int> values)
      : ground_(ground), values_(std::move(values)) {}

  GroundSet ground_;
  std::vector<int> values_;
};

inline RankFunction validate_rank_function(int n, std::vector<int> values) {
  return RankFunction::validate(n, std::move(values));
}

class Polymatroid {
 public:
  explicit Polymatroid(RankFunction rank) : rank_(std::move(rank)) {
    is_matroid_ = true;
    for (Element e = 1; e <= n(); ++e) {
      if (singleton_rank(e) > 1) is_matroid_ = false;
    }
  }

  static Polymatroid from_bases(int n,
                                const std::vector<LatticePoint>& bases);

  const RankFunction& rank_function() const { return rank_; }
  int n() const { return rank_.n(); }
  GroundSet ground() const { return rank_.ground(); }
  int rank(SubsetKey s) const { return rank_(s); }
  int total_rank() const { return rank_.total(); }
  int singleton_rank(Element e) const {
    return rank_(SubsetKey::singleton(e));
  }
  int max_singleton_rank() const {
    int out = 0;
    for (Element e = 1; e <= n(); ++e) out = std::max(out, singleton_rank(e));
    return out;
  }
  bool is_matroid() const { return is_matroid_; }

  friend bool operator==(const Polymatroid& a, const Polymatroid& b) {
    return a.rank_ == b.rank_;
  }

 private:
  RankFunction rank_;
  bool is_matroid_ = true;
};

// A total order on 1..n, stored both as the sequence of elements from
// smallest to largest and as the inverse map.
class Ordering {
 public:
  static Ordering natural(int n) {
    std::vector<Element> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i + 1;
    return Ordering(std::move(seq));
  }
  static Ordering reversed(int n) {
    std::vector<Element> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = n - i;
    return Ordering(std::move(seq));
  }
  // `sequence` lists the elements from smallest to largest, e.g. {2,3,1}
  // for 2 < 3 < 1.
  static Ordering from_sequence(std::vector<Element> sequence) {
    const int n = static_cast<int>(sequence.size());
    std::vector<bool> seen(n + 1, false);
    for (Element e : sequence) {
      if (e < 1 || e > n || seen[e]) {
        throw Error(ErrorKind::kInvalidInput,
                    "ordering is not a permutation of 1.." + std::to_string(n));
      }
      seen[e] = true;
    }
    return Ordering(std::move(sequence));
  }

  int n() const { return static_cast<int>(sequence_.size()); }
  const std::vector<Element>& sequence() const { return sequence_; }
  int position(Element e) const { return position_[e]; }
  bool less(Element a, Element b) const { return position_[a] < position_[b]; }
  Element smallest() const { return sequence_.front(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(sequence_[i]);
    }
    return out;
  }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  explicit Ordering(std::vector<Element> sequence)
      : sequence_(std::move(sequence)), position_(sequence_.size() + 1, 0) {
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      position_[sequence_[i]] = static_cast<int>(i);
    }
  }

  std::vector<Element> sequence_;
  std::vector<int> position_;
};

inline int dot(std::span<const int> x, SubsetKey s) {
  int sum = 0;
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1) {
    sum += x[std::countr_zero(b)];
  }
  return sum;
}

// Def: x >= 0, x.e_E = r(E) and x.e_S <= r(S) for all S.
inline bool is_base(const Polymatroid& m, std::span<const int> x) {
  const int n = m.n();
  if (static_cast<int>(x.size()) != n) return false;
  for (int v : x) {
    if (v < 0) return false;
  }
  std::vector<int> sums(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < sums.size(); ++s) {
    const int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + x[low];
    if (sums[s] > m.rank(SubsetKey(s))) return false;
  }
  return sums.back() == m.total_rank();
}

// All integer bases, lexicographically sorted.
inline std::vector<BaseVector> enumerate_bases(const Polymatroid& m) {
  const int n = m.n();
  detail::Region region;
  region.n = n;
  region.total = m.total_rank();
  region.lo.assign(n, 0);
  region.hi.resize(n);
  for (int i = 0; i < n; ++i) region.hi[i] = m.singleton_rank(i + 1);
  region.cap.resize(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < region.cap.size(); ++s) {
    region.cap[s] = m.rank(SubsetKey(s));
  }
  std::vector<BaseVector> out;
  detail::walk_region(region, [&](std::span<const int> p) {
    out.emplace_back(p.begin(), p.end());
  });
  return out;
}

// r(S) := max over the given bases of x.e_S, validated; the input must be the
// complete set of lattice points of its own convex hull.
inline RankFunction rank_from_bases(int n,
                                    const std::vector<LatticePoint>& bases) {
  if (bases.empty()) {
    throw Error(ErrorKind::kNotAPolymatroid, "empty base list");
  }
  const GroundSet ground(n);
  const long long sum0 = [&] {
    long long s = 0;
    for (int v : bases.front()) s += v;
    return s;
  }();
  for (const auto& b : bases) {
    if (static_cast<int>(b.size()) != n) {
      throw Error(ErrorKind::kNotAPolymatroid,
                  "base vector of length " + std::to_string(b.size()) +
                      ", expected " + std::to_string(n));
    }
    long long s = 0;
    for (int v : b) {
      if (v < 0) {
        throw Error(ErrorKind::kNotAPolymatroid,
                    "base vector has a negative coordinate");
      }
      s += v;
    }
    if (s != sum0) {
      throw Error(ErrorKind::kNotAPolymatroid,
                  "base vectors have different coordinate sums");
    }
  }
  std::vector<int> values(ground.subset_count(), 0);
  for (std::uint32_t s = 1; s < values.size(); ++s) {
    int best = 0;
    for (const auto& b : bases) best = std::max(best, dot(b, SubsetKey(s)));
    values[s] = best;
  }
  std::vector<int> table = values;
  RankFunction rank = [&] {
    try {
      return RankFunction::validate(n, std::move(table));
    } catch (const AxiomViolation& e) {
      throw Error(ErrorKind::kNotAPolymatroid,
                  std::string("induced rank function invalid: ") + e.what());
    }
  }();
  std::vector<LatticePoint> given = bases;
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (enumerate_bases(Polymatroid(rank)) != given) {
    throw Error(ErrorKind::kNotAPolymatroid,
                "base list is not the full lattice point set of its polytope");
  }
  return rank;
}

inline Polymatroid Polymatroid::from_bases(
    int n, const std::vector<LatticePoint>& bases) {
  return Polymatroid(rank_from_bases(n, bases));
}

inline void require_element(const Polymatroid& m, Element e) {
  if (!m.ground().contains(e)) {
    throw Error(ErrorKind::kInvalidInput,
                "element " + std::to_string(e) + " not in ground set 1.." +
                    std::to_string(m.n()));
  }
}

inline void require_base(const Polymatroid& m, std::span<const int> x) {
  if (!is_base(m, x)) {
    throw Error(ErrorKind::kNotABase, "vector is not a base");
  }
}

inline void require_matroid(const Polymatroid& m) {
  if (!m.is_matroid()) {
    throw Error(ErrorKind::kNotAMatroid,
                "operation requires a matroid (all singleton ranks <= 1)");
  }
}

// x - e_from + e_to is again a base. The identity transfer (from == to) is
// defined to be possible.
inline bool transfer_possible(const Polymatroid& m, std::span<const int> x,
                              Element from, Element to) {
  require_base(m, x);
  require_element(m, from);
  require_element(m, to);
  if (from == to) return true;
  if (x[from - 1] == 0) return false;
  LatticePoint y(x.begin(), x.end());
  --y[from - 1];
  ++y[to - 1];
  return is_base(m, y);
}

inline bool is_loop(const Polymatroid& m, Element e) {
  require_matroid(m);
  require_element(m, e);
  return m.singleton_rank(e) == 0;
}

inline bool is_coloop(const Polymatroid& m, Element e) {
  require_matroid(m);
  require_element(m, e);
  return m.rank(m.ground().full().without(e)) == m.total_rank() - 1;
}

// Rank table relabelled after removing coordinate `e`: elements above e move
// down by one.
inline SubsetKey drop_element(SubsetKey s, Element e) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << (e - 1)) - 1);
  const std::uint32_t high = (s.bits() >> e) << (e - 1);
  return SubsetKey(low | high);
}

inline SubsetKey insert_element_gap(SubsetKey s, Element e) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << (e - 1)) - 1);
  const std::uint32_t high = (s.bits() >> (e - 1)) << e;
  return SubsetKey(low | high);
}

}  // namespace polyq

#endif  // POLYQ_CORE_MODEL_HPP_
