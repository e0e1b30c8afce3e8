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

// Lattice points of P(M) + u*Delta + t*Nabla, the counting polynomial Q_M(t,u)
// and its reparametrization Q'_M(x,y).
//
// Coordinates: c_ij multiplies binom(t, i) binom(u, j), so in Q' the
// variable x goes with t (the Nabla direction) and y with u (Delta).

#ifndef POLYQ_GEOMETRY_HPP_
#define POLYQ_GEOMETRY_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "polyq/core_model.hpp"
#include "polyq/detail/lattice_walk.hpp"
#include "polyq/error.hpp"
#include "polyq/polynomial.hpp"

namespace polyq {

struct MinkowskiConfig {
  int t = 0;  // scaling of Nabla = conv{-e_i}
  int u = 0;  // scaling of Delta = conv{e_i}

  void validate() const {
    if (t < 0 || u < 0) {
      throw Error(ErrorKind::kInvalidInput,
                  "t and u must be nonnegative, got t=" + std::to_string(t) +
                      " u=" + std::to_string(u));
    }
  }
};

inline constexpr long long kDefaultBoxLimit = 1'000'000'000;

// Support-function description of the Minkowski sum: the sum over E is
// r(E) + u - t and every nonempty proper S has q.e_S <= r(S) + u.
inline bool member_minkowski(const Polymatroid& m, std::span<const int> q,
                             MinkowskiConfig cfg) {
  cfg.validate();
  const int n = m.n();
  if (static_cast<int>(q.size()) != n) return false;
  const std::uint32_t full = m.ground().full().bits();
  std::vector<long long> sums(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    sums[s] = sums[s & (s - 1)] + q[std::countr_zero(s)];
    if (s != full && sums[s] > m.rank(SubsetKey(s)) + cfg.u) return false;
  }
  return sums[full] == m.total_rank() + cfg.u - cfg.t;
}

// Ground truth by search: q = p + (u unit vectors) - (t unit vectors) for a
// base p. Memoized over (point, remaining steps); Delta steps are peeled
// first, which loses nothing since the two multisets commute.
class DecompositionOracle {
 public:
  explicit DecompositionOracle(const Polymatroid& m) : n_(m.n()) {
    for (auto& b : enumerate_bases(m)) bases_.insert(std::move(b));
  }

  bool member(std::span<const int> q, MinkowskiConfig cfg) {
    cfg.validate();
    if (static_cast<int>(q.size()) != n_) return false;
    return reachable(LatticePoint(q.begin(), q.end()), cfg.u, cfg.t);
  }

 private:
  bool reachable(const LatticePoint& q, int deltas, int nablas) {
    if (deltas == 0 && nablas == 0) return bases_.contains(q);
    auto key = std::make_tuple(q, deltas, nablas);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    LatticePoint p = q;
    for (int i = 0; i < n_ && !found; ++i) {
      if (deltas > 0) {
        --p[i];
        found = reachable(p, deltas - 1, nablas);
        ++p[i];
      } else {
        ++p[i];
        found = reachable(p, 0, nablas - 1);
        --p[i];
      }
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

  int n_;
  std::set<LatticePoint> bases_;
  std::map<std::tuple<LatticePoint, int, int>, bool> memo_;
};

inline bool member_decomposition(const Polymatroid& m, std::span<const int> q,
                                 MinkowskiConfig cfg) {
  DecompositionOracle oracle(m);
  return oracle.member(q, cfg);
}

// Number of integer points in the bounding box prod [-t, r({i}) + u].
inline long double bounding_box_volume(const Polymatroid& m,
                                       MinkowskiConfig cfg) {
  long double volume = 1;
  for (Element e = 1; e <= m.n(); ++e) {
    volume *= static_cast<long double>(m.singleton_rank(e) + cfg.u + cfg.t + 1);
  }
  return volume;
}

namespace detail {

inline Region minkowski_region(const Polymatroid& m, MinkowskiConfig cfg,
                               long long box_limit) {
  cfg.validate();
  if (bounding_box_volume(m, cfg) > static_cast<long double>(box_limit)) {
    throw Error(ErrorKind::kBoxOverflow,
                "bounding box exceeds " + std::to_string(box_limit) +
                    " points at t=" + std::to_string(cfg.t) +
                    " u=" + std::to_string(cfg.u));
  }
  const int n = m.n();
  Region region;
  region.n = n;
  region.total = m.total_rank() + cfg.u - cfg.t;
  region.lo.assign(n, -cfg.t);
  region.hi.resize(n);
  for (int i = 0; i < n; ++i) region.hi[i] = m.singleton_rank(i + 1) + cfg.u;
  region.cap.resize(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < region.cap.size(); ++s) {
    region.cap[s] = m.rank(SubsetKey(s)) + cfg.u;
  }
  return region;
}

}  // namespace detail

// Visits the lattice points in lexicographic order.
template <class Visit>
void for_each_lattice_point(const Polymatroid& m, MinkowskiConfig cfg,
                            Visit&& visit,
                            long long box_limit = kDefaultBoxLimit) {
  detail::walk_region(detail::minkowski_region(m, cfg, box_limit),
                      std::forward<Visit>(visit));
}

inline std::vector<LatticePoint> lattice_points(
    const Polymatroid& m, MinkowskiConfig cfg,
    long long box_limit = kDefaultBoxLimit) {
  std::vector<LatticePoint> out;
  for_each_lattice_point(
      m, cfg,
      [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); },
      box_limit);
  return out;
}

inline long long count_lattice_points(const Polymatroid& m,
                                      MinkowskiConfig cfg,
                                      long long box_limit = kDefaultBoxLimit) {
  long long count = 0;
  for_each_lattice_point(
      m, cfg, [&](std::span<const int>) { ++count; }, box_limit);
  return count;
}

inline Integer binomial(long long a, int k) {
  if (k < 0 || a < k) return 0;
  Integer c = 1;
  for (int i = 0; i < k; ++i) {
    c *= a - i;
    c /= i + 1;
  }
  return c;
}

// Q_M(t,u) = sum c[i][j] binom(t,i) binom(u,j), 0 <= i + j <= n - 1.
struct QTable {
  int n = 0;
  std::vector<std::vector<Integer>> c;

  Integer evaluate(long long t, long long u) const {
    Integer sum = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        if (c[i][j] != 0) sum += c[i][j] * binomial(t, i) * binomial(u, j);
      }
    }
    return sum;
  }
};

// Counts on the grid t + u <= n - 1, iterated forward differences, then a
// consistency check at every (t,u) with t + u = n (and n + 1 when that gives
// fewer than three points).
inline QTable q_table(const Polymatroid& m,
                      long long box_limit = kDefaultBoxLimit) {
  const int n = m.n();
  std::vector<std::vector<Integer>> counts(n, std::vector<Integer>(n, 0));
  for (int t = 0; t < n; ++t) {
    for (int u = 0; t + u < n; ++u) {
      counts[t][u] = count_lattice_points(m, {t, u}, box_limit);
    }
  }
  QTable table{n, std::vector<std::vector<Integer>>(n,
                                                    std::vector<Integer>(n))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      Integer c = 0;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          Integer term = binomial(i, a) * binomial(j, b) * counts[a][b];
          c += ((i - a + j - b) % 2) ? Integer(-term) : term;
        }
      }
      table.c[i][j] = c;
    }
  }
  std::vector<std::pair<int, int>> checks;
  for (int t = 0; t <= n; ++t) checks.push_back({t, n - t});
  if (checks.size() < 3) {
    for (int t = 0; t <= n + 1; ++t) checks.push_back({t, n + 1 - t});
  }
  for (const auto& [t, u] : checks) {
    const long long actual = count_lattice_points(m, {t, u}, box_limit);
    const Integer fitted = table.evaluate(t, u);
    if (fitted != actual) {
      throw Error(ErrorKind::kDegreeCheckFailed,
                  "fitted Q(" + std::to_string(t) + "," + std::to_string(u) +
                      ") = " + fitted.str() + " but the count is " +
                      std::to_string(actual));
    }
  }
  return table;
}

// Q'(x,y) = sum c_ij (x-1)^i (y-1)^j.
inline BivariatePolynomial q_prime_from_table(const QTable& table) {
  const BivariatePolynomial x = BivariatePolynomial::x();
  const BivariatePolynomial xm = x - x.one();
  const BivariatePolynomial ym = x.var_y() - x.one();
  BivariatePolynomial out;
  for (int i = 0; i < table.n; ++i) {
    for (int j = 0; i + j < table.n; ++j) {
      if (table.c[i][j] != 0) {
        out += table.c[i][j] * (pow(xm, i) * pow(ym, j));
      }
    }
  }
  return out;
}

inline BivariatePolynomial q_prime(const Polymatroid& m,
                                   long long box_limit = kDefaultBoxLimit) {
  return q_prime_from_table(q_table(m, box_limit));
}

// Number of ways to write m as an ordered sum of p nonnegative integers;
// for p = 0 that is 1 iff m = 0.
inline Integer compositions(long long m, int p) {
  if (m < 0) return 0;
  if (p == 0) return m == 0 ? 1 : 0;
  return binomial(m + p - 1, p - 1);
}

// Closed count for matroids with i = u, j = t: for each S, distribute
// i - k - null(S) units over S and j - k - cork(S) units over E \ S, summed
// over the shift k.
inline Integer count_matroid_closed_form(const Polymatroid& m,
                                         MinkowskiConfig cfg) {
  require_matroid(m);
  cfg.validate();
  const int n = m.n();
  const int r = m.total_rank();
  const long long i = cfg.u, j = cfg.t;
  Integer total = 0;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    const SubsetKey s(bits);
    const int size = s.size();
    const int rank = m.rank(s);
    const int nullity = size - rank;
    const int corank = r - rank;
    for (long long k = 0; k <= std::min(i, j); ++k) {
      total += compositions(i - k - nullity, size) *
               compositions(j - k - corank, n - size);
    }
  }
  return total;
}

}  // namespace polyq

#endif  // POLYQ_GEOMETRY_HPP_
