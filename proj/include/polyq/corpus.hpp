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

// Generators for the standard small examples and for random polymatroids.

#ifndef POLYQ_CORPUS_HPP_
#define POLYQ_CORPUS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyq/core_model.hpp"

namespace polyq::corpus {

inline Polymatroid uniform(int r, int n) {
  if (r < 0 || r > n) {
    throw Error(ErrorKind::kInvalidInput,
                "uniform matroid needs 0 <= r <= n, got r=" +
                    std::to_string(r) + " n=" + std::to_string(n));
  }
  const GroundSet ground(n);
  std::vector<int> table(ground.subset_count());
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    table[s] = std::min(std::popcount(s), r);
  }
  return Polymatroid(validate_rank_function(n, std::move(table)));
}

// Cycle matroid of a multigraph on vertices 0..v-1; element i is edge i.
inline Polymatroid graphic(int vertices,
                           const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  const GroundSet ground(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
      throw Error(ErrorKind::kInvalidInput, "edge endpoint out of range");
    }
  }
  std::vector<int> table(ground.subset_count());
  std::vector<int> parent(vertices);
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      const int a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    table[s] = rank;
  }
  return Polymatroid(validate_rank_function(n, std::move(table)));
}

inline Polymatroid k4() {
  return graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Bases {1},{2} on three elements (3 is a loop); scale multiplies the rank
// function, so scale 2 is the doubled polymatroid.
inline Polymatroid worked_ex1(int scale = 1) {
  if (scale < 1) {
    throw Error(ErrorKind::kInvalidInput, "scale must be >= 1");
  }
  std::vector<int> table(8);
  for (std::uint32_t s = 0; s < 8; ++s) table[s] = (s & 0b011u) ? scale : 0;
  return Polymatroid(validate_rank_function(3, std::move(table)));
}

inline Polymatroid worked_ex75() {
  return Polymatroid::from_bases(
      3, {{0, 2, 1}, {1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {2, 0, 1}});
}

// Portable uniform draw in [0, k): modular reduction of the raw 64-bit
// engine output, so streams are identical across standard libraries.
inline int draw(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

// r(S) = min(cap, |union of A_i, i in S|) with random A_i, |A_i| <= max_rank,
// drawn from a universe of max_rank + 2 items. Coverage functions are
// submodular and truncation by a constant keeps them so.
inline Polymatroid random_polymatroid(int n, int max_rank,
                                      std::mt19937_64& rng) {
  const GroundSet ground(n);
  if (max_rank < 1 || max_rank > 8) {
    throw Error(ErrorKind::kInvalidInput, "max must be in 1..8");
  }
  const int universe = max_rank + 2;
  std::vector<std::uint32_t> cover(n, 0);
  for (int i = 0; i < n; ++i) {
    const int size = draw(rng, max_rank + 1);
    while (std::popcount(cover[i]) < size) {
      cover[i] |= std::uint32_t{1} << draw(rng, universe);
    }
  }
  std::vector<int> table(ground.subset_count());
  std::uint32_t all = 0;
  for (std::uint32_t c : cover) all |= c;
  const int cap = 1 + draw(rng, std::max(1, std::popcount(all)));
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    std::uint32_t u = 0;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) u |= cover[i];
    }
    table[s] = std::min(cap, std::popcount(u));
  }
  return Polymatroid(validate_rank_function(n, std::move(table)));
}

}  // namespace polyq::corpus

#endif  // POLYQ_CORPUS_HPP_
