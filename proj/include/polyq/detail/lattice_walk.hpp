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

#ifndef POLYQ_DETAIL_LATTICE_WALK_HPP_
#define POLYQ_DETAIL_LATTICE_WALK_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace polyq::detail {

// Integer points q in the box prod [lo_i, hi_i] with sum(q) == total and
// q.e_S <= cap[S] for every nonempty proper subset S.
struct Region {
  int n = 0;
  std::vector<long long> lo;
  std::vector<long long> hi;
  long long total = 0;
  std::vector<long long> cap;  // indexed by bitmask; only proper S consulted
};

// Depth-first walk assigning coordinates 1..n in order. When coordinate k is
// fixed every subset whose largest element is k is complete, so its upper
// bound and the lower bound total - cap[E \ S] implied by the complement are
// checked at once. Points are visited in lexicographic order.
template <class Visit>
void walk_region(const Region& region, Visit&& visit) {
  const int n = region.n;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<long long> sums(std::size_t{1} << n, 0);
  std::vector<long long> floor(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < full; ++s) {
    floor[s] = region.total - region.cap[full & ~s];
  }
  // suffix_lo[k] = sum of lo over coordinates k..n-1, likewise suffix_hi.
  std::vector<long long> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
  for (int k = n - 1; k >= 0; --k) {
    suffix_lo[k] = suffix_lo[k + 1] + region.lo[k];
    suffix_hi[k] = suffix_hi[k + 1] + region.hi[k];
  }
  std::vector<int> point(n, 0);

  auto fits = [&](int k, long long value) {
    const std::uint32_t bit = std::uint32_t{1} << k;
    for (std::uint32_t m = 0; m < bit; ++m) {
      const std::uint32_t s = m | bit;
      const long long sum = sums[m] + value;
      sums[s] = sum;
      if (s == full) continue;
      if (sum > region.cap[s] || sum < floor[s]) return false;
    }
    return true;
  };

  auto descend = [&](auto&& self, int k, long long partial) -> void {
    if (k == n - 1) {
      const long long value = region.total - partial;
      if (value < region.lo[k] || value > region.hi[k]) return;
      if (!fits(k, value)) return;
      point[k] = static_cast<int>(value);
      visit(std::span<const int>(point));
      return;
    }
    for (long long value = region.lo[k]; value <= region.hi[k]; ++value) {
      const long long rest = region.total - partial - value;
      if (rest < suffix_lo[k + 1]) break;
      if (rest > suffix_hi[k + 1]) continue;
      if (!fits(k, value)) continue;
      point[k] = static_cast<int>(value);
      self(self, k + 1, partial + value);
    }
  };
  descend(descend, 0, 0);
}

}  // namespace polyq::detail

#endif  // POLYQ_DETAIL_LATTICE_WALK_HPP_
