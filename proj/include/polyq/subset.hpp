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

#ifndef POLYQ_SUBSET_HPP_
#define POLYQ_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyq {

// Ground set elements are labelled 1..n.
using Element = int;

// A subset of 1..n stored as a bitmask, bit e-1 for element e. The encoding
// is canonical, so equality of keys is equality of sets.
class SubsetKey {
 public:
  constexpr SubsetKey() = default;
  constexpr explicit SubsetKey(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetKey singleton(Element e) {
    return SubsetKey(std::uint32_t{1} << (e - 1));
  }
  static constexpr SubsetKey full(int n) {
    return SubsetKey(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1);
  }
  static SubsetKey from_elements(std::span<const Element> elements) {
    std::uint32_t bits = 0;
    for (Element e : elements) bits |= std::uint32_t{1} << (e - 1);
    return SubsetKey(bits);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> (e - 1)) & 1u; }
  constexpr bool subset_of(SubsetKey other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr SubsetKey with(Element e) const {
    return SubsetKey(bits_ | (std::uint32_t{1} << (e - 1)));
  }
  constexpr SubsetKey without(Element e) const {
    return SubsetKey(bits_ & ~(std::uint32_t{1} << (e - 1)));
  }
  constexpr SubsetKey complement(int n) const {
    return SubsetKey(full(n).bits_ & ~bits_);
  }

  // Smallest / largest element; 0 for the empty set.
  constexpr Element min_element() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  constexpr Element max_element() const {
    return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  friend constexpr SubsetKey operator|(SubsetKey a, SubsetKey b) {
    return SubsetKey(a.bits_ | b.bits_);
  }
  friend constexpr SubsetKey operator&(SubsetKey a, SubsetKey b) {
    return SubsetKey(a.bits_ & b.bits_);
  }
  friend constexpr SubsetKey operator-(SubsetKey a, SubsetKey b) {
    return SubsetKey(a.bits_ & ~b.bits_);
  }
  friend constexpr SubsetKey operator^(SubsetKey a, SubsetKey b) {
    return SubsetKey(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(SubsetKey, SubsetKey) = default;
  // Numeric order on the bitmask: sets compare by their largest differing
  // element (colex order).
  friend constexpr auto operator<=>(SubsetKey a, SubsetKey b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// "{1,3}" style rendering; "{}" for the empty set.
inline std::string to_string(SubsetKey s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace polyq

#endif  // POLYQ_SUBSET_HPP_
