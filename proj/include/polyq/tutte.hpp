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

// Tutte polynomials of matroids three ways, plus basis activities and
// single-element minors.

#ifndef POLYQ_TUTTE_HPP_
#define POLYQ_TUTTE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polyq/core_model.hpp"
#include "polyq/error.hpp"
#include "polyq/polynomial.hpp"

namespace polyq {

inline SubsetKey support(std::span<const int> x) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) bits |= std::uint32_t{1} << i;
  }
  return SubsetKey(bits);
}

inline BaseVector indicator(SubsetKey s, int n) {
  BaseVector x(n, 0);
  for (Element e : s.elements()) x[e - 1] = 1;
  return x;
}

// Bases of a matroid as sets, in increasing bitmask order.
inline std::vector<SubsetKey> basis_sets(const Polymatroid& m) {
  require_matroid(m);
  std::vector<SubsetKey> out;
  for (const auto& b : enumerate_bases(m)) out.push_back(support(b));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_basis(const Polymatroid& m, SubsetKey b) {
  require_matroid(m);
  return b.subset_of(m.ground().full()) && b.size() == m.total_rank() &&
         m.rank(b) == b.size();
}

inline BivariatePolynomial tutte_subset_sum(const Polymatroid& m) {
  require_matroid(m);
  const int r = m.total_rank();
  std::map<std::pair<int, int>, Integer> corank_nullity;
  for (std::uint32_t s = 0; s < m.ground().subset_count(); ++s) {
    const SubsetKey key(s);
    corank_nullity[{r - m.rank(key), key.size() - m.rank(key)}] += 1;
  }
  const BivariatePolynomial one = BivariatePolynomial::constant(1);
  const BivariatePolynomial xm = BivariatePolynomial::x() - one;
  const BivariatePolynomial ym = BivariatePolynomial::y() - one;
  BivariatePolynomial out;
  for (const auto& [exps, count] : corank_nullity) {
    out += count * (pow(xm, exps.first) * pow(ym, exps.second));
  }
  return out;
}

namespace detail {

// A matroid on n elements given by its sorted basis bitmasks.
struct BasisFamily {
  int n = 0;
  std::vector<std::uint32_t> bases;

  friend bool operator<(const BasisFamily& a, const BasisFamily& b) {
    return std::tie(a.n, a.bases) < std::tie(b.n, b.bases);
  }
};

inline std::uint32_t drop_bit(std::uint32_t s, int bit) {
  const std::uint32_t low = s & ((std::uint32_t{1} << bit) - 1);
  return low | ((s >> (bit + 1)) << bit);
}

// keep_with: bases containing the element (contraction) or avoiding it
// (deletion), with the element's bit then removed.
inline BasisFamily minor_family(const BasisFamily& f, int bit, bool keep_with) {
  BasisFamily out{f.n - 1, {}};
  const std::uint32_t mask = std::uint32_t{1} << bit;
  for (std::uint32_t b : f.bases) {
    if (((b & mask) != 0) == keep_with) out.bases.push_back(drop_bit(b, bit));
  }
  std::sort(out.bases.begin(), out.bases.end());
  return out;
}

class DeletionContraction {
 public:
  BivariatePolynomial operator()(const BasisFamily& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::uint32_t in_all = ~std::uint32_t{0}, in_any = 0;
    for (std::uint32_t b : f.bases) {
      in_all &= b;
      in_any |= b;
    }
    int pivot = -1;
    int loops = 0, coloops = 0;
    for (int i = 0; i < f.n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (!(in_any & bit)) {
        ++loops;
      } else if (in_all & bit) {
        ++coloops;
      } else if (pivot < 0) {
        pivot = i;
      }
    }
    BivariatePolynomial result =
        pivot < 0 ? BivariatePolynomial::monomial(1, coloops, loops)
                  : (*this)(minor_family(f, pivot, false)) +
                        (*this)(minor_family(f, pivot, true));
    memo_.emplace(f, result);
    return result;
  }

 private:
  std::map<BasisFamily, BivariatePolynomial> memo_;
};

}  // namespace detail

// T_M = T_{M\e} + T_{M/e} on the smallest element that is neither a loop
// nor a coloop; x^c y^l once only loops and coloops remain.
inline BivariatePolynomial tutte_deletion_contraction(const Polymatroid& m) {
  detail::BasisFamily family{m.n(), {}};
  for (SubsetKey b : basis_sets(m)) family.bases.push_back(b.bits());
  detail::DeletionContraction engine;
  return engine(family);
}

struct StandardActivities {
  SubsetKey internal;
  SubsetKey external;
};

// Fundamental circuit of e outside B: e together with every b in B such that
// B - b + e is a basis; dually for the fundamental cocircuit of e in B.
inline SubsetKey fundamental_circuit(const Polymatroid& m, SubsetKey b,
                                     Element e) {
  SubsetKey c = SubsetKey::singleton(e);
  for (Element f : b.elements()) {
    if (is_basis(m, b.without(f).with(e))) c = c.with(f);
  }
  return c;
}

inline SubsetKey fundamental_cocircuit(const Polymatroid& m, SubsetKey b,
                                       Element e) {
  SubsetKey c = SubsetKey::singleton(e);
  for (Element f : b.complement(m.n()).elements()) {
    if (is_basis(m, b.without(e).with(f))) c = c.with(f);
  }
  return c;
}

inline Element order_min(SubsetKey s, const Ordering& order) {
  Element best = 0;
  for (Element e : s.elements()) {
    if (best == 0 || order.less(e, best)) best = e;
  }
  return best;
}

inline void require_basis(const Polymatroid& m, SubsetKey b) {
  if (!is_basis(m, b)) {
    throw Error(ErrorKind::kNotABasis, to_string(b) + " is not a basis");
  }
}

inline void require_ordering(const Polymatroid& m, const Ordering& order) {
  if (order.n() != m.n()) {
    throw Error(ErrorKind::kInvalidInput,
                "ordering has " + std::to_string(order.n()) +
                    " elements, ground set has " + std::to_string(m.n()));
  }
}

inline StandardActivities standard_activities(const Polymatroid& m,
                                              SubsetKey b,
                                              const Ordering& order) {
  require_matroid(m);
  require_ordering(m, order);
  require_basis(m, b);
  StandardActivities out;
  for (Element e = 1; e <= m.n(); ++e) {
    if (b.contains(e)) {
      if (order_min(fundamental_cocircuit(m, b, e), order) == e) {
        out.internal = out.internal.with(e);
      }
    } else if (order_min(fundamental_circuit(m, b, e), order) == e) {
      out.external = out.external.with(e);
    }
  }
  return out;
}

// Sum over bases of x^i y^e with i = |Int(B)| + |E - B| and
// e = |Ext(B)| + |B|, divided by x^{n-r} y^r.
inline BivariatePolynomial tutte_activity(const Polymatroid& m,
                                          const Ordering& order) {
  const int n = m.n();
  const int r = m.total_rank();
  BivariatePolynomial sum;
  for (SubsetKey b : basis_sets(m)) {
    const StandardActivities a = standard_activities(m, b, order);
    sum += BivariatePolynomial::monomial(1, a.internal.size() + n - b.size(),
                                         a.external.size() + b.size());
  }
  return sum.shifted(-(n - r), -r);
}

inline BivariatePolynomial tutte_activity(const Polymatroid& m) {
  return tutte_activity(m, Ordering::natural(m.n()));
}

namespace detail {

inline Polymatroid matroid_from_sets(int n,
                                     const std::vector<std::uint32_t>& sets) {
  std::vector<LatticePoint> bases;
  for (std::uint32_t s : sets) bases.push_back(indicator(SubsetKey(s), n));
  return Polymatroid::from_bases(n, bases);
}

inline void require_minor_size(const Polymatroid& m) {
  if (m.n() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                "minor of a one-element matroid has an empty ground set");
  }
}

}  // namespace detail

// M \ e on 1..n-1 (elements above e shift down). For a coloop, deletion and
// contraction coincide.
inline Polymatroid delete_element(const Polymatroid& m, Element e) {
  require_matroid(m);
  require_element(m, e);
  detail::require_minor_size(m);
  detail::BasisFamily f{m.n(), {}};
  for (SubsetKey b : basis_sets(m)) f.bases.push_back(b.bits());
  const bool coloop = is_coloop(m, e);
  const auto minor = detail::minor_family(f, e - 1, coloop);
  return detail::matroid_from_sets(m.n() - 1, minor.bases);
}

// M / e; for a loop this is M \ e.
inline Polymatroid contract_element(const Polymatroid& m, Element e) {
  require_matroid(m);
  require_element(m, e);
  detail::require_minor_size(m);
  detail::BasisFamily f{m.n(), {}};
  for (SubsetKey b : basis_sets(m)) f.bases.push_back(b.bits());
  const bool loop = is_loop(m, e);
  const auto minor = detail::minor_family(f, e - 1, !loop);
  return detail::matroid_from_sets(m.n() - 1, minor.bases);
}

}  // namespace polyq

#endif  // POLYQ_TUTTE_HPP_
