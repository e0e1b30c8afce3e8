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

#include "polyq/structure.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "test_corpus.hpp"

namespace polyq {
namespace {

using P = BivariatePolynomial;

oracle::Table table_of(const Polymatroid& m) {
  return {m.rank_function().values().begin(), m.rank_function().values().end()};
}

std::vector<Ordering> all_orders(int n) {
  std::vector<Element> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<Ordering> out;
  do {
    out.push_back(Ordering::from_sequence(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

TEST(PartitionXYTest, Enumeration) {
  const auto parts = all_partitions(3);
  ASSERT_EQ(parts.size(), 4u);
  for (const auto& p : parts) EXPECT_NO_THROW(p.validate(3));
  EXPECT_EQ(parts.front().x, SubsetKey(0b001));
  EXPECT_EQ(parts.front().y, SubsetKey(0b111));
  EXPECT_EQ(all_partitions(1).size(), 1u);
  EXPECT_THROW((PartitionXY{SubsetKey(0b011), SubsetKey(0b110)}.validate(3)),
               Error);
  EXPECT_THROW((PartitionXY{SubsetKey(0b001), SubsetKey(0b011)}.validate(3)),
               Error);
}

TEST(ExchangeTest, ExampleMatroid) {
  const Polymatroid m = testing_corpus::example_matroid();
  // X = {1,2}: 2 is reachable from 1, so B moves up to {2}.
  const PartitionXY p{SubsetKey(0b011), SubsetKey(0b101)};
  const ExchangeRun run = run_exchange(m, p, SubsetKey(0b001));
  EXPECT_EQ(run.basis, SubsetKey(0b010));
  EXPECT_EQ(run.steps, 1);
  // X = {1}: Y holds 2, which drops back to 1.
  EXPECT_EQ(find_basis_for_partition(m, all_partitions(3).front(),
                                     SubsetKey(0b010)),
            SubsetKey(0b001));
}

TEST(ExchangeTest, RejectsBadInput) {
  const Polymatroid m = testing_corpus::example_matroid();
  const PartitionXY p = all_partitions(3).front();
  EXPECT_THROW(find_basis_for_partition(m, p, SubsetKey(0b011)), Error);
  EXPECT_THROW(find_basis_for_partition(testing_corpus::doubled_example(), p,
                                        SubsetKey(0b001)),
               Error);
}

// The output depends only on the split, never on the starting basis, and
// matches the brute-force characterization.
TEST(ExchangeTest, OutputIsStartIndependentAndMatchesOracle) {
  for (const auto& entry : testing_corpus::base_matroids(6)) {
    const auto& m = entry.m;
    const auto bases = basis_sets(m);
    for (const PartitionXY& p : all_partitions(m.n())) {
      const auto expected =
          oracle::split_bases(m.n(), table_of(m), p.x.bits(), p.y.bits());
      ASSERT_EQ(expected.size(), 1u) << entry.name << " X=" << to_string(p.x);
      for (SubsetKey start : bases) {
        const SubsetKey b = find_basis_for_partition(m, p, start);
        EXPECT_EQ(indicator(b, m.n()), expected.front()) << entry.name;
      }
    }
  }
}

TEST(TopDegreeTest, FacesCoverTopDegreePart) {
  for (const auto& entry : testing_corpus::base_matroids(6)) {
    const auto& m = entry.m;
    const int n = m.n();
    P faces;
    for (const TopDegreeFace& f : top_degree_faces(m)) {
      faces += P::monomial(1, f.partition.x.size() - 1,
                           f.partition.y.size() - 1);
    }
    EXPECT_EQ(faces, q_prime(m).homogeneous_part(n - 1)) << entry.name;
  }
}

TEST(TopDegreeTest, CharacterizationIsUniqueOnlyForNaturalOrder) {
  const Polymatroid m = corpus::uniform(1, 3);
  for (const PartitionXY& p : all_partitions(3)) {
    EXPECT_EQ(characterized_bases(m, p, Ordering::natural(3)).size(), 1u);
  }
  // Under the reversed order the element 1 is largest, and uniqueness can
  // fail for some split.
  bool all_unique = true;
  for (const PartitionXY& p : all_partitions(3)) {
    all_unique = all_unique &&
                 characterized_bases(m, p, Ordering::reversed(3)).size() == 1;
  }
  EXPECT_FALSE(all_unique);
}

TEST(DawsonTest, ExampleMatroid) {
  const auto parts = dawson_partition(testing_corpus::example_matroid());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].s, SubsetKey(0b000));
  EXPECT_EQ(parts[0].t, SubsetKey(0b101));
  EXPECT_EQ(parts[1].s, SubsetKey(0b010));
  EXPECT_EQ(parts[1].t, SubsetKey(0b111));
}

TEST(DawsonTest, PartitionAndOrderingHoldForAllOrders) {
  for (const auto& entry : testing_corpus::base_matroids(5)) {
    for (const Ordering& o : all_orders(entry.m.n())) {
      const auto parts = dawson_partition(entry.m, o);
      EXPECT_EQ(parts.size(), basis_sets(entry.m).size()) << entry.name;
    }
  }
}

TEST(DawsonTest, GradingMatchesAlternatedQPrime) {
  const P cube = P::x() + P::y() + P::constant(1);
  for (const auto& entry : testing_corpus::base_matroids(6)) {
    const auto& m = entry.m;
    const P alt = alternated(q_prime(m), m.n());
    EXPECT_EQ(interval_enumerator(m, Ordering::natural(m.n())), cube * alt)
        << entry.name;
  }
}

TEST(DawsonTest, GradingIsOrderIndependent) {
  for (const auto& entry : testing_corpus::base_matroids(4)) {
    const P natural = interval_enumerator(entry.m, Ordering::natural(entry.m.n()));
    for (const Ordering& o : all_orders(entry.m.n())) {
      EXPECT_EQ(interval_enumerator(entry.m, o), natural) << entry.name;
    }
  }
}

TEST(DawsonTest, CubeGrouping) {
  for (const auto& entry : testing_corpus::base_matroids(6)) {
    const auto rep = cube_grouping_check(entry.m);
    EXPECT_TRUE(rep.passed) << entry.name << " " << rep.detail;
  }
}

TEST(CoefficientTest, MatroidsPassEverything) {
  for (const auto& entry : testing_corpus::base_matroids(6)) {
    const auto rep = coefficient_report(entry.m);
    EXPECT_TRUE(rep.all_passed())
        << entry.name << " " << rep.alternation.detail << " "
        << rep.top_degree.detail;
    ASSERT_TRUE(rep.grading.has_value());
  }
}

TEST(CoefficientTest, DoubledExampleBreaksAlternation) {
  const auto rep = coefficient_report(testing_corpus::doubled_example());
  EXPECT_FALSE(rep.alternation.passed);
  EXPECT_TRUE(rep.top_degree.passed);
  EXPECT_FALSE(rep.grading.has_value());
}

TEST(CoefficientTest, TopDegreeHoldsForPolymatroids) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    EXPECT_TRUE(coefficient_report(entry.m).top_degree.passed) << entry.name;
  }
}

}  // namespace
}  // namespace polyq
