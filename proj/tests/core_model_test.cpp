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

#include "polyq/core_model.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "test_corpus.hpp"

namespace polyq {
namespace {

TEST(SubsetKeyTest, BasicOperations) {
  const std::vector<Element> elems{1, 3};
  const SubsetKey s = SubsetKey::from_elements(elems);
  EXPECT_EQ(s.bits(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.min_element(), 1);
  EXPECT_EQ(s.max_element(), 3);
  EXPECT_EQ(s.complement(4), SubsetKey(0b1010));
  EXPECT_EQ(to_string(s), "{1,3}");
  EXPECT_EQ(to_string(SubsetKey()), "{}");
  EXPECT_LT(SubsetKey(0b011), SubsetKey(0b100));
}

TEST(GroundSetTest, RejectsEmptyAndOversized) {
  EXPECT_THROW(GroundSet(0), Error);
  EXPECT_THROW(GroundSet(kMaxGroundSize + 1), Error);
  EXPECT_EQ(GroundSet(3).subset_count(), 8u);
}

TEST(ValidateRankTest, UniformOneTwoIsValid) {
  const RankFunction r = validate_rank_function(2, {0, 1, 1, 1});
  const Polymatroid m(r);
  EXPECT_TRUE(m.is_matroid());
  EXPECT_EQ(m.total_rank(), 1);
}

TEST(ValidateRankTest, NonzeroEmptySetViolatesP1) {
  try {
    validate_rank_function(2, {1, 1, 1, 1});
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), 1);
  }
}

TEST(ValidateRankTest, DecreasingViolatesP2) {
  try {
    validate_rank_function(2, {0, 2, 1, 1});
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), 2);
    EXPECT_EQ(e.first_witness(), 0b01u);
    EXPECT_EQ(e.second_witness(), 0b11u);
  }
}

TEST(ValidateRankTest, SupermodularViolatesP3) {
  try {
    validate_rank_function(2, {0, 1, 1, 3});
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), 3);
  }
}

TEST(ValidateRankTest, WrongTableSizeIsInvalidInput) {
  try {
    validate_rank_function(2, {0, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

TEST(ValidateRankTest, DoubledExampleIsPolymatroidNotMatroid) {
  const Polymatroid m2 = testing_corpus::doubled_example();
  EXPECT_FALSE(m2.is_matroid());
  EXPECT_EQ(m2.singleton_rank(1), 2);
  EXPECT_EQ(m2.singleton_rank(2), 2);
  EXPECT_EQ(m2.singleton_rank(3), 0);
  EXPECT_EQ(m2.total_rank(), 2);
}

// Local P2/P3 checks agree with the full pairwise definition on random
// tables, valid or not.
TEST(ValidateRankTest, LocalChecksMatchPairwiseOracle) {
  std::mt19937_64 rng(20261014);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<int> table(std::size_t{1} << n);
    if (trial % 2 == 0) {
      // Random submodular candidate: sum of capped cardinalities, then
      // possibly perturbed in one entry.
      const int cap = 1 + static_cast<int>(rng() % 3);
      const int weight = 1 + static_cast<int>(rng() % 2);
      for (std::uint32_t s = 0; s < table.size(); ++s) {
        table[s] = weight * std::min(std::popcount(s), cap);
      }
      if (rng() % 2) table[rng() % table.size()] += (rng() % 2) ? 1 : -1;
    } else {
      for (std::uint32_t s = 1; s < table.size(); ++s) {
        table[s] = static_cast<int>(rng() % 4);
      }
      if (rng() % 8 == 0) table[0] = 1;
    }
    const bool expected = oracle::is_polymatroid_table(n, table);
    bool got = true;
    try {
      validate_rank_function(n, table);
    } catch (const AxiomViolation&) {
      got = false;
    }
    EXPECT_EQ(got, expected) << "trial " << trial;
    (expected ? valid : invalid)++;
  }
  EXPECT_GT(valid, 100);
  EXPECT_GT(invalid, 100);
}

TEST(EnumerateBasesTest, ExampleMatroid) {
  const Polymatroid m = testing_corpus::example_matroid();
  const std::vector<BaseVector> expected{{0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(enumerate_bases(m), expected);
}

TEST(EnumerateBasesTest, SevenFivePolymatroid) {
  const Polymatroid m = testing_corpus::activity_example();
  const std::vector<BaseVector> expected{
      {0, 2, 1}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  EXPECT_EQ(enumerate_bases(m), expected);
}

TEST(EnumerateBasesTest, SingletonPolymatroid) {
  const Polymatroid m(validate_rank_function(1, {0, 4}));
  const std::vector<BaseVector> expected{{4}};
  EXPECT_EQ(enumerate_bases(m), expected);
}

TEST(EnumerateBasesTest, MatchesOracleOnCorpus) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    const auto& m = entry.m;
    const std::vector<int> table(m.rank_function().values().begin(),
                                 m.rank_function().values().end());
    const std::set<oracle::Point> expected = oracle::bases(m.n(), table);
    const std::vector<BaseVector> got = enumerate_bases(m);
    EXPECT_EQ(std::set<oracle::Point>(got.begin(), got.end()), expected)
        << entry.name;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end())) << entry.name;
    for (const auto& b : got) EXPECT_TRUE(is_base(m, b)) << entry.name;
    if (m.is_matroid()) {
      for (const auto& b : got) {
        int ones = 0;
        for (int v : b) {
          EXPECT_TRUE(v == 0 || v == 1);
          ones += v;
        }
        EXPECT_EQ(ones, m.total_rank());
      }
    }
  }
}

TEST(EnumerateBasesTest, BaseExchangeProperty) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    const auto& m = entry.m;
    const auto bases = enumerate_bases(m);
    for (const auto& x : bases) {
      for (const auto& y : bases) {
        for (int i = 0; i < m.n(); ++i) {
          if (x[i] <= y[i]) continue;
          bool found = false;
          for (int l = 0; l < m.n() && !found; ++l) {
            if (x[l] < y[l] && transfer_possible(m, x, i + 1, l + 1)) {
              found = true;
            }
          }
          EXPECT_TRUE(found) << entry.name;
        }
      }
    }
  }
}

TEST(RankFromBasesTest, RecoversExampleMatroid) {
  const RankFunction r = rank_from_bases(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(r, testing_corpus::example_matroid().rank_function());
  EXPECT_EQ(r(SubsetKey(0b100)), 0);
  EXPECT_EQ(r(SubsetKey(0b101)), 1);
}

TEST(RankFromBasesTest, SingletonVector) {
  const RankFunction r = rank_from_bases(1, {{5}});
  EXPECT_EQ(r(SubsetKey(1)), 5);
}

TEST(RankFromBasesTest, RejectsNegativeCoordinates) {
  try {
    rank_from_bases(2, {{1, 0}, {0, 1}, {2, -1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAPolymatroid);
  }
}

TEST(RankFromBasesTest, RejectsIncompleteLatticeSet) {
  // Missing the midpoint (1,1) of the segment from (2,0) to (0,2).
  try {
    rank_from_bases(2, {{2, 0}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAPolymatroid);
  }
}

TEST(RankFromBasesTest, RejectsUnequalSumsAndEmpty) {
  EXPECT_THROW(rank_from_bases(2, {{1, 0}, {1, 1}}), Error);
  EXPECT_THROW(rank_from_bases(2, {}), Error);
}

TEST(RankFromBasesTest, RoundTripsOnCorpus) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    EXPECT_EQ(rank_from_bases(entry.m.n(), enumerate_bases(entry.m)),
              entry.m.rank_function())
        << entry.name;
  }
}

TEST(TransferTest, ExampleMatroid) {
  const Polymatroid m = testing_corpus::example_matroid();
  EXPECT_TRUE(transfer_possible(m, std::vector<int>{0, 1, 0}, 2, 1));
  EXPECT_FALSE(transfer_possible(m, std::vector<int>{1, 0, 0}, 2, 1));
  EXPECT_TRUE(transfer_possible(m, std::vector<int>{1, 0, 0}, 3, 3));
  EXPECT_THROW(transfer_possible(m, std::vector<int>{1, 1, 0}, 1, 2), Error);
}

TEST(TransferTest, MatchesOracle) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    const auto& m = entry.m;
    const std::vector<int> table(m.rank_function().values().begin(),
                                 m.rank_function().values().end());
    for (const auto& x : enumerate_bases(m)) {
      for (int a = 1; a <= m.n(); ++a) {
        for (int b = 1; b <= m.n(); ++b) {
          if (a == b) continue;
          EXPECT_EQ(transfer_possible(m, x, a, b),
                    oracle::transfer(table, x, a, b))
              << entry.name;
        }
      }
    }
  }
}

TEST(LoopColoopTest, Basic) {
  const Polymatroid m = testing_corpus::example_matroid();
  EXPECT_TRUE(is_loop(m, 3));
  EXPECT_FALSE(is_coloop(m, 3));
  EXPECT_FALSE(is_loop(m, 1));
  EXPECT_FALSE(is_coloop(m, 1));
  const Polymatroid u11(validate_rank_function(1, {0, 1}));
  EXPECT_TRUE(is_coloop(u11, 1));
  const Polymatroid u12(validate_rank_function(2, {0, 1, 1, 1}));
  EXPECT_FALSE(is_loop(u12, 1));
  EXPECT_FALSE(is_coloop(u12, 1));
  EXPECT_THROW(is_loop(testing_corpus::doubled_example(), 1), Error);
}

TEST(OrderingTest, FromSequenceValidates) {
  const Ordering o = Ordering::from_sequence({2, 3, 1});
  EXPECT_TRUE(o.less(2, 3));
  EXPECT_TRUE(o.less(3, 1));
  EXPECT_EQ(o.smallest(), 2);
  EXPECT_EQ(o.to_string(), "2,3,1");
  EXPECT_THROW(Ordering::from_sequence({1, 1, 2}), Error);
  EXPECT_THROW(Ordering::from_sequence({1, 4, 2}), Error);
  EXPECT_EQ(Ordering::reversed(3).sequence(), (std::vector<Element>{3, 2, 1}));
}

TEST(RelabelTest, DropAndInsertAreInverse) {
  for (std::uint32_t s = 0; s < 32; ++s) {
    for (Element e = 1; e <= 5; ++e) {
      const SubsetKey without = SubsetKey(s).without(e);
      EXPECT_EQ(insert_element_gap(drop_element(without, e), e), without);
    }
  }
  EXPECT_EQ(drop_element(SubsetKey(0b1101), 2), SubsetKey(0b111));
}

}  // namespace
}  // namespace polyq
