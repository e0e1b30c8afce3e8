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

#include "polyq/geometry.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "test_corpus.hpp"

namespace polyq {
namespace {

using testing_corpus::example_matroid;

std::vector<int> table_of(const Polymatroid& m) {
  return {m.rank_function().values().begin(),
          m.rank_function().values().end()};
}

// Every point of the bounding box, in lexicographic order.
void for_each_box_point(const Polymatroid& m, MinkowskiConfig cfg,
                        const std::function<void(const LatticePoint&)>& f) {
  LatticePoint q(m.n());
  std::function<void(int)> rec = [&](int k) {
    if (k == m.n()) {
      f(q);
      return;
    }
    for (int v = -cfg.t; v <= m.singleton_rank(k + 1) + cfg.u; ++v) {
      q[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

TEST(MembershipTest, ExampleMatroidPoints) {
  const Polymatroid m = example_matroid();
  // (1,0,0) + 2e_1 - e_3; coordinate sums at (t,u) = (1,2) must be 2.
  EXPECT_TRUE(member_minkowski(m, std::vector<int>{3, 0, -1}, {1, 2}));
  EXPECT_TRUE(member_decomposition(m, std::vector<int>{3, 0, -1}, {1, 2}));
  EXPECT_FALSE(member_minkowski(m, std::vector<int>{2, 0, -1}, {1, 2}));
  EXPECT_TRUE(member_minkowski(m, std::vector<int>{2, 0, -1}, {1, 1}));
  EXPECT_TRUE(member_decomposition(m, std::vector<int>{2, 0, -1}, {1, 1}));
  EXPECT_TRUE(member_minkowski(m, std::vector<int>{1, 0, 0}, {0, 0}));
  EXPECT_FALSE(member_minkowski(m, std::vector<int>{1, 1, 0}, {0, 0}));
  EXPECT_TRUE(member_decomposition(m, std::vector<int>{1, 0, 0}, {0, 0}));
  EXPECT_FALSE(member_decomposition(m, std::vector<int>{3, 0, 0}, {1, 2}));
  EXPECT_FALSE(member_minkowski(m, std::vector<int>{3, 0, 0}, {1, 2}));
  EXPECT_THROW(member_minkowski(m, std::vector<int>{1, 0, 0}, {-1, 0}),
               Error);
}

TEST(MembershipTest, BasesStayAtEqualScalings) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    for (const auto& b : enumerate_bases(entry.m)) {
      for (int k = 0; k <= 3; ++k) {
        EXPECT_TRUE(member_minkowski(entry.m, b, {k, k})) << entry.name;
      }
    }
  }
}

// The H-description and the decomposition search agree on every box point.
TEST(MembershipTest, OraclesAgreeExhaustivelyUpToFour) {
  long long checked = 0;
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    DecompositionOracle oracle(entry.m);
    for (int t = 0; t <= 4; ++t) {
      for (int u = 0; t + u <= 4; ++u) {
        for_each_box_point(entry.m, {t, u}, [&](const LatticePoint& q) {
          ASSERT_EQ(member_minkowski(entry.m, q, {t, u}),
                    oracle.member(q, {t, u}))
              << entry.name << " t=" << t << " u=" << u;
          ++checked;
        });
      }
    }
  }
  EXPECT_GT(checked, 10000);
}

TEST(MembershipTest, OraclesAgreeOnRandomPointsFiveAndSix) {
  std::vector<testing_corpus::Entry> inputs{
      {"U2_5", corpus::uniform(2, 5)},
      {"U3_6", corpus::uniform(3, 6)},
      {"K4", corpus::k4()}};
  std::mt19937_64 rng(99);
  for (int n = 5; n <= 6; ++n) {
    inputs.push_back({"random_n" + std::to_string(n),
                      corpus::random_polymatroid(n, 2, rng)});
  }
  for (const auto& entry : inputs) {
    DecompositionOracle oracle(entry.m);
    int positives = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int t = static_cast<int>(rng() % 3);
      const int u = static_cast<int>(rng() % 3);
      LatticePoint q(entry.m.n());
      // Half the samples are perturbed members so both answers occur.
      if (trial % 2 == 0) {
        const auto pts = lattice_points(entry.m, {t, u});
        q = pts[rng() % pts.size()];
        const int i = static_cast<int>(rng() % q.size());
        const int j = static_cast<int>(rng() % q.size());
        if (rng() % 2) {
          ++q[i];
          --q[j];
        }
      } else {
        for (int i = 0; i < entry.m.n(); ++i) {
          const int span = entry.m.singleton_rank(i + 1) + t + u + 1;
          q[i] = static_cast<int>(rng() % span) - t;
        }
      }
      const bool fast = member_minkowski(entry.m, q, {t, u});
      ASSERT_EQ(fast, oracle.member(q, {t, u})) << entry.name;
      positives += fast;
    }
    EXPECT_GT(positives, 100) << entry.name;
  }
}

TEST(CountTest, ExampleMatroidTable) {
  const Polymatroid m = example_matroid();
  EXPECT_EQ(count_lattice_points(m, {1, 2}), 16);
  EXPECT_EQ(count_lattice_points(m, {0, 0}), 2);
  EXPECT_EQ(count_lattice_points(m, {0, 1}), 5);
  EXPECT_EQ(count_lattice_points(m, {0, 2}), 9);
  EXPECT_EQ(count_lattice_points(m, {1, 0}), 5);
  EXPECT_EQ(count_lattice_points(m, {1, 1}), 10);
  EXPECT_EQ(count_lattice_points(m, {2, 0}), 9);
}

TEST(CountTest, UniformOneTwo) {
  const Polymatroid m = corpus::uniform(1, 2);
  EXPECT_EQ(count_lattice_points(m, {1, 1}), 4);
  const auto pts = lattice_points(m, {1, 1});
  const std::vector<LatticePoint> expected{{-1, 2}, {0, 1}, {1, 0}, {2, -1}};
  EXPECT_EQ(pts, expected);
}

TEST(CountTest, MatchesBoxScanAndPointSetOracle) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    const auto table = table_of(entry.m);
    for (int t = 0; t <= 3; ++t) {
      for (int u = 0; t + u <= 3; ++u) {
        long long scan = 0;
        for_each_box_point(entry.m, {t, u}, [&](const LatticePoint& q) {
          scan += member_minkowski(entry.m, q, {t, u});
        });
        const long long count = count_lattice_points(entry.m, {t, u});
        EXPECT_EQ(count, scan) << entry.name;
        if (entry.m.n() <= 3 && t + u <= 2) {
          EXPECT_EQ(count, oracle::count_points(entry.m.n(), table, t, u))
              << entry.name;
        }
      }
    }
  }
}

TEST(CountTest, BoxOverflow) {
  const Polymatroid m = corpus::uniform(3, 6);
  try {
    count_lattice_points(m, {10, 10}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBoxOverflow);
  }
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(count_matroid_closed_form(corpus::uniform(1, 2), {0, 1}), 3);
  EXPECT_EQ(count_matroid_closed_form(example_matroid(), {1, 2}), 16);
  EXPECT_THROW(count_matroid_closed_form(testing_corpus::doubled_example(),
                                         {0, 0}),
               Error);
}

TEST(ClosedFormTest, MatchesCountsOnMatroids) {
  for (const auto& entry : testing_corpus::base_matroids()) {
    const int n = entry.m.n();
    const Integer bases = static_cast<long long>(enumerate_bases(entry.m).size());
    EXPECT_EQ(count_matroid_closed_form(entry.m, {0, 0}), bases);
    for (int t = 0; t <= n; ++t) {
      for (int u = 0; t + u <= n; ++u) {
        EXPECT_EQ(count_matroid_closed_form(entry.m, {t, u}),
                  count_lattice_points(entry.m, {t, u}))
            << entry.name << " t=" << t << " u=" << u;
      }
    }
  }
}

TEST(QTableTest, ExampleMatroid) {
  const QTable q = q_table(example_matroid());
  ASSERT_EQ(q.n, 3);
  EXPECT_EQ(q.c[0][0], 2);
  EXPECT_EQ(q.c[1][0], 3);
  EXPECT_EQ(q.c[0][1], 3);
  EXPECT_EQ(q.c[2][0], 1);
  EXPECT_EQ(q.c[0][2], 1);
  EXPECT_EQ(q.c[1][1], 2);
  EXPECT_EQ(q.evaluate(1, 2), 16);
}

TEST(QTableTest, SingletonAndUniformOneTwo) {
  const QTable single = q_table(Polymatroid(validate_rank_function(1, {0, 3})));
  EXPECT_EQ(single.c[0][0], 1);
  const QTable u12 = q_table(corpus::uniform(1, 2));
  EXPECT_EQ(u12.c[0][0], 2);
  EXPECT_EQ(u12.c[1][0], 1);
  EXPECT_EQ(u12.c[0][1], 1);
}

TEST(QTableTest, FitReproducesCountsAndBaseCount) {
  for (const auto& entry : testing_corpus::small_polymatroids()) {
    const QTable q = q_table(entry.m);
    EXPECT_EQ(q.c[0][0],
              static_cast<long long>(enumerate_bases(entry.m).size()))
        << entry.name;
    for (int t = 0; t <= 4; ++t) {
      for (int u = 0; u <= 4; ++u) {
        const long long count = count_lattice_points(entry.m, {t, u});
        EXPECT_EQ(q.evaluate(t, u), count) << entry.name;
        if (entry.m.n() >= 2) {
          EXPECT_LT(count, count_lattice_points(entry.m, {t + 1, u}));
          EXPECT_LT(count, count_lattice_points(entry.m, {t, u + 1}));
        }
      }
    }
  }
}

TEST(QPrimeTest, Examples) {
  EXPECT_EQ(q_prime(example_matroid()).to_string(),
            "x^2 + 2*x*y + y^2 - x - y");
  EXPECT_EQ(q_prime(testing_corpus::doubled_example()).to_string(),
            "x^2 + 2*x*y + y^2 - 1");
  EXPECT_EQ(q_prime(Polymatroid(validate_rank_function(1, {0, 2})))
                .to_string(),
            "1");
  EXPECT_EQ(q_prime(corpus::uniform(1, 3)).to_string(),
            "x^2 + 2*x*y + y^2 - y");
}

TEST(QPrimeTest, MatroidTopDegreePart) {
  for (const auto& entry : testing_corpus::base_matroids()) {
    const auto q = q_prime(entry.m);
    const int n = entry.m.n();
    EXPECT_EQ(q.total_degree(), n - 1) << entry.name;
    EXPECT_EQ(q.homogeneous_part(n - 1),
              pow(BivariatePolynomial::x() + BivariatePolynomial::y(), n - 1))
        << entry.name;
  }
}

}  // namespace
}  // namespace polyq
