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

#include "braidkl/cacti.hpp"

#include <gtest/gtest.h>

#include <set>

#include "braidkl/spenum.hpp"
#include "oracles.hpp"

namespace braidkl {
namespace {

// Graph with labelled edges given 1-based, as (u, v, label).
Matroid graph_matroid(int vertices, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<GraphEdge> out;
  for (const auto& e : edges) out.push_back(GraphEdge{e[0], e[1], e[2] - 1});
  return from_graph(Multigraph(vertices, std::move(out)));
}

// Five-cycle 0..4 with two chords from vertex 3.
Matroid fan_matroid() {
  return graph_matroid(5, {{0, 1, 4}, {1, 2, 6}, {2, 3, 7}, {3, 4, 2}, {4, 0, 1}, {3, 0, 3}, {3, 1, 5}});
}

// Square 0..3 with diagonal 0-2 and an extra vertex 4 joined to 0 and 2.
Matroid square_matroid() {
  return graph_matroid(5, {{0, 1, 7}, {1, 2, 6}, {0, 4, 4}, {4, 2, 5}, {0, 2, 3}, {2, 3, 2}, {3, 0, 1}});
}

TEST(CactusTest, Validation) {
  EXPECT_TRUE(TriangularCactus(3, {{2, 0, 1}}).is_valid());
  EXPECT_TRUE(TriangularCactus(1, {}).is_valid());
  EXPECT_FALSE(TriangularCactus(5, {{0, 1, 2}}).is_valid());
  // Shared edge {0, 1}.
  EXPECT_FALSE(TriangularCactus(5, {{0, 1, 2}, {0, 1, 3}}).is_valid());
  // Disconnected would need 2t + 1 vertices from fewer triangles.
  EXPECT_FALSE(TriangularCactus(4, {{0, 1, 2}}).is_valid());
  EXPECT_EQ(TriangularCactus(3, {{2, 0, 1}}).triangles.front(), (Triangle{0, 1, 2}));
}

TEST(CactusTest, EnumerationCounts) {
  EXPECT_EQ(enum_triangular_cacti(1).size(), 1u);
  EXPECT_EQ(enum_triangular_cacti(3).size(), 1u);
  EXPECT_EQ(enum_triangular_cacti(5).size(), 15u);
  EXPECT_EQ(enum_triangular_cacti(7).size(), 735u);
  EXPECT_EQ(enum_triangular_cacti(9).size(), 76545u);
  EXPECT_THROW(enum_triangular_cacti(4), std::invalid_argument);
  EXPECT_THROW(enum_triangular_cacti(11), std::invalid_argument);
}

TEST(CactusTest, EnumeratedCactiAreValidAndDistinct) {
  const auto all = enum_triangular_cacti(7);
  std::set<TriangularCactus> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& g : all) EXPECT_TRUE(g.is_valid());
}

TEST(CactusTest, CountFormula) {
  for (int k = 2; k <= 5; ++k) {
    EXPECT_EQ(cacti_count_formula(k), BigInt(enum_triangular_cacti(2 * k - 1).size())) << k;
    BigInt power = 1;
    for (int i = 0; i < k - 2; ++i) power *= 2 * k - 1;
    EXPECT_EQ(cacti_count_formula(k), oracle::double_factorial_loop(2 * k - 3) * power);
  }
  EXPECT_EQ(cacti_count_formula(4), 735);
  EXPECT_EQ(cacti_count_formula(5), 76545);
  EXPECT_THROW(cacti_count_formula(1), std::invalid_argument);
}

TEST(CactusTest, SingleTriangleIsUniform) {
  const TriangularCactus g(3, {{0, 1, 2}});
  EXPECT_EQ(cactus_to_matroid(g), uniform_matroid(2, 3));
  EXPECT_EQ(matroid_to_cactus(uniform_matroid(2, 3)), g);
  EXPECT_EQ(cactus_to_matroid(TriangularCactus(1, {})), single_coloop());
}

TEST(CactusTest, WorkedExamples) {
  const TriangularCactus fan(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  const TriangularCactus square(7, {{2, 3, 4}, {0, 1, 2}, {2, 5, 6}});
  EXPECT_EQ(matroid_to_cactus(fan_matroid()), fan);
  EXPECT_EQ(matroid_to_cactus(square_matroid()), square);
  EXPECT_EQ(cactus_to_matroid(fan), fan_matroid());
  EXPECT_EQ(cactus_to_matroid(square), square_matroid());
}

TEST(CactusTest, MatroidSideIsSimpleSeriesParallel) {
  for (const auto& g : enum_triangular_cacti(7)) {
    const Matroid m = cactus_to_matroid(g);
    ASSERT_EQ(m.rank(), 4);
    ASSERT_TRUE(is_simple(m));
    ASSERT_TRUE(is_series_parallel(m));
  }
}

TEST(CactusTest, RoundTripsAreIdentities) {
  for (const auto& g : enum_triangular_cacti(7)) ASSERT_EQ(matroid_to_cactus(cactus_to_matroid(g)), g);
  const std::vector<Matroid> simple_rank_four = enum_simple_qsp(7)[4];
  ASSERT_EQ(simple_rank_four.size(), 735u);
  std::set<TriangularCactus> images;
  for (const Matroid& m : simple_rank_four) {
    const TriangularCactus g = matroid_to_cactus(m);
    ASSERT_EQ(cactus_to_matroid(g), m);
    images.insert(g);
  }
  EXPECT_EQ(images.size(), 735u);
}

TEST(CactusTest, PreconditionsEnforced) {
  EXPECT_THROW(matroid_to_cactus(uniform_matroid(2, 4)), MatroidError);
  EXPECT_THROW(matroid_to_cactus(uniform_matroid(1, 3)), MatroidError);
  EXPECT_THROW(matroid_to_cactus(braid(4)), MatroidError);
  EXPECT_THROW(cactus_to_matroid(TriangularCactus(5, {{0, 1, 2}})), MatroidError);
}

}  // namespace
}  // namespace braidkl
