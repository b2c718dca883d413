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

// Labelled triangular cacti and their bijection with simple series-parallel
// matroids of rank k on 2k - 1 elements.
//
// A triangular cactus is a connected graph in which every edge lies on
// exactly one cycle and that cycle is a triangle. On m = 2k - 1 vertices it
// has k - 1 triangles. The vertices of the cactus are the elements of the
// matroid; a triangle {a, b, c} of the cactus is a 3-element circuit.

#ifndef BRAIDKL_CACTI_HPP_
#define BRAIDKL_CACTI_HPP_

#include <array>
#include <vector>

#include "braidkl/exactmath.hpp"
#include "braidkl/matroid.hpp"

namespace braidkl {

using Triangle = std::array<int, 3>;

struct TriangularCactus {
  int vertex_count = 0;
  // Each triangle sorted, list sorted: equal cacti compare equal.
  std::vector<Triangle> triangles;

  TriangularCactus() = default;
  TriangularCactus(int vertices, std::vector<Triangle> tris);

  // Connected, every edge in exactly one triangle, (m - 1) / 2 triangles.
  bool is_valid() const;

  friend bool operator==(const TriangularCactus&, const TriangularCactus&) = default;
  friend auto operator<=>(const TriangularCactus&, const TriangularCactus&) = default;
};

inline constexpr int kMaxCactusVertices = 9;

// All labelled triangular cacti on {0, ..., m-1}; m odd and at most 9.
std::vector<TriangularCactus> enum_triangular_cacti(int m);

// The graphic matroid of a graph whose edges are the cactus vertices, with a
// triangle of edges {a, b, c} for every cactus triangle {a, b, c}.
Matroid cactus_to_matroid(const TriangularCactus& g);

// Cactus on the element set joining a and b whenever {a, b} lies in a
// 3-element circuit. Requires a simple series-parallel matroid of rank k on
// 2k - 1 elements.
TriangularCactus matroid_to_cactus(const Matroid& m);

// (2k - 3)!! (2k - 1)^{k - 2} for k >= 2.
BigInt cacti_count_formula(int k);

}  // namespace braidkl

#endif  // BRAIDKL_CACTI_HPP_
