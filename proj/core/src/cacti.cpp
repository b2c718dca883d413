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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braidkl {

namespace {

Triangle sorted_triangle(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

using TriangleSet = std::vector<Triangle>;

// All cacti on the vertex set `vertices` (odd size), each as a sorted list of
// sorted triangles. A cactus with at least one triangle has a leaf triangle
// {a, b, c} whose vertices a, b lie in no other triangle; removing a and b
// leaves a cactus on the remaining vertices.
const std::set<TriangleSet>& cacti_on(Subset vertices, std::map<Subset, std::set<TriangleSet>>& memo) {
  auto it = memo.find(vertices);
  if (it != memo.end()) return it->second;
  std::set<TriangleSet> out;
  const std::vector<int> members = elements_of(vertices);
  if (members.size() == 1) {
    out.insert(TriangleSet{});
  } else {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int a = members[i];
        const int b = members[j];
        const auto rest = static_cast<Subset>(vertices & ~singleton(a) & ~singleton(b));
        const std::set<TriangleSet>& smaller = cacti_on(rest, memo);
        for (int c : elements_of(rest)) {
          for (const TriangleSet& base : smaller) {
            TriangleSet next = base;
            next.push_back(sorted_triangle({a, b, c}));
            std::sort(next.begin(), next.end());
            out.insert(std::move(next));
          }
        }
      }
    }
  }
  return memo.emplace(vertices, std::move(out)).first->second;
}

}  // namespace

TriangularCactus::TriangularCactus(int vertices, std::vector<Triangle> tris)
    : vertex_count(vertices), triangles(std::move(tris)) {
  for (Triangle& t : triangles) t = sorted_triangle(t);
  std::sort(triangles.begin(), triangles.end());
}

bool TriangularCactus::is_valid() const {
  const int m = vertex_count;
  if (m < 1 || m % 2 == 0 || m > kMaxGroundSize) return false;
  if (static_cast<int>(triangles.size()) != (m - 1) / 2) return false;
  std::set<std::pair<int, int>> edges;
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Triangle& t : triangles) {
    for (int v : t) {
      if (v < 0 || v >= m) return false;
    }
    if (t[0] == t[1] || t[1] == t[2]) return false;
    for (auto [x, y] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
      if (!edges.emplace(x, y).second) return false;
      parent[static_cast<std::size_t>(find(x))] = find(y);
    }
  }
  // t edge-disjoint triangles spanning a connected graph on 2t + 1 vertices
  // leave no room for any further cycle.
  for (int v = 0; v < m; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

std::vector<TriangularCactus> enum_triangular_cacti(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("enum_triangular_cacti: m must be odd and positive");
  if (m > kMaxCactusVertices) {
    throw std::invalid_argument("enum_triangular_cacti: m must be at most " +
                                std::to_string(kMaxCactusVertices));
  }
  std::map<Subset, std::set<TriangleSet>> memo;
  std::vector<TriangularCactus> out;
  for (const TriangleSet& t : cacti_on(full_set(m), memo)) out.emplace_back(m, t);
  return out;
}

Matroid cactus_to_matroid(const TriangularCactus& g) {
  if (!g.is_valid()) throw MatroidError("cactus_to_matroid: not a triangular cactus");
  const int m = g.vertex_count;
  // Cactus vertex v becomes graph edge ends[v] = (p, q).
  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(m), {-1, -1});
  int graph_vertices = 2;
  if (g.triangles.empty()) {
    ends[0] = {0, 1};
  } else {
    const Triangle& first = g.triangles.front();
    ends[static_cast<std::size_t>(first[0])] = {0, 1};
    ends[static_cast<std::size_t>(first[1])] = {1, 2};
    ends[static_cast<std::size_t>(first[2])] = {0, 2};
    graph_vertices = 3;
    std::vector<bool> used(g.triangles.size(), false);
    used[0] = true;
    for (std::size_t placed = 1; placed < g.triangles.size();) {
      bool progress = false;
      for (std::size_t i = 0; i < g.triangles.size(); ++i) {
        if (used[i]) continue;
        const Triangle& t = g.triangles[i];
        int anchor = -1;
        for (int v : t) {
          if (ends[static_cast<std::size_t>(v)].first >= 0) anchor = v;
        }
        if (anchor < 0) continue;
        // Exactly one vertex is placed: the cactus is a tree of triangles.
        const auto [p, q] = ends[static_cast<std::size_t>(anchor)];
        const int r = graph_vertices++;
        bool first_free = true;
        for (int v : t) {
          if (v == anchor) continue;
          ends[static_cast<std::size_t>(v)] = first_free ? std::pair{p, r} : std::pair{r, q};
          first_free = false;
        }
        used[i] = true;
        ++placed;
        progress = true;
      }
      if (!progress) throw std::logic_error("cactus_to_matroid: disconnected cactus");
    }
  }
  std::vector<GraphEdge> edges;
  for (int v = 0; v < m; ++v) {
    edges.push_back(GraphEdge{ends[static_cast<std::size_t>(v)].first,
                              ends[static_cast<std::size_t>(v)].second, v});
  }
  return from_graph(Multigraph(graph_vertices, std::move(edges)));
}

TriangularCactus matroid_to_cactus(const Matroid& m) {
  const int n = m.ground_size();
  if (n % 2 == 0 || m.rank() != (n + 1) / 2) {
    throw MatroidError("matroid_to_cactus: need rank k on 2k - 1 elements");
  }
  if (!is_simple(m)) throw MatroidError("matroid_to_cactus: matroid is not simple");
  if (!is_series_parallel(m)) throw MatroidError("matroid_to_cactus: matroid is not series-parallel");
  std::vector<Triangle> triangles;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        // Simple, so every pair is independent: rank 2 means a circuit.
        const auto s = static_cast<Subset>(singleton(a) | singleton(b) | singleton(c));
        if (m.rank_of(s) == 2) triangles.push_back({a, b, c});
      }
    }
  }
  TriangularCactus g(n, std::move(triangles));
  if (!g.is_valid()) throw std::logic_error("matroid_to_cactus: 3-circuits do not form a cactus");
  return g;
}

BigInt cacti_count_formula(int k) {
  if (k < 2) throw std::invalid_argument("cacti_count_formula: k must be at least 2");
  return double_factorial(2 * k - 3) * int_power(BigInt(2 * k - 1), k - 2);
}

}  // namespace braidkl
