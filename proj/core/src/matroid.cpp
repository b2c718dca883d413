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

#include "braidkl/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace braidkl {

int popcount(Subset s) { return std::popcount(static_cast<unsigned>(s)); }

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int e = 0; s != 0; ++e, s = static_cast<Subset>(s >> 1)) {
    if (s & 1u) out.push_back(e);
  }
  return out;
}

namespace {

// Renumbers the members of `keep` as 0, 1, ... in increasing order and drops
// everything else.
Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int j = 0;
  for (int e = 0; e < kMaxGroundSize; ++e) {
    if (!contains(keep, e)) continue;
    if (contains(s, e)) out = static_cast<Subset>(out | singleton(j));
    ++j;
  }
  return out;
}

Matroid compressed(int n, const std::vector<Subset>& bases, Subset keep) {
  (void)n;
  std::vector<Subset> out;
  out.reserve(bases.size());
  for (Subset b : bases) out.push_back(compress(b, keep));
  return Matroid(popcount(keep), std::move(out));
}

bool is_basis_sorted(const std::vector<Subset>& bases, Subset b) {
  return std::binary_search(bases.begin(), bases.end(), b);
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(int ground_size, std::vector<Subset> bases)
    : n_(ground_size), rank_(0), bases_(std::move(bases)) {
  if (n_ < 0 || n_ > kMaxGroundSize) {
    throw MatroidError("ground set size must be between 0 and 16");
  }
  if (bases_.empty()) throw MatroidError("a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  const unsigned outside = ~static_cast<unsigned>(full_set(n_)) & 0xFFFFu;
  rank_ = popcount(bases_.front());
  for (Subset b : bases_) {
    if (b & outside) throw MatroidError("basis outside the ground set");
    if (popcount(b) != rank_) throw MatroidError("bases of different sizes");
  }
}

int Matroid::rank_of(Subset s) const {
  const int cap = std::min(popcount(s), rank_);
  int best = 0;
  for (Subset b : bases_) {
    best = std::max(best, popcount(static_cast<Subset>(b & s)));
    if (best == cap) break;
  }
  return best;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank_of(s);
  Subset out = s;
  for (int e = 0; e < n_; ++e) {
    if (contains(s, e)) continue;
    if (rank_of(static_cast<Subset>(s | singleton(e))) == r) out = static_cast<Subset>(out | singleton(e));
  }
  return out;
}

bool Matroid::is_loop(int e) const { return contains(loops(), e); }
bool Matroid::is_coloop(int e) const { return contains(coloops(), e); }

Subset Matroid::loops() const {
  Subset used = 0;
  for (Subset b : bases_) used = static_cast<Subset>(used | b);
  return static_cast<Subset>(full_set(n_) & ~used);
}

Subset Matroid::coloops() const {
  Subset common = full_set(n_);
  for (Subset b : bases_) common = static_cast<Subset>(common & b);
  return common;
}

bool Matroid::is_independent(Subset s) const { return rank_of(s) == popcount(s); }

std::vector<std::uint8_t> Matroid::rank_table() const {
  const std::size_t size = std::size_t{1} << n_;
  std::vector<std::uint8_t> independent(size, 0);
  for (Subset b : bases_) {
    // Every submask of a basis is independent.
    Subset sub = b;
    while (true) {
      independent[sub] = 1;
      if (sub == 0) break;
      sub = static_cast<Subset>((sub - 1) & b);
    }
  }
  std::vector<std::uint8_t> rk(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    const auto mask = static_cast<Subset>(s);
    if (independent[s]) {
      rk[s] = static_cast<std::uint8_t>(popcount(mask));
      continue;
    }
    std::uint8_t best = 0;
    for (int e = 0; e < n_; ++e) {
      if (contains(mask, e)) best = std::max(best, rk[s & ~(std::size_t{1} << e)]);
    }
    rk[s] = best;
  }
  return rk;
}

bool Matroid::satisfies_basis_exchange() const {
  for (Subset b1 : bases_) {
    for (Subset b2 : bases_) {
      for (int x : elements_of(static_cast<Subset>(b1 & ~b2))) {
        bool found = false;
        for (int y : elements_of(static_cast<Subset>(b2 & ~b1))) {
          Subset swapped = static_cast<Subset>((b1 & ~singleton(x)) | singleton(y));
          if (is_basis_sorted(bases_, swapped)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::size_t Matroid::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (Subset b : bases_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Matroid::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matroid& m) {
  os << "Matroid(n=" << m.ground_size() << ", rank=" << m.rank() << ", bases={";
  bool first = true;
  for (Subset b : m.bases()) {
    if (!first) os << ",";
    first = false;
    os << "{";
    bool inner = true;
    for (int e : elements_of(b)) {
      if (!inner) os << " ";
      inner = false;
      os << e;
    }
    os << "}";
  }
  return os << "})";
}

// ---------------------------------------------------------------------------
// Standard matroids

Matroid uniform_matroid(int rank, int n) {
  if (rank < 0 || rank > n) throw MatroidError("uniform matroid needs 0 <= rank <= n");
  std::vector<Subset> bases;
  for (unsigned s = 0; s <= full_set(n); ++s) {
    if (std::popcount(s) == rank) bases.push_back(static_cast<Subset>(s));
    if (n == 16 && s == 0xFFFFu) break;
  }
  return Matroid(n, std::move(bases));
}

Matroid single_loop() { return Matroid(1, {0}); }
Matroid single_coloop() { return Matroid(1, {1}); }

// ---------------------------------------------------------------------------
// Graphs

Multigraph::Multigraph(int vertex_count, std::vector<GraphEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw MatroidError("negative vertex count");
  std::vector<bool> seen(edges_.size(), false);
  for (const GraphEdge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw MatroidError("edge endpoint out of range");
    }
    if (e.label < 0 || e.label >= static_cast<int>(edges_.size()) ||
        seen[static_cast<std::size_t>(e.label)]) {
      throw MatroidError("edge labels must be exactly 0..m-1");
    }
    seen[static_cast<std::size_t>(e.label)] = true;
  }
}

Multigraph Multigraph::parse(std::istream& in) {
  std::vector<GraphEdge> edges;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    GraphEdge e{};
    if (!(ls >> e.u >> e.v >> e.label)) {
      throw MatroidError("malformed edge on line " + std::to_string(line_no));
    }
    std::string rest;
    if (ls >> rest) throw MatroidError("trailing text on line " + std::to_string(line_no));
    max_vertex = std::max({max_vertex, e.u, e.v});
    edges.push_back(e);
  }
  return Multigraph(max_vertex + 1, std::move(edges));
}

int complete_graph_edge_label(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw MatroidError("not an edge of the complete graph");
  // Edges (a, b) with a < i come first: sum_{a<i} (n - 1 - a).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Multigraph complete_graph(int n) {
  std::vector<GraphEdge> edges;
  int label = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, label++});
  }
  return Multigraph(n, std::move(edges));
}

Matroid from_graph(const Multigraph& g) {
  const int m = g.edge_count();
  if (m > kMaxGroundSize) throw MatroidError("graph has more than 16 edges");
  DisjointSets all(std::max(1, g.vertex_count()));
  int rank = 0;
  for (const GraphEdge& e : g.edges()) {
    if (all.unite(e.u, e.v)) ++rank;
  }
  std::vector<GraphEdge> by_label(g.edges());
  std::sort(by_label.begin(), by_label.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
  std::vector<Subset> bases;
  for (unsigned s = 0; s <= full_set(m); ++s) {
    if (std::popcount(s) == rank) {
      DisjointSets forest(std::max(1, g.vertex_count()));
      bool acyclic = true;
      for (int e = 0; e < m && acyclic; ++e) {
        if ((s >> e) & 1u) acyclic = forest.unite(by_label[static_cast<std::size_t>(e)].u,
                                                  by_label[static_cast<std::size_t>(e)].v);
      }
      if (acyclic) bases.push_back(static_cast<Subset>(s));
    }
    if (m == 16 && s == 0xFFFFu) break;
  }
  return Matroid(m, std::move(bases));
}

Matroid braid(int n) {
  if (n < 2 || n > 6) throw MatroidError("braid(n) requires 2 <= n <= 6");
  return from_graph(complete_graph(n));
}

// ---------------------------------------------------------------------------
// Flats

std::size_t FlatLattice::size() const {
  std::size_t total = 0;
  for (const auto& level : by_rank) total += level.size();
  return total;
}

std::vector<std::size_t> FlatLattice::counts_by_rank() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_rank) out.push_back(level.size());
  return out;
}

FlatLattice flats_lattice(const Matroid& m) {
  const auto rk = m.rank_table();
  const int n = m.ground_size();
  auto close = [&](Subset s) {
    Subset out = s;
    for (int e = 0; e < n; ++e) {
      if (!contains(s, e) && rk[static_cast<Subset>(s | singleton(e))] == rk[s]) {
        out = static_cast<Subset>(out | singleton(e));
      }
    }
    return out;
  };
  FlatLattice lattice;
  lattice.by_rank.resize(static_cast<std::size_t>(m.rank()) + 1);
  lattice.by_rank[0].push_back(close(0));
  for (int r = 0; r < m.rank(); ++r) {
    std::set<Subset> next;
    for (Subset f : lattice.by_rank[static_cast<std::size_t>(r)]) {
      for (int e = 0; e < n; ++e) {
        if (!contains(f, e)) next.insert(close(static_cast<Subset>(f | singleton(e))));
      }
    }
    lattice.by_rank[static_cast<std::size_t>(r) + 1].assign(next.begin(), next.end());
  }
  return lattice;
}

// ---------------------------------------------------------------------------
// Constructions and minors

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(static_cast<Subset>(m.ground() & ~b));
  return Matroid(m.ground_size(), std::move(bases));
}

Matroid restrict_to(const Matroid& m, Subset s) {
  s = static_cast<Subset>(s & m.ground());
  const int r = m.rank_of(s);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    Subset part = static_cast<Subset>(b & s);
    if (popcount(part) == r) bases.push_back(part);
  }
  return compressed(m.ground_size(), bases, s);
}

Matroid delete_set(const Matroid& m, Subset s) {
  return restrict_to(m, static_cast<Subset>(m.ground() & ~s));
}

Matroid contract_set(const Matroid& m, Subset s) {
  s = static_cast<Subset>(s & m.ground());
  const int r = m.rank_of(s);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (popcount(static_cast<Subset>(b & s)) == r) bases.push_back(static_cast<Subset>(b & ~s));
  }
  return compressed(m.ground_size(), bases, static_cast<Subset>(m.ground() & ~s));
}

Matroid delete_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.ground_size()) throw MatroidError("element out of range");
  return delete_set(m, singleton(e));
}

Matroid contract_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.ground_size()) throw MatroidError("element out of range");
  return contract_set(m, singleton(e));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size() + b.ground_size();
  if (n > kMaxGroundSize) throw MatroidError("direct sum exceeds 16 elements");
  std::vector<Subset> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) {
      bases.push_back(static_cast<Subset>(x | (static_cast<unsigned>(y) << a.ground_size())));
    }
  }
  return Matroid(n, std::move(bases));
}

Matroid relabel(const Matroid& m, std::span<const int> image) {
  const int n = m.ground_size();
  if (static_cast<int>(image.size()) != n) throw MatroidError("relabel: wrong image size");
  Subset hit = 0;
  for (int v : image) {
    if (v < 0 || v >= n || contains(hit, v)) throw MatroidError("relabel: not a permutation");
    hit = static_cast<Subset>(hit | singleton(v));
  }
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) {
    Subset out = 0;
    for (int e = 0; e < n; ++e) {
      if (contains(b, e)) out = static_cast<Subset>(out | singleton(image[static_cast<std::size_t>(e)]));
    }
    bases.push_back(out);
  }
  return Matroid(n, std::move(bases));
}

namespace {

// Moves the freshly appended element n (= old ground size) to new_label.
Matroid place_new_element(int n, std::vector<Subset> bases, int new_label) {
  if (new_label < 0 || new_label > n) throw MatroidError("new label out of range");
  Matroid appended(n + 1, std::move(bases));
  if (new_label == n) return appended;
  std::vector<int> image(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i < new_label ? i : i + 1;
  image[static_cast<std::size_t>(n)] = new_label;
  return relabel(appended, image);
}

}  // namespace

Matroid parallel_extension(const Matroid& m, int e, int new_label) {
  const int n = m.ground_size();
  if (n + 1 > kMaxGroundSize) throw MatroidError("extension exceeds 16 elements");
  if (e < 0 || e >= n) throw MatroidError("element out of range");
  if (m.is_loop(e)) throw MatroidError("parallel extension of a loop");
  std::vector<Subset> bases(m.bases());
  for (Subset b : m.bases()) {
    if (contains(b, e)) bases.push_back(static_cast<Subset>((b & ~singleton(e)) | singleton(n)));
  }
  return place_new_element(n, std::move(bases), new_label);
}

Matroid series_extension(const Matroid& m, int e, int new_label) {
  const int n = m.ground_size();
  if (n + 1 > kMaxGroundSize) throw MatroidError("extension exceeds 16 elements");
  if (e < 0 || e >= n) throw MatroidError("element out of range");
  if (m.is_coloop(e)) throw MatroidError("series extension of a coloop");
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    bases.push_back(static_cast<Subset>(b | singleton(n)));
    if (!contains(b, e)) bases.push_back(static_cast<Subset>(b | singleton(e)));
  }
  return place_new_element(n, std::move(bases), new_label);
}

// ---------------------------------------------------------------------------
// Structure

std::vector<Subset> connected_components(const Matroid& m) {
  // The fundamental-circuit graph of any single basis has the matroid's
  // connected components as its components.
  const int n = m.ground_size();
  DisjointSets sets(std::max(1, n));
  const Subset b = m.bases().front();
  for (int e = 0; e < n; ++e) {
    if (!contains(b, e)) continue;
    for (int f = 0; f < n; ++f) {
      if (contains(b, f)) continue;
      Subset swapped = static_cast<Subset>((b & ~singleton(e)) | singleton(f));
      if (is_basis_sorted(m.bases(), swapped)) sets.unite(e, f);
    }
  }
  std::map<int, Subset> groups;
  for (int e = 0; e < n; ++e) {
    Subset& g = groups[sets.find(e)];
    g = static_cast<Subset>(g | singleton(e));
  }
  std::vector<Subset> out;
  for (const auto& [root, mask] : groups) out.push_back(mask);
  std::sort(out.begin(), out.end(), [](Subset a, Subset c) {
    return std::countr_zero(static_cast<unsigned>(a)) < std::countr_zero(static_cast<unsigned>(c));
  });
  return out;
}

bool is_connected(const Matroid& m) { return connected_components(m).size() <= 1; }

BigInt beta_invariant(const Matroid& m) {
  const auto rk = m.rank_table();
  long long sum = 0;
  for (std::size_t s = 0; s < rk.size(); ++s) {
    const int sign = (popcount(static_cast<Subset>(s)) % 2 == 0) ? 1 : -1;
    sum += sign * static_cast<long long>(rk[s]);
  }
  if (m.rank() % 2 == 1) sum = -sum;
  return BigInt(static_cast<long>(sum));
}

Matroid excluded_minor_matroid(ExcludedMinor which) {
  if (which == ExcludedMinor::kU24) return uniform_matroid(2, 4);
  return from_graph(complete_graph(4));
}

bool has_minor(const Matroid& m, ExcludedMinor which) {
  const Matroid target = excluded_minor_matroid(which);
  const int target_size = target.ground_size();
  const int target_rank = target.rank();
  const int n = m.ground_size();
  const int r = m.rank();
  const int contract_size = r - target_rank;
  if (n < target_size || contract_size < 0 || n - contract_size < target_size) return false;
  if (n - r < target_size - target_rank) return false;

  const auto rk = m.rank_table();
  // Every minor is M / C \ D with C independent and D coindependent; then
  // the minor has rank r - |C| and its bases are {B - C : C <= B, B <= E - D}.
  for (unsigned c = 0; c <= full_set(n); ++c) {
    if (std::popcount(c) != contract_size || rk[c] != contract_size) continue;
    const auto rest = static_cast<Subset>(full_set(n) & ~c);
    // Walk the target_size-subsets of rest.
    for (Subset t = rest;; t = static_cast<Subset>((t - 1) & rest)) {
      if (popcount(t) == target_size && rk[static_cast<Subset>(t | c)] == r) {
        std::vector<Subset> bases;
        for (Subset b : m.bases()) {
          if ((b & c) == c && (b & ~(t | c)) == 0) bases.push_back(static_cast<Subset>(b & ~c));
        }
        if (bases.size() == target.bases().size()) {
          Matroid minor = compressed(n, bases, t);
          if (are_isomorphic(minor, target)) return true;
        }
      }
      if (t == 0) break;
    }
    if (n == 16 && c == 0xFFFFu) break;
  }
  return false;
}

bool is_series_parallel(const Matroid& m) {
  if (m.ground_size() == 1 && m.is_loop(0)) return true;
  return beta_invariant(m) == 1;
}

bool is_series_parallel_by_minors(const Matroid& m) {
  if (m.ground_size() == 0) return false;
  return is_connected(m) && !has_minor(m, ExcludedMinor::kU24) &&
         !has_minor(m, ExcludedMinor::kMK4);
}

bool is_quasi_series_parallel(const Matroid& m) {
  for (Subset c : connected_components(m)) {
    if (!is_series_parallel(restrict_to(m, c))) return false;
  }
  return true;
}

bool is_quasi_series_parallel_by_minors(const Matroid& m) {
  return !has_minor(m, ExcludedMinor::kU24) && !has_minor(m, ExcludedMinor::kMK4);
}

Simplification simplify(const Matroid& m) {
  const int n = m.ground_size();
  const Subset loops = m.loops();
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  Subset representatives = 0;
  int classes = 0;
  for (int e = 0; e < n; ++e) {
    if (contains(loops, e) || class_of[static_cast<std::size_t>(e)] >= 0) continue;
    class_of[static_cast<std::size_t>(e)] = classes;
    representatives = static_cast<Subset>(representatives | singleton(e));
    for (int f = e + 1; f < n; ++f) {
      if (contains(loops, f) || class_of[static_cast<std::size_t>(f)] >= 0) continue;
      if (m.rank_of(static_cast<Subset>(singleton(e) | singleton(f))) == 1) {
        class_of[static_cast<std::size_t>(f)] = classes;
      }
    }
    ++classes;
  }
  return Simplification{restrict_to(m, representatives), std::move(class_of), loops};
}

bool is_simple(const Matroid& m) {
  if (m.loops() != 0) return false;
  const int n = m.ground_size();
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (m.rank_of(static_cast<Subset>(singleton(e) | singleton(f))) < 2) return false;
    }
  }
  return true;
}

namespace {

constexpr int kMaxIsomorphismSize = 10;

struct PairCounts {
  int n;
  std::array<std::array<int, kMaxIsomorphismSize>, kMaxIsomorphismSize> both{};

  explicit PairCounts(const Matroid& m) : n(m.ground_size()) {
    for (Subset b : m.bases()) {
      for (int e = 0; e < n; ++e) {
        if (!contains(b, e)) continue;
        for (int f = 0; f < n; ++f) {
          if (contains(b, f)) ++both[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
        }
      }
    }
  }

  std::vector<int> signature(int e) const {
    std::vector<int> sig;
    for (int f = 0; f < n; ++f) {
      if (f != e) sig.push_back(both[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]);
    }
    std::sort(sig.begin(), sig.end());
    sig.push_back(both[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)]);
    return sig;
  }

  int at(int e, int f) const {
    return both[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
  }
};

bool extend_isomorphism(const Matroid& a, const Matroid& b, const PairCounts& ca,
                        const PairCounts& cb, const std::vector<std::vector<int>>& candidates,
                        std::vector<int>& image, Subset used, int next) {
  const int n = a.ground_size();
  if (next == n) return relabel(a, image) == b;
  for (int target : candidates[static_cast<std::size_t>(next)]) {
    if (contains(used, target)) continue;
    bool consistent = true;
    for (int prev = 0; prev < next && consistent; ++prev) {
      consistent = ca.at(next, prev) == cb.at(target, image[static_cast<std::size_t>(prev)]);
    }
    if (!consistent) continue;
    image[static_cast<std::size_t>(next)] = target;
    if (extend_isomorphism(a, b, ca, cb, candidates, image,
                           static_cast<Subset>(used | singleton(target)), next + 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.ground_size() > kMaxIsomorphismSize || b.ground_size() > kMaxIsomorphismSize) {
    throw MatroidError("are_isomorphic supports at most 10 elements");
  }
  if (a.ground_size() != b.ground_size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size()) {
    return false;
  }
  if (a == b) return true;
  const int n = a.ground_size();
  const PairCounts ca(a);
  const PairCounts cb(b);
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    const auto sig = ca.signature(e);
    for (int f = 0; f < n; ++f) {
      if (cb.signature(f) == sig) candidates[static_cast<std::size_t>(e)].push_back(f);
    }
    if (candidates[static_cast<std::size_t>(e)].empty()) return false;
  }
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  return extend_isomorphism(a, b, ca, cb, candidates, image, 0, 0);
}

std::vector<std::size_t> isomorphism_class_sizes(std::span<const Matroid> items) {
  std::vector<const Matroid*> reps;
  std::vector<std::size_t> sizes;
  for (const Matroid& m : items) {
    bool placed = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (are_isomorphic(*reps[i], m)) {
        ++sizes[i];
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(&m);
      sizes.push_back(1);
    }
  }
  return sizes;
}

}  // namespace braidkl
