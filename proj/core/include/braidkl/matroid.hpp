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

// Labelled matroids on at most 16 elements, stored by their bases.
//
// Elements are 0, ..., n-1 and subsets are bit masks. The bases list is kept
// sorted and duplicate-free, so two matroids are equal exactly when they have
// the same ground size and the same bases (labelled equality). Isomorphism is
// a separate, explicit search.
//
// Minors (delete, contract, restrict) renumber the surviving elements in
// increasing order, so the result again lives on {0, ..., m-1}.

#ifndef BRAIDKL_MATROID_HPP_
#define BRAIDKL_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidkl/exactmath.hpp"

namespace braidkl {

using Subset = std::uint16_t;

inline constexpr int kMaxGroundSize = 16;

class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr Subset full_set(int n) {
  return static_cast<Subset>((1u << n) - 1u);
}
constexpr Subset singleton(int e) { return static_cast<Subset>(1u << e); }
constexpr bool contains(Subset s, int e) { return (s >> e) & 1u; }
int popcount(Subset s);
std::vector<int> elements_of(Subset s);

class Matroid {
 public:
  // Validates: 0 <= n <= 16, bases nonempty, all subsets of the ground set,
  // all of equal size. The basis exchange axiom is not checked here (see
  // satisfies_basis_exchange()).
  Matroid(int ground_size, std::vector<Subset> bases);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return full_set(n_); }
  const std::vector<Subset>& bases() const { return bases_; }

  int rank_of(Subset s) const;
  Subset closure(Subset s) const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;
  Subset loops() const;
  Subset coloops() const;
  bool is_independent(Subset s) const;

  // rank_of for every subset of the ground set, indexed by mask.
  std::vector<std::uint8_t> rank_table() const;

  bool satisfies_basis_exchange() const;

  std::size_t hash() const;
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }
  friend bool operator<(const Matroid& a, const Matroid& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bases_ < b.bases_;
  }

  std::string to_string() const;

 private:
  int n_;
  int rank_;
  std::vector<Subset> bases_;
};

struct MatroidHash {
  std::size_t operator()(const Matroid& m) const { return m.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Matroid& m);

// ---------------------------------------------------------------------------
// Standard matroids

Matroid uniform_matroid(int rank, int n);
Matroid single_loop();
Matroid single_coloop();

// ---------------------------------------------------------------------------
// Graphs

struct GraphEdge {
  int u;
  int v;
  int label;
};

// Multigraph with labelled edges; loops and parallel edges allowed. Edge
// labels must be exactly {0, ..., m-1}.
class Multigraph {
 public:
  Multigraph(int vertex_count, std::vector<GraphEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Text format: one edge per line as "u v label" with 0-indexed vertices.
  // Blank lines and lines starting with '#' are ignored. The vertex count is
  // one more than the largest vertex mentioned.
  static Multigraph parse(std::istream& in);

 private:
  int vertex_count_;
  std::vector<GraphEdge> edges_;
};

Multigraph complete_graph(int n);

// Cycle matroid: bases are the maximal spanning forests, by edge label.
Matroid from_graph(const Multigraph& g);

// Cycle matroid of K_n, edges labelled lexicographically (0,1), (0,2), ...
// Valid for 2 <= n <= 6.
Matroid braid(int n);

// Edge label of {i, j} in complete_graph(n) / braid(n).
int complete_graph_edge_label(int n, int i, int j);

// ---------------------------------------------------------------------------
// Flats

struct FlatLattice {
  // by_rank[r] is the sorted list of flats of rank r.
  std::vector<std::vector<Subset>> by_rank;

  std::size_t size() const;
  std::vector<std::size_t> counts_by_rank() const;
};

FlatLattice flats_lattice(const Matroid& m);

// ---------------------------------------------------------------------------
// Constructions and minors

Matroid dual(const Matroid& m);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid delete_set(const Matroid& m, Subset s);
Matroid contract_set(const Matroid& m, Subset s);
// M | s, renumbered.
Matroid restrict_to(const Matroid& m, Subset s);
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Relabels element i as image[i]; image must be a permutation of [n].
Matroid relabel(const Matroid& m, std::span<const int> image);

// Adds a new element parallel (resp. in series) with e. The new element gets
// label `new_label`, existing labels >= new_label shift up by one. Throws if
// e is a loop (parallel) or a coloop (series).
Matroid parallel_extension(const Matroid& m, int e, int new_label);
Matroid series_extension(const Matroid& m, int e, int new_label);

// ---------------------------------------------------------------------------
// Structure

// Connectivity classes, each a mask, ordered by least element. Loops and
// coloops form singleton classes.
std::vector<Subset> connected_components(const Matroid& m);
bool is_connected(const Matroid& m);

// (-1)^{rk M} sum_{S subset E} (-1)^{|S|} rk(S).
BigInt beta_invariant(const Matroid& m);

enum class ExcludedMinor { kU24, kMK4 };

Matroid excluded_minor_matroid(ExcludedMinor which);
bool has_minor(const Matroid& m, ExcludedMinor which);

// The single loop, or beta(M) = 1.
bool is_series_parallel(const Matroid& m);
// Connected and without U_{2,4} / M(K_4) minors. Used as an oracle.
bool is_series_parallel_by_minors(const Matroid& m);
// Every connected component is series-parallel.
bool is_quasi_series_parallel(const Matroid& m);
bool is_quasi_series_parallel_by_minors(const Matroid& m);

struct Simplification {
  Matroid matroid;
  // class_of[e] is the parallel class of e, or -1 for loops. Classes are
  // numbered by least element.
  std::vector<int> class_of;
  Subset loops;

  int class_count() const { return matroid.ground_size(); }
};

Simplification simplify(const Matroid& m);
bool is_simple(const Matroid& m);

// Element-bijection search with invariant pruning; at most 10 elements.
bool are_isomorphic(const Matroid& a, const Matroid& b);

// Partitions `items` into isomorphism classes; returns class sizes in order
// of first appearance.
std::vector<std::size_t> isomorphism_class_sizes(std::span<const Matroid> items);

}  // namespace braidkl

#endif  // BRAIDKL_MATROID_HPP_
