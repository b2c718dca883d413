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

// Permutation groups given by their elements, class functions on them, and
// the equivariant Kazhdan-Lusztig and Z-polynomials of a matroid with a group
// of automorphisms.
//
// Virtual representations are modelled by their characters. The Z-polynomial
// is the sum, over orbits of nonempty flats F, of t^{rk F} times the
// character induced from the stabilizer of F of the equivariant P of M/F.
// The stabilizer acts on the simplification of M/F through its action on the
// parallel classes; the result there is pulled back along that quotient.
// P is then the value-wise palindromic completion of the tail.

#ifndef BRAIDKL_EQUIVARIANT_HPP_
#define BRAIDKL_EQUIVARIANT_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidkl/exactmath.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/report.hpp"

namespace braidkl {

// A permutation of {0, ..., m-1} as its list of images.
using Perm = std::vector<int>;

// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm identity_perm(int degree);
// Cycle lengths in decreasing order joined by '+', e.g. "3+1+1".
std::string cycle_type(const Perm& p);

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConjugacyClass {
  std::size_t representative;  // index of the least element in the class
  std::size_t size;
};

class PermGroup {
 public:
  // Validates that the elements are permutations of one degree, contain the
  // identity and are closed under composition (hence a group).
  static PermGroup from_elements(int degree, std::vector<Perm> elements);
  static PermGroup generate(int degree, const std::vector<Perm>& generators);
  static PermGroup symmetric(int degree);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  // Sorted lexicographically.
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  std::size_t identity_index() const { return identity_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t class_count() const { return classes_.size(); }

  bool is_subgroup_of(const PermGroup& g) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(int degree, std::vector<Perm> sorted_elements);

  int degree_ = 0;
  std::vector<Perm> elements_;
  std::size_t identity_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

// One rational value per conjugacy class of the owning group.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<BigRational> values);
  static ClassFunction zero(GroupPtr group);
  static ClassFunction trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<BigRational>& values() const { return values_; }
  const BigRational& on_class(std::size_t c) const { return values_[c]; }
  const BigRational& on_element(std::size_t element) const;
  // Value at a permutation; throws GroupError if it is not in the group.
  const BigRational& at(const Perm& p) const;
  const BigRational& at_identity() const;

  bool is_zero() const;
  // All values are nonnegative integers (necessary for a permutation
  // character).
  bool is_nonnegative_integral() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const BigRational& c, ClassFunction f);
  // Same group (by elements) and same values.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  GroupPtr group_;
  std::vector<BigRational> values_;
};

// Number of fixed points of each class representative under `action`, which
// maps (element index, point) to a point in [0, point_count). Throws
// GroupError if the action is not a homomorphism into the permutations of
// the points.
ClassFunction perm_character(const GroupPtr& group,
                             const std::function<int(std::size_t, int)>& action,
                             int point_count);

// (Ind chi)(s) = 1/|H| sum_{x in G} chi(x^-1 s x), chi extended by zero.
// Throws GroupError unless h is a subgroup of g.
ClassFunction induce(const GroupPtr& h, const GroupPtr& g, const ClassFunction& chi);

// chi o hom: the class function s -> chi(hom(s)) on g.
ClassFunction pullback(const ClassFunction& chi, const GroupPtr& g,
                       const std::function<Perm(const Perm&)>& hom);

struct EquivariantPoly {
  int rank = 0;
  std::vector<ClassFunction> coeffs;

  // Coefficient of t^i, zero past the stored range.
  ClassFunction coeff(std::size_t i) const;
  // Values at the identity, checked to be integers.
  IntPolynomial dimension() const;
};

struct EquivariantKL {
  EquivariantPoly p;
  EquivariantPoly z;
};

// Thread-safe memo keyed by (simple matroid, element set of the acting
// group).
class EquivariantMemo {
 public:
  std::optional<EquivariantKL> lookup(const Matroid& m, const PermGroup& g) const;
  void insert(const Matroid& m, const PermGroup& g, const EquivariantKL& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<Matroid, std::vector<Perm>>, EquivariantKL> table_;
};

// Every element of g must be an automorphism of the loopless matroid m.
EquivariantKL equivariant_kl(const Matroid& m, const GroupPtr& g, EquivariantMemo& memo);
EquivariantKL equivariant_kl(const Matroid& m, const GroupPtr& g);

// The symmetric group on the first n-1 vertices of K_n, acting on vertices
// (degree n - 1) and the same group acting on the edge labels of braid(n).
struct BraidSymmetry {
  GroupPtr on_vertices;
  GroupPtr on_edges;
  // edge_image[i] is the edge permutation of on_vertices->element(i).
  std::vector<Perm> edge_image;
};
BraidSymmetry braid_symmetry(int n);

// Equivariant braid data for 3 <= n <= 6 together with the permutation
// characters it is compared against, all on classes of the vertex group.
struct EquivariantBraidTables {
  int n = 0;
  std::vector<std::string> class_labels;  // cycle types
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<BigRational>> p, z;
  std::vector<std::vector<BigRational>> p_expected, z_expected;
};
EquivariantBraidTables braid_equivariant_tables(int n);

// [t^i] P of K_n against the permutation character on simple QSP matroids of
// rank n-1-i on [n-1], [t^i] Z against all QSP matroids of that rank, for
// every class; plus the identity specialisation against braid_kl(n).
VerificationReport verify_theorem_equivariant(int n);

}  // namespace braidkl

#endif  // BRAIDKL_EQUIVARIANT_HPP_
