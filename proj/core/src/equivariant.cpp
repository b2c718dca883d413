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

#include "braidkl/equivariant.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "braidkl/klcalc.hpp"
#include "braidkl/spenum.hpp"

namespace braidkl {

// ---------------------------------------------------------------------------
// Permutations

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw GroupError("compose: degree mismatch");
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string cycle_type(const Perm& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  std::string out;
  for (int len : lengths) {
    if (!out.empty()) out += "+";
    out += std::to_string(len);
  }
  return out.empty() ? "0" : out;
}

namespace {

bool is_permutation_of_degree(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Groups

PermGroup::PermGroup(int degree, std::vector<Perm> sorted_elements)
    : degree_(degree), elements_(std::move(sorted_elements)) {
  identity_ = *index_of(identity_perm(degree));
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  class_of_.assign(elements_.size(), kUnset);
  std::vector<Perm> inverses;
  inverses.reserve(elements_.size());
  for (const Perm& x : elements_) inverses.push_back(inverse(x));
  for (std::size_t s = 0; s < elements_.size(); ++s) {
    if (class_of_[s] != kUnset) continue;
    const std::size_t c = classes_.size();
    std::size_t size = 0;
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      const std::size_t j = *index_of(compose(compose(elements_[x], elements_[s]), inverses[x]));
      if (class_of_[j] == kUnset) {
        class_of_[j] = c;
        ++size;
      }
    }
    classes_.push_back(ConjugacyClass{s, size});
  }
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  if (degree < 0) throw GroupError("negative degree");
  for (const Perm& p : elements) {
    if (!is_permutation_of_degree(p, degree)) throw GroupError("element is not a permutation of the degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), identity_perm(degree))) {
    throw GroupError("identity missing");
  }
  for (const Perm& a : elements) {
    for (const Perm& b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), compose(a, b))) {
        throw GroupError("elements are not closed under composition");
      }
    }
  }
  return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::generate(int degree, const std::vector<Perm>& generators) {
  for (const Perm& p : generators) {
    if (!is_permutation_of_degree(p, degree)) throw GroupError("generator is not a permutation of the degree");
  }
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : generators) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree < 0) throw GroupError("negative degree");
  std::vector<Perm> all;
  Perm p = identity_perm(degree);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermGroup(degree, std::move(all));
}

PermGroup PermGroup::trivial(int degree) {
  if (degree < 0) throw GroupError("negative degree");
  return PermGroup(degree, {identity_perm(degree)});
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& p) { return g.index_of(p).has_value(); });
}

// ---------------------------------------------------------------------------
// Class functions

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || *a == *b; }

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<BigRational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw GroupError("class function without a group");
  if (values_.size() != group_->class_count()) throw GroupError("one value per class expected");
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const std::size_t k = group->class_count();
  return ClassFunction(std::move(group), std::vector<BigRational>(k, BigRational(0)));
}

ClassFunction ClassFunction::trivial(GroupPtr group) {
  const std::size_t k = group->class_count();
  return ClassFunction(std::move(group), std::vector<BigRational>(k, BigRational(1)));
}

const BigRational& ClassFunction::on_element(std::size_t element) const {
  return values_[group_->class_of(element)];
}

const BigRational& ClassFunction::at(const Perm& p) const {
  const auto i = group_->index_of(p);
  if (!i) throw GroupError("class function evaluated outside its group");
  return on_element(*i);
}

const BigRational& ClassFunction::at_identity() const { return on_element(group_->identity_index()); }

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const BigRational& v) { return v == 0; });
}

bool ClassFunction::is_nonnegative_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const BigRational& v) { return v >= 0 && v.get_den() == 1; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (!same_group(group_, other.group_)) throw GroupError("class functions on different groups");
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (!same_group(group_, other.group_)) throw GroupError("class functions on different groups");
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction operator*(const BigRational& c, ClassFunction f) {
  for (BigRational& v : f.values_) v *= c;
  return f;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

ClassFunction perm_character(const GroupPtr& group,
                             const std::function<int(std::size_t, int)>& action, int point_count) {
  const std::size_t order = group->order();
  const auto points = static_cast<std::size_t>(point_count);
  // image[g][p]
  std::vector<std::vector<int>> image(order, std::vector<int>(points));
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<bool> hit(points, false);
    for (std::size_t p = 0; p < points; ++p) {
      const int q = action(g, static_cast<int>(p));
      if (q < 0 || q >= point_count || hit[static_cast<std::size_t>(q)]) {
        throw GroupError("action: element does not permute the points");
      }
      hit[static_cast<std::size_t>(q)] = true;
      image[g][p] = q;
    }
  }
  for (std::size_t p = 0; p < points; ++p) {
    if (image[group->identity_index()][p] != static_cast<int>(p)) {
      throw GroupError("action: identity moves a point");
    }
  }
  // g.(h.p) = (gh).p for every pair.
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      const std::size_t gh = *group->index_of(compose(group->element(g), group->element(h)));
      for (std::size_t p = 0; p < points; ++p) {
        if (image[g][static_cast<std::size_t>(image[h][p])] != image[gh][p]) {
          throw GroupError("action is not compatible with composition");
        }
      }
    }
  }
  std::vector<BigRational> values;
  for (const ConjugacyClass& c : group->classes()) {
    long fixed = 0;
    for (std::size_t p = 0; p < points; ++p) {
      if (image[c.representative][p] == static_cast<int>(p)) ++fixed;
    }
    values.emplace_back(fixed);
  }
  return ClassFunction(group, std::move(values));
}

ClassFunction induce(const GroupPtr& h, const GroupPtr& g, const ClassFunction& chi) {
  if (!same_group(chi.group(), h)) throw GroupError("induce: character is not on the subgroup");
  if (!h->is_subgroup_of(*g)) throw GroupError("induce: not a subgroup");
  // Grouping the conjugates x^-1 s x by class: each element of the class of s
  // is hit |G| / |class| times.
  std::vector<BigRational> sums(g->class_count(), BigRational(0));
  for (std::size_t i = 0; i < h->order(); ++i) {
    const std::size_t c = g->class_of(*g->index_of(h->element(i)));
    sums[c] += chi.on_element(i);
  }
  std::vector<BigRational> values;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    BigRational v = sums[c] * BigRational(static_cast<unsigned long>(g->order())) /
                    (BigRational(static_cast<unsigned long>(h->order())) *
                     BigRational(static_cast<unsigned long>(g->classes()[c].size)));
    v.canonicalize();
    values.push_back(v);
  }
  return ClassFunction(g, std::move(values));
}

ClassFunction pullback(const ClassFunction& chi, const GroupPtr& g,
                       const std::function<Perm(const Perm&)>& hom) {
  std::vector<BigRational> values;
  for (const ConjugacyClass& c : g->classes()) values.push_back(chi.at(hom(g->element(c.representative))));
  return ClassFunction(g, std::move(values));
}

// ---------------------------------------------------------------------------
// Polynomials

ClassFunction EquivariantPoly::coeff(std::size_t i) const {
  if (coeffs.empty()) throw GroupError("equivariant polynomial without coefficients");
  if (i < coeffs.size()) return coeffs[i];
  return ClassFunction::zero(coeffs.front().group());
}

IntPolynomial EquivariantPoly::dimension() const {
  std::vector<BigInt> out;
  for (const ClassFunction& c : coeffs) {
    const BigRational& v = c.at_identity();
    if (v.get_den() != 1) throw KLValidationError("non-integral dimension " + v.get_str());
    out.push_back(v.get_num());
  }
  return IntPolynomial(std::move(out));
}

std::optional<EquivariantKL> EquivariantMemo::lookup(const Matroid& m, const PermGroup& g) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find({m, g.elements()});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void EquivariantMemo::insert(const Matroid& m, const PermGroup& g, const EquivariantKL& value) {
  std::lock_guard lock(mutex_);
  table_.try_emplace({m, g.elements()}, value);
}

std::size_t EquivariantMemo::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

// ---------------------------------------------------------------------------
// Recursion

namespace {

Subset image_of(const Perm& sigma, Subset s) {
  Subset out = 0;
  for (int e : elements_of(s)) out = static_cast<Subset>(out | singleton(sigma[static_cast<std::size_t>(e)]));
  return out;
}

// The action of the group elements on the parallel classes of `simp`, where
// element_label[i] is the original label of the i-th element of the
// simplified matroid's parent.
struct ClassAction {
  GroupPtr image_group;
  std::function<Perm(const Perm&)> hom;
};

ClassAction action_on_classes(const std::vector<Perm>& elements, const std::vector<int>& survivors,
                              const Simplification& simp) {
  const int k = simp.class_count();
  std::vector<int> position(elements.empty() ? 0 : elements.front().size(), -1);
  for (std::size_t i = 0; i < survivors.size(); ++i) position[static_cast<std::size_t>(survivors[i])] = static_cast<int>(i);
  std::vector<int> representative(static_cast<std::size_t>(k), -1);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const int c = simp.class_of[i];
    if (c >= 0 && representative[static_cast<std::size_t>(c)] < 0) representative[static_cast<std::size_t>(c)] = survivors[i];
  }
  auto hom = [position, representative, class_of = simp.class_of, k](const Perm& sigma) {
    Perm out(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      const int moved = sigma[static_cast<std::size_t>(representative[static_cast<std::size_t>(c)])];
      const int pos = position[static_cast<std::size_t>(moved)];
      if (pos < 0) throw GroupError("group element does not preserve the contracted flat");
      out[static_cast<std::size_t>(c)] = class_of[static_cast<std::size_t>(pos)];
    }
    return out;
  };
  std::vector<Perm> images;
  images.reserve(elements.size());
  for (const Perm& sigma : elements) images.push_back(hom(sigma));
  auto group = std::make_shared<const PermGroup>(PermGroup::from_elements(k, std::move(images)));
  return ClassAction{std::move(group), std::move(hom)};
}

EquivariantKL kl_simple_equivariant(const Matroid& m, const GroupPtr& g, EquivariantMemo& memo);

// Result for a loopless matroid whose ground set is labelled by `survivors`
// (original labels, increasing), with the group elements acting on the
// original labels; pulled back to `g`.
EquivariantKL kl_through_simplification(const Matroid& m, const std::vector<int>& survivors,
                                        const GroupPtr& g, EquivariantMemo& memo) {
  const Simplification simp = simplify(m);
  if (simp.loops != 0) throw MatroidError("equivariant_kl: matroid has a loop");
  const ClassAction act = action_on_classes(g->elements(), survivors, simp);
  const EquivariantKL inner = kl_simple_equivariant(simp.matroid, act.image_group, memo);
  EquivariantKL out;
  out.p.rank = inner.p.rank;
  out.z.rank = inner.z.rank;
  for (const ClassFunction& c : inner.p.coeffs) out.p.coeffs.push_back(pullback(c, g, act.hom));
  for (const ClassFunction& c : inner.z.coeffs) out.z.coeffs.push_back(pullback(c, g, act.hom));
  return out;
}

EquivariantKL kl_simple_equivariant(const Matroid& m, const GroupPtr& g, EquivariantMemo& memo) {
  if (auto cached = memo.lookup(m, *g)) return *cached;
  const int d = m.rank();
  const int n = m.ground_size();
  std::vector<ClassFunction> tail(static_cast<std::size_t>(d) + 1, ClassFunction::zero(g));
  const FlatLattice flats = flats_lattice(m);
  for (int r = 1; r <= d; ++r) {
    for (Subset f : flats.by_rank[static_cast<std::size_t>(r)]) {
      // Only the least flat of each orbit is expanded.
      std::vector<Perm> stabilizer;
      bool least = true;
      for (const Perm& sigma : g->elements()) {
        const Subset img = image_of(sigma, f);
        if (img < f) {
          least = false;
          break;
        }
        if (img == f) stabilizer.push_back(sigma);
      }
      if (!least) continue;
      auto h = std::make_shared<const PermGroup>(PermGroup::from_elements(n, std::move(stabilizer)));
      const std::vector<int> survivors = elements_of(static_cast<Subset>(m.ground() & ~f));
      const EquivariantKL below = kl_through_simplification(contract_set(m, f), survivors, h, memo);
      for (std::size_t j = 0; j < below.p.coeffs.size(); ++j) {
        tail[static_cast<std::size_t>(r) + j] += induce(h, g, below.p.coeffs[j]);
      }
    }
  }
  EquivariantKL result;
  result.p.rank = d;
  result.z.rank = d;
  if (d == 0) {
    result.p.coeffs = {ClassFunction::trivial(g)};
    result.z.coeffs = {ClassFunction::trivial(g)};
  } else {
    for (int i = 0; 2 * i < d; ++i) {
      result.p.coeffs.push_back(tail[static_cast<std::size_t>(d - i)] - tail[static_cast<std::size_t>(i)]);
    }
    result.z.coeffs = tail;
    for (std::size_t i = 0; i < result.p.coeffs.size(); ++i) result.z.coeffs[i] += result.p.coeffs[i];
  }
  for (std::size_t i = 0; i < result.z.coeffs.size(); ++i) {
    if (!(result.z.coeffs[i] == result.z.coeffs[static_cast<std::size_t>(d) - i])) {
      throw KLValidationError("equivariant Z is not palindromic");
    }
  }
  memo.insert(m, *g, result);
  return result;
}

}  // namespace

EquivariantKL equivariant_kl(const Matroid& m, const GroupPtr& g, EquivariantMemo& memo) {
  if (!g || g->degree() != m.ground_size()) throw GroupError("equivariant_kl: group degree differs from ground size");
  if (m.loops() != 0) throw MatroidError("equivariant_kl: matroid has a loop");
  for (const Perm& sigma : g->elements()) {
    if (!(relabel(m, sigma) == m)) throw GroupError("equivariant_kl: group element is not an automorphism");
  }
  return kl_through_simplification(m, elements_of(m.ground()), g, memo);
}

EquivariantKL equivariant_kl(const Matroid& m, const GroupPtr& g) {
  EquivariantMemo memo;
  return equivariant_kl(m, g, memo);
}

// ---------------------------------------------------------------------------
// Braid matroids

BraidSymmetry braid_symmetry(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("braid_symmetry: n must be between 2 and 6");
  BraidSymmetry out;
  out.on_vertices = std::make_shared<const PermGroup>(PermGroup::symmetric(n - 1));
  const int edges = n * (n - 1) / 2;
  for (const Perm& sigma : out.on_vertices->elements()) {
    Perm full = sigma;
    full.push_back(n - 1);
    Perm e(static_cast<std::size_t>(edges));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = full[static_cast<std::size_t>(i)];
        const int b = full[static_cast<std::size_t>(j)];
        e[static_cast<std::size_t>(complete_graph_edge_label(n, i, j))] =
            complete_graph_edge_label(n, std::min(a, b), std::max(a, b));
      }
    }
    out.edge_image.push_back(std::move(e));
  }
  out.on_edges = std::make_shared<const PermGroup>(PermGroup::from_elements(edges, out.edge_image));
  return out;
}

namespace {

std::vector<BigRational> family_character(const BraidSymmetry& sym, const std::vector<Matroid>& family) {
  std::unordered_map<Matroid, int, MatroidHash> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family[i], static_cast<int>(i));
  const GroupPtr& g = sym.on_vertices;
  auto action = [&](std::size_t element, int point) {
    auto it = index.find(relabel(family[static_cast<std::size_t>(point)], g->element(element)));
    if (it == index.end()) throw GroupError("family is not closed under relabelling");
    return it->second;
  };
  return perm_character(g, action, static_cast<int>(family.size())).values();
}

}  // namespace

EquivariantBraidTables braid_equivariant_tables(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("braid_equivariant_tables: n must be between 3 and 6");
  const BraidSymmetry sym = braid_symmetry(n);
  const EquivariantKL kl = equivariant_kl(braid(n), sym.on_edges);
  const int m = n - 1;
  const RankedFamily all = enum_qsp(m);
  const RankedFamily simple = enum_simple_qsp(m);
  EquivariantBraidTables t;
  t.n = n;
  const GroupPtr& g = sym.on_vertices;
  for (const ConjugacyClass& c : g->classes()) {
    t.class_labels.push_back(cycle_type(g->element(c.representative)));
    t.class_sizes.push_back(c.size);
  }
  for (int i = 0; i <= m; ++i) {
    std::vector<BigRational> p_row, z_row;
    const ClassFunction p = kl.p.coeff(static_cast<std::size_t>(i));
    const ClassFunction z = kl.z.coeff(static_cast<std::size_t>(i));
    for (const ConjugacyClass& c : g->classes()) {
      p_row.push_back(p.at(sym.edge_image[c.representative]));
      z_row.push_back(z.at(sym.edge_image[c.representative]));
    }
    t.p.push_back(std::move(p_row));
    t.z.push_back(std::move(z_row));
    t.p_expected.push_back(family_character(sym, simple[static_cast<std::size_t>(m - i)]));
    t.z_expected.push_back(family_character(sym, all[static_cast<std::size_t>(m - i)]));
  }
  return t;
}

VerificationReport verify_theorem_equivariant(int n) {
  VerificationReport report;
  report.suite = "equivariant";
  const EquivariantBraidTables t = braid_equivariant_tables(n);
  const int m = n - 1;
  const std::string kn = "K" + std::to_string(n);
  IntPolynomial p_dim, z_dim;
  for (int i = 0; i <= m; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
      const std::string at = " [t^" + std::to_string(i) + "] at " + t.class_labels[c];
      report.add(kn + " P" + at + " = fix on S(" + std::to_string(m) + "," + std::to_string(m - i) + ")",
                 t.p[row][c].get_str(), t.p_expected[row][c].get_str(), t.p[row][c] == t.p_expected[row][c]);
      report.add(kn + " Z" + at + " = fix on A(" + std::to_string(m) + "," + std::to_string(m - i) + ")",
                 t.z[row][c].get_str(), t.z_expected[row][c].get_str(), t.z[row][c] == t.z_expected[row][c]);
    }
    // The identity class comes first: it holds the least element.
    p_dim += IntPolynomial::monomial(t.p[row][0].get_num(), i);
    z_dim += IntPolynomial::monomial(t.z[row][0].get_num(), i);
  }
  const KLResult plain = braid_kl(n);
  report.add(kn + " P at identity = braid_kl", p_dim.to_string("t"), plain.p.to_string("t"), p_dim == plain.p);
  report.add(kn + " Z at identity = braid_kl", z_dim.to_string("t"), plain.z.to_string("t"), z_dim == plain.z);
  return report;
}

}  // namespace braidkl
