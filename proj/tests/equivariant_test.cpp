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

#include <gtest/gtest.h>

#include <unordered_map>

#include "braidkl/klcalc.hpp"
#include "braidkl/spenum.hpp"
#include "oracles.hpp"

namespace braidkl {
namespace {

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

std::vector<BigRational> values(std::initializer_list<long> v) {
  std::vector<BigRational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(PermutationTest, CompositionAndCycleType) {
  const Perm a{1, 2, 0};
  const Perm b{1, 0, 2};
  EXPECT_EQ(compose(a, b), (Perm{2, 1, 0}));
  EXPECT_EQ(compose(a, inverse(a)), identity_perm(3));
  EXPECT_EQ(cycle_type(Perm{1, 0, 2, 4, 3}), "2+2+1");
  EXPECT_EQ(cycle_type(identity_perm(3)), "1+1+1");
  EXPECT_EQ(cycle_type(Perm{}), "0");
}

TEST(PermGroupTest, SymmetricGroupClasses) {
  const PermGroup s3 = PermGroup::symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  ASSERT_EQ(s3.class_count(), 3u);
  EXPECT_EQ(s3.classes()[0].size, 1u);
  EXPECT_EQ(s3.classes()[1].size, 3u);
  EXPECT_EQ(s3.classes()[2].size, 2u);
  EXPECT_EQ(cycle_type(s3.element(s3.classes()[2].representative)), "3");
  for (int d = 1; d <= 6; ++d) {
    const PermGroup s = PermGroup::symmetric(d);
    std::size_t total = 0;
    for (const auto& c : s.classes()) total += c.size;
    EXPECT_EQ(total, s.order());
    EXPECT_EQ(s.class_count(), static_cast<std::size_t>(std::vector<int>{1, 2, 3, 5, 7, 11}[static_cast<std::size_t>(d - 1)]));
  }
}

TEST(PermGroupTest, GenerationAndValidation) {
  const PermGroup s4 = PermGroup::generate(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  EXPECT_EQ(s4, PermGroup::symmetric(4));
  const PermGroup c4 = PermGroup::generate(4, {{1, 2, 3, 0}});
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_TRUE(c4.is_subgroup_of(s4));
  EXPECT_THROW(PermGroup::from_elements(3, {identity_perm(3), {1, 2, 0}}), GroupError);
  EXPECT_THROW(PermGroup::from_elements(3, {{1, 0, 2}}), GroupError);
  EXPECT_THROW(PermGroup::from_elements(3, {{0, 0, 2}}), GroupError);
}

TEST(ClassFunctionTest, PermutationCharacters) {
  const GroupPtr s3 = share(PermGroup::symmetric(3));
  const ClassFunction one = perm_character(s3, [](std::size_t, int p) { return p; }, 1);
  EXPECT_EQ(one, ClassFunction::trivial(s3));
  // Natural action on three points.
  const ClassFunction natural = perm_character(s3, [&](std::size_t g, int p) { return s3->element(g)[static_cast<std::size_t>(p)]; }, 3);
  EXPECT_EQ(natural.values(), values({3, 1, 0}));
  EXPECT_THROW(perm_character(s3, [](std::size_t g, int p) { return g == 1 ? 1 - p : p; }, 2), GroupError);
}

TEST(ClassFunctionTest, ActionOnRankOneQspMatroids) {
  const GroupPtr s3 = share(PermGroup::symmetric(3));
  const std::vector<Matroid> family = enum_qsp(3)[1];
  ASSERT_EQ(family.size(), 7u);
  std::unordered_map<Matroid, int, MatroidHash> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family[i], static_cast<int>(i));
  const ClassFunction chi = perm_character(
      s3, [&](std::size_t g, int p) { return index.at(relabel(family[static_cast<std::size_t>(p)], s3->element(g))); },
      7);
  EXPECT_EQ(chi.values(), values({7, 3, 1}));
}

TEST(ClassFunctionTest, SingleSimpleMatroidOnTwoPoints) {
  const GroupPtr s2 = share(PermGroup::symmetric(2));
  const std::vector<Matroid> family = enum_simple_qsp(2)[2];
  ASSERT_EQ(family, (std::vector<Matroid>{uniform_matroid(2, 2)}));
  EXPECT_EQ(perm_character(s2, [](std::size_t, int p) { return p; }, 1), ClassFunction::trivial(s2));
}

TEST(InductionTest, StandardExamples) {
  const GroupPtr s3 = share(PermGroup::symmetric(3));
  const GroupPtr trivial = share(PermGroup::trivial(3));
  const GroupPtr s2 = share(PermGroup::generate(3, {{1, 0, 2}}));
  EXPECT_EQ(induce(trivial, s3, ClassFunction::trivial(trivial)).values(), values({6, 0, 0}));
  EXPECT_EQ(induce(s2, s3, ClassFunction::trivial(s2)).values(), values({3, 1, 0}));
  const GroupPtr c3 = share(PermGroup::generate(3, {{1, 2, 0}}));
  EXPECT_THROW(induce(s2, c3, ClassFunction::trivial(s2)), GroupError);
}

TEST(InductionTest, MatchesAveragingFormula) {
  const GroupPtr s4 = share(PermGroup::symmetric(4));
  const std::vector<GroupPtr> subgroups{
      share(PermGroup::trivial(4)), share(PermGroup::generate(4, {{1, 0, 2, 3}})),
      share(PermGroup::generate(4, {{1, 2, 3, 0}})), share(PermGroup::generate(4, {{1, 0, 2, 3}, {0, 1, 3, 2}})),
      share(PermGroup::generate(4, {{1, 0, 2, 3}, {1, 2, 0, 3}}))};
  for (const GroupPtr& h : subgroups) {
    // A non-constant class function: number of fixed points squared.
    std::vector<BigRational> v;
    for (const auto& c : h->classes()) {
      long fixed = 0;
      const Perm& p = h->element(c.representative);
      for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == static_cast<int>(i) ? 1 : 0;
      v.emplace_back(fixed * fixed);
    }
    const ClassFunction chi(h, v);
    const ClassFunction ind = induce(h, s4, chi);
    EXPECT_EQ(ind.values(), oracle::induce_by_averaging(*h, *s4, chi));
    EXPECT_EQ(ind.at_identity(), BigRational(static_cast<unsigned long>(s4->order() / h->order())) * chi.at_identity());
  }
}

TEST(InductionTest, TransitiveAndAdditive) {
  const GroupPtr s4 = share(PermGroup::symmetric(4));
  const GroupPtr s3 = share(PermGroup::generate(4, {{1, 0, 2, 3}, {1, 2, 0, 3}}));
  const GroupPtr s2 = share(PermGroup::generate(4, {{1, 0, 2, 3}}));
  const ClassFunction chi(s2, values({2, -1}));
  EXPECT_EQ(induce(s3, s4, induce(s2, s3, chi)), induce(s2, s4, chi));
  const ClassFunction psi = ClassFunction::trivial(s2);
  EXPECT_EQ(induce(s2, s4, chi + psi), induce(s2, s4, chi) + induce(s2, s4, psi));
}

TEST(EquivariantKLTest, SmallBraidMatroids) {
  const EquivariantKL k2 = equivariant_kl(braid(2), share(PermGroup::trivial(1)));
  EXPECT_EQ(k2.p.dimension(), IntPolynomial({1}));
  EXPECT_EQ(k2.z.dimension(), IntPolynomial({1, 1}));
  EXPECT_EQ(k2.z.coeff(1), ClassFunction::trivial(k2.z.coeff(1).group()));

  const BraidSymmetry sym = braid_symmetry(3);
  const EquivariantKL k3 = equivariant_kl(braid(3), sym.on_edges);
  EXPECT_EQ(k3.p.dimension(), IntPolynomial({1}));
  EXPECT_EQ(k3.z.dimension(), IntPolynomial({1, 3, 1}));
}

TEST(EquivariantKLTest, SpecialisesToBraidPolynomials) {
  for (int n = 2; n <= 5; ++n) {
    const BraidSymmetry sym = braid_symmetry(n);
    const EquivariantKL r = equivariant_kl(braid(n), sym.on_edges);
    EXPECT_EQ(r.p.dimension(), braid_kl(n).p) << n;
    EXPECT_EQ(r.z.dimension(), braid_kl(n).z) << n;
    for (std::size_t i = 0; i < r.z.coeffs.size(); ++i) {
      EXPECT_EQ(r.z.coeffs[i], r.z.coeffs[r.z.coeffs.size() - 1 - i]);
      EXPECT_TRUE(r.z.coeffs[i].is_nonnegative_integral());
    }
    for (const ClassFunction& c : r.p.coeffs) EXPECT_TRUE(c.is_nonnegative_integral());
  }
}

TEST(EquivariantKLTest, FullSymmetricGroupOnBraid) {
  // All of S_4 acting on the edges of K_4.
  std::vector<Perm> edge_perms;
  const PermGroup s4 = PermGroup::symmetric(4);
  for (const Perm& sigma : s4.elements()) {
    Perm e(6);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const int a = sigma[static_cast<std::size_t>(i)], b = sigma[static_cast<std::size_t>(j)];
        e[static_cast<std::size_t>(complete_graph_edge_label(4, i, j))] = complete_graph_edge_label(4, std::min(a, b), std::max(a, b));
      }
    }
    edge_perms.push_back(e);
  }
  const GroupPtr g = share(PermGroup::from_elements(6, edge_perms));
  const EquivariantKL r = equivariant_kl(braid(4), g);
  EXPECT_EQ(r.p.dimension(), IntPolynomial({1, 1}));
  EXPECT_EQ(r.z.dimension(), IntPolynomial({1, 7, 7, 1}));
}

TEST(EquivariantKLTest, AgreesWithSimplificationAfterPullback) {
  // U_{2,3} on {0, 1, 2} with 3 parallel to 0; swaps (0 3) and (1 2).
  const Matroid m = parallel_extension(uniform_matroid(2, 3), 0, 3);
  const GroupPtr g = share(PermGroup::generate(4, {{3, 1, 2, 0}, {0, 2, 1, 3}}));
  const GroupPtr quotient = share(PermGroup::generate(3, {{0, 2, 1}}));
  const EquivariantKL full = equivariant_kl(m, g);
  const EquivariantKL simple = equivariant_kl(uniform_matroid(2, 3), quotient);
  auto to_classes = [](const Perm& s) {
    const int cls[4] = {0, 1, 2, 0};
    Perm out(3);
    for (int e = 0; e < 3; ++e) out[static_cast<std::size_t>(e)] = cls[s[static_cast<std::size_t>(e)]];
    return out;
  };
  ASSERT_EQ(full.z.coeffs.size(), simple.z.coeffs.size());
  for (std::size_t i = 0; i < full.z.coeffs.size(); ++i) {
    EXPECT_EQ(full.z.coeffs[i], pullback(simple.z.coeffs[i], g, to_classes));
  }
}

TEST(EquivariantKLTest, RejectsNonAutomorphisms) {
  const GroupPtr g = share(PermGroup::generate(3, {{1, 0, 2}}));
  const Matroid m(3, {0b011, 0b101});  // 0 is a coloop, 1 and 2 are parallel
  EXPECT_THROW(equivariant_kl(m, g), GroupError);
  EXPECT_THROW(equivariant_kl(braid(3), share(PermGroup::trivial(4))), GroupError);
}

TEST(EquivariantKLTest, MemoReusedAcrossCalls) {
  EquivariantMemo memo;
  const BraidSymmetry sym = braid_symmetry(5);
  const EquivariantKL a = equivariant_kl(braid(5), sym.on_edges, memo);
  const std::size_t size = memo.size();
  const EquivariantKL b = equivariant_kl(braid(5), sym.on_edges, memo);
  EXPECT_EQ(memo.size(), size);
  EXPECT_EQ(a.z.dimension(), b.z.dimension());
}

TEST(EquivariantVerificationTest, SmallBraidMatroids) {
  for (int n = 3; n <= 5; ++n) {
    const VerificationReport r = verify_theorem_equivariant(n);
    EXPECT_TRUE(r.all_ok()) << r.first_failure()->name;
  }
  const EquivariantBraidTables t = braid_equivariant_tables(4);
  EXPECT_EQ(t.class_labels, (std::vector<std::string>{"1+1+1", "2+1", "3"}));
  // [t^1] P of K_4 is the trivial character.
  EXPECT_EQ(t.p[1], values({1, 1, 1}));
  EXPECT_THROW(verify_theorem_equivariant(7), std::invalid_argument);
}

}  // namespace
}  // namespace braidkl
