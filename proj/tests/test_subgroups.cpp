#include <gtest/gtest.h>

#include <set>

#include "coblekit/rigidity.hpp"
#include "coblekit/subgroups.hpp"
#include "support.hpp"

using namespace coblekit;

namespace {

SignedPerm cyc(std::vector<unsigned> c, int aux = 1) { return SignedPerm::from_cycles(6, {std::move(c)}, aux); }

FiniteGroup<SignedPerm> gen(std::vector<SignedPerm> gens) { return closure(gens, SignedPerm::identity(6)); }

using Subset = std::set<SignedPerm>;

Subset saturate(Subset s) {
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<SignedPerm> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur) grew |= s.insert(a * b).second;
  }
  return s;
}

// Every subgroup is a join of cyclic ones: start from cyclic subgroups and
// keep joining single elements until nothing new appears, then count orbits
// under conjugation.
std::size_t subgroup_classes_by_hand(const FiniteGroup<SignedPerm>& G) {
  std::set<Subset> all;
  std::vector<Subset> frontier;
  for (const auto& g : G.elements()) {
    auto h = saturate({g, G.identity()});
    if (all.insert(h).second) frontier.push_back(h);
  }
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& h : frontier)
      for (const auto& g : G.elements()) {
        if (h.count(g)) continue;
        Subset j = h;
        j.insert(g);
        j = saturate(j);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::set<Subset> seen;
  std::size_t classes = 0;
  for (const auto& h : all) {
    if (seen.count(h)) continue;
    ++classes;
    for (const auto& x : G.elements()) {
      Subset c;
      for (const auto& y : h) c.insert(x * y * x.inverse());
      seen.insert(c);
    }
  }
  return classes;
}

}  // namespace

TEST(Subgroups, SmallGroupClassCounts) {
  EXPECT_EQ(subgroups_up_to_conjugacy(gen({cyc({1, 2}), cyc({1, 2, 3})})).size(), 4u);
  EXPECT_EQ(subgroups_up_to_conjugacy(gen({cyc({1, 2, 3, 4})})).size(), 3u);
  EXPECT_EQ(subgroups_up_to_conjugacy(gen({cyc({1, 2}), cyc({1, 2, 3, 4})})).size(), 11u);
  EXPECT_EQ(subgroups_up_to_conjugacy(groups::standard_s5()).size(), 19u);
  EXPECT_EQ(subgroups_up_to_conjugacy(groups::a5()).size(), 9u);
}

TEST(Subgroups, ClassCountsMatchBruteForceEnumeration) {
  const std::vector<FiniteGroup<SignedPerm>> cases{
      gen({cyc({1, 2}), cyc({1, 2, 3, 4})}),
      groups::s4_c2(),
      groups::f20_c2(),
      gen({cyc({1, 2}), cyc({1, 2, 3}), cyc({4, 5}), cyc({4, 5, 6})}),
  };
  for (const auto& G : cases) EXPECT_EQ(subgroups_up_to_conjugacy(G).size(), subgroup_classes_by_hand(G)) << G.order();
}

TEST(Subgroups, RepresentativesArePairwiseNonConjugateSubgroups) {
  const auto G = groups::s4_c2();
  const auto reps = subgroups_up_to_conjugacy(G);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& h : reps[i].elements()) ASSERT_TRUE(G.contains(h));
    EXPECT_EQ(G.order() % reps[i].order(), 0u);
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(are_conjugate(reps[i], reps[j], G));
  }
}

TEST(Subgroups, AmbientHasThreeClassesOfIndexTwo) {
  const auto classes = subgroups_up_to_conjugacy(groups::ambient());
  std::size_t index_two = 0, order_60 = 0;
  for (const auto& H : classes) {
    index_two += H.order() == 120;
    order_60 += H.order() == 60;
  }
  EXPECT_EQ(index_two, 3u);
  EXPECT_EQ(order_60, 1u);
  EXPECT_EQ(classes.back().order(), 240u);
  EXPECT_EQ(classes.front().order(), 1u);
}

TEST(Subgroups, SubconjugacyExamples) {
  const auto ambient = groups::ambient();
  EXPECT_TRUE(is_subconjugate(gen({cyc({3, 5})}), groups::s4_c2(), ambient));
  EXPECT_FALSE(is_subconjugate(groups::twisted_s5(), groups::s4_c2(), ambient));
  EXPECT_FALSE(is_subconjugate(groups::a5(), groups::f20_c2(), ambient));
  EXPECT_TRUE(is_subconjugate(groups::c5(), groups::f20_c2(), ambient));
  EXPECT_TRUE(is_subconjugate(groups::a5(), groups::twisted_s5(), ambient));
  EXPECT_FALSE(are_conjugate(groups::standard_s5(), groups::twisted_s5(), ambient));
  EXPECT_TRUE(are_conjugate(groups::c5(), gen({cyc({1, 3, 5, 2, 4})}), ambient));
}

TEST(Subgroups, SubconjugacyImpliesDivisibilityAndIsTransitive) {
  const auto G = groups::f20_c2();
  const auto reps = subgroups_up_to_conjugacy(G);
  for (const auto& H : reps)
    for (const auto& K : reps) {
      if (!is_subconjugate(H, K, G)) continue;
      EXPECT_EQ(K.order() % H.order(), 0u);
      for (const auto& L : reps)
        if (is_subconjugate(K, L, G)) {
          EXPECT_TRUE(is_subconjugate(H, L, G));
        }
    }
}

TEST(Subgroups, OrderBoundIsEnforced) {
  try {
    subgroups_up_to_conjugacy(groups::ambient(), 100);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderBoundExceeded);
  }
}
