#include <gtest/gtest.h>

#include <set>

#include "coblekit/group.hpp"
#include "coblekit/signed_perm.hpp"
#include "support.hpp"

using namespace coblekit;

namespace {

SignedPerm cyc(std::vector<std::vector<unsigned>> cycles, int aux = 1, std::size_t n = 6) {
  return SignedPerm::from_cycles(n, cycles, aux);
}

FiniteGroup<SignedPerm> gen(std::vector<SignedPerm> gens) { return closure(gens, SignedPerm::identity(gens.front().degree())); }

std::size_t partitions_of(int n, int largest) {
  if (n == 0) return 1;
  std::size_t total = 0;
  for (int k = std::min(n, largest); k >= 1; --k) total += partitions_of(n - k, k);
  return total;
}

// Order of the commutator subgroup by saturating the set of commutators under products.
std::size_t derived_order_by_hand(const FiniteGroup<SignedPerm>& G) {
  std::set<SignedPerm> d;
  for (const auto& a : G.elements())
    for (const auto& b : G.elements()) d.insert(a.inverse() * b.inverse() * a * b);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<SignedPerm> cur(d.begin(), d.end());
    for (const auto& a : cur)
      for (const auto& b : cur) grew |= d.insert(a * b).second;
  }
  return d.size();
}

}  // namespace

TEST(SignedPerm, CompositionActsRightToLeft) {
  const SignedPerm a = cyc({{1, 2}}), b = cyc({{2, 3}});
  // (a*b)(2) = a(b(2)) = a(3) = 3.
  EXPECT_EQ((a * b).image(1), 2u);
  EXPECT_EQ((a * b).cycles(), (std::vector<std::vector<unsigned>>{{1, 2, 3}}));
  EXPECT_EQ(a * a, SignedPerm::identity(6));
}

TEST(SignedPerm, InverseAndApply) {
  const SignedPerm g(std::vector<std::uint8_t>{1, 2, 0, 3}, std::vector<std::int8_t>{1, -1, 1, -1}, -1);
  EXPECT_EQ(g * g.inverse(), SignedPerm::identity(4).with_aux(1));
  const std::vector<int> v{1, 2, 3, 4};
  EXPECT_EQ(g.apply(v), (std::vector<int>{3, 1, -2, -4}));
  EXPECT_EQ(g.inverse().apply(g.apply(v)), v);
  EXPECT_EQ(g.matrix().column(1), (VectorQ{0, 0, -1, 0}));
}

TEST(SignedPerm, PullBackIsContravariant) {
  auto rng = coblekit::testing::rng(31);
  const auto perms = all_permutations(4);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedPerm a = perms[trial % 24], b = perms[(7 * trial + 3) % 24];
    const VectorQ f = coblekit::testing::random_vector(rng, 4);
    EXPECT_EQ((a * b).pull_back(f), b.pull_back(a.pull_back(f)));
  }
}

TEST(SignedPerm, Rendering) {
  EXPECT_EQ(SignedPerm::identity(3).to_string(), "() | +++ | aux:+");
  const SignedPerm g(std::vector<std::uint8_t>{1, 0, 3, 2, 4, 5}, std::vector<std::int8_t>{1, 1, -1, -1, 1, 1}, -1);
  EXPECT_EQ(g.to_string(), "(1 2)(3 4) | ++--++ | aux:-");
}

TEST(SignedPerm, IdentityIsLeastAndInputsValidated) {
  for (const auto& g : all_permutations(4)) EXPECT_LE(SignedPerm::identity(4), g);
  EXPECT_LT(SignedPerm::identity(4), SignedPerm::galois(4));
  EXPECT_THROW(SignedPerm(std::vector<std::uint8_t>{0, 0}), Error);
  EXPECT_THROW(SignedPerm(std::vector<std::uint8_t>{0, 1}, std::vector<std::int8_t>{1, 2}), Error);
  EXPECT_THROW(cyc({{1, 7}}), Error);
}

TEST(Group, ClosureExamples) {
  EXPECT_EQ(gen({cyc({{1, 2}})}).order(), 2u);
  EXPECT_EQ(gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5, 6}})}).order(), 720u);
  EXPECT_EQ(gen({cyc({{1, 2}}, -1), cyc({{1, 2, 3, 4, 5}})}).order(), 120u);
  EXPECT_EQ(gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5}}), SignedPerm::galois(6)}).order(), 240u);
}

TEST(Group, ClosureIsIdempotentAndContainsProducts) {
  const auto G = gen({cyc({{1, 2, 3}}), cyc({{3, 4}}), SignedPerm::galois(6)});
  const auto H = closure(G.elements(), SignedPerm::identity(6));
  EXPECT_TRUE(G.same_elements(H));
  EXPECT_EQ(G.identity(), SignedPerm::identity(6));
  for (const auto& a : G.elements())
    for (const auto& b : G.elements()) ASSERT_TRUE(G.contains(a * b));
}

TEST(Group, ConjugacyClassExamples) {
  const auto S3 = gen({cyc({{1, 2}}), cyc({{1, 2, 3}})});
  std::multiset<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(S3)) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(conjugacy_classes(gen({cyc({{1, 2}})})).size(), 2u);
  const auto S6 = gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5, 6}})});
  EXPECT_EQ(conjugacy_classes(S6).size(), partitions_of(6, 6));
  EXPECT_EQ(conjugacy_classes(S6).front(), std::vector<std::size_t>{0});
}

TEST(Group, ClassesPartitionTheGroupAndAreConjugationClosed) {
  const auto G = gen({cyc({{1, 2}}, -1), cyc({{1, 2, 3, 4, 5}})});
  const auto classes = conjugacy_classes(G);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    const auto& x = G.elements()[c.front()];
    for (const auto& g : G.elements()) {
      const auto y = conjugate(x, g);
      EXPECT_NE(std::find(c.begin(), c.end(), G.index_of(y)), c.end());
    }
  }
  EXPECT_EQ(total, G.order());
}

TEST(Group, FingerprintExamples) {
  const Fingerprint c2 = group_fingerprint(gen({cyc({{1, 2}})}));
  EXPECT_EQ(c2.order, 2u);
  EXPECT_EQ(c2.abelianization, std::vector<std::size_t>{2});
  EXPECT_EQ(c2.class_count, 2u);
  EXPECT_EQ(c2.order_histogram, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}}));

  const auto S5 = gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5}})});
  EXPECT_EQ(abelian_invariants(S5), std::vector<std::size_t>{2});
  const auto C2C2 = gen({cyc({{1, 2}}), cyc({{3, 4}})});
  EXPECT_EQ(abelian_invariants(C2C2), (std::vector<std::size_t>{2, 2}));
  const auto C6 = gen({cyc({{1, 2}}), cyc({{3, 4, 5}})});
  EXPECT_EQ(abelian_invariants(C6), std::vector<std::size_t>{6});
}

TEST(Group, DerivedSubgroupMatchesCommutatorSaturation) {
  const std::vector<FiniteGroup<SignedPerm>> groups{
      gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5}})}),
      gen({cyc({{1, 2}}, -1), cyc({{1, 2, 3, 4, 5}})}),
      gen({cyc({{1, 2}}), cyc({{1, 2, 3}}), cyc({{4, 5}}), cyc({{4, 5, 6}})}),
      gen({cyc({{1, 2, 3, 4, 5}}), cyc({{2, 3, 5, 4}}), SignedPerm::galois(6)}),
  };
  for (const auto& G : groups) {
    const std::size_t d = derived_order_by_hand(G);
    EXPECT_EQ(derived_subgroup(G).order(), d);
    std::size_t prod = 1;
    for (auto k : abelian_invariants(G)) prod *= k;
    EXPECT_EQ(prod * d, G.order());
  }
}

TEST(Group, FingerprintIsConjugationInvariant) {
  const auto G = gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4}}), SignedPerm::galois(6)});
  const SignedPerm by = cyc({{1, 5, 3}, {2, 6}});
  EXPECT_EQ(group_fingerprint(conjugate(G, by)), group_fingerprint(G));
  EXPECT_EQ(exponent(G), 12u);
}
