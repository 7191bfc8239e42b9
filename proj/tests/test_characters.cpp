#include <gtest/gtest.h>

#include "coblekit/characters.hpp"
#include "coblekit/linear_form.hpp"
#include "support.hpp"

using namespace coblekit;

namespace {

SignedPerm cyc(std::vector<std::vector<unsigned>> cycles, int aux = 1) { return SignedPerm::from_cycles(6, cycles, aux); }

FiniteGroup<SignedPerm> gen(std::vector<SignedPerm> gens) { return closure(gens, SignedPerm::identity(6)); }

// Counts g in S6 with f o g - c f constant for some c != 0, solving for c directly.
std::size_t stabilizer_order_by_hand(const LinearFormQ& f) {
  std::size_t i0 = 0, j0 = 0;
  for (std::size_t j = 1; j < 6; ++j)
    if (f[j] != f[0]) j0 = j;
  std::size_t count = 0;
  for (const auto& g : all_permutations(6)) {
    LinearFormQ fg(6);
    for (std::size_t i = 0; i < 6; ++i) fg[i] = f[g.image(i)];
    const Rational c = (fg[i0] - fg[j0]) / (f[i0] - f[j0]);
    if (c == 0) continue;
    bool constant = true;
    for (std::size_t i = 1; i < 6; ++i) constant &= fg[i] - c * f[i] == fg[0] - c * f[0];
    count += constant;
  }
  return count;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Characters, LinearCharacterCounts) {
  EXPECT_EQ(linear_characters(gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5}})})).size(), 2u);
  EXPECT_EQ(linear_characters(gen({cyc({{1, 2, 3}}), cyc({{3, 4, 5}})})).size(), 1u);
  EXPECT_EQ(linear_characters(gen({cyc({{1, 2}}), cyc({{1, 2, 3}}), cyc({{4, 5}}), cyc({{4, 5, 6}})})).size(), 4u);
  EXPECT_EQ(linear_characters(gen({cyc({{1, 2, 3}}), cyc({{4, 5, 6}})})).size(), 9u);
}

TEST(Characters, LinearCharactersAreOrthonormalHomomorphisms) {
  const auto G = gen({cyc({{1, 2, 3, 4}}), cyc({{5, 6}}), SignedPerm::galois(6)});
  const auto chars = linear_characters(G);
  ASSERT_EQ(chars.size(), 16u);
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = 0; b < chars.size(); ++b) EXPECT_EQ(inner_product(chars[a], chars[b]), a == b ? 1 : 0);
  for (const auto& mu : chars) EXPECT_EQ(mu.degree(), Cyclotomic(1));
}

TEST(Characters, SimplicialCharacterValues) {
  const auto S6 = gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5, 6}})});
  const auto chi = simplicial_character(S6);
  const auto classes = conjugacy_classes(S6);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& g = S6.elements()[classes[c].front()];
    if (g == SignedPerm::identity(6)) {
      EXPECT_EQ(chi.values[c], Cyclotomic(5));
    }
    if (g.cycles().size() == 1 && g.cycles()[0].size() == 6) {
      EXPECT_EQ(chi.values[c], Cyclotomic(-1));
    }
    if (g.cycles().size() == 1 && g.cycles()[0].size() == 2) {
      EXPECT_EQ(chi.values[c], Cyclotomic(3));
    }
  }
  EXPECT_EQ(inner_product(chi, chi), 1);

  const SignedPerm signed_elem(std::vector<std::uint8_t>{0, 1, 2, 3, 4, 5}, std::vector<std::int8_t>{-1, 1, 1, 1, 1, 1});
  EXPECT_EQ(kind_of([&] { simplicial_character(gen({signed_elem})); }), ErrorKind::SignedElement);
}

TEST(Characters, StabilizerOrdersMatchDirectCount) {
  const std::vector<std::pair<const char*, std::size_t>> cases{
      {"x6", 120}, {"x1+x2", 48}, {"x1-x2", 48}, {"x1+2x2", 24}, {"x1+x2+x3", 72}, {"x1+x2+2x3", 12}, {"x1+2x2+3x3", 6}};
  for (const auto& [text, order] : cases) {
    const auto f = parse_linear_form(text);
    EXPECT_EQ(hyperplane_stabilizer(f).order(), order) << text;
    EXPECT_EQ(stabilizer_order_by_hand(f), order) << text;
  }
}

TEST(Characters, StabilizerOverCubeRootsOfUnity) {
  LinearForm<Cyclotomic> f(6, Cyclotomic(0));
  f[0] = 1;
  f[1] = Cyclotomic::root_of_unity(3, 1);
  f[2] = Cyclotomic::root_of_unity(3, 2);
  const auto G = hyperplane_stabilizer(f);
  EXPECT_EQ(G.order(), 18u);
  const auto lambda = scaling_character(G, f);
  bool primitive = false;
  for (const auto& v : lambda.values) primitive |= v == Cyclotomic::root_of_unity(3, 1);
  EXPECT_TRUE(primitive);
}

TEST(Characters, DegenerateAndUnstabilizedInputs) {
  EXPECT_EQ(kind_of([] { hyperplane_stabilizer(power_sum_form(6)); }), ErrorKind::DegenerateHyperplane);
  const auto S6 = gen({cyc({{1, 2}}), cyc({{1, 2, 3, 4, 5, 6}})});
  EXPECT_EQ(kind_of([&] { scaling_character(S6, parse_linear_form("x1")); }), ErrorKind::NotStabilized);
}

TEST(Characters, ScalingCharacterExamples) {
  const auto f = parse_linear_form("x1-x2");
  const auto G = hyperplane_stabilizer(f);
  const auto lambda = scaling_character(G, f);
  const auto classes = conjugacy_classes(G);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& g = G.elements()[classes[c].front()];
    EXPECT_EQ(lambda.values[c], Cyclotomic(g.image(0) == 0 ? 1 : -1));
  }
}

TEST(Characters, DecompositionSignatureExamples) {
  auto verdict = [](const char* text) {
    const auto f = parse_linear_form(text);
    return decomposition_signature(hyperplane_stabilizer(f), f).verdict;
  };
  EXPECT_EQ(verdict("x6"), Verdict::Irreducible4);
  EXPECT_EQ(verdict("x1+x2"), Verdict::OnePlusThree);
  EXPECT_EQ(verdict("x1+2x2"), Verdict::OnePlusThree);
  EXPECT_EQ(verdict("x1+x2+2x3"), Verdict::Excluded);
  EXPECT_EQ(verdict("x1+2x2+3x3"), Verdict::Excluded);

  // On the index-2 subgroup S3xS3 that fixes both triples the triple form splits off.
  const auto S3xS3 = gen({cyc({{1, 2}}), cyc({{1, 2, 3}}), cyc({{4, 5}}), cyc({{4, 5, 6}})});
  const auto sig = decomposition_signature(S3xS3, parse_linear_form("x1+x2+x3"));
  EXPECT_EQ(sig.verdict, Verdict::Excluded);
  EXPECT_FALSE(sig.witness.empty());

  // The full stabilizer swaps the triples and acts irreducibly.
  EXPECT_EQ(verdict("x1+x2+x3"), Verdict::Irreducible4);
}

TEST(Characters, SignatureNumbersAreConsistent) {
  for (const char* text : {"x6", "x1+x2", "x1+2x2", "x1+x2+x3", "x1+x2+2x3", "x1+2x2+3x3"}) {
    const auto f = parse_linear_form(text);
    const auto sig = decomposition_signature(hyperplane_stabilizer(f), f);
    EXPECT_EQ(sig.linear_multiplicity + sig.residual_dimension, 4) << text;
    if (sig.residual_dimension > 0) {
      EXPECT_GE(sig.residual_norm, 1) << text;
    }
    EXPECT_EQ(sig.witness.empty(), sig.verdict != Verdict::Excluded) << text;
  }
}

TEST(Characters, SignatureIsConjugationInvariant) {
  auto rng = coblekit::testing::rng(41);
  const auto perms = all_permutations(6);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (const char* text : {"x6", "x1+x2", "x1+2x2", "x1+x2+2x3"}) {
    const auto f = parse_linear_form(text);
    const auto G = hyperplane_stabilizer(f);
    const auto base = decomposition_signature(G, f);
    for (int trial = 0; trial < 3; ++trial) {
      const SignedPerm s = perms[pick(rng)];
      // f o s^-1 is stabilized by s G s^-1.
      const auto moved = decomposition_signature(conjugate(G, s), s.inverse().pull_back(f));
      EXPECT_EQ(moved.verdict, base.verdict) << text;
      EXPECT_EQ(moved.residual_norm, base.residual_norm) << text;
      EXPECT_EQ(hyperplane_stabilizer(s.inverse().pull_back(f)).order(), G.order());
    }
  }
}
