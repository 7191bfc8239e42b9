#include <gtest/gtest.h>

#include "coblekit/error.hpp"
#include "coblekit/lines.hpp"
#include "coblekit/poly.hpp"
#include "support.hpp"

using namespace coblekit;

namespace {

SparsePoly var(std::size_t n, std::size_t i) { return SparsePoly::variable(n, i); }

// 4 s4 - s2^2 assembled directly from its definition.
SparsePoly quartic6() {
  const SparsePoly s2 = SparsePoly::power_sum(6, 2), s4 = SparsePoly::power_sum(6, 4);
  return s4 * Rational(4) - s2 * s2;
}

Rational quartic_by_hand(const VectorQ& x) {
  Rational s2 = 0, s4 = 0;
  for (const auto& v : x) {
    s2 += v * v;
    s4 += v * v * v * v;
  }
  return 4 * s4 - s2 * s2;
}

}  // namespace

TEST(Poly, EvaluateExamples) {
  const VectorQ p{1, -1, 0, 0, 0, 0};
  EXPECT_EQ(evaluate(quartic6(), p), 4);
  EXPECT_EQ(evaluate(quartic6(), p), quartic_by_hand(p));
  const SparsePoly s1 = SparsePoly::power_sum(6, 1);
  EXPECT_EQ(evaluate(s1, VectorQ{1, 1, -1, -1, 2, -2}), 0);
  EXPECT_EQ(evaluate(SparsePoly::constant(3, 7), VectorQ{1, 2, 3}), 7);
  EXPECT_THROW(evaluate(s1, VectorQ{1, 2}), Error);
}

TEST(Poly, EvaluateMatchesDirectFormulaOnRandomPoints) {
  auto g = coblekit::testing::rng(21);
  const SparsePoly F = quartic6();
  for (int trial = 0; trial < 50; ++trial) {
    const VectorQ p = coblekit::testing::random_vector(g, 6);
    EXPECT_EQ(evaluate(F, p), quartic_by_hand(p));
  }
}

TEST(Poly, GradientExamples) {
  const SparsePoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  const auto grad = gradient(x * x + y * z);
  ASSERT_EQ(grad.size(), 3u);
  EXPECT_EQ(grad[0], x * Rational(2));
  EXPECT_EQ(grad[1], z);
  EXPECT_EQ(grad[2], y);
  for (const auto& d : gradient(SparsePoly::constant(3, 5))) EXPECT_TRUE(d.is_zero());

  const SparsePoly s2 = SparsePoly::power_sum(6, 2);
  const auto gF = gradient(quartic6());
  for (std::size_t i = 0; i < 6; ++i) {
    const SparsePoly xi = var(6, i);
    EXPECT_EQ(gF[i], xi * xi * xi * Rational(16) - xi * s2 * Rational(4));
  }
}

TEST(Poly, RestrictExamples) {
  const LinearParam line = line_parametrization(PairPartition::parse("12|34|56"));
  EXPECT_EQ(line.apply(VectorQ{1, 0}), (VectorQ{1, 1, 0, 0, -1, -1}));
  EXPECT_EQ(line.apply(VectorQ{0, 1}), (VectorQ{0, 0, 1, 1, -1, -1}));
  EXPECT_TRUE(restrict(SparsePoly::power_sum(6, 1), line).is_zero());
  EXPECT_TRUE(restrict(quartic6(), line).is_zero());
  EXPECT_EQ(restrict(var(6, 0), line), var(2, 0));
}

TEST(Poly, RestrictIsARingHomomorphism) {
  auto g = coblekit::testing::rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearParam phi(coblekit::testing::random_low_rank(g, 4, 2, 2));
    if (rank(phi.matrix()) != 2) continue;
    const SparsePoly f = coblekit::testing::random_form(g, 4, 2), h = coblekit::testing::random_form(g, 4, 3);
    EXPECT_EQ(restrict(f * h, phi), restrict(f, phi) * restrict(h, phi));
    EXPECT_EQ(restrict(f + f, phi), restrict(f, phi) * Rational(2));
    const VectorQ t = coblekit::testing::random_vector(g, 2);
    EXPECT_EQ(evaluate(restrict(h, phi), t), evaluate(h, phi.apply(t)));
  }
}

TEST(Poly, ChainRuleForLinearSubstitution) {
  auto g = coblekit::testing::rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const MatrixQ m = coblekit::testing::random_low_rank(g, 3, 3, 3);
    const SparsePoly f = coblekit::testing::random_form(g, 3, 3);
    const SparsePoly fm = linear_substitute(f, m);
    const VectorQ y = coblekit::testing::random_vector(g, 3);
    const VectorQ x = m * y;
    const auto grad_f = gradient(f), grad_fm = gradient(fm);
    for (std::size_t j = 0; j < 3; ++j) {
      Rational expected = 0;
      for (std::size_t i = 0; i < 3; ++i) expected += evaluate(grad_f[i], x) * m(i, j);
      EXPECT_EQ(evaluate(grad_fm[j], y), expected);
    }
  }
}

TEST(Poly, PerfectSquareExamples) {
  const SparsePoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  const SparsePoly q = x * x + y * z;
  const auto r = perfect_square_root(q * q);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->root, q);
  EXPECT_EQ(r->scale, 1);
  EXPECT_FALSE(perfect_square_root(x * x * x * x + y * y * y * y));
  EXPECT_FALSE(perfect_square_root((x * x + y * z) * Rational(-1)));
  EXPECT_THROW(perfect_square_root(x * x + y), Error);
  const auto zero = perfect_square_root(SparsePoly(3));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->root.is_zero());
}

TEST(Poly, PerfectSquareRoundTrip) {
  auto g = coblekit::testing::rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const SparsePoly q = coblekit::testing::random_form(g, 4, 2, 4);
    if (q.is_zero()) continue;
    const Rational c = Rational(1 + trial % 5, 1 + trial % 3);
    const auto r = perfect_square_root(q * q * c);
    ASSERT_TRUE(r) << to_string(q);
    EXPECT_EQ(r->root * r->root, q * q * c * r->scale);
    EXPECT_GT(r->scale, 0);
    EXPECT_EQ(r->root.terms().rbegin()->second, 1);
  }
}

TEST(Poly, QuadraticRankExamples) {
  const SparsePoly x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  EXPECT_EQ(quadratic_rank(x * y + z * w), 4u);
  EXPECT_EQ(quadratic_rank(x * x), 1u);
  EXPECT_EQ(quadratic_rank((x + y) * (x + y)), 1u);
  EXPECT_EQ(quadratic_rank(x * y), 2u);
  try {
    quadratic_rank(x * y * z);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongDegree);
  }
}

TEST(Poly, QuadraticRankIsInvariantUnderInvertibleSubstitution) {
  auto g = coblekit::testing::rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const SparsePoly q = coblekit::testing::random_form(g, 4, 2, 3 + trial % 4);
    const MatrixQ m = coblekit::testing::random_low_rank(g, 4, 4, 4);
    if (rank(m) != 4) continue;
    EXPECT_EQ(quadratic_rank(linear_substitute(q, m)), quadratic_rank(q));
  }
}

TEST(Poly, LocalQuadraticPart) {
  const SparsePoly x = var(4, 0), y = var(4, 1), z = var(4, 2);
  const SparsePoly cone = y * y - x * x - z * z;
  const MatrixQ h = local_quadratic_part(cone, VectorQ{0, 0, 0, 1});
  EXPECT_EQ(h, MatrixQ::from_rows({{-2, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
  EXPECT_EQ(rank(h), 3u);

  auto kind = [&](const VectorQ& p) {
    try {
      local_quadratic_part(cone, p);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(VectorQ{1, 1, 0, 1}), ErrorKind::NotSingular);
  EXPECT_EQ(kind(VectorQ{1, 0, 0, 1}), ErrorKind::NotOnHypersurface);
}

TEST(Poly, Rendering) {
  const SparsePoly x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(to_string(x * x * Rational(3) - y), "3*x1^2 - x2");
  EXPECT_EQ(to_string(SparsePoly(2)), "0");
}
