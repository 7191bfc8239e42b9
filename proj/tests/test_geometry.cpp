#include <gtest/gtest.h>

#include <set>

#include "coblekit/geometry.hpp"
#include "coblekit/rigidity.hpp"
#include "support.hpp"

using namespace coblekit;

namespace {

const IgusaModel& igusa() {
  static const IgusaModel m = build_igusa();
  return m;
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

// Point of the line alpha on {form = 0}: the line carries t, u, -t-u on its
// three pairs, so the form restricts to t (fA - fC) + u (fB - fC).
VectorQ node_by_hand(const PairPartition& alpha, const LinearFormQ& f) {
  Rational sum[3];
  for (int k = 0; k < 3; ++k) sum[k] = f[alpha.pairs[k][0]] + f[alpha.pairs[k][1]];
  const Rational t = sum[1] - sum[2], u = -(sum[0] - sum[2]);
  const Rational vals[3] = {t, u, -t - u};
  VectorQ p(6);
  for (int k = 0; k < 3; ++k) p[alpha.pairs[k][0]] = p[alpha.pairs[k][1]] = vals[k];
  return p;
}

bool share_a_pair(const PairPartition& a, const PairPartition& b) {
  for (const auto& p : a.pairs)
    for (const auto& q : b.pairs)
      if (p == q) return true;
  return false;
}

// grad F(p) must lie in the span of s1 and the form for p to be singular on the section.
bool lagrange_singular(const VectorQ& p, const LinearFormQ& f) {
  Rational s2 = 0;
  for (const auto& x : p) s2 += x * x;
  VectorQ grad(6);
  for (std::size_t i = 0; i < 6; ++i) grad[i] = 16 * p[i] * p[i] * p[i] - 4 * p[i] * s2;
  return coblekit::testing::naive_rank({grad, power_sum_form(6), f}) <= 2;
}

}  // namespace

TEST(Projective, Normalization) {
  EXPECT_EQ(normalize_projective(VectorQ{2, -4, 6}), (VectorQ{1, -2, 3}));
  EXPECT_EQ(normalize_projective(VectorQ{0, Rational(-1, 2), 1}), (VectorQ{0, 1, -2}));
  EXPECT_EQ(to_projective_string(VectorQ{0, 3, -3}), "(0:1:-1)");
  EXPECT_THROW(normalize_projective(VectorQ{0, 0}), Error);
  EXPECT_TRUE(projectively_equal(VectorQ{1, 2}, VectorQ{-3, -6}));
  EXPECT_FALSE(projectively_equal(VectorQ{1, 2}, VectorQ{0, 0}));
}

TEST(Projective, GeneralPosition) {
  std::vector<VectorQ> frame{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  EXPECT_TRUE(in_general_position(frame));
  frame[4] = {1, 1, 1, 0};
  EXPECT_FALSE(in_general_position(frame));
}

TEST(Projective, FramesDetermineTheProjectivity) {
  auto rng = coblekit::testing::rng(51);
  const std::vector<VectorQ> p{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 2, 3, 5}};
  for (int trial = 0; trial < 15; ++trial) {
    const MatrixQ A = coblekit::testing::random_low_rank(rng, 4, 4, 4);
    if (rank(A) != 4) continue;
    std::vector<VectorQ> q;
    for (std::size_t i = 0; i < 5; ++i) {
      VectorQ v = A * p[i];
      for (auto& x : v) x *= Rational(static_cast<long long>(i) + 2, 3);
      q.push_back(v);
    }
    const auto B = projectivity_from_frames(p, q);
    ASSERT_TRUE(B);
    const auto c = (*B)(0, 0) / A(0, 0);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ((*B)(r, s), c * A(r, s));
  }
}

TEST(Igusa, QuarticValuesAndSymmetry) {
  const auto& m = igusa();
  EXPECT_EQ(evaluate(m.F, VectorQ{1, -1, 0, 0, 0, 0}), 4);
  for (const auto& g : all_permutations(6)) ASSERT_EQ(linear_substitute(m.F, g.matrix()), m.F);
  const MatrixQ flip = MatrixQ::identity(6) * MatrixQ::from_rows({{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0},
                                                                   {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0},
                                                                   {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}});
  EXPECT_EQ(linear_substitute(m.F, flip), m.F);
}

TEST(Igusa, LinesLieOnTheQuartic) {
  const auto& m = igusa();
  ASSERT_EQ(m.lines.size(), 15u);
  for (const auto& line : m.lines) {
    EXPECT_TRUE(restrict(m.s1, line).is_zero());
    EXPECT_TRUE(restrict(m.F, line).is_zero());
  }
  EXPECT_EQ(m.line(PairPartition::parse("12|34|56")).matrix(),
            MatrixQ::from_rows({{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, -1}, {-1, -1}}));
}

TEST(Igusa, SingularAlongEveryLine) {
  const auto& m = igusa();
  EXPECT_EQ(singular_line_identities(m), 90u);
  EXPECT_EQ(chart_singular_line_identities(m), 75u);
  EXPECT_TRUE(verify_singular_lines(m));
  for (const auto& line : m.lines) EXPECT_TRUE(is_singular_along(m.F, line));
}

TEST(Igusa, AmbientPartialsAgreeOnLinesButDoNotVanish) {
  const auto& m = igusa();
  const auto n = normal_partial(m.F, m.line(PairPartition::parse("12|34|56")));
  ASSERT_TRUE(n);
  const SparsePoly t = SparsePoly::variable(2, 0), u = SparsePoly::variable(2, 1);
  EXPECT_EQ(*n, t * u * (t + u) * Rational(-16));
}

TEST(Igusa, NonSingularControlLine) {
  const auto& m = igusa();
  const LinearParam control = LinearParam::from_columns({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}});
  EXPECT_FALSE(restrict(m.F, control).is_zero());
  EXPECT_LT(vanishing_partials(m.F, control), 6u);
  EXPECT_FALSE(is_singular_along(m.F, control));
}

TEST(Igusa, LinesMeetExactlyWhenTheyShareAPair) {
  const auto& m = igusa();
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = a + 1; b < 15; ++b)
      EXPECT_EQ(joint_rank(m.lines[a], m.lines[b]) == 3, share_a_pair(m.labels[a], m.labels[b]))
          << m.labels[a].to_string() << " " << m.labels[b].to_string();
}

TEST(TangentHyperplanes, DoubleQuadrics) {
  const auto& m = igusa();
  for (const auto& beta : all_triple_partitions()) {
    const auto q = double_quadric(m, beta);
    EXPECT_EQ(q.rank, 4u) << beta.to_string();
    EXPECT_EQ(q.scale, Rational(1, 4)) << beta.to_string();
    EXPECT_EQ(q.quadric * q.quadric, restrict(m.F, q.chart) * q.scale);
  }
}

TEST(TangentHyperplanes, GenericHyperplaneIsNotADoubleQuadric) {
  const auto& m = igusa();
  const auto chart = kernel_chart({power_sum_form(6), parse_linear_form("x1+2x2+3x3")});
  EXPECT_FALSE(perfect_square_root(restrict(m.F, chart)));
}

TEST(TangentHyperplanes, RulingsSplitThreePlusThree) {
  const auto& m = igusa();
  for (const auto& beta : all_triple_partitions()) {
    const auto split = ruling_split(m, beta);
    ASSERT_EQ(split.first.size(), 3u);
    ASSERT_EQ(split.second.size(), 3u);
    for (const auto& a : split.first)
      for (const auto& b : split.second) EXPECT_TRUE(share_a_pair(a, b));
    for (const auto* cls : {&split.first, &split.second})
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) EXPECT_FALSE(share_a_pair((*cls)[i], (*cls)[j]));
  }
}

TEST(Sections, FifteenNodesAtHandComputedPositions) {
  const auto& m = igusa();
  for (const char* text : {"x6", "x1+x2", "x1+3x2", "x1+x2+2x3", "x1+2x2+5x3"}) {
    const auto f = parse_linear_form(text);
    const auto s = hyperplane_section(m, f);
    ASSERT_EQ(s.nodes.size(), 15u) << text;
    std::set<VectorQ> distinct(s.ambient_nodes.begin(), s.ambient_nodes.end());
    EXPECT_EQ(distinct.size(), 15u) << text;
    for (std::size_t i = 0; i < 15; ++i) {
      EXPECT_EQ(s.ambient_nodes[i], normalize_projective(node_by_hand(s.labels[i], f))) << text;
      EXPECT_TRUE(verify_node(s, i)) << text << " " << s.labels[i].to_string();
      EXPECT_TRUE(lagrange_singular(s.ambient_nodes[i], f)) << text;
      EXPECT_EQ(s.chart.apply(s.nodes[i]), s.ambient_nodes[i]);
    }
  }
}

TEST(Sections, NodeExampleOnX6) {
  const auto s = hyperplane_section(igusa(), parse_linear_form("x6"));
  const auto i = find_node(s, VectorQ{0, 1, 1, -1, -1, 0});
  ASSERT_TRUE(i);
  EXPECT_EQ(s.labels[*i].to_string(), "16|23|45");
  EXPECT_FALSE(find_node(s, VectorQ{1, -1, 0, 0, 0, 0}));
  EXPECT_FALSE(verify_node(s.S, solve(s.chart.matrix(), VectorQ{1, -1, 0, 0, 0, 0}).value()));
}

TEST(Sections, InvalidHyperplanes) {
  const auto& m = igusa();
  EXPECT_EQ(kind_of([&] { hyperplane_section(m, parse_linear_form("x1-x2")); }), ErrorKind::LineContained);
  EXPECT_EQ(kind_of([&] { hyperplane_section(m, power_sum_form(6)); }), ErrorKind::DegenerateHyperplane);
  EXPECT_EQ(kind_of([&] { hyperplane_section(m, LinearFormQ(5, 1)); }), ErrorKind::DimensionMismatch);
}

// x1 + 2 x2 passes through (2:-1:2:-1:-1:-1), where three of the lines meet.
TEST(Sections, NodeCollisionForX1Plus2X2) {
  const auto& m = igusa();
  const auto f = parse_linear_form("x1+2x2");
  EXPECT_EQ(kind_of([&] { hyperplane_section(m, f); }), ErrorKind::NodeCollision);
  const VectorQ triple{2, -1, 2, -1, -1, -1};
  std::size_t through = 0;
  for (const auto& line : m.lines) through += solve(line.matrix(), triple).has_value();
  EXPECT_EQ(through, 3u);
  EXPECT_EQ(f[0] * triple[0] + f[1] * triple[1], 0);
}

TEST(Sections, ThreeCoordinatePointsAreNodes) {
  const auto& m = igusa();
  const std::vector<VectorQ> pts{{0, 0, 1, 1, -1, -1}, {0, 0, 1, -1, 1, -1}, {0, 0, 1, -1, -1, 1}};
  for (const char* text : {"x1+2x2", "x1+3x2", "x1+x2"}) {
    const auto surface = section_surface(m, parse_linear_form(text));
    for (const auto& p : pts) EXPECT_TRUE(is_node_of(surface, p)) << text;
  }
  const auto surface = section_surface(m, parse_linear_form("x1+2x2"));
  EXPECT_FALSE(is_node_of(surface, VectorQ{0, 0, 1, -1, 0, 0}));
}

TEST(Sections, ExtensionCountsEqualStabilizerOrders) {
  const auto& m = igusa();
  const auto auts = configuration_automorphisms(build_incidence());
  for (const char* text : {"x6", "x1+x2", "x1+3x2"}) {
    const auto f = parse_linear_form(text);
    const auto e = projectivity_extensions(m, f, auts);
    EXPECT_EQ(e.automorphisms, 720u);
    EXPECT_EQ(e.count(), hyperplane_stabilizer(f).order()) << text;
    EXPECT_LE(e.quartic_preserved, e.node_maps);
    EXPECT_EQ(e.frame.size(), 5u);
  }
}

TEST(Sections, FrameIsInGeneralPosition) {
  const auto s = hyperplane_section(igusa(), parse_linear_form("x6"));
  const auto frame = general_position_frame(s);
  std::vector<VectorQ> pts;
  for (auto i : frame) pts.push_back(s.nodes[i]);
  EXPECT_TRUE(in_general_position(pts));
  EXPECT_TRUE(std::is_sorted(frame.begin(), frame.end()));
}

TEST(Sections, NodeOrbits) {
  const auto s = hyperplane_section(igusa(), parse_linear_form("x6"));
  const auto c5 = node_orbits(s, groups::c5());
  EXPECT_EQ(c5.orbits.size(), 3u);
  EXPECT_FALSE(c5.has_fixed_node);
  for (const auto& o : c5.orbits) {
    EXPECT_EQ(o.members.size(), 5u);
    EXPECT_TRUE(o.general_position.has_value());
  }
  const auto s5 = node_orbits(s, groups::standard_s5());
  EXPECT_EQ(s5.orbits.size(), 1u);
  EXPECT_EQ(s5.orbits[0].members.size(), 15u);
  EXPECT_EQ(kind_of([&] { node_orbits(s, closure(std::vector<SignedPerm>{SignedPerm::from_cycles(6, {{5, 6}})})); }),
            ErrorKind::NotStabilized);
}

TEST(Coble, SectionEquationForX6) {
  const auto s = hyperplane_section(igusa(), parse_linear_form("x6"));
  const auto c = coble_section_equation(s);
  EXPECT_EQ(c.eliminated, 5u);
  EXPECT_EQ(c.weights, (std::vector<unsigned>{2, 1, 1, 1, 1, 1}));
  SparsePoly s2(5), s4(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const SparsePoly x = SparsePoly::variable(5, i);
    s2 += x * x;
    s4 += x * x * x * x;
  }
  EXPECT_EQ(c.branch, s4 * Rational(4) - s2 * s2);
  EXPECT_EQ(c.constraint, power_sum_form(5));
  EXPECT_EQ(branch_on_chart(c), s.S);
}

TEST(Coble, BranchPullsBackToTheSectionQuartic) {
  for (const char* text : {"x1+x2", "x1+3x2", "x1+2x2+5x3"}) {
    const auto s = hyperplane_section(igusa(), parse_linear_form(text));
    const auto c = coble_section_equation(s);
    EXPECT_EQ(branch_on_chart(c), s.S) << text;
    EXPECT_NE(to_string(c).find("y^2 = "), std::string::npos);
  }
}
