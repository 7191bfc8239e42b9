#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coblekit/characters.hpp"
#include "coblekit/config.hpp"
#include "coblekit/error.hpp"
#include "coblekit/lines.hpp"
#include "coblekit/linear_form.hpp"
#include "coblekit/matrix.hpp"
#include "coblekit/parallel.hpp"
#include "coblekit/partitions.hpp"
#include "coblekit/poly.hpp"

namespace coblekit {

// ---------------------------------------------------------------------------
// Projective points

/// Primitive integer representative with first nonzero coordinate positive.
inline VectorQ normalize_projective(const VectorQ& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    ints.push_back(numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints.back()));
  }
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "zero projective point");
  const auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  VectorQ out;
  for (const auto& x : ints) out.emplace_back(Rational(x / g));
  return out;
}

inline bool projectively_equal(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) return false;
  if (is_zero_vector(a) || is_zero_vector(b)) return false;
  return normalize_projective(a) == normalize_projective(b);
}

/// "(a:b:c:...)" of the normalized representative.
inline std::string to_projective_string(const VectorQ& v) {
  const VectorQ n = normalize_projective(v);
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) s += ':';
    s += to_string(n[i]);
  }
  return s + ")";
}

/// True when every 4 of the given points span the ambient P^3.
inline bool in_general_position(const std::vector<VectorQ>& points) {
  const std::size_t n = points.size();
  if (n < 4) return false;
  std::vector<std::size_t> pick{0, 1, 2, 3};
  while (true) {
    if (rank(MatrixQ::from_columns({points[pick[0]], points[pick[1]], points[pick[2]], points[pick[3]]})) != 4)
      return false;
    int k = 3;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - 4 + static_cast<std::size_t>(k)) --k;
    if (k < 0) return true;
    ++pick[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < 4; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// The Igusa quartic

struct IgusaModel {
  SparsePoly F;   // 4 s4 - s2^2
  SparsePoly s1;  // ambient hyperplane
  std::vector<PairPartition> labels;
  std::vector<LinearParam> lines;

  const LinearParam& line(const PairPartition& alpha) const { return lines[index_of(labels, alpha)]; }
};

inline SparsePoly igusa_quartic(std::size_t nvars = 6) {
  const SparsePoly s2 = SparsePoly::power_sum(nvars, 2);
  return SparsePoly::power_sum(nvars, 4) * Rational(4) - s2 * s2;
}

inline IgusaModel build_igusa() {
  IgusaModel m{igusa_quartic(), SparsePoly::power_sum(6, 1), all_pair_partitions(), {}};
  for (const auto& alpha : m.labels) m.lines.push_back(line_parametrization(alpha));
  return m;
}

/// Partials of f along the hyperplane s1 = 0: dF/dx_i minus the mean of all
/// partials, which removes the component normal to s1.
inline std::vector<SparsePoly> tangential_gradient(const SparsePoly& f) {
  const auto grad = gradient(f);
  SparsePoly mean(f.nvars());
  for (const auto& d : grad) mean += d;
  mean = mean * Rational(1, static_cast<long long>(f.nvars()));
  std::vector<SparsePoly> out;
  for (const auto& d : grad) out.push_back(d - mean);
  return out;
}

/// Number of tangential partials of f that vanish identically on the line.
inline std::size_t vanishing_partials(const SparsePoly& f, const LinearParam& line) {
  std::size_t n = 0;
  for (const auto& d : tangential_gradient(f)) n += restrict(d, line).is_zero();
  return n;
}

inline bool is_singular_along(const SparsePoly& f, const LinearParam& line) {
  return restrict(f, line).is_zero() && vanishing_partials(f, line) == f.nvars();
}

/// Count of the identities restrict(D_i F, l_alpha) = 0 that hold, D_i the
/// tangential partials (90 expected).
inline std::size_t singular_line_identities(const IgusaModel& m) {
  const auto counts = parallel_map(m.lines.size(), [&](std::size_t i) { return vanishing_partials(m.F, m.lines[i]); });
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

/// Same test through an explicit chart of s1 = 0: the 5 partials of F|chart
/// pulled back to each line (75 expected).
inline std::size_t chart_singular_line_identities(const IgusaModel& m) {
  const LinearParam chart = kernel_chart({power_sum_form(6)});
  const SparsePoly G = restrict(m.F, chart);
  const auto grad = gradient(G);
  std::size_t n = 0;
  for (const auto& line : m.lines) {
    std::vector<VectorQ> cols;
    for (std::size_t j = 0; j < line.source_vars(); ++j) {
      const auto c = solve(chart.matrix(), line.matrix().column(j));
      if (!c) throw std::logic_error("line outside s1 = 0");
      cols.push_back(*c);
    }
    const LinearParam local = LinearParam::from_columns(cols);
    for (const auto& d : grad) n += restrict(d, local).is_zero();
  }
  return n;
}

/// The common value of the six ambient partials on a line, if they agree.
inline std::optional<SparsePoly> normal_partial(const SparsePoly& f, const LinearParam& line) {
  const auto grad = gradient(f);
  const SparsePoly first = restrict(grad.front(), line);
  for (const auto& d : grad)
    if (!(restrict(d, line) == first)) return std::nullopt;
  return first;
}

inline bool verify_singular_lines(const IgusaModel& m) {
  return singular_line_identities(m) == m.lines.size() * m.F.nvars();
}

// ---------------------------------------------------------------------------
// Hyperplane sections

/// Ordinary double point test: S and its gradient vanish and the local
/// quadratic part has rank 3.
inline bool verify_node(const SparsePoly& S, const VectorQ& node) {
  try {
    return rank(local_quadratic_part(S, node)) == 3;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotOnHypersurface || e.kind() == ErrorKind::NotSingular) return false;
    throw;
  }
}

struct SectionModel {
  LinearFormQ form;
  LinearParam chart;                   // 6 x 4, basis of {s1 = form = 0}
  SparsePoly S;                        // quartic in the 4 chart coordinates
  std::vector<PairPartition> labels;   // node labels, in canonical order
  std::vector<VectorQ> nodes;          // chart coordinates
  std::vector<VectorQ> ambient_nodes;  // normalized 6-vectors
};

/// Chart of {s1 = form = 0} and the restricted quartic, without node data.
struct SectionSurface {
  LinearParam chart;
  SparsePoly S;
};

inline SectionSurface section_surface(const IgusaModel& m, const LinearFormQ& form) {
  if (form.size() != 6) throw Error(ErrorKind::DimensionMismatch, "linear form in 6 variables expected");
  if (proportional_to_power_sum(form)) throw Error(ErrorKind::DegenerateHyperplane, to_string(form));
  const LinearParam chart = kernel_chart({power_sum_form(6), form});
  return {chart, restrict(m.F, chart)};
}

/// ODP test at an ambient point of the hyperplane.
inline bool is_node_of(const SectionSurface& s, const VectorQ& ambient) {
  const auto local = solve(s.chart.matrix(), ambient);
  return local && verify_node(s.S, *local);
}

inline SectionModel hyperplane_section(const IgusaModel& m, const LinearFormQ& form) {
  auto [chart, S] = section_surface(m, form);
  SectionModel s{form, std::move(chart), std::move(S), m.labels, {}, {}};

  for (std::size_t i = 0; i < m.lines.size(); ++i) {
    const VectorQ r = restrict_form(form, m.lines[i]);
    if (is_zero_vector(r)) throw Error(ErrorKind::LineContained, m.labels[i].to_string());
    const VectorQ ambient = normalize_projective(m.lines[i].apply({r[1], -r[0]}));
    for (std::size_t j = 0; j < s.ambient_nodes.size(); ++j)
      if (s.ambient_nodes[j] == ambient)
        throw Error(ErrorKind::NodeCollision, m.labels[j].to_string() + " and " + m.labels[i].to_string());
    const auto local = solve(s.chart.matrix(), ambient);
    if (!local) throw std::logic_error("node outside the section chart");
    s.nodes.push_back(*local);
    s.ambient_nodes.push_back(ambient);
  }
  return s;
}

/// Index of the node through the given ambient point, if any.
inline std::optional<std::size_t> find_node(const SectionModel& s, const VectorQ& ambient) {
  for (std::size_t i = 0; i < s.ambient_nodes.size(); ++i)
    if (projectively_equal(s.ambient_nodes[i], ambient)) return i;
  return std::nullopt;
}

inline bool verify_node(const SectionModel& s, std::size_t index) { return verify_node(s.S, s.nodes.at(index)); }

// ---------------------------------------------------------------------------
// Tangent hyperplanes H_beta

struct DoubleQuadric {
  SparsePoly quadric;  // in the chart coordinates of {s1 = x_a + x_b + x_c = 0}
  std::size_t rank;
  Rational scale;  // quadric^2 = scale * F|
  LinearParam chart;
};

inline DoubleQuadric double_quadric(const IgusaModel& m, const TriplePartition& beta) {
  const LinearParam chart = kernel_chart({power_sum_form(6), triple_form(beta)});
  const SparsePoly restricted = restrict(m.F, chart);
  auto root = perfect_square_root(restricted);
  if (!root || root->root.is_zero()) throw Error(ErrorKind::SquareRootFailure, beta.to_string());
  return {root->root, quadratic_rank(root->root), root->scale, chart};
}

/// Meeting test through the rank of the combined parameter columns: 3 when
/// the lines meet in a point, 4 when they are disjoint.
inline std::size_t joint_rank(const LinearParam& a, const LinearParam& b) {
  std::vector<VectorQ> cols;
  for (const auto* p : {&a, &b})
    for (std::size_t j = 0; j < p->source_vars(); ++j) cols.push_back(p->matrix().column(j));
  return rank(MatrixQ::from_columns(cols));
}

struct RulingSplit {
  std::vector<PairPartition> first;
  std::vector<PairPartition> second;
};

inline RulingSplit ruling_split(const IgusaModel& m, const TriplePartition& beta) {
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    if (line_in_plane(m.labels[i], beta)) on.push_back(i);
  const std::size_t n = on.size();
  std::vector<std::vector<bool>> meet(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      meet[a][b] = meet[b][a] = joint_rank(m.lines[on[a]], m.lines[on[b]]) == 3;

  // Two-colour the meeting graph from the first line, then demand K_{3,3}.
  std::vector<int> side(n, -1);
  if (n) side[0] = 0;
  for (std::size_t b = 1; b < n; ++b) side[b] = meet[0][b] ? 1 : 0;
  std::size_t count0 = 0;
  for (std::size_t a = 0; a < n; ++a) count0 += side[a] == 0;
  bool ok = n == 6 && count0 == 3;
  for (std::size_t a = 0; ok && a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (meet[a][b] != (side[a] != side[b])) ok = false;
  if (!ok) throw Error(ErrorKind::NoBipartition, beta.to_string());

  RulingSplit split;
  for (std::size_t a = 0; a < n; ++a) (side[a] == 0 ? split.first : split.second).push_back(m.labels[on[a]]);
  return split;
}

// ---------------------------------------------------------------------------
// Projectivities extending configuration automorphisms

/// Lexicographically first 5 nodes with every 4 of them spanning P^3.
inline std::vector<std::size_t> general_position_frame(const SectionModel& s) {
  const std::size_t n = s.nodes.size();
  std::vector<std::size_t> pick{0, 1, 2, 3, 4};
  if (n < 5) throw Error(ErrorKind::NoGeneralPosition, "fewer than 5 nodes");
  while (true) {
    std::vector<VectorQ> pts;
    for (auto i : pick) pts.push_back(s.nodes[i]);
    if (in_general_position(pts)) return pick;
    int k = 4;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - 5 + static_cast<std::size_t>(k)) --k;
    if (k < 0) throw Error(ErrorKind::NoGeneralPosition, to_string(s.form));
    ++pick[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < 5; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// The projectivity of P^3 sending p_i to q_i (i = 0..4), if the q_i are in
/// general position as well.
inline std::optional<MatrixQ> projectivity_from_frames(const std::vector<VectorQ>& p, const std::vector<VectorQ>& q) {
  auto scaled_basis = [](const std::vector<VectorQ>& pts) -> std::optional<MatrixQ> {
    const MatrixQ base = MatrixQ::from_columns({pts[0], pts[1], pts[2], pts[3]});
    const auto lambda = solve(base, pts[4]);
    if (!lambda || rank(base) != 4) return std::nullopt;
    std::vector<VectorQ> cols;
    for (std::size_t j = 0; j < 4; ++j) {
      if ((*lambda)[j] == 0) return std::nullopt;
      VectorQ c = pts[j];
      for (auto& x : c) x *= (*lambda)[j];
      cols.push_back(std::move(c));
    }
    return MatrixQ::from_columns(cols);
  };
  const auto P = scaled_basis(p);
  const auto Q = scaled_basis(q);
  if (!P || !Q) return std::nullopt;
  return *Q * *inverse(*P);
}

/// c with g = c f, if any.
inline std::optional<Rational> proportionality(const SparsePoly& g, const SparsePoly& f) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  const Rational c = g.terms().rbegin()->second / f.terms().rbegin()->second;
  if (g == f * c) return c;
  return std::nullopt;
}

struct ExtensionCount {
  std::size_t automorphisms = 0;   // configuration automorphisms tried
  std::size_t node_maps = 0;       // with a projectivity matching all 15 nodes
  std::size_t quartic_preserved = 0;  // of those, also S o A = c S
  std::vector<std::size_t> frame;  // node indices used for the 5-point normalization

  std::size_t count() const noexcept { return quartic_preserved; }
};

inline ExtensionCount projectivity_extensions(const IgusaModel& m, const LinearFormQ& form,
                                              const FiniteGroup<ConfigAut>& auts) {
  const SectionModel s = hyperplane_section(m, form);
  ExtensionCount result;
  result.frame = general_position_frame(s);
  result.automorphisms = auts.order();
  std::vector<VectorQ> source;
  for (auto i : result.frame) source.push_back(s.nodes[i]);

  // 0: no projectivity, 1: nodes only, 2: nodes and quartic.
  const auto outcome = parallel_map(auts.order(), [&](std::size_t k) -> int {
    const ConfigAut& g = auts.elements()[k];
    std::vector<VectorQ> target;
    for (auto i : result.frame) target.push_back(s.nodes[g.line_image(i)]);
    const auto A = projectivity_from_frames(source, target);
    if (!A) return 0;
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
      if (!projectively_equal(*A * s.nodes[i], s.nodes[g.line_image(i)])) return 0;
    return proportionality(linear_substitute(s.S, *A), s.S) ? 2 : 1;
  });
  for (int o : outcome) {
    result.node_maps += o >= 1;
    result.quartic_preserved += o == 2;
  }
  return result;
}

inline std::size_t projectivity_extension_count(const IgusaModel& m, const LinearFormQ& form) {
  return projectivity_extensions(m, form, configuration_automorphisms(build_incidence())).count();
}

// ---------------------------------------------------------------------------
// Node orbits

struct NodeOrbit {
  std::vector<std::size_t> members;      // node indices, ascending
  std::optional<bool> general_position;  // set for orbits of size 5
};

struct NodeOrbits {
  std::vector<NodeOrbit> orbits;  // ordered by least member
  bool has_fixed_node = false;
};

/// Orbits of G on the nodes through its action on line labels. The Galois
/// component of an element does not move nodes.
inline NodeOrbits node_orbits(const SectionModel& s, const FiniteGroup<SignedPerm>& G) {
  const auto s1 = power_sum_form(6);
  for (const auto& g : G.generators()) {
    if (g.has_coordinate_signs()) throw Error(ErrorKind::SignedElement, g.to_string());
    if (!proportional_mod(g.pull_back(s.form), s.form, s1)) throw Error(ErrorKind::NotStabilized, g.to_string());
  }
  const std::size_t n = s.labels.size();
  std::vector<bool> seen(n, false);
  NodeOrbits out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    NodeOrbit orbit;
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& g : G.generators()) {
        const std::size_t j = index_of(s.labels, s.labels[queue[q]].relabel(g));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    orbit.members = queue;
    if (queue.size() == 1) out.has_fixed_node = true;
    if (queue.size() == 5) {
      std::vector<VectorQ> pts;
      for (auto i : queue) pts.push_back(s.nodes[i]);
      orbit.general_position = in_general_position(pts);
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Double solid equation

/// y^2 = branch(x) on {constraint(x) = 0} in P(2,1,1,1,1,1), obtained by
/// eliminating one coordinate with the hyperplane equation.
struct CobleSection {
  std::vector<unsigned> weights;  // y first
  std::size_t eliminated = 0;     // ambient coordinate removed
  SparsePoly branch;              // quartic in the 5 remaining coordinates
  LinearFormQ constraint;         // s1 with the eliminated coordinate substituted
  LinearParam projection;         // section chart -> remaining coordinates
};

inline CobleSection coble_section_equation(const SectionModel& s) {
  const std::size_t n = s.form.size();
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;)
    if (s.form[i] != 0) {
      k = i;
      break;
    }
  if (k == n) throw Error(ErrorKind::DegenerateHyperplane, "zero form");

  // x_k = -sum_{i != k} (form_i / form_k) x_i
  std::vector<SparsePoly> images;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) kept.push_back(i);
  SparsePoly xk(n - 1);
  for (std::size_t j = 0; j < kept.size(); ++j)
    xk += SparsePoly::variable(n - 1, j) * (-s.form[kept[j]] / s.form[k]);
  for (std::size_t i = 0, j = 0; i < n; ++i) images.push_back(i == k ? xk : SparsePoly::variable(n - 1, j++));

  CobleSection c{std::vector<unsigned>(n, 1), k, substitute(igusa_quartic(n), images), {}, LinearParam(MatrixQ::identity(1))};
  c.weights.front() = 2;
  for (auto i : kept) c.constraint.push_back(1 - s.form[i] / s.form[k]);

  std::vector<VectorQ> rows;
  for (auto i : kept) rows.push_back(s.chart.matrix().row(i));
  c.projection = LinearParam(MatrixQ::from_rows(rows));
  return c;
}

/// The branch quartic pulled back to the section chart; equals S.
inline SparsePoly branch_on_chart(const CobleSection& c) { return restrict(c.branch, c.projection); }

inline std::string to_string(const CobleSection& c) {
  std::string vars;
  for (std::size_t i = 0; i <= c.constraint.size(); ++i)
    if (i != c.eliminated) vars += (vars.empty() ? "x" : ", x") + std::to_string(i + 1);
  std::string constraint;
  for (std::size_t j = 0; j < c.constraint.size(); ++j) {
    if (c.constraint[j] == 0) continue;
    const std::size_t var = j < c.eliminated ? j : j + 1;
    std::string coeff = c.constraint[j] == 1 ? "" : c.constraint[j] == -1 ? "-" : to_string(c.constraint[j]) + "*";
    if (!constraint.empty() && coeff.front() != '-') constraint += "+";
    constraint += coeff + "x" + std::to_string(var + 1);
  }
  return "y^2 = " + to_string(c.branch) + " on " + constraint + " = 0, weights (2,1,1,1,1,1), vars " + vars;
}

}  // namespace coblekit
