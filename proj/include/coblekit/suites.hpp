#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coblekit/characters.hpp"
#include "coblekit/config.hpp"
#include "coblekit/cyclotomic.hpp"
#include "coblekit/geometry.hpp"
#include "coblekit/report.hpp"
#include "coblekit/rigidity.hpp"
#include "coblekit/scan.hpp"

namespace coblekit {

inline constexpr const char* kVersion = "1.0.0";

inline ReportHeader default_header() {
  return {kVersion,
          {"D5 lattice: (sigma, eps) in S5 x C2 acts on Z^5 as eps * P_sigma; the Galois involution acts as -Id",
           "Sarkisov enumeration keeps solutions with a > 0 (H' is a pullback of an ample class)",
           "Singularity along lines is tested with the partials of F tangent to s1 = 0",
           "Finite-field scans are evidence only"}};
}

/// Shared, lazily built objects for one run.
class Workspace {
 public:
  const IgusaModel& igusa() {
    if (!igusa_) igusa_ = build_igusa();
    return *igusa_;
  }
  const Incidence& incidence() {
    if (!incidence_) incidence_ = build_incidence();
    return *incidence_;
  }
  const FiniteGroup<ConfigAut>& automorphisms() {
    if (!auts_) auts_ = configuration_automorphisms(incidence());
    return *auts_;
  }

 private:
  std::optional<IgusaModel> igusa_;
  std::optional<Incidence> incidence_;
  std::optional<FiniteGroup<ConfigAut>> auts_;
};

namespace suite_detail {

inline Json fingerprint_json(const Fingerprint& f) {
  Json hist = Json::object();
  for (const auto& [k, v] : f.order_histogram) hist[std::to_string(k)] = v;
  return {{"order", f.order}, {"abelianization", f.abelianization}, {"class_count", f.class_count}, {"order_histogram", hist}};
}

inline Json signature_json(const DecompSignature& s) {
  return {{"verdict", to_string(s.verdict)},
          {"witness", s.witness},
          {"linear_multiplicity", to_string(s.linear_multiplicity)},
          {"residual_dimension", to_string(s.residual_dimension)},
          {"residual_norm", to_string(s.residual_norm)}};
}

inline FiniteGroup<SignedPerm> with_galois(const FiniteGroup<SignedPerm>& G) {
  auto gens = G.generators();
  gens.push_back(SignedPerm::galois(G.degree()));
  return closure(gens, SignedPerm::identity(G.degree()));
}

inline FiniteGroup<SignedPerm> perm_group(const std::vector<std::vector<std::vector<unsigned>>>& gens) {
  std::vector<SignedPerm> g;
  for (const auto& cycles : gens) g.push_back(SignedPerm::from_cycles(6, cycles));
  return closure(g, SignedPerm::identity(6));
}

/// x1 + xi x2 + xi^2 x3 with xi a primitive cube root of unity.
inline LinearForm<Cyclotomic> xi_form() {
  LinearForm<Cyclotomic> f(6, Cyclotomic(0));
  f[0] = Cyclotomic(1);
  f[1] = Cyclotomic::root_of_unity(3, 1);
  f[2] = Cyclotomic::root_of_unity(3, 2);
  return f;
}

inline const std::string kXiForm = "x1+z3*x2+z3^2*x3";

/// True for x_i + a x_j with a != 0: the forms whose kernel holds the three
/// points with two zero coordinates in slots i, j.
inline std::optional<std::pair<std::size_t, std::size_t>> two_term_support(const LinearFormQ& f) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) support.push_back(i);
  if (support.size() != 2) return std::nullopt;
  return std::pair{support[0], support[1]};
}

/// The three points of the section x_i + a x_j = 0 whose zero slots are i, j
/// and whose other coordinates are +-1 summing to zero.
inline std::vector<VectorQ> three_points(std::size_t i, std::size_t j) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 6; ++k)
    if (k != i && k != j) rest.push_back(k);
  std::vector<VectorQ> pts;
  for (std::size_t partner = 1; partner < 4; ++partner) {
    VectorQ p(6);
    for (std::size_t k = 0; k < 4; ++k) p[rest[k]] = (k == 0 || k == partner) ? 1 : -1;
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace suite_detail

// ---------------------------------------------------------------------------

inline std::vector<Check> config_suite(Workspace& ws) {
  std::vector<Check> out;
  out.push_back(run_check("config.partition-counts", "configuration.15-4-10-6", [&] {
    const auto pairs = all_pair_partitions().size(), triples = all_triple_partitions().size();
    return pass_if(pairs == 15 && triples == 10, {{"pair_partitions", pairs}, {"triple_partitions", triples}},
                   "unexpected partition counts");
  }));
  out.push_back(run_check("config.incidence-sums", "configuration.15-4-10-6", [&] {
    const Incidence& inc = ws.incidence();
    std::vector<std::size_t> rows, cols;
    bool ok = true;
    for (std::size_t i = 0; i < inc.lines.size(); ++i) ok = ok && (rows.emplace_back(inc.row_sum(i)) == 4);
    for (std::size_t j = 0; j < inc.planes.size(); ++j) ok = ok && (cols.emplace_back(inc.column_sum(j)) == 6);
    return pass_if(ok, {{"row_sums", rows}, {"column_sums", cols}, {"criteria_agree", true}},
                   "row sums must be 4 and column sums 6");
  }));
  out.push_back(run_check("config.pairwise-intersections", "configuration.15-4-10-6", [&] {
    const auto counts = pairwise_plane_intersections(ws.incidence());
    std::size_t total = 0;
    bool ok = counts.size() == 45;
    Json bad = Json::array();
    for (const auto& [pr, n] : counts) {
      total += n;
      if (n != 2) {
        ok = false;
        bad.push_back({ws.incidence().planes[pr.first].to_string(), ws.incidence().planes[pr.second].to_string(), n});
      }
    }
    return pass_if(ok && total == 90, {{"pairs", counts.size()}, {"total_common_lines", total}, {"exceptions", bad}},
                   "some hyperplane pair does not share exactly two lines");
  }));
  out.push_back(run_check("config.automorphism-order", "configuration.automorphisms", [&] {
    const auto& G = ws.automorphisms();
    std::set<std::size_t> orbit;
    for (const auto& g : G.elements()) orbit.insert(g.line_image(0));
    return pass_if(G.order() == 720 && orbit.size() == 15, {{"order", G.order()}, {"line_orbit_size", orbit.size()}},
                   "automorphism group is not of order 720 acting transitively on lines");
  }));
  out.push_back(run_check("config.s6-image", "configuration.automorphisms", [&] {
    const auto& G = ws.automorphisms();
    const auto image = s6_image(ws.incidence());
    std::set<ConfigAut> distinct(image.begin(), image.end());
    bool all_in = true;
    for (const auto& g : image) all_in = all_in && G.contains(g);
    const bool ok = distinct.size() == 720 && all_in && G.order() == distinct.size();
    return pass_if(ok, {{"distinct_images", distinct.size()}, {"all_in_group", all_in}},
                   "S6 relabeling is not a bijection onto the automorphism group");
  }));
  return out;
}

inline std::vector<Check> igusa_suite(Workspace& ws) {
  std::vector<Check> out;
  const IgusaModel& m = ws.igusa();
  out.push_back(run_check("igusa.invariance", "igusa.equation", [&] {
    std::size_t invariant = 0;
    for (const auto& g : all_permutations(6)) {
      std::vector<SparsePoly> images;
      for (std::size_t i = 0; i < 6; ++i) images.push_back(SparsePoly::variable(6, g.image(i)));
      invariant += substitute(m.F, images) == m.F;
    }
    const Rational sample = evaluate(m.F, {1, -1, 0, 0, 0, 0});
    return pass_if(invariant == 720 && sample == 4,
                   {{"invariant_permutations", invariant}, {"F(1,-1,0,0,0,0)", to_string(sample)}, {"F", to_json(m.F)}},
                   "F is not S6-invariant or the sample value differs from 4");
  }));
  out.push_back(run_check("igusa.lines-on-quartic", "igusa.singular-locus", [&] {
    std::size_t ok = 0;
    Json lines = Json::object();
    for (std::size_t i = 0; i < m.lines.size(); ++i) {
      ok += restrict(m.s1, m.lines[i]).is_zero() && restrict(m.F, m.lines[i]).is_zero();
      Json cols = Json::array();
      for (std::size_t j = 0; j < 2; ++j) cols.push_back(to_json(m.lines[i].matrix().column(j)));
      lines[m.labels[i].to_string()] = cols;
    }
    return pass_if(ok == 15, {{"lines_on_quartic", ok}, {"parametrizations", lines}}, "some line leaves s1 = F = 0");
  }));
  out.push_back(run_check("igusa.singular-lines", "igusa.singular-locus", [&] {
    const std::size_t tangential = singular_line_identities(m);
    const std::size_t chart = chart_singular_line_identities(m);
    Json normal = Json::object();
    for (std::size_t i = 0; i < m.lines.size(); ++i) {
      const auto np = normal_partial(m.F, m.lines[i]);
      normal[m.labels[i].to_string()] = np ? Json(to_string(*np, "t")) : Json(nullptr);
    }
    return pass_if(tangential == 90 && chart == 75,
                   {{"tangential_identities", tangential}, {"chart_identities", chart}, {"normal_partial", normal}},
                   "a partial of F along s1 = 0 does not vanish on some line");
  }));
  out.push_back(run_check("igusa.nonsingular-control", "igusa.singular-locus", [&] {
    // x1 = x2, x3 = x4, x5 = -x6 on s1 = 0
    const auto line = LinearParam::from_columns({{1, 1, -1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}});
    const std::size_t vanishing = vanishing_partials(m.F, line);
    return pass_if(vanishing < 6, {{"vanishing_partials", vanishing}}, "control line looks singular");
  }));
  out.push_back(run_check("igusa.double-quadrics", "igusa.tangent-hyperplanes", [&] {
    Json per = Json::object();
    std::size_t good = 0;
    for (const auto& beta : all_triple_partitions()) {
      const DoubleQuadric q = double_quadric(m, beta);
      good += q.rank == 4 && q.quadric * q.quadric == restrict(m.F, q.chart) * q.scale;
      per[beta.to_string()] = {{"rank", q.rank}, {"scale", to_string(q.scale)}, {"quadric", to_json(q.quadric)}};
    }
    return pass_if(good == 10, {{"hyperplanes", per}}, "some H_beta section is not a rank-4 double quadric");
  }));
  out.push_back(run_check("igusa.ruling-splits", "igusa.quadric-rulings", [&] {
    Json per = Json::object();
    for (const auto& beta : all_triple_partitions()) {
      const RulingSplit r = ruling_split(m, beta);
      Json a = Json::array(), b = Json::array();
      for (const auto& x : r.first) a.push_back(x.to_string());
      for (const auto& x : r.second) b.push_back(x.to_string());
      per[beta.to_string()] = {a, b};
    }
    return Outcome{Status::Pass, {{"splits", per}}};
  }));
  out.push_back(run_check("igusa.coble-x6", "section.equation", [&] {
    const SectionModel s = hyperplane_section(m, coordinate_form<Rational>(6, 5));
    const CobleSection c = coble_section_equation(s);
    const bool branch_ok = c.branch == igusa_quartic(5);
    const bool constraint_ok = c.constraint == LinearFormQ(5, Rational(1));
    const bool chart_ok = branch_on_chart(c) == s.S;
    return pass_if(branch_ok && constraint_ok && chart_ok && c.weights == std::vector<unsigned>{2, 1, 1, 1, 1, 1},
                   {{"equation", to_string(c)}, {"branch", to_json(c.branch)}, {"branch_equals_S", chart_ok}},
                   "x6 section equation differs from y^2 = 4 sum x^4 - (sum x^2)^2");
  }));
  return out;
}

inline std::vector<Check> scan_suite(Workspace& ws, const std::vector<std::uint64_t>& primes) {
  std::vector<Check> out;
  for (auto p : primes) {
    out.push_back(run_check("scan.p" + std::to_string(p), "igusa.singular-locus", [&] {
      const ScanResult r = fp_singular_scan(ws.igusa(), p);
      Json d{{"prime", p},
             {"points_scanned", r.points_scanned},
             {"singular_points", r.singular.size()},
             {"line_points", r.line_points.size()},
             {"sets_equal", r.verdict}};
      if (!r.verdict) {
        d["witness"] = "singular set differs from the union of the lines";
        return Outcome{Status::Fail, d};
      }
      return Outcome{Status::EvidenceOnly, d};
    }));
  }
  return out;
}

/// Node checks for one section. In strict mode a degenerate hyperplane is
/// a failure; otherwise the caller decides what a degeneracy means.
inline std::vector<Check> section_suite(Workspace& ws, const LinearFormQ& form, bool with_extension = true) {
  std::vector<Check> out;
  const std::string name = to_string(form);
  const std::string prefix = "section." + name;
  const IgusaModel& m = ws.igusa();

  std::optional<SectionModel> section;
  out.push_back(run_check(prefix + ".nodes", "section.nodes", [&] {
    section = hyperplane_section(m, form);
    Json nodes = Json::object();
    for (std::size_t i = 0; i < section->labels.size(); ++i)
      nodes[section->labels[i].to_string()] = to_projective_string(section->ambient_nodes[i]);
    return pass_if(section->nodes.size() == 15, {{"distinct_nodes", section->nodes.size()}, {"nodes", nodes}},
                   "section does not have 15 distinct nodes");
  }));
  if (section) {
    for (std::size_t i = 0; i < section->labels.size(); ++i) {
      out.push_back(run_check(prefix + ".node." + section->labels[i].to_string(), "section.nodes", [&] {
        const MatrixQ h = local_quadratic_part(section->S, section->nodes[i]);
        const std::size_t r = rank(h);
        return pass_if(r == 3, {{"point", to_projective_string(section->ambient_nodes[i])}, {"hessian_rank", r}},
                       "quadratic part is degenerate");
      }));
    }
    out.push_back(run_check(prefix + ".branch-locus", "section.equation", [&] {
      const CobleSection c = coble_section_equation(*section);
      return pass_if(branch_on_chart(c) == section->S, {{"equation", to_string(c)}}, "branch quartic differs from S");
    }));
    if (with_extension) {
      out.push_back(run_check(prefix + ".extension-count", "section.automorphisms", [&] {
        const ExtensionCount e = projectivity_extensions(m, form, ws.automorphisms());
        const std::size_t stab = hyperplane_stabilizer(form).order();
        return pass_if(e.count() == stab && e.node_maps == e.quartic_preserved,
                       {{"extensions", e.count()},
                        {"node_preserving_projectivities", e.node_maps},
                        {"stabilizer_order", stab},
                        {"frame", e.frame}},
                       "extension count differs from the stabilizer order");
      }));
    }
  }
  if (const auto support = suite_detail::two_term_support(form)) {
    out.push_back(run_check(prefix + ".three-points", "rigidity.three-point-link", [&] {
      const SectionSurface s = section_surface(m, form);
      Json pts = Json::object();
      std::size_t nodes = 0;
      for (const auto& p : suite_detail::three_points(support->first, support->second)) {
        const bool node = is_node_of(s, p);
        nodes += node;
        pts[to_projective_string(p)] = node;
      }
      return pass_if(nodes == 3, {{"points", pts}}, "some of the three points is not a node of the section");
    }));
  }
  return out;
}

/// A hyperplane through a singular line must be rejected.
inline Check line_contained_control(Workspace& ws, const LinearFormQ& form) {
  return run_check("section." + to_string(form) + ".line-contained", "signatures.hyperplane-families", [&] {
    try {
      hyperplane_section(ws.igusa(), form);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::LineContained)
        return Outcome{Status::Pass, {{"error", to_string(e.kind())}, {"message", e.what()}}};
      throw;
    }
    return Outcome{Status::Fail, {{"witness", "section was built although a line lies in the hyperplane"}}};
  });
}

struct StabilizerFamily {
  std::string form;
  std::size_t order;
  std::string label;
  FiniteGroup<SignedPerm> reference;
};

inline std::vector<StabilizerFamily> stabilizer_families() {
  using suite_detail::perm_group;
  return {
      {"x1", 120, "S5", perm_group({{{2, 3}}, {{2, 3, 4, 5, 6}}})},
      {"x1+x2", 48, "S4xC2", perm_group({{{3, 4}}, {{3, 4, 5, 6}}, {{1, 2}}})},
      {"x1-x2", 48, "S4xC2", perm_group({{{3, 4}}, {{3, 4, 5, 6}}, {{1, 2}}})},
      {"x1+2x2", 24, "S4", perm_group({{{3, 4}}, {{3, 4, 5, 6}}})},
      {"x1+x2+x3", 72, "(S3xS3):C2", perm_group({{{1, 2}}, {{1, 2, 3}}, {{1, 4}, {2, 5}, {3, 6}}})},
      {"x1+x2+2x3", 12, "S3xC2", perm_group({{{4, 5}}, {{4, 5, 6}}, {{1, 2}}})},
      {"x1+2x2+3x3", 6, "S3", perm_group({{{4, 5}}, {{4, 5, 6}}})},
      {suite_detail::kXiForm, 18, "S3xC3", perm_group({{{4, 5}}, {{4, 5, 6}}, {{1, 2, 3}}})},
  };
}

inline FiniteGroup<SignedPerm> stabilizer_of(const std::string& form) {
  if (form == suite_detail::kXiForm) return hyperplane_stabilizer(suite_detail::xi_form());
  return hyperplane_stabilizer(parse_linear_form(form));
}

inline std::vector<Check> stabilizer_suite() {
  std::vector<Check> out;
  for (const auto& fam : stabilizer_families()) {
    out.push_back(run_check("stabilizers." + fam.form, "stabilizers.hyperplane-families", [&] {
      const auto G = stabilizer_of(fam.form);
      const Fingerprint f = group_fingerprint(G), ref = group_fingerprint(fam.reference);
      return pass_if(G.order() == fam.order && f == ref,
                     {{"order", G.order()},
                      {"expected_order", fam.order},
                      {"label", fam.label},
                      {"fingerprint", suite_detail::fingerprint_json(f)},
                      {"label_fingerprint_matches", f == ref}},
                     "stabilizer order or fingerprint mismatch");
    }));
  }
  out.push_back(run_check("stabilizers.x1-with-galois", "stabilizers.group-labels", [&] {
    const auto G = suite_detail::with_galois(hyperplane_stabilizer(parse_linear_form("x1")));
    const Fingerprint f = group_fingerprint(G);
    return pass_if(f.order == 240 && f.abelianization == std::vector<std::size_t>{2, 2} &&
                       f == group_fingerprint(groups::ambient()),
                   {{"fingerprint", suite_detail::fingerprint_json(f)}, {"label", "S5xC2"}},
                   "Stab(x1) x Galois does not match S5xC2");
  }));
  out.push_back(run_check("stabilizers.x1+x2-with-galois", "stabilizers.group-labels", [&] {
    const auto G = suite_detail::with_galois(hyperplane_stabilizer(parse_linear_form("x1+x2")));
    const auto ref = suite_detail::with_galois(suite_detail::perm_group({{{3, 4}}, {{3, 4, 5, 6}}, {{1, 2}}}));
    const Fingerprint f = group_fingerprint(G);
    return pass_if(f.order == 96 && f == group_fingerprint(ref),
                   {{"fingerprint", suite_detail::fingerprint_json(f)}, {"label", "S4xC2xC2"}},
                   "Stab(x1+x2) x Galois does not match S4xC2xC2");
  }));
  return out;
}

struct SignatureCase {
  std::string form;
  Verdict expected;
};

inline std::vector<SignatureCase> signature_cases() {
  return {{"x6", Verdict::Irreducible4},        {"x1+x2", Verdict::OnePlusThree},     {"x1-x2", Verdict::OnePlusThree},
          {"x1+2x2", Verdict::OnePlusThree},    {"x1+x2+x3", Verdict::Excluded},       {"x1+x2+2x3", Verdict::Excluded},
          {"x1+2x2+3x3", Verdict::Excluded},    {suite_detail::kXiForm, Verdict::Excluded}};
}

inline std::vector<Check> signature_suite() {
  std::vector<Check> out;
  for (const auto& sc : signature_cases()) {
    out.push_back(run_check("signatures." + sc.form, "signatures.hyperplane-families", [&] {
      DecompSignature sig;
      std::size_t order = 0;
      Json extra = Json::object();
      if (sc.form == suite_detail::kXiForm) {
        const auto form = suite_detail::xi_form();
        const auto G = hyperplane_stabilizer(form);
        order = G.order();
        sig = decomposition_signature(G, form);
      } else {
        const auto form = parse_linear_form(sc.form);
        const auto G = hyperplane_stabilizer(form);
        order = G.order();
        sig = decomposition_signature(G, form);
        if (sc.form == "x1+x2+x3") {
          // The index-2 subgroup preserving each triple.
          const auto sub = suite_detail::perm_group({{{1, 2}}, {{1, 2, 3}}, {{4, 5}}, {{4, 5, 6}}});
          extra["S3xS3_subgroup"] = suite_detail::signature_json(decomposition_signature(sub, form));
        }
      }
      Json d{{"stabilizer_order", order},
             {"signature", suite_detail::signature_json(sig)},
             {"expected", to_string(sc.expected)}};
      if (!extra.empty()) d["side_data"] = extra;
      return pass_if(sig.verdict == sc.expected, d,
                     std::string("verdict ") + to_string(sig.verdict) + ", expected " + to_string(sc.expected));
    }));
  }
  return out;
}

inline std::vector<Check> d5_suite() {
  std::vector<Check> out;
  struct Expected {
    std::string label, slug;
    std::size_t rank;
  };
  const std::vector<Expected> expected{{"A5", "a5", 1},
                                       {"S5 (standard)", "s5-standard", 1},
                                       {"S5 (twisted)", "s5-twisted", 0},
                                       {"A5xC2", "a5xc2", 0},
                                       {"S5xC2", "s5xc2", 0}};
  const auto named = groups::named_references();
  for (const auto& [label, slug, rank_expected] : expected) {
    out.push_back(run_check("d5.rank." + slug, "rigidity.lattice-invariants", [&] {
      const auto it = std::find_if(named.begin(), named.end(), [&](const auto& n) { return n.label == label; });
      const std::size_t r = invariant_rank(d5_model(it->group, label));
      return pass_if(r == rank_expected, {{"invariant_rank", r}, {"expected", rank_expected}}, "invariant rank mismatch");
    }));
  }
  out.push_back(run_check("d5.model", "rigidity.lattice-invariants", [&] {
    const SignedPerm galois = d5_matrix(SignedPerm::galois(6));
    const SignedPerm twisted = d5_matrix(groups::cycle({1, 2}, -1));
    bool galois_ok = true;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) galois_ok = galois_ok && galois.matrix()(i, j) == (i == j ? -1 : 0);
    const MatrixQ p12 = SignedPerm::from_cycles(5, {{1, 2}}).matrix();
    bool twisted_ok = true;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) twisted_ok = twisted_ok && twisted.matrix()(i, j) == -p12(i, j);
    const std::size_t trivial = invariant_rank(D5Action{{}, "trivial"});
    return pass_if(galois_ok && twisted_ok && trivial == 5,
                   {{"galois", to_json(galois)}, {"twisted_transposition", to_json(twisted)}, {"trivial_rank", trivial}},
                   "D5 model does not send Galois to -Id or the twisted transposition to -P");
  }));
  return out;
}

inline std::vector<Check> sarkisov_suite(long long bound) {
  std::vector<Check> out;
  std::optional<SarkisovReport> rep;
  out.push_back(run_check("sarkisov.symbolic", "rigidity.sarkisov-arithmetic", [&] {
    rep = sarkisov_arithmetic(bound);
    const bool ok = rep->symmetric_form && rep->c_matches && rep->d_matches && rep->determinant_matches &&
                    rep->trilinear_matches;
    return pass_if(ok,
                   {{"c", to_string(rep->c, "v")},
                    {"d", to_string(rep->d, "v")},
                    {"determinant", to_string(rep->determinant, "v")},
                    {"trilinear", to_string(rep->trilinear, "v")},
                    {"variables", "v1 = a, v2 = b"}},
                   "symbolic derivation differs from c = 2a-2, d = 1+2b, a+2b, 2a^2-3b^2");
  }));
  out.push_back(run_check("sarkisov.values", "rigidity.sarkisov-arithmetic", [&] {
    const Rational at10 = trilinear_value(1, 0), at00 = trilinear_value(0, 0);
    return pass_if(at10 == 2 && at00 == 0, {{"(1,0)", to_string(at10)}, {"(0,0)", to_string(at00)}},
                   "trilinear values differ");
  }));
  if (rep) {
    out.push_back(run_check("sarkisov.enumeration", "rigidity.sarkisov-arithmetic", [&] {
      Json all = Json::array(), pos = Json::array();
      for (const auto& [a, b] : rep->solutions) all.push_back({a, b});
      for (const auto& [a, b] : rep->positive_solutions) pos.push_back({a, b});
      const bool ok = rep->positive_solutions == std::vector<std::pair<long long, long long>>{{1, 0}};
      return pass_if(ok && rep->reduction_matches,
                     {{"bound", rep->bound},
                      {"solutions", all},
                      {"positive_solutions", pos},
                      {"sign_convention", "a > 0"},
                      {"reduction_b(5b-8s)", rep->reduction_matches}},
                     "positive solution set is not {(1,0)}");
    }));
  }
  return out;
}

inline std::vector<Check> classify_suite(Workspace& ws) {
  std::vector<Check> out;
  std::optional<std::vector<AdmissibilityVerdict>> verdicts;
  out.push_back(run_check("classify.admissible", "rigidity.admissible-subgroups", [&] {
    verdicts = classify_admissible(groups::ambient());
    Json table = Json::array();
    std::vector<std::string> admissible;
    for (const auto& v : *verdicts) {
      table.push_back({{"label", v.label},
                       {"order", v.order},
                       {"rank", v.d5_invariant_rank},
                       {"in_S4xC2", v.in_s4xc2},
                       {"in_C5C4xC2", v.in_c5c4xc2},
                       {"excluded_by_signature", v.excluded_by_signature},
                       {"verdict", v.admissible ? "admissible" : "rejected: " + v.reason}});
      if (v.admissible) admissible.push_back(v.label);
    }
    std::sort(admissible.begin(), admissible.end());
    const std::vector<std::string> expected{"A5xC2", "S5 (twisted)", "S5xC2"};
    Json d{{"classes", verdicts->size()}, {"admissible", admissible}, {"table", table}};
    if (admissible != expected) d["discrepancy"] = {{"expected", expected}, {"found", admissible}};
    return pass_if(admissible == expected, d, "admissible classes differ from S5xC2, twisted S5, A5xC2");
  }));
  if (verdicts) {
    out.push_back(run_check("classify.standard-s5", "rigidity.admissible-subgroups", [&] {
      const auto it = std::find_if(verdicts->begin(), verdicts->end(), [](const auto& v) { return v.label == "S5 (standard)"; });
      const bool ok = it != verdicts->end() && !it->admissible && it->d5_invariant_rank == 1;
      return pass_if(ok, {{"found", it != verdicts->end()}}, "standard S5 not rejected with invariant rank 1");
    }));
    out.push_back(run_check("classify.s4xc2-subgroups", "rigidity.admissible-subgroups", [&] {
      std::size_t inside = 0, admitted = 0;
      for (const auto& v : *verdicts)
        if (v.in_s4xc2) {
          ++inside;
          admitted += v.admissible;
        }
      return pass_if(admitted == 0, {{"classes_inside", inside}, {"admitted", admitted}},
                     "a subgroup of S4xC2 was admitted");
    }));
  }
  out.push_back(run_check("classify.node-orbits.c5", "rigidity.node-orbits", [&] {
    const SectionModel s = hyperplane_section(ws.igusa(), coordinate_form<Rational>(6, 5));
    const NodeOrbits o = node_orbits(s, groups::c5());
    bool ok = o.orbits.size() == 3 && !o.has_fixed_node;
    Json orbits = Json::array();
    for (const auto& orb : o.orbits) {
      ok = ok && orb.members.size() == 5 && orb.general_position.value_or(false);
      Json labels = Json::array();
      for (auto i : orb.members) labels.push_back(s.labels[i].to_string());
      orbits.push_back({{"nodes", labels}, {"general_position", orb.general_position.value_or(false)}});
    }
    return pass_if(ok, {{"orbits", orbits}}, "C5 orbits are not three general-position 5-sets");
  }));
  out.push_back(run_check("classify.node-orbits.s5", "rigidity.node-orbits", [&] {
    const SectionModel s = hyperplane_section(ws.igusa(), coordinate_form<Rational>(6, 5));
    const NodeOrbits o = node_orbits(s, groups::standard_s5());
    const bool ok = o.orbits.size() == 1 && o.orbits[0].members.size() == 15 && !o.has_fixed_node;
    return pass_if(ok, {{"orbit_count", o.orbits.size()}, {"fixed_node", o.has_fixed_node}},
                   "S5 does not act transitively on the nodes");
  }));
  return out;
}

/// Hyperplanes sampled by the full run: a = 0, a = 1, a = 2 and a = 3 in
/// x1 + a x2 (x6 stands in for a = 0).
inline std::vector<std::string> sample_sections() { return {"x6", "x1+x2", "x1+2x2", "x1+3x2"}; }

inline VerificationReport run_all(Workspace& ws) {
  VerificationReport r(default_header());
  r.add(config_suite(ws));
  r.add(igusa_suite(ws));
  r.add(scan_suite(ws, {5, 7, 11, 13}));
  for (const auto& f : sample_sections()) r.add(section_suite(ws, parse_linear_form(f)));
  r.add(line_contained_control(ws, parse_linear_form("x1-x2")));
  r.add(stabilizer_suite());
  r.add(signature_suite());
  r.add(d5_suite());
  r.add(sarkisov_suite(10000));
  r.add(classify_suite(ws));
  return r;
}

}  // namespace coblekit
