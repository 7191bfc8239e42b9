#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coblekit/characters.hpp"
#include "coblekit/error.hpp"
#include "coblekit/group.hpp"
#include "coblekit/linear_form.hpp"
#include "coblekit/matrix.hpp"
#include "coblekit/parallel.hpp"
#include "coblekit/poly.hpp"
#include "coblekit/signed_perm.hpp"
#include "coblekit/subgroups.hpp"

namespace coblekit {

// ---------------------------------------------------------------------------
// Subgroups of Aut(X) = S5 x C2 for the section x6 = 0. Elements are
// SignedPerm on 6 letters fixing 6; aux_sign is the action on y.

namespace groups {

inline SignedPerm cycle(std::vector<unsigned> c, int aux = 1) { return SignedPerm::from_cycles(6, {std::move(c)}, aux); }

inline FiniteGroup<SignedPerm> ambient() { return closure(std::vector<SignedPerm>{cycle({1, 2}), cycle({1, 2, 3, 4, 5}), SignedPerm::galois(6)}); }
inline FiniteGroup<SignedPerm> standard_s5() { return closure(std::vector<SignedPerm>{cycle({1, 2}), cycle({1, 2, 3, 4, 5})}); }
/// sigma acts on y by sign(sigma).
inline FiniteGroup<SignedPerm> twisted_s5() { return closure(std::vector<SignedPerm>{cycle({1, 2}, -1), cycle({1, 2, 3, 4, 5})}); }
inline FiniteGroup<SignedPerm> a5() { return closure(std::vector<SignedPerm>{cycle({1, 2, 3}), cycle({1, 2, 3, 4, 5})}); }
inline FiniteGroup<SignedPerm> a5_c2() {
  return closure(std::vector<SignedPerm>{cycle({1, 2, 3}), cycle({1, 2, 3, 4, 5}), SignedPerm::galois(6)});
}
inline FiniteGroup<SignedPerm> s4_c2() { return closure(std::vector<SignedPerm>{cycle({1, 2}), cycle({1, 2, 3, 4}), SignedPerm::galois(6)}); }
/// (C5 : C4) x C2, the normalizer of a 5-cycle times the Galois involution.
inline FiniteGroup<SignedPerm> f20_c2() {
  return closure(std::vector<SignedPerm>{cycle({1, 2, 3, 4, 5}), cycle({1, 2, 4, 3}), SignedPerm::galois(6)});
}
inline FiniteGroup<SignedPerm> c5() { return closure(std::vector<SignedPerm>{cycle({1, 2, 3, 4, 5})}); }

struct Named {
  std::string label;
  FiniteGroup<SignedPerm> group;
};

inline std::vector<Named> named_references() {
  return {{"S5xC2", ambient()},   {"S5 (twisted)", twisted_s5()}, {"A5xC2", a5_c2()},  {"S5 (standard)", standard_s5()},
          {"A5", a5()},           {"S4xC2", s4_c2()},             {"(C5:C4)xC2", f20_c2()}};
}

}  // namespace groups

// ---------------------------------------------------------------------------
// D5 lattice model

struct D5Action {
  std::vector<SignedPerm> generators;  // degree 5
  std::string label;
};

/// (sigma, eps) -> eps * P_sigma on Z^5.
inline SignedPerm d5_matrix(const SignedPerm& g) {
  if (g.degree() != 6 || g.image(5) != 5) throw Error(ErrorKind::InvalidArgument, "element outside S5 x C2: " + g.to_string());
  if (g.has_coordinate_signs()) throw Error(ErrorKind::SignedElement, g.to_string());
  std::vector<std::uint8_t> images(g.images().begin(), g.images().begin() + 5);
  std::vector<std::int8_t> signs(5, static_cast<std::int8_t>(g.aux_sign()));
  return SignedPerm(std::move(images), std::move(signs));
}

inline D5Action d5_model(const FiniteGroup<SignedPerm>& G, std::string label = {}) {
  D5Action a{{}, std::move(label)};
  for (const auto& g : G.generators()) a.generators.push_back(d5_matrix(g));
  return a;
}

/// Rank of the sublattice fixed by every generator.
inline std::size_t invariant_rank(const D5Action& a) {
  if (a.generators.empty()) return 5;
  std::vector<VectorQ> rows;
  for (const auto& g : a.generators) {
    const MatrixQ m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      VectorQ r = m.row(i);
      r[i] -= 1;
      rows.push_back(std::move(r));
    }
  }
  return kernel_basis(MatrixQ::from_rows(rows)).size();
}

// ---------------------------------------------------------------------------
// Sarkisov link arithmetic on Pic = Z H + Z E

/// Symmetric trilinear form with H^3 = 2, H^2 E = H E^2 = 0, E^3 = 6.
struct SarkisovLattice {
  std::array<Rational, 4> cubes{2, 0, 0, 6};  // indexed by the number of E slots

  template <class T>
  T operator()(const std::array<T, 2>& x, const std::array<T, 2>& y, const std::array<T, 2>& z) const {
    T sum = x[0] * y[0] * z[0] * Rational(0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) sum = sum + x[i] * y[j] * z[k] * cubes[i + j + k];
    return sum;
  }

  /// -K = 2H - E.
  template <class T>
  std::array<T, 2> anticanonical(const T& one) const {
    return {one * Rational(2), one * Rational(-1)};
  }
};

struct SarkisovReport {
  SparsePoly c, d;         // in Q[a, b], from matching 2H - E = 2H' - E'
  SparsePoly determinant;  // ad - bc after substitution
  SparsePoly trilinear;    // H'^2 (-K) / 2
  bool c_matches = false, d_matches = false, determinant_matches = false, trilinear_matches = false;
  bool symmetric_form = false;
  std::vector<std::pair<long long, long long>> solutions;           // all with |a|, |b| <= bound
  std::vector<std::pair<long long, long long>> positive_solutions;  // a > 0
  bool reduction_matches = false;  // 2(s-2b)^2 - 3b^2 - 2 = b(5b - 8s)
  long long bound = 0;
};

namespace detail {

/// Variables a, b, c, d of Q[a, b, c, d].
inline SparsePoly sark_var(std::size_t i) { return SparsePoly::variable(4, i); }

/// Solves the linear equation eq = 0 for variable v, assuming eq = k v + rest
/// with k a nonzero constant.
inline SparsePoly solve_for(const SparsePoly& eq, std::size_t v) {
  Exponents ev(eq.nvars(), 0);
  ev[v] = 1;
  const Rational k = eq.coefficient(ev);
  if (k == 0) throw std::logic_error("variable absent from equation");
  const SparsePoly rest = eq - SparsePoly::monomial(ev, k);
  for (const auto& [e, c] : rest.terms())
    if (e[v]) throw std::logic_error("equation not linear in the variable");
  return rest * (-1 / k);
}

/// Drops the c, d slots of a polynomial free of them.
inline SparsePoly to_ab(const SparsePoly& f) {
  SparsePoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[2] || e[3]) throw std::logic_error("c or d left after substitution");
    out.add_term({e[0], e[1]}, c);
  }
  return out;
}

}  // namespace detail

inline Rational trilinear_value(long long a, long long b) {
  const SarkisovLattice L;
  const std::array<Rational, 2> h{Rational(a), Rational(b)};
  return L(h, h, L.anticanonical(Rational(1))) / 2;
}

inline SarkisovReport sarkisov_arithmetic(long long bound) {
  if (bound < 10) throw Error(ErrorKind::InvalidArgument, "bound must be at least 10");
  using detail::sark_var;
  const SarkisovLattice L;
  SarkisovReport r;
  r.bound = bound;

  // Symmetry of the trilinear form over all slot orders of the basis.
  r.symmetric_form = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        auto e = [](std::size_t s) { return std::array<Rational, 2>{Rational(s == 0), Rational(s == 1)}; };
        const Rational v = L(e(i), e(j), e(k));
        r.symmetric_form = r.symmetric_form && v == L(e(j), e(i), e(k)) && v == L(e(k), e(j), e(i)) && v == L(e(i), e(k), e(j));
      }

  // H' = a H + b E, E' = c H + d E; coefficients of (2H' - E') - (2H - E).
  const SparsePoly a = sark_var(0), b = sark_var(1), c = sark_var(2), d = sark_var(3);
  const SparsePoly one = SparsePoly::constant(4, 1);
  const SparsePoly eq_h = a * Rational(2) - c - one * Rational(2);
  const SparsePoly eq_e = b * Rational(2) - d + one;
  const SparsePoly c_expr = detail::solve_for(eq_h, 2);
  const SparsePoly d_expr = detail::solve_for(eq_e, 3);
  r.c = detail::to_ab(c_expr);
  r.d = detail::to_ab(d_expr);

  const SparsePoly det = substitute(a * d - b * c, {a, b, c_expr, d_expr});
  r.determinant = detail::to_ab(det);

  using P2 = std::array<SparsePoly, 2>;
  const P2 h_prime{a, b};
  const P2 minus_k = L.anticanonical(one);
  r.trilinear = detail::to_ab(L(h_prime, h_prime, minus_k) * Rational(1, 2));

  const SparsePoly A = SparsePoly::variable(2, 0), B = SparsePoly::variable(2, 1), ONE = SparsePoly::constant(2, 1);
  r.c_matches = r.c == A * Rational(2) - ONE * Rational(2);
  r.d_matches = r.d == ONE + B * Rational(2);
  r.determinant_matches = r.determinant == A + B * Rational(2);
  r.trilinear_matches = r.trilinear == A * A * Rational(2) - B * B * Rational(3);

  // Enumeration on the two lines a + 2b = s, directly from the displayed equations.
  for (long long bb = -bound; bb <= bound; ++bb)
    for (long long s : {-1LL, 1LL}) {
      const long long aa = s - 2 * bb;
      if (aa < -bound || aa > bound) continue;
      if (2 * aa * aa - 3 * bb * bb == 2) r.solutions.emplace_back(aa, bb);
    }
  std::sort(r.solutions.begin(), r.solutions.end());
  r.solutions.erase(std::unique(r.solutions.begin(), r.solutions.end()), r.solutions.end());
  for (const auto& sol : r.solutions)
    if (sol.first > 0) r.positive_solutions.push_back(sol);

  r.reduction_matches = true;
  for (long long s : {-1LL, 1LL}) {
    const SparsePoly a_on_line = ONE * Rational(s) - B * Rational(2);
    const SparsePoly lhs = substitute(r.trilinear, {a_on_line, B}) - ONE * Rational(2);
    const SparsePoly rhs = B * (B * Rational(5) - ONE * Rational(8 * s));
    r.reduction_matches = r.reduction_matches && lhs == rhs;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Admissible subgroup classification

struct AdmissibilityVerdict {
  std::string label;
  std::size_t order = 0;
  Fingerprint fingerprint;
  std::size_t d5_invariant_rank = 0;
  bool in_s4xc2 = false;
  bool in_c5c4xc2 = false;
  bool excluded_by_signature = false;
  DecompSignature signature;
  bool admissible = false;
  std::string reason;  // empty when admissible
};

/// Permutation part of a subgroup of S5 x C2: the aux component dropped.
inline FiniteGroup<SignedPerm> permutation_projection(const FiniteGroup<SignedPerm>& G) {
  std::vector<SignedPerm> gens;
  for (const auto& g : G.generators()) gens.push_back(g.with_aux(1));
  return closure(gens, SignedPerm::identity(G.degree()));
}

inline std::string label_subgroup(const FiniteGroup<SignedPerm>& G, const FiniteGroup<SignedPerm>& ambient,
                                  const std::vector<groups::Named>& named) {
  for (const auto& n : named)
    if (n.group.order() == G.order() && are_conjugate(G, n.group, ambient)) return n.label;
  const Fingerprint f = group_fingerprint(G);
  std::string s = "order " + std::to_string(f.order) + ", ab [";
  for (std::size_t i = 0; i < f.abelianization.size(); ++i) s += (i ? "," : "") + std::to_string(f.abelianization[i]);
  return s + "], " + std::to_string(f.class_count) + " classes";
}

inline AdmissibilityVerdict classify_subgroup(const FiniteGroup<SignedPerm>& G, const FiniteGroup<SignedPerm>& ambient,
                                              const std::vector<groups::Named>& named,
                                              const FiniteGroup<SignedPerm>& s4c2, const FiniteGroup<SignedPerm>& f20c2) {
  AdmissibilityVerdict v;
  v.label = label_subgroup(G, ambient, named);
  v.order = G.order();
  v.fingerprint = group_fingerprint(G);
  v.d5_invariant_rank = invariant_rank(d5_model(G));
  v.in_s4xc2 = is_subconjugate(G, s4c2, ambient);
  v.in_c5c4xc2 = is_subconjugate(G, f20c2, ambient);
  v.signature = decomposition_signature(permutation_projection(G), coordinate_form<Rational>(6, 5));
  v.excluded_by_signature = v.signature.verdict == Verdict::Excluded;

  std::vector<std::string> reasons;
  if (v.d5_invariant_rank > 0) reasons.push_back("invariant lattice vector");
  if (v.in_s4xc2) reasons.push_back("inside S4xC2");
  if (v.in_c5c4xc2) reasons.push_back("inside (C5:C4)xC2");
  if (v.excluded_by_signature) reasons.push_back("signature: " + v.signature.witness);
  v.admissible = reasons.empty();
  for (std::size_t i = 0; i < reasons.size(); ++i) v.reason += (i ? "; " : "") + reasons[i];
  return v;
}

inline std::vector<AdmissibilityVerdict> classify_admissible(const FiniteGroup<SignedPerm>& ambient,
                                                             std::size_t order_bound = 1000) {
  const auto classes = subgroups_up_to_conjugacy(ambient, order_bound);
  const auto named = groups::named_references();
  const auto s4c2 = groups::s4_c2();
  const auto f20c2 = groups::f20_c2();
  return parallel_map(classes.size(),
                      [&](std::size_t i) { return classify_subgroup(classes[i], ambient, named, s4c2, f20c2); });
}

}  // namespace coblekit
