#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coblekit/cyclotomic.hpp"
#include "coblekit/error.hpp"
#include "coblekit/group.hpp"
#include "coblekit/linear_form.hpp"
#include "coblekit/signed_perm.hpp"

namespace coblekit {

/// Class function on a finite group. Classes follow conjugacy_classes(G);
/// representatives are indices into G.elements().
struct CharacterVector {
  std::vector<Cyclotomic> values;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> representatives;

  std::size_t group_order() const {
    std::size_t n = 0;
    for (auto s : class_sizes) n += s;
    return n;
  }

  /// Value at the identity (always the first class).
  const Cyclotomic& degree() const { return values.front(); }

  friend CharacterVector operator-(CharacterVector a, const CharacterVector& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
    return a;
  }
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
  }
  friend CharacterVector operator*(const Rational& k, CharacterVector a) {
    for (auto& v : a.values) v *= Cyclotomic(k);
    return a;
  }
};

/// <a, b> = (1/|G|) sum over classes of |C| a(C) conj(b(C)); must be rational.
inline Rational inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorKind::DimensionMismatch, "characters on different class lists");
  Cyclotomic sum;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sum += Cyclotomic(Rational(static_cast<long long>(a.class_sizes[i]))) * a.values[i] * b.values[i].conj();
  return sum.to_rational() / Rational(static_cast<long long>(a.group_order()));
}

namespace detail {

template <class E>
CharacterVector empty_character(const FiniteGroup<E>& G, const std::vector<std::vector<std::size_t>>& classes) {
  CharacterVector chi;
  for (const auto& c : classes) {
    chi.class_sizes.push_back(c.size());
    chi.representatives.push_back(c.front());
  }
  chi.values.resize(classes.size());
  (void)G;
  return chi;
}

inline Cyclotomic to_cyclotomic(const Rational& q) { return Cyclotomic(q); }
inline Cyclotomic to_cyclotomic(const Cyclotomic& z) { return z; }

}  // namespace detail

/// Every homomorphism G -> C^*, found as the characters of G/[G,G].
/// Values are zeta_e^k with e the exponent of G.
template <class E>
std::vector<CharacterVector> linear_characters(const FiniteGroup<E>& G) {
  const auto classes = conjugacy_classes(G);
  const FiniteGroup<E> D = derived_subgroup(G);
  const CosetLabels labels = cosets(G, D);
  const std::size_t m = labels.representative.size();
  const long long e = static_cast<long long>(exponent(G));

  auto mul = [&](std::size_t a, std::size_t b) {
    const auto& els = G.elements();
    return labels.coset_of[G.index_of(els[labels.representative[a]] * els[labels.representative[b]])];
  };

  // Greedy generating set of the abelian quotient.
  std::vector<std::size_t> gens, gen_orders;
  std::vector<bool> in_sub(m, false);
  in_sub[0] = true;
  for (std::size_t c = 0; c < m; ++c) {
    if (in_sub[c]) continue;
    gens.push_back(c);
    std::size_t ord = 1;
    for (std::size_t x = c; x != 0; x = mul(x, c)) ++ord;
    gen_orders.push_back(ord);
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < m; ++x)
      if (in_sub[x]) members.push_back(x);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (auto g : gens) {
        const std::size_t y = mul(g, members[k]);
        if (!in_sub[y]) {
          in_sub[y] = true;
          members.push_back(y);
        }
      }
  }

  std::vector<CharacterVector> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (;;) {
    std::vector<long long> val(m, -1);
    val[0] = 0;
    std::vector<std::size_t> queue{0};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k)
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const std::size_t b = mul(gens[i], queue[k]);
        const long long v = (val[queue[k]] + static_cast<long long>(choice[i]) * (e / static_cast<long long>(gen_orders[i]))) % e;
        if (val[b] < 0) {
          val[b] = v;
          queue.push_back(b);
        } else if (val[b] != v) {
          ok = false;
        }
      }
    if (ok) {
      CharacterVector chi = detail::empty_character(G, classes);
      for (std::size_t c = 0; c < classes.size(); ++c)
        chi.values[c] = Cyclotomic::root_of_unity(static_cast<int>(e), val[labels.coset_of[classes[c].front()]]);
      out.push_back(std::move(chi));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == gen_orders[i]) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  if (out.size() != m) throw std::logic_error("linear character count differs from |G/[G,G]|");
  return out;
}

/// Character of the 5-dimensional standard representation W of S6
/// (or its analogue for S_n): fixed points minus one.
inline CharacterVector simplicial_character(const FiniteGroup<SignedPerm>& G) {
  for (const auto& g : G.elements())
    if (g.has_coordinate_signs()) throw Error(ErrorKind::SignedElement, g.to_string());
  const auto classes = conjugacy_classes(G);
  CharacterVector chi = detail::empty_character(G, classes);
  for (std::size_t c = 0; c < classes.size(); ++c)
    chi.values[c] = Cyclotomic(Rational(static_cast<long long>(G.elements()[classes[c].front()].fixed_points()) - 1));
  return chi;
}

/// True when all coefficients of the form coincide, i.e. it is a multiple of s1.
template <class K>
bool proportional_to_power_sum(const LinearForm<K>& form) {
  for (const auto& a : form)
    if (!(a == form.front())) return false;
  return true;
}

/// { g in S_n : form o g = c form + d s1, c != 0 }.
template <class K>
FiniteGroup<SignedPerm> hyperplane_stabilizer(const LinearForm<K>& form) {
  if (proportional_to_power_sum(form)) throw Error(ErrorKind::DegenerateHyperplane, "");
  const LinearForm<K> s1 = power_sum_form<K>(form.size());
  std::vector<SignedPerm> members;
  for (const auto& g : all_permutations(form.size()))
    if (proportional_mod(g.pull_back(form), form, s1)) members.push_back(g);
  return from_elements(members, SignedPerm::identity(form.size()));
}

/// The character g -> c(g) with form o g = c(g) form mod s1. Any aux sign
/// on the elements is ignored: the deck involution acts trivially on P^4.
template <class K>
CharacterVector scaling_character(const FiniteGroup<SignedPerm>& G, const LinearForm<K>& form) {
  const LinearForm<K> s1 = power_sum_form<K>(form.size());
  const auto classes = conjugacy_classes(G);
  std::vector<Cyclotomic> per_element(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) {
    auto cd = proportional_mod(G.elements()[i].pull_back(form), form, s1);
    if (!cd) throw Error(ErrorKind::NotStabilized, G.elements()[i].to_string());
    per_element[i] = detail::to_cyclotomic(cd->first);
  }
  CharacterVector chi = detail::empty_character(G, classes);
  for (std::size_t c = 0; c < classes.size(); ++c) chi.values[c] = per_element[classes[c].front()];
  return chi;
}

enum class Verdict { Irreducible4, OnePlusThree, Excluded };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible4: return "Irreducible4";
    case Verdict::OnePlusThree: return "OnePlusThree";
    case Verdict::Excluded: return "Excluded";
  }
  return "?";
}

struct DecompSignature {
  Verdict verdict = Verdict::Excluded;
  std::string witness;  // empty unless Excluded
  Rational linear_multiplicity;
  Rational residual_dimension;
  Rational residual_norm;
};

/// Splits chi_V = chi_W - lambda (V = kernel of the form inside W) into its
/// linear part and a residual, and classifies the result.
template <class K>
DecompSignature decomposition_signature(const FiniteGroup<SignedPerm>& G, const LinearForm<K>& form) {
  const CharacterVector lambda = scaling_character(G, form);
  const CharacterVector chi_v = simplicial_character(G) - lambda;

  DecompSignature sig;
  CharacterVector residual = chi_v;
  for (const auto& mu : linear_characters(G)) {
    const Rational m = inner_product(chi_v, mu);
    if (m < 0 || denominator(m) != 1) throw std::logic_error("non-integral multiplicity");
    sig.linear_multiplicity += m;
    residual = residual - m * mu;
  }
  sig.residual_dimension = residual.degree().to_rational();
  sig.residual_norm = sig.residual_dimension == 0 ? Rational(0) : inner_product(residual, residual);

  if (sig.linear_multiplicity == 0 && sig.residual_dimension == 4 && sig.residual_norm == 1) {
    sig.verdict = Verdict::Irreducible4;
  } else if (sig.linear_multiplicity == 1 && sig.residual_dimension == 3 && sig.residual_norm == 1) {
    sig.verdict = Verdict::OnePlusThree;
  } else {
    sig.verdict = Verdict::Excluded;
    sig.witness = "linear constituents " + to_string(sig.linear_multiplicity) + ", residual dim " +
                  to_string(sig.residual_dimension) + " norm " + to_string(sig.residual_norm);
  }
  return sig;
}

}  // namespace coblekit
