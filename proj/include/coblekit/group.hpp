#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coblekit/error.hpp"

namespace coblekit {

/// A finite group given by its full element list. Element types need
/// operator*, inverse(e), ==, <, std::hash, degree() and E::identity(n).
/// Elements are deduplicated; element 0 is always the identity.
template <class E>
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<E>& elements() const noexcept { return elements_; }
  const std::vector<E>& generators() const noexcept { return generators_; }
  const E& identity() const { return elements_.front(); }
  std::size_t degree() const { return elements_.front().degree(); }

  bool contains(const E& e) const { return index_.count(e) != 0; }

  std::size_t index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "element not in group");
    return it->second;
  }

  /// Element set equality, ignoring order and generators.
  bool same_elements(const FiniteGroup& o) const {
    if (o.order() != order()) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const E& e) { return o.contains(e); });
  }

  template <class T>
  friend FiniteGroup<T> closure(const std::vector<T>& gens, const T& identity);

 private:
  std::vector<E> elements_;
  std::vector<E> generators_;
  std::unordered_map<E, std::size_t> index_;
};

/// Breadth-first closure from the identity, multiplying on the left by
/// each generator in turn; the element order is deterministic.
template <class E>
FiniteGroup<E> closure(const std::vector<E>& gens, const E& identity) {
  for (const auto& g : gens)
    if (g.degree() != identity.degree()) throw Error(ErrorKind::DimensionMismatch, "generators of different degree");
  FiniteGroup<E> G;
  G.generators_ = gens;
  G.elements_.push_back(identity);
  G.index_.emplace(identity, 0);
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (const auto& g : gens) {
      E h = g * G.elements_[i];
      if (G.index_.count(h)) continue;
      G.index_.emplace(h, G.elements_.size());
      G.elements_.push_back(std::move(h));
    }
  }
  return G;
}

template <class E>
FiniteGroup<E> closure(const std::vector<E>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "closure of no generators needs an explicit identity");
  return closure(gens, E::identity(gens.front().degree()));
}

/// The group on an explicit element list, which must already be closed.
/// A small generating set is chosen greedily in list order.
template <class E>
FiniteGroup<E> from_elements(const std::vector<E>& elements, const E& identity) {
  std::unordered_set<E> set(elements.begin(), elements.end());
  set.insert(identity);
  for (const auto& a : set)
    for (const auto& b : set)
      if (!set.count(a * b)) throw Error(ErrorKind::InvalidArgument, "element list is not closed under products");
  std::vector<E> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<E> gens;
  FiniteGroup<E> G = closure(gens, identity);
  for (const auto& e : sorted) {
    if (G.order() == sorted.size()) break;
    if (G.contains(e)) continue;
    gens.push_back(e);
    G = closure(gens, identity);
  }
  return G;
}

template <class E>
E conjugate(const E& g, const E& by) {
  return by * g * inverse(by);
}

template <class E>
FiniteGroup<E> conjugate(const FiniteGroup<E>& G, const E& by) {
  std::vector<E> gens;
  for (const auto& g : G.generators()) gens.push_back(conjugate(g, by));
  return closure(gens, G.identity());
}

template <class E>
E commutator(const E& a, const E& b) {
  return inverse(a) * inverse(b) * a * b;
}

/// Conjugacy classes as index lists into G.elements(), each sorted, the
/// classes ordered by (size, least element).
template <class E>
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup<E>& G) {
  const auto& els = G.elements();
  std::vector<bool> done(els.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls{i};
    done[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto& g : G.generators()) {
        const std::size_t j = G.index_of(conjugate(els[cls[k]], g));
        if (!done[j]) {
          done[j] = true;
          cls.push_back(j);
        }
      }
    std::sort(cls.begin(), cls.end(), [&](std::size_t a, std::size_t b) { return els[a] < els[b]; });
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return els[a.front()] < els[b.front()];
  });
  return classes;
}

/// Smallest normal subgroup of G containing the given elements.
template <class E>
FiniteGroup<E> normal_closure(const FiniteGroup<E>& G, std::vector<E> seeds) {
  FiniteGroup<E> N = closure(seeds, G.identity());
  for (;;) {
    std::vector<E> extra;
    for (const auto& n : N.generators())
      for (const auto& g : G.generators()) {
        E c = conjugate(n, g);
        if (!N.contains(c)) extra.push_back(std::move(c));
      }
    if (extra.empty()) return N;
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    N = closure(seeds, G.identity());
  }
}

template <class E>
FiniteGroup<E> derived_subgroup(const FiniteGroup<E>& G) {
  std::vector<E> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      E c = commutator(gens[i], gens[j]);
      if (!(c == G.identity())) comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

template <class E>
std::size_t element_order(const E& g) {
  const E id = E::identity(g.degree());
  E x = g;
  std::size_t k = 1;
  while (!(x == id)) {
    x = x * g;
    ++k;
  }
  return k;
}

/// Cosets of a normal subgroup N: coset id per element of G (ids in order
/// of first appearance) and one representative index per coset.
struct CosetLabels {
  std::vector<std::size_t> coset_of;
  std::vector<std::size_t> representative;
};

template <class E>
CosetLabels cosets(const FiniteGroup<E>& G, const FiniteGroup<E>& N) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  CosetLabels out;
  out.coset_of.assign(G.order(), unset);
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (out.coset_of[i] != unset) continue;
    const std::size_t id = out.representative.size();
    out.representative.push_back(i);
    for (const auto& n : N.elements()) out.coset_of[G.index_of(G.elements()[i] * n)] = id;
  }
  return out;
}

/// Invariant factors d1 | d2 | ... of G/[G,G]; empty for perfect groups.
template <class E>
std::vector<std::size_t> abelian_invariants(const FiniteGroup<E>& G) {
  const FiniteGroup<E> D = derived_subgroup(G);
  const std::size_t a = G.order() / D.order();
  if (a == 1) return {};

  // count(k) = #{x in G/D : x^k = 1}
  auto count = [&](std::size_t k) {
    std::size_t c = 0;
    for (const auto& g : G.elements()) {
      E x = G.identity();
      for (std::size_t i = 0; i < k; ++i) x = x * g;
      c += D.contains(x);
    }
    return c / D.order();
  };

  std::vector<std::vector<std::size_t>> prime_powers;  // per prime, descending exponents as powers
  std::size_t rest = a;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // s_j = log_p count(p^j); number of cyclic factors of exponent >= j is s_j - s_{j-1}.
    std::vector<std::size_t> at_least;
    std::size_t prev = 0, pj = 1;
    for (;;) {
      pj *= p;
      std::size_t c = count(pj), s = 0;
      while (c > 1) {
        c /= p;
        ++s;
      }
      if (s == prev) break;
      at_least.push_back(s - prev);
      prev = s;
    }
    std::vector<std::size_t> powers;  // one entry per cyclic factor
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const std::size_t exactly = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      std::size_t q = 1;
      for (std::size_t t = 0; t <= j; ++t) q *= p;
      for (std::size_t t = 0; t < exactly; ++t) powers.push_back(q);
    }
    std::sort(powers.rbegin(), powers.rend());
    prime_powers.push_back(std::move(powers));
  }
  std::size_t len = 0;
  for (const auto& pp : prime_powers) len = std::max(len, pp.size());
  std::vector<std::size_t> factors(len, 1);
  for (const auto& pp : prime_powers)
    for (std::size_t i = 0; i < pp.size(); ++i) factors[i] *= pp[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

/// Isomorphism invariants used to certify named-group labels.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> abelianization;
  std::size_t class_count = 0;
  std::map<std::size_t, std::size_t> order_histogram;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

template <class E>
Fingerprint group_fingerprint(const FiniteGroup<E>& G) {
  Fingerprint f;
  f.order = G.order();
  f.abelianization = abelian_invariants(G);
  f.class_count = conjugacy_classes(G).size();
  for (const auto& g : G.elements()) ++f.order_histogram[element_order(g)];
  return f;
}

template <class E>
std::size_t exponent(const FiniteGroup<E>& G) {
  std::size_t e = 1;
  for (const auto& g : G.elements()) e = std::lcm(e, element_order(g));
  return e;
}

}  // namespace coblekit
