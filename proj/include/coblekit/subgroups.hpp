#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/group.hpp"

namespace coblekit {

/// True iff some ambient-conjugate of H lies inside K.
template <class E>
bool is_subconjugate(const FiniteGroup<E>& H, const FiniteGroup<E>& K, const FiniteGroup<E>& ambient) {
  if (K.order() % H.order() != 0) return false;
  for (const auto& x : ambient.elements()) {
    const bool inside = std::all_of(H.generators().begin(), H.generators().end(),
                                    [&](const E& h) { return K.contains(conjugate(h, x)); });
    if (inside) return true;
  }
  return false;
}

template <class E>
bool are_conjugate(const FiniteGroup<E>& H, const FiniteGroup<E>& K, const FiniteGroup<E>& ambient) {
  return H.order() == K.order() && is_subconjugate(H, K, ambient);
}

namespace detail {

struct Bits {
  std::vector<std::uint64_t> words;
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b.words) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

// Multiplication table over the ambient group's element indices.
template <class E>
struct Table {
  explicit Table(const FiniteGroup<E>& G) : n(G.order()), mul(n * n), inv(n) {
    const auto& els = G.elements();
    for (std::size_t i = 0; i < n; ++i) {
      inv[i] = G.index_of(inverse(els[i]));
      for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = G.index_of(els[i] * els[j]);
    }
  }
  std::size_t n;
  std::vector<std::size_t> mul;
  std::vector<std::size_t> inv;

  std::size_t operator()(std::size_t a, std::size_t b) const { return mul[a * n + b]; }

  Bits closure(const std::vector<std::size_t>& gens, std::size_t* order = nullptr) const {
    Bits b{std::vector<std::uint64_t>((n + 63) / 64, 0)};
    std::vector<std::size_t> members{0};
    b.set(0);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (auto g : gens) {
        const std::size_t y = (*this)(g, members[k]);
        if (!b.test(y)) {
          b.set(y);
          members.push_back(y);
        }
      }
    if (order) *order = members.size();
    return b;
  }

  Bits conjugate(const Bits& h, std::size_t x) const {
    Bits out{std::vector<std::uint64_t>(h.words.size(), 0)};
    for (std::size_t i = 0; i < n; ++i)
      if (h.test(i)) out.set((*this)((*this)(x, i), inv[x]));
    return out;
  }
};

}  // namespace detail

/// One representative per conjugacy class of subgroups of G. Classes are
/// grown from the cyclic subgroups by adjoining one element at a time to
/// each representative; every subgroup is reached up to conjugacy.
/// Sorted by (order, fingerprint) and then by discovery order.
template <class E>
std::vector<FiniteGroup<E>> subgroups_up_to_conjugacy(const FiniteGroup<E>& G, std::size_t order_bound = 1000) {
  if (G.order() > order_bound)
    throw Error(ErrorKind::OrderBoundExceeded, std::to_string(G.order()) + " > " + std::to_string(order_bound));
  const detail::Table<E> table(G);
  const std::size_t n = G.order();

  struct Rep {
    detail::Bits bits;
    std::vector<std::size_t> gens;
  };
  std::vector<Rep> reps;
  std::unordered_set<detail::Bits, detail::BitsHash> known;

  auto add = [&](std::vector<std::size_t> gens) {
    detail::Bits bits = table.closure(gens);
    if (known.count(bits)) return;
    for (std::size_t x = 0; x < n; ++x) known.insert(table.conjugate(bits, x));
    reps.push_back({std::move(bits), std::move(gens)});
  };

  add({});
  for (std::size_t g = 1; g < n; ++g) add({g});
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (std::size_t g = 1; g < n; ++g) {
      if (reps[r].bits.test(g)) continue;
      std::vector<std::size_t> gens = reps[r].gens;
      gens.push_back(g);
      add(std::move(gens));
    }

  struct Entry {
    FiniteGroup<E> group;
    Fingerprint fp;
    std::size_t discovery;
  };
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::vector<E> gens;
    for (auto i : reps[r].gens) gens.push_back(G.elements()[i]);
    FiniteGroup<E> H = closure(gens, G.identity());
    Fingerprint fp = group_fingerprint(H);
    entries.push_back({std::move(H), std::move(fp), r});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.fp.order != b.fp.order) return a.fp.order < b.fp.order;
    if (a.fp != b.fp) return a.fp < b.fp;
    return a.discovery < b.discovery;
  });
  std::vector<FiniteGroup<E>> out;
  for (auto& e : entries) out.push_back(std::move(e.group));
  return out;
}

}  // namespace coblekit
