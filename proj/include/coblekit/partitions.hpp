#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/signed_perm.hpp"

namespace coblekit {

/// Three disjoint pairs covering {1..6}; stored 0-based, each pair sorted
/// and the pairs sorted. Labels the singular lines.
struct PairPartition {
  std::array<std::array<std::uint8_t, 2>, 3> pairs{};

  static PairPartition canonical(std::array<std::array<std::uint8_t, 2>, 3> p) {
    for (auto& pr : p) std::sort(pr.begin(), pr.end());
    std::sort(p.begin(), p.end());
    std::vector<bool> seen(6, false);
    for (const auto& pr : p)
      for (auto x : pr) {
        if (x >= 6 || seen[x]) throw Error(ErrorKind::InvalidArgument, "not a partition of {1..6} into pairs");
        seen[x] = true;
      }
    return PairPartition{p};
  }

  /// Parses "12|34|56".
  static PairPartition parse(const std::string& s) {
    if (s.size() != 8 || s[2] != '|' || s[5] != '|') throw Error(ErrorKind::ParseError, "pair partition '" + s + "'");
    std::array<std::array<std::uint8_t, 2>, 3> p{};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 2; ++j) p[k][j] = static_cast<std::uint8_t>(s[3 * k + j] - '1');
    return canonical(p);
  }

  /// Partner of point x.
  std::uint8_t partner(std::uint8_t x) const {
    for (const auto& pr : pairs) {
      if (pr[0] == x) return pr[1];
      if (pr[1] == x) return pr[0];
    }
    throw Error(ErrorKind::InvalidArgument, "point not in partition");
  }

  bool contains_pair(std::uint8_t a, std::uint8_t b) const { return partner(a) == b; }

  PairPartition relabel(const SignedPerm& g) const {
    auto p = pairs;
    for (auto& pr : p)
      for (auto& x : pr) x = static_cast<std::uint8_t>(g.image(x));
    return canonical(p);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) s += "|";
      s += std::to_string(pairs[k][0] + 1) + std::to_string(pairs[k][1] + 1);
    }
    return s;
  }

  friend auto operator<=>(const PairPartition&, const PairPartition&) = default;
};

/// Two disjoint triples covering {1..6}; the triple containing 1 first.
/// Labels the ten double-quadric hyperplanes.
struct TriplePartition {
  std::array<std::array<std::uint8_t, 3>, 2> triples{};

  static TriplePartition canonical(std::array<std::array<std::uint8_t, 3>, 2> t) {
    for (auto& tr : t) std::sort(tr.begin(), tr.end());
    std::sort(t.begin(), t.end());
    std::vector<bool> seen(6, false);
    for (const auto& tr : t)
      for (auto x : tr) {
        if (x >= 6 || seen[x]) throw Error(ErrorKind::InvalidArgument, "not a partition of {1..6} into triples");
        seen[x] = true;
      }
    return TriplePartition{t};
  }

  /// Parses "123|456".
  static TriplePartition parse(const std::string& s) {
    if (s.size() != 7 || s[3] != '|') throw Error(ErrorKind::ParseError, "triple partition '" + s + "'");
    std::array<std::array<std::uint8_t, 3>, 2> t{};
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 3; ++j) t[k][j] = static_cast<std::uint8_t>(s[4 * k + j] - '1');
    return canonical(t);
  }

  bool in_first(std::uint8_t x) const {
    return std::find(triples[0].begin(), triples[0].end(), x) != triples[0].end();
  }

  TriplePartition relabel(const SignedPerm& g) const {
    auto t = triples;
    for (auto& tr : t)
      for (auto& x : tr) x = static_cast<std::uint8_t>(g.image(x));
    return canonical(t);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < 2; ++k) {
      if (k) s += "|";
      for (auto x : triples[k]) s += std::to_string(x + 1);
    }
    return s;
  }

  friend auto operator<=>(const TriplePartition&, const TriplePartition&) = default;
};

/// All 15 pair partitions in ascending canonical order.
inline std::vector<PairPartition> all_pair_partitions() {
  std::vector<PairPartition> out;
  std::vector<std::uint8_t> pts{0, 1, 2, 3, 4, 5};
  do {
    if (pts[0] < pts[1] && pts[2] < pts[3] && pts[4] < pts[5] && pts[0] < pts[2] && pts[2] < pts[4])
      out.push_back(PairPartition::canonical({{{pts[0], pts[1]}, {pts[2], pts[3]}, {pts[4], pts[5]}}}));
  } while (std::next_permutation(pts.begin(), pts.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// All 10 triple partitions in ascending canonical order.
inline std::vector<TriplePartition> all_triple_partitions() {
  std::vector<TriplePartition> out;
  for (std::uint8_t a = 1; a < 6; ++a)
    for (std::uint8_t b = a + 1; b < 6; ++b) {
      std::array<std::uint8_t, 3> first{0, a, b}, second{};
      std::size_t k = 0;
      for (std::uint8_t x = 1; x < 6; ++x)
        if (x != a && x != b) second[k++] = x;
      out.push_back(TriplePartition::canonical({first, second}));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t index_of(const std::vector<PairPartition>& all, const PairPartition& p) {
  return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
}

inline std::size_t index_of(const std::vector<TriplePartition>& all, const TriplePartition& t) {
  return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), t) - all.begin());
}

}  // namespace coblekit
