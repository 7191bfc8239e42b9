#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "coblekit/group.hpp"
#include "coblekit/lines.hpp"
#include "coblekit/partitions.hpp"
#include "coblekit/poly.hpp"
#include "coblekit/signed_perm.hpp"

namespace coblekit {

/// Lines l_alpha against hyperplanes H_beta, indexed by the canonical
/// orders of all_pair_partitions() and all_triple_partitions().
struct Incidence {
  std::vector<PairPartition> lines;
  std::vector<TriplePartition> planes;
  std::vector<std::vector<bool>> incident;  // [line][plane]

  std::size_t row_sum(std::size_t line) const {
    return static_cast<std::size_t>(std::count(incident[line].begin(), incident[line].end(), true));
  }
  std::size_t column_sum(std::size_t plane) const {
    std::size_t s = 0;
    for (const auto& row : incident) s += row[plane];
    return s;
  }
  std::uint32_t planes_through(std::size_t line) const {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < planes.size(); ++j)
      if (incident[line][j]) m |= 1u << j;
    return m;
  }
  std::uint32_t lines_on(std::size_t plane) const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (incident[i][plane]) m |= 1u << i;
    return m;
  }
};

/// beta is a transversal of alpha: every pair meets every triple once.
inline bool is_transversal(const PairPartition& alpha, const TriplePartition& beta) {
  for (const auto& pr : alpha.pairs)
    if (beta.in_first(pr[0]) == beta.in_first(pr[1])) return false;
  return true;
}

inline bool line_in_plane(const PairPartition& alpha, const TriplePartition& beta) {
  return restrict(SparsePoly::from_linear_form(triple_form(beta)), line_parametrization(alpha)).is_zero();
}

/// Incidence from the geometric criterion (the triple form vanishes on the
/// line), cross-checked against the combinatorial transversal criterion.
inline Incidence build_incidence() {
  Incidence inc{all_pair_partitions(), all_triple_partitions(), {}};
  for (const auto& alpha : inc.lines) {
    std::vector<bool> row;
    for (const auto& beta : inc.planes) {
      const bool geometric = line_in_plane(alpha, beta);
      if (geometric != is_transversal(alpha, beta))
        throw std::logic_error("incidence criteria disagree at " + alpha.to_string() + " / " + beta.to_string());
      row.push_back(geometric);
    }
    inc.incident.push_back(std::move(row));
  }
  return inc;
}

/// Number of common lines for every unordered pair of distinct planes.
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairwise_plane_intersections(const Incidence& inc) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t a = 0; a < inc.planes.size(); ++a)
    for (std::size_t b = a + 1; b < inc.planes.size(); ++b)
      out[{a, b}] = static_cast<std::size_t>(std::popcount(inc.lines_on(a) & inc.lines_on(b)));
  return out;
}

/// Incidence-preserving permutation of 15 lines and 10 planes, stored as
/// one permutation of 25 points: lines 0..14, planes 15..24.
class ConfigAut {
 public:
  static constexpr std::size_t kLines = 15;
  static constexpr std::size_t kPlanes = 10;

  ConfigAut() = default;

  ConfigAut(const std::vector<std::uint8_t>& line_images, const std::vector<std::uint8_t>& plane_images) {
    if (line_images.size() != kLines || plane_images.size() != kPlanes)
      throw Error(ErrorKind::DimensionMismatch, "configuration automorphism sizes");
    images_ = line_images;
    for (auto p : plane_images) images_.push_back(static_cast<std::uint8_t>(p + kLines));
  }

  static ConfigAut identity(std::size_t degree = kLines + kPlanes) {
    if (degree != kLines + kPlanes) throw Error(ErrorKind::DimensionMismatch, "configuration automorphism degree");
    ConfigAut g;
    g.images_.resize(degree);
    std::iota(g.images_.begin(), g.images_.end(), std::uint8_t{0});
    return g;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t line_image(std::size_t i) const { return images_[i]; }
  std::size_t plane_image(std::size_t j) const { return images_[kLines + j] - kLines; }

  ConfigAut inverse() const {
    ConfigAut g = *this;
    for (std::size_t i = 0; i < images_.size(); ++i) g.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return g;
  }

  friend ConfigAut operator*(const ConfigAut& a, const ConfigAut& b) {
    ConfigAut g = b;
    for (std::size_t i = 0; i < b.images_.size(); ++i) g.images_[i] = a.images_[b.images_[i]];
    return g;
  }

  bool preserves(const Incidence& inc) const {
    for (std::size_t i = 0; i < kLines; ++i)
      for (std::size_t j = 0; j < kPlanes; ++j)
        if (inc.incident[i][j] != inc.incident[line_image(i)][plane_image(j)]) return false;
    return true;
  }

  friend bool operator==(const ConfigAut&, const ConfigAut&) = default;
  friend auto operator<=>(const ConfigAut&, const ConfigAut&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : images_) h = (h ^ x) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<std::uint8_t> images_;
};

inline ConfigAut inverse(const ConfigAut& g) { return g.inverse(); }

}  // namespace coblekit

template <>
struct std::hash<coblekit::ConfigAut> {
  std::size_t operator()(const coblekit::ConfigAut& g) const noexcept { return g.hash(); }
};

namespace coblekit {

/// Relabeling action of an S6 element on lines and planes.
inline ConfigAut induced_from_s6(const SignedPerm& sigma, const Incidence& inc) {
  if (sigma.degree() != 6) throw Error(ErrorKind::DimensionMismatch, "S6 element expected");
  if (sigma.has_coordinate_signs()) throw Error(ErrorKind::SignedElement, sigma.to_string());
  std::vector<std::uint8_t> li, pi;
  for (const auto& a : inc.lines) li.push_back(static_cast<std::uint8_t>(index_of(inc.lines, a.relabel(sigma))));
  for (const auto& b : inc.planes) pi.push_back(static_cast<std::uint8_t>(index_of(inc.planes, b.relabel(sigma))));
  return ConfigAut(li, pi);
}

/// Every incidence-preserving bijection, by backtracking over plane images
/// first. A partial assignment must preserve the number of lines common to
/// every pair and every triple of assigned planes; the line permutation is
/// then forced by the plane sets through each line.
inline FiniteGroup<ConfigAut> configuration_automorphisms(const Incidence& inc) {
  const std::size_t np = inc.planes.size(), nl = inc.lines.size();
  std::vector<std::uint32_t> on(np);
  for (std::size_t j = 0; j < np; ++j) on[j] = inc.lines_on(j);
  std::vector<std::uint32_t> through(nl);
  for (std::size_t i = 0; i < nl; ++i) through[i] = inc.planes_through(i);

  std::vector<ConfigAut> found;
  std::vector<std::uint8_t> img(np);
  std::vector<bool> used(np, false);

  auto consistent = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (std::popcount(on[i] & on[k]) != std::popcount(on[img[i]] & on[img[k]])) return false;
      for (std::size_t j = i + 1; j < k; ++j)
        if (std::popcount(on[i] & on[j] & on[k]) != std::popcount(on[img[i]] & on[img[j]] & on[img[k]]))
          return false;
    }
    return true;
  };

  auto complete = [&]() {
    std::vector<std::uint8_t> li(nl);
    std::vector<bool> hit(nl, false);
    for (std::size_t i = 0; i < nl; ++i) {
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < np; ++j)
        if (through[i] >> j & 1u) mask |= 1u << img[j];
      const auto it = std::find(through.begin(), through.end(), mask);
      if (it == through.end()) return;
      const auto target = static_cast<std::size_t>(it - through.begin());
      if (hit[target]) return;
      hit[target] = true;
      li[i] = static_cast<std::uint8_t>(target);
    }
    ConfigAut g(li, img);
    if (g.preserves(inc)) found.push_back(std::move(g));
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == np) {
      complete();
      return;
    }
    for (std::size_t t = 0; t < np; ++t) {
      if (used[t]) continue;
      img[k] = static_cast<std::uint8_t>(t);
      if (!consistent(k)) continue;
      used[t] = true;
      self(self, k + 1);
      used[t] = false;
    }
  };
  search(search, 0);
  return from_elements(found, ConfigAut::identity());
}

/// The image of S6 under induced_from_s6.
inline std::vector<ConfigAut> s6_image(const Incidence& inc) {
  std::vector<ConfigAut> out;
  for (const auto& g : all_permutations(6)) out.push_back(induced_from_s6(g, inc));
  return out;
}

}  // namespace coblekit
