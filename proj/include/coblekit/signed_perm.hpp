#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/matrix.hpp"

namespace coblekit {

/// Signed permutation of n coordinates plus a sign on the weight-2
/// coordinate y of the double cover. As a linear map it sends e_i to
/// signs[i] * e_{images[i]}; products compose right to left.
class SignedPerm {
 public:
  SignedPerm() = default;

  /// 0-based images; signs default to +1.
  explicit SignedPerm(std::vector<std::uint8_t> images, std::vector<std::int8_t> signs = {}, int aux_sign = 1)
      : images_(std::move(images)), signs_(std::move(signs)), aux_(static_cast<std::int8_t>(aux_sign)) {
    if (signs_.empty()) signs_.assign(images_.size(), 1);
    if (signs_.size() != images_.size()) throw Error(ErrorKind::DimensionMismatch, "sign vector length");
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || seen[i]) throw Error(ErrorKind::InvalidArgument, "images are not a bijection");
      seen[i] = true;
    }
    for (auto s : signs_)
      if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +-1");
    if (aux_ != 1 && aux_ != -1) throw Error(ErrorKind::InvalidArgument, "aux sign must be +-1");
  }

  static SignedPerm identity(std::size_t n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    return SignedPerm(std::move(img));
  }

  /// Cycles use 1-based points, as in "(1 2)(3 4 5)".
  static SignedPerm from_cycles(std::size_t n, const std::vector<std::vector<unsigned>>& cycles, int aux_sign = 1) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 1 || c[k] > n) throw Error(ErrorKind::InvalidArgument, "cycle point out of range");
        img[c[k] - 1] = static_cast<std::uint8_t>(c[(k + 1) % c.size()] - 1);
      }
    return SignedPerm(std::move(img), {}, aux_sign);
  }

  /// The deck involution y -> -y on n coordinates.
  static SignedPerm galois(std::size_t n) { return SignedPerm::identity(n).with_aux(-1); }

  SignedPerm with_aux(int aux_sign) const {
    SignedPerm g = *this;
    g.aux_ = static_cast<std::int8_t>(aux_sign);
    return g;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t image(std::size_t i) const { return images_[i]; }
  int sign(std::size_t i) const { return signs_[i]; }
  int aux_sign() const noexcept { return aux_; }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  bool has_coordinate_signs() const {
    return std::any_of(signs_.begin(), signs_.end(), [](std::int8_t s) { return s != 1; });
  }

  std::size_t fixed_points() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) k += images_[i] == i;
    return k;
  }

  /// Parity of the underlying permutation.
  int parity() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

  /// Non-trivial cycles, 1-based, each starting at its smallest point.
  std::vector<std::vector<unsigned>> cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<unsigned> c;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(static_cast<unsigned>(j + 1));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t order() const {
    SignedPerm x = *this;
    const SignedPerm id = identity(degree());
    std::size_t k = 1;
    while (!(x == id)) {
      x = x * *this;
      ++k;
    }
    return k;
  }

  SignedPerm inverse() const {
    SignedPerm g = *this;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      g.images_[images_[i]] = static_cast<std::uint8_t>(i);
      g.signs_[images_[i]] = signs_[i];
    }
    return g;
  }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    if (a.degree() != b.degree()) throw Error(ErrorKind::DimensionMismatch, "composing signed permutations of different degree");
    SignedPerm g = b;
    for (std::size_t i = 0; i < b.images_.size(); ++i) {
      g.images_[i] = a.images_[b.images_[i]];
      g.signs_[i] = static_cast<std::int8_t>(b.signs_[i] * a.signs_[b.images_[i]]);
    }
    g.aux_ = static_cast<std::int8_t>(a.aux_ * b.aux_);
    return g;
  }

  /// Image of a coordinate vector under the linear map.
  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[images_[i]] = signs_[i] == 1 ? v[i] : T(-v[i]);
    return out;
  }

  /// Coefficients of f o g for a linear form f: (f o g)_i = signs[i] f_{images[i]}.
  template <class T>
  std::vector<T> pull_back(const std::vector<T>& form) const {
    std::vector<T> out(form.size());
    for (std::size_t i = 0; i < form.size(); ++i) out[i] = signs_[i] == 1 ? form[images_[i]] : T(-form[images_[i]]);
    return out;
  }

  MatrixQ matrix() const {
    const std::size_t n = degree();
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[images_[i] * n + i] = signs_[i];
    return MatrixQ(n, n, std::move(e));
  }

  /// "(1 2)(3 4) | ++--++ | aux:-"; the identity permutation prints "()".
  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k]);
      s += ")";
    }
    if (s.empty()) s = "()";
    s += " | ";
    for (auto x : signs_) s += x == 1 ? '+' : '-';
    s += std::string(" | aux:") + (aux_ == 1 ? "+" : "-");
    return s;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

  // Images first, then signs with '+' before '-', then aux; the identity
  // is the least element of every degree.
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    for (std::size_t i = 0; i < a.signs_.size() && i < b.signs_.size(); ++i)
      if (a.signs_[i] != b.signs_[i]) return a.signs_[i] > b.signs_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.signs_.size() <=> b.signs_.size(); c != 0) return c;
    if (a.aux_ != b.aux_) return a.aux_ > b.aux_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      h = (h ^ images_[i]) * 1099511628211ull;
      h = (h ^ static_cast<std::uint8_t>(signs_[i])) * 1099511628211ull;
    }
    return (h ^ static_cast<std::uint8_t>(aux_)) * 1099511628211ull;
  }

 private:
  std::vector<std::uint8_t> images_;
  std::vector<std::int8_t> signs_;
  std::int8_t aux_ = 1;
};

inline SignedPerm inverse(const SignedPerm& g) { return g.inverse(); }

/// All n! unsigned permutations in lexicographic order of image vectors.
inline std::vector<SignedPerm> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<SignedPerm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace coblekit

template <>
struct std::hash<coblekit::SignedPerm> {
  std::size_t operator()(const coblekit::SignedPerm& g) const noexcept { return g.hash(); }
};
