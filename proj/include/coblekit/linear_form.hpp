#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/rational.hpp"

namespace coblekit {

/// Coefficient vector of a linear form sum_i a_i x_{i+1} over a field K.
template <class K>
using LinearForm = std::vector<K>;

using LinearFormQ = LinearForm<Rational>;

/// s1 = x1 + ... + xn.
template <class K = Rational>
LinearForm<K> power_sum_form(std::size_t n) {
  return LinearForm<K>(n, K(1));
}

/// The coordinate form x_{index+1}.
template <class K = Rational>
LinearForm<K> coordinate_form(std::size_t n, std::size_t index) {
  LinearForm<K> f(n, K(0));
  f.at(index) = K(1);
  return f;
}

template <class K>
bool is_zero_form(const LinearForm<K>& f) {
  for (const auto& a : f)
    if (!is_zero(a)) return false;
  return true;
}

/// Finds (c, d) with f = c*g + d*m and c != 0, if any.
template <class K>
std::optional<std::pair<K, K>> proportional_mod(const LinearForm<K>& f, const LinearForm<K>& g,
                                                const LinearForm<K>& m) {
  const std::size_t n = f.size();
  if (g.size() != n || m.size() != n) throw Error(ErrorKind::DimensionMismatch, "proportional_mod: form lengths");
  std::size_t i = 0;
  while (i < n && is_zero(m[i])) ++i;
  if (i == n) throw Error(ErrorKind::InvalidArgument, "proportional_mod: modulus form is zero");

  auto reduce = [&](const LinearForm<K>& h) {
    const K k = h[i] / m[i];
    LinearForm<K> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = h[j] - k * m[j];
    return std::pair{out, k};
  };
  const auto [f_red, f_k] = reduce(f);
  const auto [g_red, g_k] = reduce(g);

  std::optional<std::pair<K, K>> result;
  if (is_zero_form(g_red)) {
    // g is a multiple of m, so f must be one too.
    if (!is_zero_form(f_red)) return std::nullopt;
    result = std::pair<K, K>{K(1), f_k - g_k};
  } else {
    std::size_t j = 0;
    while (is_zero(g_red[j])) ++j;
    const K c = f_red[j] / g_red[j];
    if (is_zero(c)) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
      if (!(f_red[k] == c * g_red[k])) return std::nullopt;
    result = std::pair<K, K>{c, f_k - c * g_k};
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!(f[k] == result->first * g[k] + result->second * m[k]))
      throw std::logic_error("proportional_mod: verification failed");
  return result;
}

/// Parses "x1+2x2", "x1 - 1/2*x3", "-x6"; coefficients are signed rationals.
inline LinearFormQ parse_linear_form(const std::string& text, std::size_t nvars = 6) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty linear form");

  LinearFormQ form(nvars);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff = 1;
    const std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) {
      coeff = parse_rational(s.substr(start, pos - start));
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) fail("expected variable x<k>");
    ++pos;
    const std::size_t vstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == vstart) fail("missing variable index");
    const std::size_t idx = std::stoul(s.substr(vstart, pos - vstart));
    if (idx < 1 || idx > nvars) fail("variable index out of range");
    form[idx - 1] += sign * coeff;
  }
  return form;
}

/// Compact rendering such as "x1+2x2" or "x1-1/2x3".
inline std::string to_string(const LinearFormQ& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational& a = f[i];
    if (a == 0) continue;
    const Rational mag = abs(a);
    if (a < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != 1) out += coblekit::to_string(mag);
    out += "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace coblekit
