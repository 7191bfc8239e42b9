#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/matrix.hpp"
#include "coblekit/rational.hpp"

namespace coblekit {

namespace detail {

// Integer coefficients, constant term first.
using IntPoly = std::vector<long long>;

inline const IntPoly& cyclotomic_polynomial(int n) {
  thread_local std::map<int, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided by every Phi_d with d | n, d < n.
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const long long lead = num[k];
      quot[k - dd] = lead;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * den[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// Reduce a rational polynomial in zeta_n modulo Phi_n.
inline VectorQ reduce_mod_cyclotomic(VectorQ poly, int n) {
  const IntPoly& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const Rational lead = poly[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= lead * phi[j];
  }
  poly.resize(deg);
  return poly;
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N),
/// stored in the power basis 1, zeta, ..., zeta^(phi(N)-1). Mixed-order
/// arithmetic lifts both operands to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& q) : order_(1), c_{q} {}  // NOLINT: implicit embedding of Q
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT

  /// Arbitrary polynomial in zeta_N (any length), reduced on construction.
  Cyclotomic(int order, VectorQ power_coefficients)
      : order_(order), c_(detail::reduce_mod_cyclotomic(pad(std::move(power_coefficients), order), order)) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  }

  static Cyclotomic root_of_unity(int order, long long k) {
    const long long m = ((k % order) + order) % order;
    VectorQ p(static_cast<std::size_t>(m) + 1);
    p[static_cast<std::size_t>(m)] = 1;
    return Cyclotomic(order, std::move(p));
  }

  int order() const noexcept { return order_; }
  const VectorQ& coefficients() const noexcept { return c_; }

  bool is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "cyclotomic value is not rational: " + to_string());
    return c_[0];
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  Cyclotomic embed(int target) const {
    if (target % order_ != 0)
      throw Error(ErrorKind::InvalidArgument, "cannot embed order " + std::to_string(order_) + " into " + std::to_string(target));
    if (target == order_) return *this;
    const std::size_t step = static_cast<std::size_t>(target / order_);
    VectorQ p((c_.size() - 1) * step + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
    return Cyclotomic(target, std::move(p));
  }

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const {
    VectorQ p(static_cast<std::size_t>(order_));
    for (std::size_t k = 0; k < c_.size(); ++k) p[(static_cast<std::size_t>(order_) - k) % static_cast<std::size_t>(order_)] += c_[k];
    return Cyclotomic(order_, std::move(p));
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    const std::size_t d = c_.size();
    // Columns: this * zeta^j in the power basis; solve M y = 1.
    std::vector<VectorQ> cols;
    for (std::size_t j = 0; j < d; ++j) {
      VectorQ p(j + d);
      for (std::size_t k = 0; k < d; ++k) p[j + k] = c_[k];
      cols.push_back(detail::reduce_mod_cyclotomic(std::move(p), order_));
    }
    VectorQ e(d);
    e[0] = 1;
    auto y = solve(MatrixQ::from_columns(cols), e);
    return Cyclotomic(order_, std::move(*y));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const int n = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.embed(n), y = b.embed(n);
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  Cyclotomic operator-() const {
    Cyclotomic x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const int n = std::lcm(a.order_, b.order_);
    const Cyclotomic x = a.embed(n), y = b.embed(n);
    VectorQ p(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) p[i + j] += x.c_[i] * y.c_[j];
    }
    return Cyclotomic(n, std::move(p));
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const int n = std::lcm(a.order_, b.order_);
    return a.embed(n).c_ == b.embed(n).c_;
  }

  /// e.g. "1 + 2*z3^1" for 1 + 2 zeta_3; rationals print as plain rationals.
  std::string to_string() const {
    if (is_rational()) return coblekit::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << coblekit::to_string(c_[k]);
      if (k > 0) os << "*z" << order_ << "^" << k;
    }
    return os.str();
  }

 private:
  static VectorQ pad(VectorQ p, int order) {
    const std::size_t deg = detail::cyclotomic_polynomial(order).size() - 1;
    if (p.size() < deg) p.resize(deg);
    return p;
  }

  int order_;
  VectorQ c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace coblekit
