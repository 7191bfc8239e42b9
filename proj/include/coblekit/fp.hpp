#pragma once

#include <cstdint>
#include <string>

#include "coblekit/error.hpp"
#include "coblekit/rational.hpp"

namespace coblekit {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue modulo a prime p >= 5. Mod 2 and mod 3 are rejected: the
/// coefficient 4 and the square in 4*s4 - s2^2 degenerate there.
class FpElement {
 public:
  FpElement(std::int64_t value, std::uint64_t modulus) : p_(modulus) {
    if (modulus < 5 || !is_prime(modulus))
      throw Error(ErrorKind::InvalidArgument,
                  "modulus must be a prime >= 5, got " + std::to_string(modulus));
    const auto m = static_cast<std::int64_t>(modulus);
    r_ = static_cast<std::uint64_t>(((value % m) + m) % m);
  }

  /// Reduces num/den; throws if p divides the denominator.
  static FpElement from_rational(const Rational& q, std::uint64_t modulus) {
    const Integer m(modulus);
    Integer num = numerator(q) % m;
    if (num < 0) num += m;
    Integer den = denominator(q) % m;
    if (den == 0)
      throw Error(ErrorKind::InvalidArgument, "denominator divisible by " + std::to_string(modulus));
    FpElement n(static_cast<std::int64_t>(num), modulus);
    FpElement d(static_cast<std::int64_t>(den), modulus);
    return n / d;
  }

  std::uint64_t residue() const noexcept { return r_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return r_ == 0; }

  FpElement pow(std::uint64_t e) const {
    FpElement result = unchecked(1, p_);
    FpElement base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  FpElement inverse() const {
    if (r_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return pow(p_ - 2);
  }

  friend FpElement operator+(FpElement a, FpElement b) {
    check(a, b);
    return unchecked((a.r_ + b.r_) % a.p_, a.p_);
  }
  friend FpElement operator-(FpElement a, FpElement b) {
    check(a, b);
    return unchecked((a.r_ + a.p_ - b.r_) % a.p_, a.p_);
  }
  friend FpElement operator*(FpElement a, FpElement b) {
    check(a, b);
    return unchecked(static_cast<std::uint64_t>(
                         (static_cast<unsigned __int128>(a.r_) * b.r_) % a.p_),
                     a.p_);
  }
  friend FpElement operator/(FpElement a, FpElement b) { return a * b.inverse(); }
  FpElement operator-() const { return unchecked((p_ - r_) % p_, p_); }

  friend bool operator==(const FpElement&, const FpElement&) = default;

 private:
  FpElement() = default;

  static FpElement unchecked(std::uint64_t r, std::uint64_t p) {
    FpElement x;
    x.r_ = r;
    x.p_ = p;
    return x;
  }
  static void check(const FpElement& a, const FpElement& b) {
    if (a.p_ != b.p_) throw Error(ErrorKind::InvalidArgument, "mixed moduli");
  }

  std::uint64_t r_ = 0;
  std::uint64_t p_ = 5;
};

}  // namespace coblekit
