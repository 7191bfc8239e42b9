#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/linear_form.hpp"
#include "coblekit/matrix.hpp"
#include "coblekit/rational.hpp"

namespace coblekit {

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// ascending lexicographic order of exponent vectors; zero coefficients
/// are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    SparsePoly p(nvars);
    p.add_term(e, 1);
    return p;
  }

  static SparsePoly monomial(const Exponents& e, const Rational& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  static SparsePoly from_linear_form(const LinearFormQ& f) {
    SparsePoly p(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) p += variable(f.size(), i) * f[i];
    return p;
  }

  /// Sum of x_i^k over all variables.
  static SparsePoly power_sum(std::size_t nvars, unsigned k) {
    SparsePoly p(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      Exponents e(nvars, 0);
      e[i] = k;
      p.add_term(e, 1);
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest total degree, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const { return *this * Rational(-1); }

  friend SparsePoly operator*(const SparsePoly& a, const Rational& s) {
    SparsePoly out(a.nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
    return out;
  }
  friend SparsePoly operator*(const Rational& s, const SparsePoly& a) { return a * s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly out = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  static unsigned total(const Exponents& e) {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
  }

 private:
  void check(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different rings");
  }

  std::size_t nvars_;
  TermMap terms_;
};

/// Human-readable form, e.g. "4*x1^4 - x1^2*x2^2"; terms in descending
/// lexicographic order.
inline std::string to_string(const SparsePoly& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = SparsePoly::total(e) == 0;
    const Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (need_star ? "*" : "") << var << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

/// Injective linear map from source_vars coordinates into target_vars
/// coordinates, x = M * t.
class LinearParam {
 public:
  explicit LinearParam(MatrixQ matrix) : matrix_(std::move(matrix)) {
    if (rank(matrix_) != matrix_.cols())
      throw Error(ErrorKind::InvalidArgument, "parametrization is not injective");
  }

  static LinearParam from_columns(const std::vector<VectorQ>& columns) {
    return LinearParam(MatrixQ::from_columns(columns));
  }

  std::size_t target_vars() const noexcept { return matrix_.rows(); }
  std::size_t source_vars() const noexcept { return matrix_.cols(); }
  const MatrixQ& matrix() const noexcept { return matrix_; }

  VectorQ apply(const VectorQ& t) const { return matrix_ * t; }

 private:
  MatrixQ matrix_;
};

inline Rational evaluate(const SparsePoly& f, const VectorQ& point) {
  if (point.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "evaluate: point length");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

inline SparsePoly partial(const SparsePoly& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(ErrorKind::DimensionMismatch, "partial: variable index");
  SparsePoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

inline std::vector<SparsePoly> gradient(const SparsePoly& f) {
  std::vector<SparsePoly> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(partial(f, i));
  return g;
}

/// f(images[0], ..., images[n-1]); all images live in one common ring.
inline SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images) {
  if (images.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "substitute: image count");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  // powers[i][k] = images[i]^k, built lazily.
  std::vector<std::vector<SparsePoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(m, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  SparsePoly out(m);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly term = SparsePoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

/// f o phi as a polynomial in the source coordinates of phi.
inline SparsePoly restrict(const SparsePoly& f, const LinearParam& phi) {
  if (phi.target_vars() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "restrict: target dimension");
  std::vector<SparsePoly> images;
  for (std::size_t i = 0; i < phi.target_vars(); ++i) {
    SparsePoly xi(phi.source_vars());
    for (std::size_t j = 0; j < phi.source_vars(); ++j) {
      Exponents e(phi.source_vars(), 0);
      e[j] = 1;
      xi.add_term(e, phi.matrix()(i, j));
    }
    images.push_back(std::move(xi));
  }
  return substitute(f, images);
}

/// f(M y) for a square matrix M.
inline SparsePoly linear_substitute(const SparsePoly& f, const MatrixQ& m) {
  if (m.rows() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "linear_substitute");
  std::vector<SparsePoly> images;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparsePoly xi(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) xi += SparsePoly::variable(m.cols(), j) * m(i, j);
    images.push_back(std::move(xi));
  }
  return substitute(f, images);
}

/// q with q^2 = scale * f, scale > 0, q's leading coefficient (lex-greatest
/// term) equal to 1.
struct SquareRoot {
  SparsePoly root;
  Rational scale;
};

inline std::optional<SquareRoot> perfect_square_root(const SparsePoly& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "perfect_square_root");
  if (f.is_zero()) return SquareRoot{SparsePoly(f.nvars()), Rational(1)};

  const auto& [lead_e, lead_c] = *f.terms().rbegin();
  if (lead_c < 0) return std::nullopt;
  Exponents half(lead_e.size());
  for (std::size_t i = 0; i < lead_e.size(); ++i) {
    if (lead_e[i] % 2) return std::nullopt;
    half[i] = lead_e[i] / 2;
  }
  const Rational scale = 1 / lead_c;
  const SparsePoly target = f * scale;

  SparsePoly q = SparsePoly::monomial(half, 1);
  // A root has at most as many terms as there are monomials of its degree;
  // n^d bounds that count loosely and is enough to guarantee termination.
  std::size_t budget = 1;
  for (unsigned k = 0; k < SparsePoly::total(half); ++k) budget *= f.nvars();
  for (std::size_t step = 0; step <= budget; ++step) {
    const SparsePoly residual = target - q * q;
    if (residual.is_zero()) {
      if (!(q * q == f * scale)) return std::nullopt;
      return SquareRoot{q, scale};
    }
    const auto& [re, rc] = *residual.terms().rbegin();
    Exponents next(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < half[i]) return std::nullopt;
      next[i] = re[i] - half[i];
    }
    if (!(next < half)) return std::nullopt;
    q.add_term(next, rc / 2);
  }
  return std::nullopt;
}

/// Symmetric Gram matrix of a quadratic form: q(x) = x^T G x.
inline MatrixQ gram_matrix(const SparsePoly& q) {
  if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2))
    throw Error(ErrorKind::WrongDegree, "quadratic form expected");
  const std::size_t n = q.nvars();
  std::vector<Rational> g(n * n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g[idx[0] * n + idx[0]] = c;
    } else {
      g[idx[0] * n + idx[1]] = c / 2;
      g[idx[1] * n + idx[0]] = c / 2;
    }
  }
  return MatrixQ(n, n, std::move(g));
}

inline std::size_t quadratic_rank(const SparsePoly& q) { return rank(gram_matrix(q)); }

/// Chart used for a projective point: the first coordinate of largest
/// absolute value.
inline std::size_t chart_index(const VectorQ& point) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < point.size(); ++i)
    if (abs(point[i]) > abs(point[best])) best = i;
  if (point.empty() || point[best] == 0) throw Error(ErrorKind::InvalidArgument, "zero projective point");
  return best;
}

/// Hessian of the affine equation of f at a singular point, in the chart
/// x_k = 1 where k = chart_index(point). Rows and columns run over the
/// remaining coordinates in order.
inline MatrixQ local_quadratic_part(const SparsePoly& f, const VectorQ& point) {
  if (point.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "local_quadratic_part: point length");
  const std::size_t k = chart_index(point);
  VectorQ p = point;
  const Rational inv = 1 / point[k];
  for (auto& x : p) x *= inv;

  if (evaluate(f, p) != 0) throw Error(ErrorKind::NotOnHypersurface, "");
  const auto grad = gradient(f);
  for (const auto& g : grad)
    if (evaluate(g, p) != 0) throw Error(ErrorKind::NotSingular, "gradient does not vanish");

  const std::size_t n = f.nvars();
  std::vector<std::size_t> chart;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) chart.push_back(i);
  std::vector<Rational> h(chart.size() * chart.size());
  for (std::size_t a = 0; a < chart.size(); ++a)
    for (std::size_t b = a; b < chart.size(); ++b) {
      const Rational v = evaluate(partial(grad[chart[a]], chart[b]), p);
      h[a * chart.size() + b] = v;
      h[b * chart.size() + a] = v;
    }
  return MatrixQ(chart.size(), chart.size(), std::move(h));
}

}  // namespace coblekit
