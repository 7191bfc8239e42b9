#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/rational.hpp"

namespace coblekit {

using VectorQ = std::vector<Rational>;

/// Dense rational matrix, row-major. Immutable once built.
class MatrixQ {
 public:
  MatrixQ() = default;

  MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw Error(ErrorKind::DimensionMismatch,
                  "matrix entries " + std::to_string(entries_.size()) + " != " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  static MatrixQ zero(std::size_t rows, std::size_t cols) {
    return MatrixQ(rows, cols, std::vector<Rational>(rows * cols));
  }

  static MatrixQ identity(std::size_t n) {
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return MatrixQ(n, n, std::move(e));
  }

  static MatrixQ from_rows(const std::vector<VectorQ>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      e.insert(e.end(), r.begin(), r.end());
    }
    return MatrixQ(rows.size(), cols, std::move(e));
  }

  static MatrixQ from_columns(const std::vector<VectorQ>& columns) {
    return from_rows(columns).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  VectorQ row(std::size_t r) const {
    return VectorQ(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  VectorQ column(std::size_t c) const {
    VectorQ out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  MatrixQ transpose() const {
    std::vector<Rational> e(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
    return MatrixQ(cols_, rows_, std::move(e));
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  /// Rows of `this` followed by rows of `below`.
  MatrixQ stack(const MatrixQ& below) const {
    if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
      throw Error(ErrorKind::DimensionMismatch, "stack: column counts differ");
    std::vector<Rational> e = entries_;
    e.insert(e.end(), below.entries_.begin(), below.entries_.end());
    return MatrixQ(rows_ + below.rows_, rows_ ? cols_ : below.cols_, std::move(e));
  }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    std::vector<Rational> e(a.rows_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) e[i * b.cols_ + j] += aik * b(k, j);
      }
    return MatrixQ(a.rows_, b.cols_, std::move(e));
  }

  friend VectorQ operator*(const MatrixQ& a, const VectorQ& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    VectorQ out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;         // pivot column per row
};

// Fraction-free (Bareiss) row echelon form. Each row is first scaled by
// the lcm of its denominators, which changes neither rank nor kernel.
inline Echelon bareiss_echelon(const MatrixQ& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < nc; ++c) l = boost::multiprecision::lcm(l, denominator(m(r, c)));
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = numerator(m(r, c)) * (l / denominator(m(r, c)));
  }

  Echelon out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        Integer q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("Bareiss division not exact");
        a[i][j] = std::move(q);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

struct ReducedEchelon {
  std::vector<VectorQ> rows;
  std::vector<std::size_t> pivots;
};

inline ReducedEchelon reduced_echelon(const MatrixQ& m) {
  Echelon e = bareiss_echelon(m);
  ReducedEchelon out;
  out.pivots = e.pivots;
  for (auto& row : e.rows) {
    VectorQ q(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) q[c] = Rational(row[c]);
    out.rows.push_back(std::move(q));
  }
  for (std::size_t k = out.rows.size(); k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    const Rational inv = 1 / out.rows[k][pc];
    for (auto& x : out.rows[k]) x *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = out.rows[i][pc];
      if (f == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) out.rows[i][c] -= f * out.rows[k][c];
    }
  }
  return out;
}

}  // namespace detail

/// Rank by fraction-free elimination.
inline std::size_t rank(const MatrixQ& m) { return detail::bareiss_echelon(m).pivots.size(); }

/// Basis of the right null space; one vector per free column, with a 1 in
/// that column.
inline std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
  const auto re = detail::reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : re.pivots) is_pivot[c] = true;
  std::vector<VectorQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < re.rows.size(); ++k) v[re.pivots[k]] = -re.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with a*x = b, or nullopt if inconsistent. Free variables are set
/// to zero, so the answer is the unique one when a has full column rank.
inline std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  std::vector<Rational> e;
  e.reserve(a.rows() * (a.cols() + 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) e.push_back(a(r, c));
    e.push_back(b[r]);
  }
  const auto re = detail::reduced_echelon(MatrixQ(a.rows(), a.cols() + 1, std::move(e)));
  VectorQ x(a.cols());
  for (std::size_t k = 0; k < re.rows.size(); ++k) {
    if (re.pivots[k] == a.cols()) return std::nullopt;
    x[re.pivots[k]] = re.rows[k][a.cols()];
  }
  return x;
}

inline std::optional<MatrixQ> inverse(const MatrixQ& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square");
  const std::size_t n = a.rows();
  if (rank(a) != n) return std::nullopt;
  std::vector<VectorQ> cols;
  for (std::size_t j = 0; j < n; ++j) {
    VectorQ e(n);
    e[j] = 1;
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return MatrixQ::from_columns(cols);
}

inline bool is_zero_vector(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace coblekit
