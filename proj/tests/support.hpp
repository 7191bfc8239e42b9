#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coblekit/matrix.hpp"
#include "coblekit/poly.hpp"
#include "coblekit/rational.hpp"

namespace coblekit::testing {

// Every property test draws from a fixed seed so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'c0b1eULL + salt); }

inline Rational random_rational(std::mt19937_64& g, int range = 6) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rational(num(g), den(g));
}

inline VectorQ random_vector(std::mt19937_64& g, std::size_t n, int range = 6) {
  VectorQ v(n);
  for (auto& x : v) x = random_rational(g, range);
  return v;
}

/// Random matrix whose rank is usually below min(rows, cols): rows are
/// combinations of `basis` random vectors.
inline MatrixQ random_low_rank(std::mt19937_64& g, std::size_t rows, std::size_t cols, std::size_t basis) {
  std::vector<VectorQ> b;
  for (std::size_t k = 0; k < basis; ++k) b.push_back(random_vector(g, cols, 3));
  std::vector<VectorQ> out;
  std::uniform_int_distribution<int> c(-2, 2);
  for (std::size_t r = 0; r < rows; ++r) {
    VectorQ row(cols);
    for (const auto& v : b) {
      const Rational k = c(g);
      for (std::size_t j = 0; j < cols; ++j) row[j] += k * v[j];
    }
    out.push_back(row);
  }
  return MatrixQ::from_rows(out);
}

/// Random homogeneous polynomial of the given degree with small integer coefficients.
inline SparsePoly random_form(std::mt19937_64& g, std::size_t nvars, unsigned degree, std::size_t terms = 5) {
  SparsePoly f(nvars);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    for (unsigned d = 0; d < degree; ++d) ++e[var(g)];
    f.add_term(e, coeff(g));
  }
  return f;
}

/// Plain Gauss-Jordan rank, kept separate from the library's fraction-free elimination.
inline std::size_t naive_rank(std::vector<VectorQ> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational k = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= k * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace coblekit::testing
