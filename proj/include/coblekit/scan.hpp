#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "coblekit/error.hpp"
#include "coblekit/fp.hpp"
#include "coblekit/geometry.hpp"
#include "coblekit/lines.hpp"
#include "coblekit/poly.hpp"

namespace coblekit {

using PointFp = std::vector<std::uint32_t>;

struct ScanResult {
  std::uint64_t prime = 0;
  std::size_t points_scanned = 0;
  std::set<PointFp> singular;     // normalized 6-vectors, first nonzero = 1
  std::set<PointFp> line_points;  // union of the 15 lines over F_p
  bool verdict = false;
};

namespace detail {

/// Polynomial with coefficients reduced mod p, for fast evaluation.
struct PolyFp {
  std::vector<std::pair<Exponents, std::uint64_t>> terms;

  PolyFp(const SparsePoly& f, std::uint64_t p) {
    for (const auto& [e, c] : f.terms()) {
      const auto r = FpElement::from_rational(c, p).residue();
      if (r) terms.emplace_back(e, r);
    }
  }

  std::uint64_t eval(const std::vector<std::vector<std::uint64_t>>& powers, std::uint64_t p) const {
    std::uint64_t sum = 0;
    for (const auto& [e, c] : terms) {
      std::uint64_t t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t = t * powers[i][e[i]] % p;
      sum = (sum + t) % p;
    }
    return sum;
  }
};

inline std::vector<std::int64_t> integer_column(const MatrixQ& m, std::size_t j) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (denominator(m(i, j)) != 1) throw std::logic_error("non-integral parametrization");
    out.push_back(static_cast<std::int64_t>(numerator(m(i, j))));
  }
  return out;
}

/// Image of sum_j x_j * col_j mod p, scaled so the first nonzero entry is 1;
/// empty when the image is zero.
inline PointFp image_mod_p(const std::vector<std::vector<std::int64_t>>& cols, const std::vector<std::uint64_t>& x,
                           std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  PointFp v(cols.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) acc = (acc + cols[j][i] % P * static_cast<std::int64_t>(x[j])) % P;
    v[i] = static_cast<std::uint32_t>((acc + P) % P);
  }
  std::size_t k = 0;
  while (k < v.size() && v[k] == 0) ++k;
  if (k == v.size()) return {};
  const auto inv = FpElement(v[k], p).inverse().residue();
  for (auto& c : v) c = static_cast<std::uint32_t>(c * inv % p);
  return v;
}

/// Projective points of P^{n-1}(F_p): first nonzero coordinate equal to 1.
template <class Visit>
void for_each_projective_point(std::size_t n, std::uint64_t p, Visit visit) {
  std::vector<std::uint64_t> x(n);
  for (std::size_t lead = n; lead-- > 0;) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      visit(x);
      std::size_t k = n;
      while (k > lead + 1 && ++x[k - 1] == p) x[--k] = 0;
      if (k == lead + 1) break;
    }
  }
}

}  // namespace detail

/// Exhaustive search for singular points of the Igusa quartic over F_p, in
/// an explicit chart of s1 = 0, compared with the F_p-points of the 15 lines.
inline ScanResult fp_singular_scan(const IgusaModel& m, std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "prime >= 5 expected");
  ScanResult r;
  r.prime = p;

  const LinearParam chart = kernel_chart({power_sum_form(6)});
  const SparsePoly G = restrict(m.F, chart);
  const std::size_t n = chart.source_vars();
  std::vector<detail::PolyFp> tests{detail::PolyFp(G, p)};
  for (const auto& d : gradient(G)) tests.emplace_back(d, p);
  std::vector<std::vector<std::int64_t>> chart_cols;
  for (std::size_t j = 0; j < n; ++j) chart_cols.push_back(detail::integer_column(chart.matrix(), j));

  std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(5));
  detail::for_each_projective_point(n, p, [&](const std::vector<std::uint64_t>& x) {
    ++r.points_scanned;
    for (std::size_t i = 0; i < n; ++i) {
      powers[i][0] = 1;
      for (std::size_t k = 1; k < powers[i].size(); ++k) powers[i][k] = powers[i][k - 1] * x[i] % p;
    }
    for (const auto& t : tests)
      if (t.eval(powers, p) != 0) return;
    r.singular.insert(detail::image_mod_p(chart_cols, x, p));
  });

  for (const auto& line : m.lines) {
    const std::vector<std::vector<std::int64_t>> cols{detail::integer_column(line.matrix(), 0),
                                                      detail::integer_column(line.matrix(), 1)};
    detail::for_each_projective_point(2, p, [&](const std::vector<std::uint64_t>& tu) {
      auto pt = detail::image_mod_p(cols, tu, p);
      if (!pt.empty()) r.line_points.insert(std::move(pt));
    });
  }
  r.verdict = r.singular == r.line_points;
  return r;
}

}  // namespace coblekit
