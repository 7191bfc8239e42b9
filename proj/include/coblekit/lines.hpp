#pragma once

#include <cstddef>
#include <vector>

#include "coblekit/linear_form.hpp"
#include "coblekit/matrix.hpp"
#include "coblekit/partitions.hpp"
#include "coblekit/poly.hpp"

namespace coblekit {

/// The line x_a = x_b, x_c = x_d, x_e = x_f, s1 = 0 for the partition
/// {{a,b},{c,d},{e,f}}, parametrized by the common values (t, u) on the
/// first two pairs: (t, t, u, u, -t-u, -t-u) for 12|34|56.
inline LinearParam line_parametrization(const PairPartition& alpha) {
  std::vector<VectorQ> rows;
  for (const auto& pr : alpha.pairs) {
    VectorQ r(6);
    r[pr[0]] = 1;
    r[pr[1]] = -1;
    rows.push_back(std::move(r));
  }
  rows.push_back(VectorQ(6, Rational(1)));
  const auto kernel = kernel_basis(MatrixQ::from_rows(rows));
  if (kernel.size() != 2) throw std::logic_error("pair-partition line is not two-dimensional");

  // Re-coordinatize the kernel by the values on the first two pairs.
  const std::size_t a = alpha.pairs[0][0], c = alpha.pairs[1][0];
  const MatrixQ K = MatrixQ::from_columns(kernel);
  const MatrixQ T = MatrixQ::from_rows({{K(a, 0), K(a, 1)}, {K(c, 0), K(c, 1)}});
  return LinearParam(K * *inverse(T));
}

/// x_a + x_b + x_c for the first triple of beta; on s1 = 0 it cuts out H_beta.
inline LinearFormQ triple_form(const TriplePartition& beta) {
  LinearFormQ f(6);
  for (auto x : beta.triples[0]) f[x] = 1;
  return f;
}

/// Restriction of a linear form to a parametrized subspace, as coefficients
/// in the source coordinates.
inline VectorQ restrict_form(const LinearFormQ& form, const LinearParam& phi) {
  VectorQ out(phi.source_vars());
  for (std::size_t j = 0; j < phi.source_vars(); ++j)
    for (std::size_t i = 0; i < phi.target_vars(); ++i) out[j] += form[i] * phi.matrix()(i, j);
  return out;
}

/// Chart of the projective subspace cut out by the given forms: a basis of
/// their common kernel, as a parametrization.
inline LinearParam kernel_chart(const std::vector<LinearFormQ>& forms) {
  return LinearParam::from_columns(kernel_basis(MatrixQ::from_rows(forms)));
}

}  // namespace coblekit
