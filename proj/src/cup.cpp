#include "foxcup/cup.hpp"

#include "foxcup/error.hpp"
#include "foxcup/group_ring.hpp"

namespace foxcup {

AbelianizationMatrix abelianization_matrix(const EchelonPresentation& e) {
  RatMatrix basis = null_space_basis(e.jacobian);
  int betti = basis.rows();
  return AbelianizationMatrix{std::move(basis), betti};
}

namespace {

// One inner derivative per column, then a single pass over its terms
// accumulating the signed letter counts of every outer index at once.  The
// accumulator is column-local so threads never share cache lines.
void epsilon_column(const Word& w, int n, int t, IntMatrix& e) {
  std::vector<Int> col(n);
  GroupRingElement inner = fox_derivative(w, t);
  for (const auto& [word, c] : inner.terms())
    for (Letter l : word) {
      int s = generator_of(l);
      if (s > n) continue;
      if (l > 0)
        col[s - 1] += c;
      else
        col[s - 1] -= c;
    }
  for (int s = 1; s <= n; ++s) e.at(s - 1, t - 1) = std::move(col[s - 1]);
}

} // namespace

IntMatrix epsilon_table_serial(const Word& w, int n) {
  IntMatrix e(n, n);
  for (int t = 1; t <= n; ++t) epsilon_column(w, n, t, e);
  return e;
}

IntMatrix epsilon_table(const Word& w, int n) {
  IntMatrix e(n, n);
#pragma omp parallel for schedule(dynamic)
  for (int t = 1; t <= n; ++t) epsilon_column(w, n, t, e);
  return e;
}

RatMatrix kappa_matrix(const Word& w, const AbelianizationMatrix& a) {
  const int n = a.a.cols();
  if (w.max_generator() > n)
    throw domain_error("word uses generators beyond the basis alphabet");
  RatMatrix e = RatMatrix::from_int(epsilon_table(w, n));
  return multiply(multiply(a.a, e), transpose(a.a));
}

RatMatrix assemble_cup_rows(const EchelonPresentation& e,
                            const RatMatrix& basis) {
  const int n = e.base.generator_count();
  const int m = e.base.relator_count();
  const int b = basis.rows();
  const int rows = m - n + b;
  const int cols = b * (b - 1) / 2;

  // The Theorem's relator range n-b+1..m must consist of zero Jacobian rows;
  // anything else means the echelon shape and the Betti number disagree.
  for (int k = n - b; k < m; ++k)
    if (!e.jacobian.is_zero_row(k))
      throw domain_error("cup relator range hits a nonzero Jacobian row");

  AbelianizationMatrix ab{basis, b};
  RatMatrix out(rows, cols);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < rows; ++r) {
    RatMatrix kappa = kappa_matrix(e.base.relators()[n - b + r], ab);
    int col = 0;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) out.at(r, col++) = kappa.at(i, j);
  }
  return out;
}

CupMatrix cup_matrix(const Presentation& p) {
  EchelonPresentation e = echelon_presentation(p);
  AbelianizationMatrix a = abelianization_matrix(e);

  CupMatrix out;
  out.betti = a.betti;
  out.entries = assemble_cup_rows(e, a.a);
  out.h2_dim = out.entries.rows();
  out.rank = rational_rank(out.entries);
  out.nullity = out.entries.cols() - out.rank;
  return out;
}

CupSummary cup_nullity(const Presentation& p) {
  CupMatrix c = cup_matrix(p);
  return CupSummary{c.betti, c.h2_dim, c.rank, c.nullity};
}

} // namespace foxcup
