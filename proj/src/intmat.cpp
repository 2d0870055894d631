#include "foxcup/intmat.hpp"

#include <algorithm>
#include <utility>

#include "foxcup/error.hpp"

namespace foxcup {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::swap_cols(int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

bool IntMatrix::is_zero_row(int r) const {
  for (int c = 0; c < cols_; ++c)
    if (at(r, c) != 0) return false;
  return true;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw domain_error("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw domain_error("matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(c, r) = m.at(r, c);
  return out;
}

namespace {

// floor(a / b) for b > 0
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

} // namespace

HnfResult hnf_with_transform(const IntMatrix& t) {
  const int m = t.rows(), n = t.cols();
  HnfResult res{t, IntMatrix::identity(m)};
  IntMatrix& h = res.h;
  IntMatrix& c = res.c;

  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < m; ++col) {
    // Euclidean descent in this column over rows >= pivot_row.
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < m; ++r) {
        if (h.at(r, col) == 0) continue;
        if (best < 0 || abs_int(h.at(r, col)) < abs_int(h.at(best, col)))
          best = r;
      }
      if (best < 0) break; // column has no pivot
      h.swap_rows(pivot_row, best);
      c.swap_rows(pivot_row, best);
      if (h.at(pivot_row, col) < 0) {
        h.negate_row(pivot_row);
        c.negate_row(pivot_row);
      }
      bool cleared = true;
      for (int r = pivot_row + 1; r < m; ++r) {
        if (h.at(r, col) == 0) continue;
        Int q = -floor_div(h.at(r, col), h.at(pivot_row, col));
        h.add_row_multiple(r, pivot_row, q);
        c.add_row_multiple(r, pivot_row, q);
        if (h.at(r, col) != 0) cleared = false; // nonzero remainder, go again
      }
      if (cleared) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    // Reduce entries above the pivot into [0, pivot).
    for (int r = 0; r < pivot_row; ++r) {
      Int q = -floor_div(h.at(r, col), h.at(pivot_row, col));
      h.add_row_multiple(r, pivot_row, q);
      c.add_row_multiple(r, pivot_row, q);
    }
    ++pivot_row;
  }
  return res;
}

namespace {

// Move the least-absolute-value nonzero entry of the trailing submatrix to
// the (k, k) corner; false if the submatrix is zero.
bool pivot_to_corner(IntMatrix& m, int k) {
  int bi = -1, bj = -1;
  for (int i = k; i < m.rows(); ++i)
    for (int j = k; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      if (bi < 0 || abs_int(m.at(i, j)) < abs_int(m.at(bi, bj))) {
        bi = i;
        bj = j;
      }
    }
  if (bi < 0) return false;
  m.swap_rows(k, bi);
  m.swap_cols(k, bj);
  if (m.at(k, k) < 0) m.negate_row(k);
  return true;
}

} // namespace

std::vector<Int> snf_invariant_factors(IntMatrix m) {
  const int dim = std::min(m.rows(), m.cols());
  std::vector<Int> diag;
  for (int k = 0; k < dim; ++k) {
    if (!pivot_to_corner(m, k)) break;
    // Clear row k and column k by repeated remainder steps; pivot_to_corner
    // re-selects the shrinking pivot, so this terminates.
    for (;;) {
      bool dirty = false;
      for (int i = k + 1; i < m.rows(); ++i) {
        if (m.at(i, k) == 0) continue;
        m.add_row_multiple(i, k, -floor_div(m.at(i, k), m.at(k, k)));
        if (m.at(i, k) != 0) dirty = true;
      }
      for (int j = k + 1; j < m.cols(); ++j) {
        if (m.at(k, j) == 0) continue;
        m.add_col_multiple(j, k, -floor_div(m.at(k, j), m.at(k, k)));
        if (m.at(k, j) != 0) dirty = true;
      }
      if (!dirty) break;
      pivot_to_corner(m, k);
    }
    diag.push_back(m.at(k, k));
  }
  // diag(a, b) and diag(gcd(a,b), lcm(a,b)) present the same lattice;
  // bubble until the divisibility chain holds.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] == 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[i + 1].get_mpz_t());
      Int l = diag[i] / g * diag[i + 1];
      diag[i] = g;
      diag[i + 1] = l;
      changed = true;
    }
  }
  return diag;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of nonsquare matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int p = -1;
    for (int r = pivot_row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot_row, c), m.at(p, c));
    Rat inv = 1 / m.at(pivot_row, col);
    for (int c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) -= f * m.at(pivot_row, c);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

int rational_rank(const RatMatrix& m) {
  RatMatrix work = m;
  return static_cast<int>(rref(work).size());
}

int rational_rank(const IntMatrix& m) {
  return rational_rank(RatMatrix::from_int(m));
}

RatMatrix null_space_basis(const RatMatrix& m) {
  RatMatrix work = m;
  std::vector<int> pivots = rref(work);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;

  RatMatrix basis(n - static_cast<int>(pivots.size()), n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      basis.at(row, pivots[k]) = -work.at(static_cast<int>(k), f);
    ++row;
  }
  return basis;
}

RatMatrix null_space_basis(const IntMatrix& m) {
  return null_space_basis(RatMatrix::from_int(m));
}

std::string render(const IntMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out.push_back(' ');
      out += m.at(r, c).get_str();
    }
    out.push_back('\n');
  }
  return out;
}

std::string render(const RatMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out.push_back(' ');
      out += m.at(r, c).get_str();
    }
    out.push_back('\n');
  }
  return out;
}

} // namespace foxcup
