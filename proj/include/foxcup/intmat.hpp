#ifndef FOXCUP_INTMAT_HPP
#define FOXCUP_INTMAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace foxcup {

using Int = mpz_class;
using Rat = mpq_class;

// Dense exact integer matrix, row-major.  Entries are unbounded; every
// algorithm below is fraction-free or exact-rational, never floating point.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  void swap_rows(int r1, int r2);
  void negate_row(int r);
  void add_row_multiple(int dst, int src, const Int& q); // row dst += q * row src
  void swap_cols(int c1, int c2);
  void add_col_multiple(int dst, int src, const Int& q);

  bool is_zero_row(int r) const;

  bool operator==(const IntMatrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Dense exact rational matrix; entries are normalized (reduced fractions with
// positive denominators) by gmp's canonical form.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const RatMatrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);

// Row Hermite normal form with transform: H = C * T with C square unimodular;
// pivots positive and strictly right-descending, entries above each pivot
// reduced into [0, pivot), zero rows last.
struct HnfResult {
  IntMatrix h;
  IntMatrix c;
};
HnfResult hnf_with_transform(const IntMatrix& t);

// Smith normal form invariant factors d_1 | d_2 | ... | d_r (all positive,
// r = rational rank).  Diagonalizes by gcd pivoting on least-absolute-value
// entries, then repairs the divisibility chain pairwise.
std::vector<Int> snf_invariant_factors(IntMatrix m);

// Exact determinant (Bareiss fraction-free elimination); square input only.
Int determinant(const IntMatrix& m);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMatrix& m);

int rational_rank(const IntMatrix& m);
int rational_rank(const RatMatrix& m);

// Basis of {v : M v = 0} as the rows of a (cols - rank) x cols matrix, one
// row per free column in ascending order: entry 1 at the free column, the
// negated RREF coefficients at the pivot columns, 0 elsewhere.
RatMatrix null_space_basis(const IntMatrix& m);
RatMatrix null_space_basis(const RatMatrix& m);

std::string render(const IntMatrix& m);
std::string render(const RatMatrix& m);

} // namespace foxcup

#endif
