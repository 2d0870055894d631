#ifndef FOXCUP_CUP_HPP
#define FOXCUP_CUP_HPP

#include "foxcup/echelon.hpp"
#include "foxcup/intmat.hpp"
#include "foxcup/presentation.hpp"

namespace foxcup {

// Rational basis of H^1 of the presentation complex: a b x n matrix whose
// rows span the left-annihilator of the echelon Jacobian.
struct AbelianizationMatrix {
  RatMatrix a;
  int betti = 0;
};

// Matrix of the cup product map H^1 wedge H^1 -> H^2 of the presentation
// complex.  Rows are indexed by the echelon relators k = n-b+1..m, columns by
// generator pairs (i, j) with i < j in lexicographic order.
struct CupMatrix {
  RatMatrix entries; // (m-n+b) x (b(b-1)/2)
  int betti = 0;
  int h2_dim = 0;
  int rank = 0;
  int nullity = 0;
};

// The reported invariants alone.
struct CupSummary {
  int betti = 0;
  int h2_dim = 0;
  int rank = 0;
  int nullity = 0;

  bool operator==(const CupSummary&) const = default;
};

AbelianizationMatrix abelianization_matrix(const EchelonPresentation& e);

// n x n table with entry [s][t] equal to the double augmented derivative
// e_{s,t}(w).  epsilon_table parallelizes over the inner derivative index
// when OpenMP is enabled; epsilon_table_serial is the reference.
IntMatrix epsilon_table(const Word& w, int n);
IntMatrix epsilon_table_serial(const Word& w, int n);

// b x b matrix with entry (i, j) = sum over s,t of A[i][s] A[j][t] e_{s,t}(w),
// computed as A * E * A^T.
RatMatrix kappa_matrix(const Word& w, const AbelianizationMatrix& a);

// Rows of the cup matrix: for each relator index k in n-b+1..m, the strict
// upper triangle of kappa(w_k) flattened in (i, j) lexicographic order.
// Relator rows are independent and computed in parallel; the row order is by
// relator index regardless of schedule.
RatMatrix assemble_cup_rows(const EchelonPresentation& e,
                            const RatMatrix& basis);

CupMatrix cup_matrix(const Presentation& p);
CupSummary cup_nullity(const Presentation& p);

} // namespace foxcup

#endif
