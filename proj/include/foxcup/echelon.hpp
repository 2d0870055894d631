#ifndef FOXCUP_ECHELON_HPP
#define FOXCUP_ECHELON_HPP

#include "foxcup/intmat.hpp"
#include "foxcup/presentation.hpp"

namespace foxcup {

// A presentation whose augmented Fox Jacobian is in row Hermite (hence row
// echelon) form, together with the unimodular relator recombination that
// produced it from the source presentation.
struct EchelonPresentation {
  Presentation base;   // same generators, new relators w_1..w_m
  IntMatrix transform; // C, m x m unimodular: jacobian = C * (source Jacobian)
  IntMatrix jacobian;  // row-HNF augmented Fox Jacobian of the new relators
};

// m x n matrix with entry [k][i] = signed count of generator i in relator k.
IntMatrix fox_jacobian(const Presentation& p);

// Recombine relators so the Jacobian lands in Hermite form: with (H, C) the
// HNF transform of the source Jacobian, the new relator w_k is the ordered
// product r_1^{C[k][1]} ... r_m^{C[k][m]}, kept unreduced.  The Jacobian of
// the new relators is recomputed from scratch and checked against C*T.
EchelonPresentation echelon_presentation(const Presentation& p);

} // namespace foxcup

#endif
