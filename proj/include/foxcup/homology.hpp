#ifndef FOXCUP_HOMOLOGY_HPP
#define FOXCUP_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "foxcup/intmat.hpp"
#include "foxcup/presentation.hpp"

namespace foxcup {

// First integral homology of a finitely presented group, i.e. its
// abelianization Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ... all > 1.
struct HomologyReport {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const HomologyReport&) const = default;
};

// Smith invariant factors of the augmented Fox Jacobian, unit factors
// dropped; free rank is generators minus rational rank.
HomologyReport h1_integral(const Presentation& p);

// Invariant factor lists classify finitely generated abelian groups, so
// isomorphism is plain equality of the reports.
bool isomorphic(const HomologyReport& a, const HomologyReport& b);

// e.g. "Z^3 + Z/2^4 + Z/4^2" with Z/d^k meaning k copies of Z/d; the trivial
// group renders as "0".
std::string render_homology(const HomologyReport& h);

} // namespace foxcup

#endif
