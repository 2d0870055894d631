#ifndef FOXCUP_SUNADA_HPP
#define FOXCUP_SUNADA_HPP

#include <optional>
#include <string>
#include <vector>

#include "foxcup/cup.hpp"
#include "foxcup/finite_group.hpp"
#include "foxcup/homology.hpp"
#include "foxcup/presentation.hpp"

namespace foxcup {

// A homomorphism from a finitely presented group to a finite group, given by
// one image per generator.  Every relator evaluates to the identity; this is
// checked by make_homomorphism.
struct Homomorphism {
  std::vector<int> images; // images[i] = image of generator i+1

  bool operator==(const Homomorphism&) const = default;
};

Homomorphism make_homomorphism(const Presentation& p, const FiniteGroup& g,
                               std::vector<int> images);

struct EpiSearchOptions {
  long long budget = 100'000'000; // cap on |G|^n candidate assignments
  int max_results = 1000;
};

// All surjections P ->> G up to max_results, in lexicographic image order.
// Backtracking over generator images; a partial assignment is pruned when a
// relator supported on the assigned generators fails to evaluate to the
// identity.  find_epimorphisms partitions the first generator's image across
// threads and merges in branch order, so its output equals the serial one.
std::vector<Homomorphism> find_epimorphisms(const Presentation& p,
                                            const FiniteGroup& g,
                                            const EpiSearchOptions& opts = {});
std::vector<Homomorphism> find_epimorphisms_serial(
    const Presentation& p, const FiniteGroup& g,
    const EpiSearchOptions& opts = {});

// Right-coset action table: cosets 0..degree-1 with 0 the subgroup itself,
// and generator x acting by coset * phi(x).  Complete and transitive by
// construction.
class CosetTable {
public:
  CosetTable(int degree, int generator_count, std::vector<int> forward,
             std::vector<int> backward);

  int degree() const { return degree_; }
  int generator_count() const { return gens_; }
  int apply(int coset, Letter l) const {
    const std::vector<int>& t = l > 0 ? fwd_ : bwd_;
    return t[static_cast<std::size_t>(coset) * gens_ + generator_of(l) - 1];
  }

private:
  int degree_ = 0, gens_ = 0;
  std::vector<int> fwd_, bwd_;
};

// Coset table of the preimage phi^{-1}(h): right cosets Hg reached from H
// under the generator images, enumerated breadth-first.  For surjective phi
// the degree is |G| / |H|.
CosetTable preimage_coset_table(const Presentation& p, const FiniteGroup& g,
                                const Homomorphism& phi, const Subgroup& h);

// Subgroup presentation from a coset table: Schreier transversal by BFS from
// coset 0 (letters tried x1, X1, x2, X2, ...), Schreier generators on the
// non-tree edges, and one rewritten relator t r t^{-1} per (transversal
// element, relator) pair.  Output uses the numeric alphabet.  The result
// satisfies 1 - n' + m' = degree * (1 - n + m).
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

// Isomorphism-preserving cleanup to a fixpoint: free and cyclic reduction,
// removal of empty and duplicate relators (up to rotation and inversion),
// and elimination of generators that occur exactly once in some relator.
Presentation tietze_simplify(const Presentation& p, int max_steps = 10000);

struct SunadaOptions {
  bool simplify = true;
  EpiSearchOptions search;
  std::optional<Homomorphism> phi; // skip the search when supplied
};

struct SunadaReport {
  Homomorphism phi;
  Presentation subgroup_presentation_1, subgroup_presentation_2;
  HomologyReport homology_1, homology_2;
  CupSummary cup_1, cup_2;
  bool homology_distinguishes = false;
  bool cup_distinguishes = false;
  // The freeness hypothesis of the covering-space construction is invisible
  // at the group level and is not checked here.
  std::string caveat;
};

// End to end: check almost conjugacy (hard error otherwise), find or accept
// an epimorphism, build both preimage subgroup presentations, and compare
// their integral homology and cup invariants.
SunadaReport sunada_pipeline(const Presentation& p, const FiniteGroup& g,
                             const Subgroup& h1, const Subgroup& h2,
                             const SunadaOptions& opts = {});

} // namespace foxcup

#endif
