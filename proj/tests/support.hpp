#ifndef FOXCUP_TESTS_SUPPORT_HPP
#define FOXCUP_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "foxcup/intmat.hpp"
#include "foxcup/presentation.hpp"
#include "foxcup/word.hpp"

namespace foxcup::testing {

inline Word random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  const int k = len(rng);
  letters.reserve(k);
  for (int i = 0; i < k; ++i)
    letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return Word(std::move(letters));
}

inline Presentation random_presentation(std::mt19937& rng, int max_gens,
                                        int max_relators, int max_len) {
  std::uniform_int_distribution<int> gens(1, max_gens);
  std::uniform_int_distribution<int> rels(0, max_relators);
  const int n = gens(rng);
  const int m = rels(rng);
  std::vector<Word> relators;
  relators.reserve(m);
  for (int k = 0; k < m; ++k) relators.push_back(random_word(rng, n, max_len));
  return Presentation(n, std::move(relators));
}

inline IntMatrix random_int_matrix(std::mt19937& rng, int max_dim,
                                   int max_entry) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  IntMatrix m(dim(rng), dim(rng));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
  return m;
}

// Independent Smith-form oracle via determinantal divisors: the product of
// the first k invariant factors equals the gcd of all k x k minors.
std::vector<Int> snf_minor_gcd_oracle(const IntMatrix& m);

// Random isomorphism-preserving elementary moves: relator conjugation,
// multiplication, inversion, rotation, reordering, and redundant-generator
// introduction.
Presentation random_tietze_moves(const Presentation& p, std::mt19937& rng,
                                 int moves);

// Cofactor-expansion determinant for small matrices.
Int determinant_cofactor(const IntMatrix& m);

} // namespace foxcup::testing

#endif
