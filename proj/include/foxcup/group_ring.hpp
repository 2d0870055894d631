#ifndef FOXCUP_GROUP_RING_HPP
#define FOXCUP_GROUP_RING_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "foxcup/presentation.hpp"
#include "foxcup/word.hpp"

namespace foxcup {

// An element of the integral group ring of a free group: a finite map from
// freely reduced words to nonzero integer coefficients.  The zero element has
// an empty term map; canonical form is maintained by every operation.
class GroupRingElement {
public:
  using Terms = std::map<Word, mpz_class, WordLengthLexLess>;

  GroupRingElement() = default;

  // c * w (w is reduced first); c = 0 gives the zero element.
  static GroupRingElement term(const Word& w, mpz_class c = 1);
  static GroupRingElement one() { return term(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Word& reduced_word) const;

  void add_term(const Word& w, const mpz_class& c); // reduces w, keeps canon

  GroupRingElement& operator+=(const GroupRingElement& v);
  GroupRingElement& operator-=(const GroupRingElement& v);
  friend GroupRingElement operator+(GroupRingElement u, const GroupRingElement& v) {
    u += v;
    return u;
  }
  friend GroupRingElement operator-(GroupRingElement u, const GroupRingElement& v) {
    u -= v;
    return u;
  }
  GroupRingElement operator-() const;

  GroupRingElement scaled(const mpz_class& c) const;

  bool operator==(const GroupRingElement&) const = default;

private:
  Terms terms_;
};

// g * v for a group element g.
GroupRingElement left_multiply_by_word(const Word& g, const GroupRingElement& v);

// Sum of the coefficients; the ring homomorphism ZF -> Z.
mpz_class augmentation(const GroupRingElement& v);

// Fox derivative of a word, computed by a single left-to-right pass that
// accumulates a reduced prefix: a letter x_i at prefix p contributes +p, a
// letter x_i^{-1} contributes -p x_i^{-1}.  Equivalent to the recursive
// product-rule definition but linear in the word length.
GroupRingElement fox_derivative(const Word& w, int i);

// Linear extension over the terms of a group ring element.
GroupRingElement fox_derivative(const GroupRingElement& v, int i);

// Augmented Fox derivative of a word in one pass: the signed count of
// occurrences of generator i.
mpz_class augmented_fox(const Word& w, int i);

// Linear extension of the augmented derivative.
mpz_class augmented_fox(const GroupRingElement& v, int i);

// The double augmented derivative e_{s,t}(w) = augmentation(d_s(d_t(w))).
// The inner derivative is taken in full, the outer one in augmented form.
mpz_class double_fox(const Word& w, int s, int t);

// "c1*w1 + c2*w2 + ..." in canonical term order; unit coefficients are
// elided and the identity word renders as 1.  The zero element renders as 0.
std::string render(const GroupRingElement& v, const Alphabet& alphabet);

} // namespace foxcup

#endif
