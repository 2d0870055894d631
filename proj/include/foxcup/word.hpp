#ifndef FOXCUP_WORD_HPP
#define FOXCUP_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace foxcup {

// A letter of a free-group word: +i stands for the generator x_i, -i for its
// inverse, with i >= 1.
using Letter = int32_t;

inline int generator_of(Letter l) { return l < 0 ? -l : l; }
inline Letter inverse_letter(Letter l) { return -l; }

// A word in a free group, stored as its letter sequence.  Words are plain
// immutable-ish values; nothing here requires or enforces free reduction --
// operations state whether they produce reduced output.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest generator index appearing in the word; 0 for the empty word.
  int max_generator() const;

  bool is_reduced() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

// Canonical term order used by the group ring: length first, then letterwise
// with x_i before x_i^{-1} and smaller generator indices first.
struct WordLengthLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

// The unique freely reduced word equal to w; idempotent.
Word free_reduce(const Word& w);

// Reverse the letters and flip every sign.
Word invert(const Word& w);

// Plain juxtaposition, no reduction.
Word concat(const Word& u, const Word& v);

// w^k; k = 0 gives the identity, negative k repeats invert(w).
Word power(const Word& w, long k);

// Freely reduce, then strip conjugating prefix/suffix pairs (x u X -> u).
Word cyclic_reduce(const Word& w);

// Parse a word over an alphabet of size n.  Two textual forms are accepted:
// compact single letters ("aBc": lowercase = generator, uppercase = inverse)
// and, whenever the text contains a digit or whitespace, space-separated
// numeric tokens ("x1 X3 x2").  Output is in input order, not reduced.
Word parse_word(std::string_view text, int alphabet_size);

} // namespace foxcup

#endif
