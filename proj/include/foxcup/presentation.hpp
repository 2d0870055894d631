#ifndef FOXCUP_PRESENTATION_HPP
#define FOXCUP_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "foxcup/word.hpp"

namespace foxcup {

// Display alphabet of a presentation.  When `names` is nonempty it holds one
// distinct lowercase letter per generator and words render as compact letter
// strings; otherwise the alphabet is numeric and words render as x±k tokens.
struct Alphabet {
  int size = 0;
  std::string names; // empty => numeric mode

  bool lettered() const { return !names.empty(); }

  // 1-based index of a generator letter, 0 if not declared.
  int index_of(char c) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == c) return static_cast<int>(i) + 1;
    return 0;
  }

  bool operator==(const Alphabet&) const = default;
};

// Default display alphabet: a,b,c,... for n <= 26, numeric beyond that.
Alphabet default_alphabet(int n);

// A finite group presentation <x_1..x_n | r_1..r_m>.  Relators are kept
// exactly as supplied (unreduced, in order); Fox calculus is invariant under
// free reduction, and verbatim storage keeps fixtures byte-comparable.
class Presentation {
public:
  Presentation() = default;
  Presentation(int generator_count, std::vector<Word> relators);
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  int generator_count() const { return alphabet_.size; }
  int relator_count() const { return static_cast<int>(relators_.size()); }
  const std::vector<Word>& relators() const { return relators_; }
  const Alphabet& alphabet() const { return alphabet_; }

  bool operator==(const Presentation&) const = default;

private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

// Line-oriented presentation text format:
//   gens: a b c        single-letter generator names, or
//   gens: 9            numeric count enabling x1..x9 / X1..X9 tokens
//   rel: abAB          one relator per line
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);

std::string render_word(const Word& w, const Alphabet& alphabet);

// Inverse of parse_presentation up to empty relators, which the text format
// cannot express and which are omitted.
std::string render_presentation(const Presentation& p);

} // namespace foxcup

#endif
