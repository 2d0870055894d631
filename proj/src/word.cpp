#include "foxcup/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "foxcup/error.hpp"

namespace foxcup {

int Word::max_generator() const {
  int best = 0;
  for (Letter l : letters_) best = std::max(best, generator_of(l));
  return best;
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] == -letters_[i + 1]) return false;
  return true;
}

bool WordLengthLexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Letter x = a[i], y = b[i];
    if (x == y) continue;
    if (generator_of(x) != generator_of(y))
      return generator_of(x) < generator_of(y);
    return x > 0; // x_i before x_i^{-1}
  }
  return false;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word power(const Word& w, long k) {
  const Word base = k < 0 ? invert(w) : w;
  const long reps = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(reps) * w.size());
  for (long i = 0; i < reps; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + lo, r.begin() + hi));
}

namespace {

Word parse_numeric_word(std::string_view text, int n) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c != 'x' && c != 'X')
      throw parse_error("bad numeric word token at position " +
                        std::to_string(i + 1) + ": expected x<k> or X<k>");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i + 1)
      throw parse_error("bad numeric word token at position " +
                        std::to_string(i + 1) + ": missing generator index");
    int k = std::atoi(std::string(text.substr(i + 1, j - i - 1)).c_str());
    if (k < 1 || k > n)
      throw parse_error("generator index " + std::to_string(k) +
                        " at position " + std::to_string(i + 1) +
                        " outside alphabet of size " + std::to_string(n));
    out.push_back(c == 'x' ? k : -k);
    i = j;
  }
  return Word(std::move(out));
}

} // namespace

Word parse_word(std::string_view text, int n) {
  bool numeric = false;
  for (char c : text)
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        std::isspace(static_cast<unsigned char>(c)))
      numeric = true;
  if (numeric) return parse_numeric_word(text, n);

  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int idx;
    if (c >= 'a' && c <= 'z')
      idx = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      idx = -(c - 'A' + 1);
    else
      throw parse_error(std::string("character '") + c + "' at position " +
                        std::to_string(i + 1) + " is not a generator letter");
    if (generator_of(idx) > n)
      throw parse_error(std::string("character '") + c + "' at position " +
                        std::to_string(i + 1) + " outside alphabet of size " +
                        std::to_string(n));
    out.push_back(idx);
  }
  return Word(std::move(out));
}

} // namespace foxcup
