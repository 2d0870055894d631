#include "foxcup/group_ring.hpp"

#include "foxcup/error.hpp"

namespace foxcup {

GroupRingElement GroupRingElement::term(const Word& w, mpz_class c) {
  GroupRingElement v;
  v.add_term(w, c);
  return v;
}

mpz_class GroupRingElement::coefficient(const Word& reduced_word) const {
  auto it = terms_.find(reduced_word);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  Word key = free_reduce(w);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& v) {
  for (const auto& [w, c] : v.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& v) {
  for (const auto& [w, c] : v.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  return scaled(-1);
}

GroupRingElement GroupRingElement::scaled(const mpz_class& c) const {
  GroupRingElement out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

GroupRingElement left_multiply_by_word(const Word& g, const GroupRingElement& v) {
  GroupRingElement out;
  for (const auto& [w, c] : v.terms()) out.add_term(concat(g, w), c);
  return out;
}

mpz_class augmentation(const GroupRingElement& v) {
  mpz_class s = 0;
  for (const auto& [w, c] : v.terms()) s += c;
  return s;
}

namespace {

void check_index(int i) {
  if (i < 1) throw domain_error("generator index " + std::to_string(i) +
                                " out of range (indices are 1-based)");
}

// Append one letter to a reduced word, keeping it reduced.
void push_reduced(std::vector<Letter>& prefix, Letter l) {
  if (!prefix.empty() && prefix.back() == -l)
    prefix.pop_back();
  else
    prefix.push_back(l);
}

} // namespace

GroupRingElement fox_derivative(const Word& w, int i) {
  check_index(i);
  GroupRingElement out;
  std::vector<Letter> prefix; // reduced product of the letters seen so far
  prefix.reserve(w.size());
  for (Letter l : w) {
    if (l == i) {
      out.add_term(Word(prefix), 1);
    } else if (l == -i) {
      std::vector<Letter> t = prefix;
      push_reduced(t, l);
      out.add_term(Word(std::move(t)), -1);
    }
    push_reduced(prefix, l);
  }
  return out;
}

GroupRingElement fox_derivative(const GroupRingElement& v, int i) {
  check_index(i);
  GroupRingElement out;
  for (const auto& [w, c] : v.terms()) out += fox_derivative(w, i).scaled(c);
  return out;
}

mpz_class augmented_fox(const Word& w, int i) {
  check_index(i);
  mpz_class s = 0;
  for (Letter l : w) {
    if (l == i) ++s;
    if (l == -i) --s;
  }
  return s;
}

mpz_class augmented_fox(const GroupRingElement& v, int i) {
  check_index(i);
  mpz_class s = 0;
  for (const auto& [w, c] : v.terms()) s += c * augmented_fox(w, i);
  return s;
}

mpz_class double_fox(const Word& w, int s, int t) {
  check_index(s);
  check_index(t);
  return augmented_fox(fox_derivative(w, t), s);
}

std::string render(const GroupRingElement& v, const Alphabet& alphabet) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : v.terms()) {
    bool negative = c < 0;
    mpz_class mag = negative ? mpz_class(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag == 1)
      out += w.empty() ? "1" : render_word(w, alphabet);
    else if (w.empty())
      out += mag.get_str();
    else
      out += mag.get_str() + "*" + render_word(w, alphabet);
  }
  return out;
}

} // namespace foxcup
