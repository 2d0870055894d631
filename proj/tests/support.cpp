#include "support.hpp"

#include <algorithm>

namespace foxcup::testing {

Presentation random_tietze_moves(const Presentation& p, std::mt19937& rng,
                                 int moves) {
  int n = p.generator_count();
  std::vector<Word> rels = p.relators();
  std::uniform_int_distribution<int> kind(0, 5);
  for (int step = 0; step < moves; ++step) {
    if (rels.empty()) break;
    std::uniform_int_distribution<int> pick_rel(
        0, static_cast<int>(rels.size()) - 1);
    std::uniform_int_distribution<int> pick_gen(1, n);
    std::uniform_int_distribution<int> sign(0, 1);
    int k = pick_rel(rng);
    switch (kind(rng)) {
      case 0: { // conjugate by a letter
        Letter l = sign(rng) ? pick_gen(rng) : -pick_gen(rng);
        rels[k] = concat(concat(Word({l}), rels[k]), Word({-l}));
        break;
      }
      case 1: { // multiply by another relator
        int l = pick_rel(rng);
        if (l != k) rels[k] = concat(rels[k], rels[l]);
        break;
      }
      case 2:
        rels[k] = invert(rels[k]);
        break;
      case 3: { // rotate cyclically (conjugation by a prefix)
        if (!rels[k].empty()) {
          std::vector<Letter> ls = rels[k].letters();
          std::rotate(ls.begin(), ls.begin() + 1, ls.end());
          rels[k] = Word(std::move(ls));
        }
        break;
      }
      case 4: { // swap two relators
        int l = pick_rel(rng);
        std::swap(rels[k], rels[l]);
        break;
      }
      case 5: { // add a redundant generator with its defining relator
        Word w = random_word(rng, n, 4);
        n += 1;
        rels.push_back(concat(Word({n}), invert(w)));
        break;
      }
    }
  }
  Alphabet a;
  a.size = n;
  if (n <= 26) a = default_alphabet(n);
  return Presentation(a, std::move(rels));
}

Int determinant_cofactor(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = m.at(r, k);
      }
    }
    Int term = m.at(0, c) * determinant_cofactor(minor);
    det += (c % 2 == 0) ? term : Int(-term);
  }
  return det;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<Int> snf_minor_gcd_oracle(const IntMatrix& m) {
  const int maxk = std::min(m.rows(), m.cols());
  Int prev = 1; // D_{k-1}; the k-th invariant factor is D_k / D_{k-1}
  std::vector<Int> factors;
  for (int k = 1; k <= maxk; ++k) {
    Int g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
        Int d = determinant_cofactor(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break; // all larger minors vanish too
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

} // namespace foxcup::testing
