#include "foxcup/sunada.hpp"

#include <algorithm>
#include <map>

#include "foxcup/error.hpp"

namespace foxcup {

Homomorphism make_homomorphism(const Presentation& p, const FiniteGroup& g,
                               std::vector<int> images) {
  if (static_cast<int>(images.size()) != p.generator_count())
    throw domain_error("expected one image per generator");
  for (int img : images)
    if (img < 0 || img >= g.order())
      throw domain_error("generator image out of range");
  Homomorphism phi{std::move(images)};
  for (int k = 0; k < p.relator_count(); ++k)
    if (g.evaluate(p.relators()[k], phi.images) != 0)
      throw domain_error("relator " + std::to_string(k + 1) +
                         " does not map to the identity");
  return phi;
}

namespace {

// Relators indexed by the largest generator they mention, so a relator is
// checked as soon as its last generator receives an image.
std::vector<std::vector<const Word*>> relators_by_max_gen(const Presentation& p) {
  std::vector<std::vector<const Word*>> by_gen(p.generator_count() + 1);
  for (const Word& r : p.relators())
    by_gen[r.max_generator()].push_back(&r);
  return by_gen;
}

void epi_dfs(const Presentation& p, const FiniteGroup& g,
             const std::vector<std::vector<const Word*>>& by_gen,
             std::vector<int>& images, int depth, int max_results,
             std::vector<Homomorphism>& out) {
  const int n = p.generator_count();
  if (static_cast<int>(out.size()) >= max_results) return;
  if (depth == n) {
    if (g.closure(images).size() == static_cast<std::size_t>(g.order()))
      out.push_back(Homomorphism{images});
    return;
  }
  for (int img = 0; img < g.order(); ++img) {
    images[depth] = img;
    bool ok = true;
    for (const Word* r : by_gen[depth + 1])
      if (g.evaluate(*r, images) != 0) {
        ok = false;
        break;
      }
    if (ok) epi_dfs(p, g, by_gen, images, depth + 1, max_results, out);
    if (static_cast<int>(out.size()) >= max_results) break;
  }
}

void check_budget(const Presentation& p, const FiniteGroup& g,
                  const EpiSearchOptions& opts) {
  Int candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), static_cast<unsigned long>(g.order()),
                static_cast<unsigned long>(p.generator_count()));
  if (candidates > Int(static_cast<long>(opts.budget)))
    throw budget_error("epimorphism search over |G|^n = " +
                       candidates.get_str() +
                       " candidate assignments exceeds budget " +
                       std::to_string(opts.budget));
}

// Relators containing only generator 1 can reject a branch before descent.
bool branch_viable(const Presentation& p, const FiniteGroup& g,
                   const std::vector<std::vector<const Word*>>& by_gen,
                   std::vector<int>& images) {
  for (const Word* r : by_gen[1])
    if (g.evaluate(*r, images) != 0) return false;
  return true;
}

} // namespace

std::vector<Homomorphism> find_epimorphisms_serial(const Presentation& p,
                                                   const FiniteGroup& g,
                                                   const EpiSearchOptions& opts) {
  check_budget(p, g, opts);
  if (p.generator_count() == 0) {
    // Only the trivial map exists; it is surjective iff G is trivial.
    return g.order() == 1 ? std::vector<Homomorphism>{Homomorphism{}}
                          : std::vector<Homomorphism>{};
  }
  auto by_gen = relators_by_max_gen(p);
  std::vector<int> images(p.generator_count(), 0);
  std::vector<Homomorphism> out;
  epi_dfs(p, g, by_gen, images, 0, opts.max_results, out);
  return out;
}

std::vector<Homomorphism> find_epimorphisms(const Presentation& p,
                                            const FiniteGroup& g,
                                            const EpiSearchOptions& opts) {
  check_budget(p, g, opts);
  const int n = p.generator_count();
  if (n == 0) return find_epimorphisms_serial(p, g, opts);

  auto by_gen = relators_by_max_gen(p);
  // One branch per image of the first generator; each branch enumerates in
  // lexicographic order, so the per-branch prefixes of length max_results
  // cover the global prefix and concatenation preserves the order.
  std::vector<std::vector<Homomorphism>> branch(g.order());
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < g.order(); ++first) {
    std::vector<int> images(n, 0);
    images[0] = first;
    if (!branch_viable(p, g, by_gen, images)) continue;
    epi_dfs(p, g, by_gen, images, 1, opts.max_results, branch[first]);
  }

  std::vector<Homomorphism> out;
  for (auto& b : branch)
    for (auto& h : b) {
      if (static_cast<int>(out.size()) >= opts.max_results) return out;
      out.push_back(std::move(h));
    }
  return out;
}

CosetTable::CosetTable(int degree, int generator_count,
                       std::vector<int> forward, std::vector<int> backward)
    : degree_(degree), gens_(generator_count), fwd_(std::move(forward)),
      bwd_(std::move(backward)) {
  const auto cells = static_cast<std::size_t>(degree_) * gens_;
  if (fwd_.size() != cells || bwd_.size() != cells)
    throw domain_error("coset table size mismatch");
  for (int i = 1; i <= gens_; ++i) {
    std::vector<bool> image_seen(degree_, false);
    for (int c = 0; c < degree_; ++c) {
      int to = apply(c, i);
      if (to < 0 || to >= degree_ || image_seen[to])
        throw domain_error("generator does not act as a permutation of cosets");
      image_seen[to] = true;
      if (apply(to, -i) != c)
        throw domain_error("inverse letter does not act as the inverse");
    }
  }
}

CosetTable preimage_coset_table(const Presentation& p, const FiniteGroup& g,
                                const Homomorphism& phi, const Subgroup& h) {
  const int n = p.generator_count();
  // Identify the coset Hx by the minimum element of {h x : h in H}.
  std::vector<int> coset_key(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int key = g.order();
    for (int hh : h.elements) key = std::min(key, g.mul(hh, x));
    coset_key[x] = key;
  }

  std::map<int, int> index; // coset key -> coset id, in BFS discovery order
  std::vector<int> rep;     // one group element per coset
  index[coset_key[0]] = 0;
  rep.push_back(0);
  std::vector<int> fwd, bwd;
  for (std::size_t head = 0; head < rep.size(); ++head) {
    fwd.resize((head + 1) * n);
    bwd.resize((head + 1) * n);
    for (int i = 0; i < n; ++i) {
      for (int sign : {+1, -1}) {
        int img = sign > 0 ? phi.images[i] : g.inverse(phi.images[i]);
        int target_key = coset_key[g.mul(rep[head], img)];
        auto [it, inserted] =
            index.emplace(target_key, static_cast<int>(rep.size()));
        if (inserted) rep.push_back(target_key);
        auto& table = sign > 0 ? fwd : bwd;
        table[head * n + i] = it->second;
      }
    }
  }
  return CosetTable(static_cast<int>(rep.size()), n, std::move(fwd),
                    std::move(bwd));
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  const int n = p.generator_count();
  const int d = t.degree();

  // Schreier transversal: BFS tree over cosets, trying letters in the order
  // x1, X1, x2, X2, ...  tree_edge marks the positive edge (coset, gen) used
  // by the tree in either direction.
  std::vector<bool> visited(d, false);
  std::vector<std::pair<int, int>> tree_positive; // (coset, gen) pairs
  std::vector<int> order{0};
  visited[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int i = 1; i <= n; ++i)
      for (Letter l : {Letter(i), Letter(-i)}) {
        int to = t.apply(c, l);
        if (visited[to]) continue;
        visited[to] = true;
        order.push_back(to);
        if (l > 0)
          tree_positive.emplace_back(c, i);
        else
          tree_positive.emplace_back(to, i); // X-edge c->to is x-edge to->c
      }
  }
  if (static_cast<int>(order.size()) != d)
    throw domain_error("coset table is not transitive");

  // Number the non-tree positive edges: these are the subgroup generators.
  std::vector<int> schreier_gen(static_cast<std::size_t>(d) * n, 0);
  for (auto [c, i] : tree_positive) schreier_gen[c * n + (i - 1)] = -1;
  int next = 0;
  for (int c = 0; c < d; ++c)
    for (int i = 1; i <= n; ++i)
      if (schreier_gen[c * n + (i - 1)] == 0)
        schreier_gen[c * n + (i - 1)] = ++next;
  const int new_gens = next; // d*n - (d-1)

  // Rewrite each relator starting from each coset; tree edges emit nothing.
  std::vector<Word> new_relators;
  new_relators.reserve(static_cast<std::size_t>(d) * p.relator_count());
  for (int c0 = 0; c0 < d; ++c0)
    for (const Word& r : p.relators()) {
      std::vector<Letter> out;
      int c = c0;
      for (Letter l : r) {
        if (l > 0) {
          int sg = schreier_gen[c * n + (l - 1)];
          if (sg > 0) out.push_back(sg);
          c = t.apply(c, l);
        } else {
          int prev = t.apply(c, l);
          int sg = schreier_gen[prev * n + (generator_of(l) - 1)];
          if (sg > 0) out.push_back(-sg);
          c = prev;
        }
      }
      if (c != c0)
        throw domain_error("relator does not act trivially on the cosets");
      new_relators.emplace_back(std::move(out));
    }

  Alphabet numeric;
  numeric.size = new_gens;
  Presentation result(numeric, std::move(new_relators));

  const long lhs = 1L - new_gens + result.relator_count();
  const long rhs = static_cast<long>(d) * (1L - n + p.relator_count());
  if (lhs != rhs)
    throw std::logic_error("Reidemeister-Schreier Euler characteristic mismatch");
  return result;
}

namespace {

// Least rotation among all rotations of w and of its inverse, on cyclically
// reduced input; conjugate or inverted relators collapse to the same key.
Word cyclic_canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, invert(w)}) {
    std::vector<Letter> ls = base.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      Word cand(ls);
      if (cand < best) best = cand;
    }
  }
  return best;
}

struct TietzeState {
  int n;
  std::string names; // empty in numeric mode
  std::vector<Word> relators;
};

// Drop generator `gen` (1-based) and shift higher indices down.
Word renumber_without(const Word& w, int gen) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    int i = generator_of(l);
    if (i == gen) throw std::logic_error("eliminated generator still present");
    if (i > gen) i -= 1;
    out.push_back(l > 0 ? i : -i);
  }
  return Word(std::move(out));
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  std::vector<Letter> out;
  const Word inv = invert(replacement);
  for (Letter l : w) {
    if (generator_of(l) != gen) {
      out.push_back(l);
      continue;
    }
    const Word& rep = l > 0 ? replacement : inv;
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return Word(std::move(out));
}

bool reduce_and_dedupe(TietzeState& st) {
  bool changed = false;
  for (Word& r : st.relators) {
    Word reduced = cyclic_reduce(r);
    if (reduced != r) {
      r = std::move(reduced);
      changed = true;
    }
  }
  std::vector<Word> kept;
  std::vector<Word> seen_keys;
  for (Word& r : st.relators) {
    if (r.empty()) {
      changed = true;
      continue;
    }
    Word key = cyclic_canonical(r);
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) {
      changed = true;
      continue;
    }
    seen_keys.push_back(std::move(key));
    kept.push_back(std::move(r));
  }
  st.relators = std::move(kept);
  return changed;
}

bool eliminate_one_generator(TietzeState& st) {
  // Candidates: (relator k, generator gen) where gen occurs exactly once in
  // relator k.  Cost favors generators that barely occur elsewhere.
  long best_cost = -1;
  int best_k = -1, best_gen = 0;
  for (int k = 0; k < static_cast<int>(st.relators.size()); ++k) {
    const Word& r = st.relators[k];
    for (int gen = 1; gen <= st.n; ++gen) {
      int here = 0;
      for (Letter l : r) here += generator_of(l) == gen;
      if (here != 1) continue;
      long elsewhere = 0;
      for (int k2 = 0; k2 < static_cast<int>(st.relators.size()); ++k2) {
        if (k2 == k) continue;
        for (Letter l : st.relators[k2]) elsewhere += generator_of(l) == gen;
      }
      long cost = elsewhere * static_cast<long>(r.size());
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best_k = k;
        best_gen = gen;
      }
    }
  }
  if (best_k < 0) return false;

  const Word r = st.relators[best_k];
  std::size_t pos = 0;
  while (generator_of(r[pos]) != best_gen) ++pos;
  Word before(std::vector<Letter>(r.begin(), r.begin() + pos));
  Word after(std::vector<Letter>(r.begin() + pos + 1, r.end()));
  // u g v = 1 => g = u^{-1} v^{-1}; u G v = 1 => g = v u.
  Word replacement = r[pos] > 0 ? concat(invert(before), invert(after))
                                : concat(after, before);

  std::vector<Word> remaining;
  remaining.reserve(st.relators.size() - 1);
  for (int k = 0; k < static_cast<int>(st.relators.size()); ++k) {
    if (k == best_k) continue;
    remaining.push_back(renumber_without(
        free_reduce(substitute(st.relators[k], best_gen, replacement)),
        best_gen));
  }
  st.relators = std::move(remaining);
  if (!st.names.empty()) st.names.erase(st.names.begin() + (best_gen - 1));
  st.n -= 1;
  return true;
}

} // namespace

Presentation tietze_simplify(const Presentation& p, int max_steps) {
  TietzeState st{p.generator_count(), p.alphabet().names, p.relators()};
  for (int step = 0; step < max_steps; ++step) {
    bool changed = reduce_and_dedupe(st);
    changed |= eliminate_one_generator(st);
    if (!changed) break;
  }
  Alphabet a;
  a.size = st.n;
  a.names = std::move(st.names);
  return Presentation(std::move(a), std::move(st.relators));
}

SunadaReport sunada_pipeline(const Presentation& p, const FiniteGroup& g,
                             const Subgroup& h1, const Subgroup& h2,
                             const SunadaOptions& opts) {
  if (!is_almost_conjugate(g, h1, h2))
    throw domain_error("the two subgroups are not almost conjugate");

  SunadaReport report;
  if (opts.phi) {
    report.phi = make_homomorphism(p, g, opts.phi->images);
    if (g.closure(report.phi.images).size() !=
        static_cast<std::size_t>(g.order()))
      throw domain_error("supplied homomorphism is not surjective");
  } else {
    EpiSearchOptions search = opts.search;
    search.max_results = 1;
    auto found = find_epimorphisms(p, g, search);
    if (found.empty())
      throw domain_error("no epimorphism onto the finite group exists");
    report.phi = std::move(found[0]);
  }

  auto build = [&](const Subgroup& h) {
    CosetTable table = preimage_coset_table(p, g, report.phi, h);
    Presentation sub = reidemeister_schreier(p, table);
    return opts.simplify ? tietze_simplify(sub) : sub;
  };
  report.subgroup_presentation_1 = build(h1);
  report.subgroup_presentation_2 = build(h2);

  report.homology_1 = h1_integral(report.subgroup_presentation_1);
  report.homology_2 = h1_integral(report.subgroup_presentation_2);
  report.cup_1 = cup_nullity(report.subgroup_presentation_1);
  report.cup_2 = cup_nullity(report.subgroup_presentation_2);

  report.homology_distinguishes =
      !isomorphic(report.homology_1, report.homology_2);
  report.cup_distinguishes = report.cup_1.nullity != report.cup_2.nullity;
  report.caveat =
      "freeness of the subgroup actions is a hypothesis about the manifold "
      "action and is not checked at the group level";
  return report;
}

} // namespace foxcup
