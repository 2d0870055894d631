#include "foxcup/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "foxcup/error.hpp"

namespace foxcup {

namespace {

constexpr int kFullValidationCap = 512;

void validate_table(const std::vector<int>& table, int order,
                    bool* fully_validated) {
  auto mul = [&](int a, int b) {
    return table[static_cast<std::size_t>(a) * order + b];
  };
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= order)
      throw domain_error("multiplication table entry out of range");
  for (int a = 0; a < order; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw domain_error("element 0 is not an identity");
  for (int a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) has_inverse = true;
    if (!has_inverse)
      throw domain_error("element " + std::to_string(a) + " has no inverse");
  }
  if (order <= kFullValidationCap) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw domain_error("multiplication table is not associative");
    *fully_validated = true;
  } else {
    std::mt19937 rng(2654435761u);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw domain_error("multiplication table is not associative");
    }
    *fully_validated = false;
  }
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<int> table,
                                    std::vector<int> generators,
                                    std::vector<std::string> element_names) {
  const auto order_sz = element_names.size();
  if (table.size() != order_sz * order_sz)
    throw domain_error("multiplication table size mismatch");
  FiniteGroup g;
  g.order_ = static_cast<int>(order_sz);
  g.table_ = std::move(table);
  g.names_ = std::move(element_names);
  g.generators_ = std::move(generators);
  validate_table(g.table_, g.order_, &g.fully_validated_);

  g.inverse_.assign(g.order_, -1);
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse_[a] = b;
        break;
      }

  if (g.closure(g.generators_).size() != static_cast<std::size_t>(g.order_))
    throw domain_error("declared generators do not generate the group");
  return g;
}

int FiniteGroup::evaluate(const Word& w, const std::vector<int>& images) const {
  int acc = 0;
  for (Letter l : w) {
    int idx = generator_of(l) - 1;
    if (idx < 0 || static_cast<std::size_t>(idx) >= images.size())
      throw domain_error("word letter has no generator image");
    int img = l > 0 ? images[idx] : inverse(images[idx]);
    acc = mul(acc, img);
  }
  return acc;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& elements) const {
  std::vector<bool> seen(order_, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int gen : elements) {
      int next = mul(queue[head], gen);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

FiniteGroup semidirect_zn(int n) {
  if (n < 1) throw domain_error("modulus must be positive");
  std::vector<int> units;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  if (n == 1) units.push_back(0); // degenerate trivial group: (0,0) ~ (1,0)

  const int order = static_cast<int>(units.size()) * n;
  std::vector<std::pair<int, int>> elems;
  elems.reserve(order);
  for (int a : units)
    for (int b = 0; b < n; ++b) elems.emplace_back(a, b);

  std::vector<int> unit_index(n == 1 ? 1 : n, -1);
  for (std::size_t u = 0; u < units.size(); ++u)
    unit_index[units[u]] = static_cast<int>(u);
  auto id_of = [&](int a, int b) {
    if (unit_index[a] < 0)
      throw std::logic_error("semidirect product closed incorrectly");
    return unit_index[a] * n + b;
  };

  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      auto [a, b] = elems[i];
      auto [a2, b2] = elems[j];
      table[static_cast<std::size_t>(i) * order + j] =
          id_of(a * a2 % n, (a * b2 + b) % n);
    }

  std::vector<std::string> names;
  names.reserve(order);
  for (auto [a, b] : elems)
    names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");

  std::vector<int> gens;
  for (int i = 1; i < order; ++i) gens.push_back(i); // all non-identity
  return FiniteGroup::from_table(std::move(table), std::move(gens),
                                 std::move(names));
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::string out;
  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    out.push_back('(');
    int j = i;
    bool first = true;
    do {
      if (!first) out.push_back(' ');
      out += std::to_string(j + 1);
      done[j] = true;
      first = false;
      j = p[j];
    } while (j != i);
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

} // namespace

FiniteGroup group_from_permutations(int degree,
                                    const std::vector<std::vector<int>>& gens,
                                    int order_cap) {
  if (degree < 0) throw domain_error("negative degree");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw domain_error("permutation degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v])
        throw domain_error("generator is not a permutation");
      hit[v] = true;
    }
  }

  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);

  // BFS closure under right multiplication, identity first.
  std::vector<std::vector<int>> elems{ident};
  std::map<std::vector<int>, int> index{{ident, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& gen : gens) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = gen[elems[head][x]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (static_cast<int>(elems.size()) > order_cap)
          throw budget_error("permutation closure exceeds order cap " +
                             std::to_string(order_cap));
      }
    }

  const int order = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = elems[j][elems[i][x]];
      table[static_cast<std::size_t>(i) * order + j] = index.at(prod);
    }

  std::vector<std::string> names;
  names.reserve(order);
  for (const auto& p : elems) names.push_back(cycle_notation(p));

  std::vector<int> generator_ids;
  for (const auto& gen : gens) generator_ids.push_back(index.at(gen));
  return FiniteGroup::from_table(std::move(table), std::move(generator_ids),
                                 std::move(names));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  Subgroup h{std::move(elements)};
  for (int x : h.elements)
    if (x < 0 || x >= g.order())
      throw domain_error("subgroup element id out of range");
  if (!h.contains(0)) throw domain_error("subgroup does not contain the identity");
  for (int x : h.elements) {
    if (!h.contains(g.inverse(x)))
      throw domain_error("subgroup not closed under inverse");
    for (int y : h.elements)
      if (!h.contains(g.mul(x, y)))
        throw domain_error("subgroup not closed under multiplication");
  }
  if (g.order() % h.order() != 0)
    throw std::logic_error("subgroup order does not divide group order");
  return h;
}

Subgroup subgroup_generated_by(const FiniteGroup& g,
                               const std::vector<int>& generators) {
  return Subgroup{g.closure(generators)};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int c = 0; c < g.order(); ++c) {
      int y = g.mul(g.mul(c, x), g.inverse(c));
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes; // ordered by least element since x scans upward
}

bool is_almost_conjugate(const FiniteGroup& g, const Subgroup& h1,
                         const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    int c1 = 0, c2 = 0;
    for (int x : cls) {
      c1 += h1.contains(x);
      c2 += h2.contains(x);
    }
    if (c1 != c2) return false;
  }
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by) {
  std::vector<int> conj;
  conj.reserve(h.elements.size());
  for (int x : h.elements) conj.push_back(g.mul(g.mul(by, x), g.inverse(by)));
  std::sort(conj.begin(), conj.end());
  return Subgroup{std::move(conj)};
}

bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                             const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (int c = 0; c < g.order(); ++c)
    if (conjugate_subgroup(g, h1, c) == h2) return true;
  return false;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<int>> found{{0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    std::vector<int> base = found[head]; // copy: found grows underneath
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      std::vector<int> ext = g.closure(gens);
      if (std::find(found.begin(), found.end(), ext) == found.end())
        found.push_back(std::move(ext));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup{std::move(e)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::vector<int>> parse_cycles(std::string_view text, int degree,
                                           int line_no) {
  // One permutation in cycle notation, e.g. "(1 2 3)(4 5)"; points 1-based.
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected point number in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) fail("cycle point out of range");
      cycle.push_back(v - 1);
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i; // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (perm[from] != from) fail("point repeated across cycles");
      perm[from] = to;
    }
  }
  return {perm};
}

} // namespace

GroupFile parse_group_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  bool have_group = false;
  bool perm_mode = false;
  int perm_degree = 0;
  int zn_modulus = 0;
  std::vector<std::vector<int>> perm_gens;
  std::vector<std::string> sub_lines;
  std::vector<int> sub_line_nos;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.substr(0, 6) == "group:") {
      if (have_group)
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate group: declaration");
      std::istringstream toks{std::string(trim(line.substr(6)))};
      std::string kind;
      toks >> kind;
      if (kind == "zn-semidirect") {
        if (!(toks >> zn_modulus) || zn_modulus < 1)
          throw parse_error("line " + std::to_string(line_no) +
                            ": zn-semidirect needs a positive modulus");
      } else if (kind == "perm") {
        perm_mode = true;
        if (!(toks >> perm_degree) || perm_degree < 0)
          throw parse_error("line " + std::to_string(line_no) +
                            ": perm needs a degree");
      } else {
        throw parse_error("line " + std::to_string(line_no) +
                          ": unknown group kind '" + kind + "'");
      }
      have_group = true;
      continue;
    }

    if (line.substr(0, 4) == "gen:") {
      if (!perm_mode)
        throw parse_error("line " + std::to_string(line_no) +
                          ": gen: lines only apply to perm groups");
      auto perms = parse_cycles(trim(line.substr(4)), perm_degree, line_no);
      perm_gens.insert(perm_gens.end(), perms.begin(), perms.end());
      continue;
    }

    if (line.substr(0, 4) == "sub:") {
      if (!have_group)
        throw parse_error("line " + std::to_string(line_no) +
                          ": sub: before group:");
      sub_lines.emplace_back(trim(line.substr(4)));
      sub_line_nos.push_back(line_no);
      continue;
    }

    throw parse_error("line " + std::to_string(line_no) +
                      ": expected group:, gen:, sub:, blank line, or # comment");
  }
  if (!have_group) throw parse_error("missing group: declaration");

  GroupFile out{perm_mode ? group_from_permutations(perm_degree, perm_gens)
                          : semidirect_zn(zn_modulus),
                {}};

  for (std::size_t s = 0; s < sub_lines.size(); ++s) {
    // Tokens are either e<id> or element names; names carry no whitespace
    // ("(a,b)" for zn-semidirect), so splitting on whitespace is enough.
    std::vector<int> ids;
    std::istringstream split{sub_lines[s]};
    for (std::string t; split >> t;) {
      if (t.size() > 1 && t[0] == 'e' &&
          t.find_first_not_of("0123456789", 1) == std::string::npos) {
        ids.push_back(std::atoi(t.c_str() + 1));
        continue;
      }
      int found = -1;
      for (int i = 0; i < out.group.order(); ++i)
        if (out.group.name(i) == t) {
          found = i;
          break;
        }
      if (found < 0)
        throw parse_error("line " + std::to_string(sub_line_nos[s]) +
                          ": unknown element '" + t + "'");
      ids.push_back(found);
    }
    out.subgroups.push_back(make_subgroup(out.group, std::move(ids)));
  }
  return out;
}

} // namespace foxcup
