#ifndef FOXCUP_FINITE_GROUP_HPP
#define FOXCUP_FINITE_GROUP_HPP

#include <string>
#include <string_view>
#include <vector>

#include "foxcup/word.hpp"

namespace foxcup {

// A finite group with elements identified with 0..order-1, element 0 the
// identity.  The full multiplication table is validated on construction
// (associativity, identity, inverses) up to order 512; larger groups get a
// randomized spot check and fully_validated() reports false.
class FiniteGroup {
public:
  // table[a * order + b] = a*b; generators must generate the whole group.
  static FiniteGroup from_table(std::vector<int> table,
                                std::vector<int> generators,
                                std::vector<std::string> element_names);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& name(int a) const { return names_[a]; }
  bool fully_validated() const { return fully_validated_; }

  // Product of a word's letters under the given generator images; images[i]
  // is the image of generator i+1.
  int evaluate(const Word& w, const std::vector<int>& images) const;

  // Smallest subgroup containing the given elements, as a sorted id list.
  std::vector<int> closure(const std::vector<int>& elements) const;

private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> names_;
  bool fully_validated_ = true;
};

// Z_n^* acting on Z_n with product (a,b)(a',b') = (aa', ab'+b); order is
// phi(n)*n and the identity is (1,0).  Elements are enumerated with the unit
// a ascending, then b ascending, so (1,0) gets id 0.
FiniteGroup semidirect_zn(int n);

// Closure of permutations of 0..degree-1 under composition, acting on the
// right: (p*q)(x) = q[p[x]].  Throws budget_error past order_cap.
FiniteGroup group_from_permutations(int degree,
                                    const std::vector<std::vector<int>>& gens,
                                    int order_cap = 100000);

// Sorted element list of a subgroup; validated against the parent on
// construction via make_subgroup.
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup&) const = default;
};

// Validates identity membership, closure, inverses, and Lagrange.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup subgroup_generated_by(const FiniteGroup& g,
                               const std::vector<int>& generators);

// Orbits of conjugation, each sorted, ordered by least element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// True iff every conjugacy class meets h1 and h2 in equally many elements.
bool is_almost_conjugate(const FiniteGroup& g, const Subgroup& h1,
                         const Subgroup& h2);

// True iff g h1 g^-1 = h2 for some g (brute force).
bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                             const Subgroup& h2);

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by);

// Every subgroup, found by saturating one-generator extensions; ordered by
// (order, elements).  Intended for small groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// Group input file:
//   group: zn-semidirect 8          or   group: perm 7
//   gen: (1 2 3)(4 5)               permutation generators, perm mode only
//   sub: (1,0) (3,0) (5,0) (7,0)    subgroup element lists; (a,b) pairs for
//   sub: e0 e3 e5                   zn-semidirect, e<id> indices for any mode
struct GroupFile {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
};
GroupFile parse_group_file(std::string_view text);

} // namespace foxcup

#endif
