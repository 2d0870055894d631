#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "foxcup/cup.hpp"
#include "foxcup/error.hpp"
#include "foxcup/group_ring.hpp"
#include "foxcup/homology.hpp"
#include "support.hpp"

using namespace foxcup;

namespace {

Presentation pres(const char* text) { return parse_presentation(text); }

Presentation load_fixture(const char* name) {
  std::ifstream in(std::string(FOXCUP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_presentation(text.str());
}

} // namespace

TEST_CASE("abelianization_matrix fixtures") {
  AbelianizationMatrix a =
      abelianization_matrix(echelon_presentation(pres("gens: a b\n")));
  CHECK(a.betti == 2);
  CHECK(a.a == RatMatrix::identity(2));

  a = abelianization_matrix(echelon_presentation(pres("gens: a\nrel: aa\n")));
  CHECK(a.betti == 0);
  CHECK(a.a.rows() == 0);
}

TEST_CASE("kappa_matrix fixtures") {
  AbelianizationMatrix id2{RatMatrix::identity(2), 2};
  RatMatrix zero = kappa_matrix(Word{}, id2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(zero.at(i, j) == 0);

  RatMatrix torus = kappa_matrix(parse_word("abAB", 2), id2);
  CHECK(torus.at(0, 0) == 0);
  CHECK(torus.at(0, 1) == 1);
  CHECK(torus.at(1, 0) == -1);
  CHECK(torus.at(1, 1) == 0);
}

TEST_CASE("kappa is antisymmetric on words with zero signed counts") {
  std::mt19937 rng(41);
  AbelianizationMatrix id3{RatMatrix::identity(3), 3};
  for (int trial = 0; trial < 200; ++trial) {
    // products of commutators have vanishing augmented derivatives
    Word u = testing::random_word(rng, 3, 4);
    Word v = testing::random_word(rng, 3, 4);
    Word commutator =
        concat(concat(u, v), concat(invert(u), invert(v)));
    Word x = testing::random_word(rng, 3, 3);
    Word y = testing::random_word(rng, 3, 3);
    Word word = concat(commutator,
                       concat(concat(x, y), concat(invert(x), invert(y))));
    for (int i = 1; i <= 3; ++i) REQUIRE(augmented_fox(word, i) == 0);
    RatMatrix kappa = kappa_matrix(word, id3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(kappa.at(i, j) == -kappa.at(j, i));
  }
}

TEST_CASE("cup fixtures: torus, free group, degenerate b") {
  CupSummary torus = cup_nullity(pres("gens: a b\nrel: abAB\n"));
  CHECK(torus.betti == 2);
  CHECK(torus.h2_dim == 1);
  CHECK(torus.rank == 1);
  CHECK(torus.nullity == 0);
  CupMatrix tm = cup_matrix(pres("gens: a b\nrel: abAB\n"));
  Rat entry = tm.entries.at(0, 0);
  CHECK((entry == 1 || entry == -1));

  CupSummary free2 = cup_nullity(pres("gens: a b\n"));
  CHECK(free2.betti == 2);
  CHECK(free2.h2_dim == 0);
  CHECK(free2.rank == 0);
  CHECK(free2.nullity == 1);

  // b = 0: empty wedge, reported as rank 0 / nullity 0, not an error
  CupSummary killed = cup_nullity(pres("gens: a\nrel: aa\n"));
  CHECK(killed.betti == 0);
  CHECK(killed.rank == 0);
  CHECK(killed.nullity == 0);

  // b = 1 also yields zero columns
  CupSummary circle = cup_nullity(pres("gens: a\n"));
  CHECK(circle.betti == 1);
  CHECK(circle.nullity == 0);
}

TEST_CASE("cup on surface groups") {
  CupSummary genus2 = cup_nullity(pres("gens: a b c d\nrel: abABcdCD\n"));
  CHECK(genus2.betti == 4);
  CHECK(genus2.h2_dim == 1);
  CHECK(genus2.rank == 1);
  CHECK(genus2.nullity == 5);

  CupSummary genus3 = cup_nullity(pres("gens: a b c d e f\nrel: abABcdCDefEF\n"));
  CHECK(genus3.betti == 6);
  CHECK(genus3.rank == 1);
  CHECK(genus3.nullity == 14);
}

TEST_CASE("cup on free abelian groups is the full wedge map") {
  // T^3: the cup product embeds the wedge square into H^2
  CupSummary t3 = cup_nullity(
      pres("gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC\n"));
  CHECK(t3.betti == 3);
  CHECK(t3.h2_dim == 3);
  CHECK(t3.rank == 3);
  CHECK(t3.nullity == 0);

  // T^4, six commutators
  CupSummary t4 = cup_nullity(
      pres("gens: a b c d\nrel: abAB\nrel: acAC\nrel: adAD\nrel: bcBC\n"
           "rel: bdBD\nrel: cdCD\n"));
  CHECK(t4.betti == 4);
  CHECK(t4.h2_dim == 6);
  CHECK(t4.rank == 6);
  CHECK(t4.nullity == 0);
}

TEST_CASE("cup rank/nullity do not depend on the H^1 basis") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-3, 3);
  const char* fixtures[] = {
      "gens: a b\nrel: abAB\n",
      "gens: a b c d\nrel: abABcdCD\n",
      "gens: a b c\nrel: abAB\nrel: acAC\n",
  };
  for (const char* text : fixtures) {
    Presentation p = pres(text);
    EchelonPresentation e = echelon_presentation(p);
    AbelianizationMatrix a = abelianization_matrix(e);
    RatMatrix reference = assemble_cup_rows(e, a.a);
    int ref_rank = rational_rank(reference);

    for (int trial = 0; trial < 40; ++trial) {
      RatMatrix q(a.betti, a.betti);
      do {
        for (int i = 0; i < a.betti; ++i)
          for (int j = 0; j < a.betti; ++j) q.at(i, j) = entry(rng);
      } while (rational_rank(q) != a.betti);
      RatMatrix rows = assemble_cup_rows(e, multiply(q, a.a));
      CHECK(rational_rank(rows) == ref_rank);
      CHECK(rows.cols() == reference.cols());
    }
  }
}

TEST_CASE("cup invariants survive random Tietze moves on small fixtures") {
  std::mt19937 rng(44);
  const char* fixtures[] = {
      "gens: a b\nrel: abAB\n",              // torus
      "gens: a b\nrel: abaB\n",              // Klein bottle
      "gens: a b c d\nrel: abABcdCD\n",      // genus 2
      "gens: a b c\nrel: abAB\nrel: acAC\n", // Z^2 x Z
  };
  for (const char* text : fixtures) {
    Presentation p = pres(text);
    CupSummary ref = cup_nullity(p);
    HomologyReport href = h1_integral(p);
    for (int trial = 0; trial < 50; ++trial) {
      Presentation moved = testing::random_tietze_moves(p, rng, 4);
      CupSummary got = cup_nullity(moved);
      CHECK(got.betti == ref.betti);
      CHECK(got.rank == ref.rank);
      CHECK(got.nullity == ref.nullity);
      CHECK(isomorphic(h1_integral(moved), href));
    }
  }
}

TEST_CASE("serial and parallel epsilon tables agree") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = testing::random_word(rng, 5, 20);
    IntMatrix table = epsilon_table(w, 5);
    CHECK(table == epsilon_table_serial(w, 5));
    // definitional oracle: entry (s, t) is the double derivative e_{s,t}
    for (int s = 1; s <= 5; ++s)
      for (int t = 1; t <= 5; ++t)
        CHECK(table.at(s - 1, t - 1) == double_fox(w, s, t));
  }
  CHECK(epsilon_table(Word{}, 3) == epsilon_table_serial(Word{}, 3));
}

TEST_CASE("cup reproduces the bundled isospectral pair") {
  CupMatrix m1 = cup_matrix(load_fixture("pi1_M1.pres"));
  CHECK(m1.betti == 3);
  CHECK(m1.h2_dim == 3);
  CHECK(m1.rank == 3);
  CHECK(m1.nullity == 0);

  CupMatrix m2 = cup_matrix(load_fixture("pi1_M2.pres"));
  CHECK(m2.betti == 3);
  CHECK(m2.h2_dim == 3);
  CHECK(m2.rank == 0);
  CHECK(m2.nullity == 3);
  for (int r = 0; r < m2.entries.rows(); ++r)
    for (int c = 0; c < m2.entries.cols(); ++c)
      CHECK(m2.entries.at(r, c) == 0);
}
