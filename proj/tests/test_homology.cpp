#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "foxcup/cup.hpp"
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

TEST_CASE("h1_integral fixtures") {
  HomologyReport torus = h1_integral(pres("gens: a b\nrel: abAB\n"));
  CHECK(torus.free_rank == 2);
  CHECK(torus.torsion.empty());

  HomologyReport klein = h1_integral(pres("gens: a b\nrel: abaB\n"));
  CHECK(klein.free_rank == 1);
  CHECK(klein.torsion == std::vector<Int>{2});

  HomologyReport z2 = h1_integral(pres("gens: a\nrel: aa\n"));
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion == std::vector<Int>{2});

  HomologyReport trivial = h1_integral(pres("gens: a\nrel: a\n"));
  CHECK(trivial.free_rank == 0);
  CHECK(trivial.torsion.empty());

  // mixed primes stay in invariant-factor form
  HomologyReport mixed = h1_integral(pres("gens: a b\nrel: aa\nrel: bbbbbb\n"));
  CHECK(mixed.free_rank == 0);
  CHECK(mixed.torsion == (std::vector<Int>{2, 6}));
  CHECK(render_homology(mixed) == "Z/2 + Z/6");
}

TEST_CASE("h1 of the bundled isospectral pair") {
  HomologyReport m1 = h1_integral(load_fixture("pi1_M1.pres"));
  CHECK(m1.free_rank == 3);
  CHECK(m1.torsion == std::vector<Int>{2, 2, 2, 2, 4, 4});

  HomologyReport m2 = h1_integral(load_fixture("pi1_M2.pres"));
  CHECK(m2.free_rank == 3);
  CHECK(m2.torsion == std::vector<Int>{2, 2, 2, 2, 2, 8});

  CHECK(!isomorphic(m1, m2));
}

TEST_CASE("h1 is invariant under echelon recombination") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    Presentation p = testing::random_presentation(rng, 4, 4, 6);
    CHECK(h1_integral(p) == h1_integral(echelon_presentation(p).base));
    // and the free rank equals the cup module's Betti number
    CHECK(h1_integral(p).free_rank == cup_nullity(p).betti);
  }
}

TEST_CASE("render_homology") {
  CHECK(render_homology(HomologyReport{3, {2, 2, 2, 2, 4, 4}}) ==
        "Z^3 + Z/2^4 + Z/4^2");
  CHECK(render_homology(HomologyReport{3, {2, 2, 2, 2, 2, 8}}) ==
        "Z^3 + Z/2^5 + Z/8");
  CHECK(render_homology(HomologyReport{1, {}}) == "Z");
  CHECK(render_homology(HomologyReport{0, {6}}) == "Z/6");
  CHECK(render_homology(HomologyReport{0, {}}) == "0");
}
