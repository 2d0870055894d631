#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>

#include "foxcup/cup.hpp"
#include "foxcup/sunada.hpp"
#include "support.hpp"

using namespace foxcup;

// The parallel kernels must be bit-identical to their serial references
// regardless of thread count.
TEST_CASE("parallel kernels match serial references across thread counts") {
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
#endif
  std::mt19937 rng(81);
  std::vector<Word> words;
  for (int i = 0; i < 20; ++i) words.push_back(testing::random_word(rng, 6, 40));

  Presentation f2 = parse_presentation("gens: a b\n");
  FiniteGroup s3 = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  auto serial_epis = find_epimorphisms_serial(f2, s3);

  Presentation surface = parse_presentation("gens: a b c d\nrel: abABcdCD\n");
  CupMatrix reference = cup_matrix(surface);

  for (int threads : {1, 2, 4}) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    if (threads > 1) continue;
#endif
    for (const Word& w : words)
      CHECK(epsilon_table(w, 6) == epsilon_table_serial(w, 6));
    CHECK(find_epimorphisms(f2, s3) == serial_epis);
    CupMatrix again = cup_matrix(surface);
    CHECK(again.entries == reference.entries);
    CHECK(again.rank == reference.rank);
  }
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
}
