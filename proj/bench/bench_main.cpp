// Benchmark comparing the OpenMP kernels against their serial references:
// double-derivative tables on long words (the cup hot loop) and the
// epimorphism search.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "foxcup/cup.hpp"
#include "foxcup/finite_group.hpp"
#include "foxcup/presentation.hpp"
#include "foxcup/sunada.hpp"

using namespace foxcup;
using Clock = std::chrono::steady_clock;

namespace {

Word random_reduced_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  letters.reserve(len);
  while (static_cast<int>(letters.size()) < len) {
    Letter l = sign(rng) ? gen(rng) : -gen(rng);
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

template <typename F>
double time_seconds(F&& f) {
  auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
              name, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
  int n = 24;          // alphabet size
  int len = 1500;      // relator length
  int relators = 16;   // words per epsilon-table workload
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") quick = true;
    if (arg == "--n" && i + 1 < argc) n = std::atoi(argv[++i]);
    if (arg == "--len" && i + 1 < argc) len = std::atoi(argv[++i]);
    if (arg == "--relators" && i + 1 < argc) relators = std::atoi(argv[++i]);
  }
  if (quick) {
    n = 8;
    len = 200;
    relators = 4;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  std::mt19937 rng(97);
  std::vector<Word> words;
  for (int i = 0; i < relators; ++i)
    words.push_back(random_reduced_word(rng, n, len));

  std::vector<IntMatrix> serial_tables, parallel_tables;
  double serial_eps = time_seconds([&] {
    for (const Word& w : words) serial_tables.push_back(epsilon_table_serial(w, n));
  });
  double parallel_eps = time_seconds([&] {
    for (const Word& w : words) parallel_tables.push_back(epsilon_table(w, n));
  });
  for (std::size_t i = 0; i < words.size(); ++i)
    if (serial_tables[i] != parallel_tables[i]) {
      std::fprintf(stderr, "kernel mismatch on word %zu\n", i);
      return 1;
    }
  report("epsilon tables", serial_eps, parallel_eps);

  // epimorphism search workload: involutory triples onto S4 x C2-ish targets
  Presentation base = parse_presentation(quick ? "gens: a b\n" : "gens: a b c\n");
  FiniteGroup target = quick ? group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}})
                             : semidirect_zn(8);
  EpiSearchOptions opts;
  opts.max_results = 1 << 20;
  std::vector<Homomorphism> serial_epis, parallel_epis;
  double serial_search = time_seconds(
      [&] { serial_epis = find_epimorphisms_serial(base, target, opts); });
  double parallel_search = time_seconds(
      [&] { parallel_epis = find_epimorphisms(base, target, opts); });
  if (serial_epis != parallel_epis) {
    std::fprintf(stderr, "search result mismatch\n");
    return 1;
  }
  std::printf("search found %zu epimorphisms\n", serial_epis.size());
  report("epimorphism search", serial_search, parallel_search);
  return 0;
}
