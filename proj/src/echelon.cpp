#include "foxcup/echelon.hpp"

#include "foxcup/error.hpp"
#include "foxcup/group_ring.hpp"

namespace foxcup {

IntMatrix fox_jacobian(const Presentation& p) {
  const int m = p.relator_count(), n = p.generator_count();
  IntMatrix j(m, n);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i) j.at(k, i) = augmented_fox(p.relators()[k], i + 1);
  return j;
}

EchelonPresentation echelon_presentation(const Presentation& p) {
  const int m = p.relator_count();
  IntMatrix t = fox_jacobian(p);
  HnfResult hnf = hnf_with_transform(t);

  std::vector<Word> recombined;
  recombined.reserve(m);
  for (int k = 0; k < m; ++k) {
    Word w;
    for (int l = 0; l < m; ++l) {
      if (!hnf.c.at(k, l).fits_slong_p())
        throw budget_error("echelon transform exponent does not fit a word");
      long e = hnf.c.at(k, l).get_si();
      if (e != 0) w = concat(w, power(p.relators()[l], e));
    }
    recombined.push_back(std::move(w));
  }

  EchelonPresentation out{Presentation(p.alphabet(), std::move(recombined)),
                          std::move(hnf.c), std::move(hnf.h)};
  // The augmented derivative is additive on products and scales under powers,
  // so the fresh Jacobian of the w_k must equal C*T row for row.
  if (fox_jacobian(out.base) != out.jacobian)
    throw std::logic_error(
        "echelon_presentation: recomputed Jacobian differs from C*T");
  return out;
}

} // namespace foxcup
