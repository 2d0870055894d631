#include "foxcup/homology.hpp"

#include "foxcup/echelon.hpp"

namespace foxcup {

HomologyReport h1_integral(const Presentation& p) {
  std::vector<Int> factors = snf_invariant_factors(fox_jacobian(p));
  HomologyReport out;
  out.free_rank = p.generator_count() - static_cast<int>(factors.size());
  for (Int& d : factors)
    if (d != 1) out.torsion.push_back(std::move(d));
  return out;
}

bool isomorphic(const HomologyReport& a, const HomologyReport& b) {
  return a == b;
}

std::string render_homology(const HomologyReport& h) {
  std::vector<std::string> parts;
  if (h.free_rank == 1)
    parts.push_back("Z");
  else if (h.free_rank > 1)
    parts.push_back("Z^" + std::to_string(h.free_rank));

  for (std::size_t i = 0; i < h.torsion.size();) {
    std::size_t j = i;
    while (j < h.torsion.size() && h.torsion[j] == h.torsion[i]) ++j;
    std::string part = "Z/" + h.torsion[i].get_str();
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(std::move(part));
    i = j;
  }

  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

} // namespace foxcup
