// foxcup: exact cup-product, homology, and Sunada-pair computations from
// finite group presentations.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foxcup/cup.hpp"
#include "foxcup/echelon.hpp"
#include "foxcup/error.hpp"
#include "foxcup/finite_group.hpp"
#include "foxcup/group_ring.hpp"
#include "foxcup/homology.hpp"
#include "foxcup/presentation.hpp"
#include "foxcup/sunada.hpp"

using json = nlohmann::json;
using namespace foxcup;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// FNV-1a over the inputs that determine the run, as a stable hex digest.
std::string input_digest(std::initializer_list<std::string_view> parts) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::string_view part : parts)
    for (unsigned char c : part) {
      h ^= c;
      h *= 1099511628211ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void emit(const std::string& command, const std::string& digest,
          bool as_json, const json& result, const std::string& text) {
  if (as_json) {
    json record{{"command", command}, {"input_digest", digest},
                {"result", result}};
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json rat_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json homology_json(const HomologyReport& h) {
  json torsion = json::array();
  for (const Int& d : h.torsion) torsion.push_back(d.get_str());
  return json{{"free_rank", h.free_rank}, {"torsion", std::move(torsion)},
              {"rendered", render_homology(h)}};
}

json cup_json(const CupSummary& c) {
  return json{{"b", c.betti}, {"dim_h2", c.h2_dim}, {"rank", c.rank},
              {"nullity", c.nullity}};
}

int parse_index(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') return s[0] - 'a' + 1;
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
    return std::atoi(s.c_str());
  throw parse_error("index must be a generator letter or a 1-based number");
}

// Without an explicit alphabet size, take the largest generator the word
// mentions.
int infer_alphabet_size(const std::string& word_text) {
  int n = 1;
  bool numeric = false;
  for (char c : word_text)
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        std::isspace(static_cast<unsigned char>(c)))
      numeric = true;
  if (numeric) {
    std::istringstream toks{word_text};
    for (std::string t; toks >> t;)
      if (t.size() > 1) n = std::max(n, std::atoi(t.c_str() + 1));
  } else {
    for (char c : word_text) {
      if (c >= 'a' && c <= 'z') n = std::max(n, c - 'a' + 1);
      if (c >= 'A' && c <= 'Z') n = std::max(n, c - 'A' + 1);
    }
  }
  return n;
}

struct PairOfSubgroups {
  FiniteGroup group;
  Subgroup h1, h2;
};

PairOfSubgroups load_group_pair(const std::string& path) {
  GroupFile gf = parse_group_file(read_file(path));
  if (gf.subgroups.size() != 2)
    throw domain_error("group file must declare exactly two sub: lines");
  return PairOfSubgroups{std::move(gf.group), std::move(gf.subgroups[0]),
                         std::move(gf.subgroups[1])};
}

int run(int argc, char** argv) {
  CLI::App app{"exact cup products, homology, and Sunada pairs from group "
               "presentations"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable record");

  // fox
  auto* fox = app.add_subcommand("fox", "Fox derivatives of a word");
  std::string fox_word, fox_index;
  int fox_n = 0;
  bool fox_augmented = false;
  std::string fox_second;
  fox->add_option("--word", fox_word, "word, e.g. abAcAB")->required();
  fox->add_option("--index", fox_index, "generator to differentiate by")
      ->required();
  fox->add_option("--n", fox_n, "alphabet size (default: inferred)");
  fox->add_flag("--augmented", fox_augmented,
                "signed occurrence count instead of the full derivative");
  fox->add_option("--double", fox_second,
                  "second index t: the double derivative e_{index,t}");

  // presentation-file subcommands
  auto* echelon_cmd = app.add_subcommand("echelon", "echelon presentation");
  auto* cup_cmd = app.add_subcommand("cup", "cup product matrix and nullity");
  auto* homology_cmd = app.add_subcommand("homology", "integral H_1");
  std::string echelon_file, cup_file, homology_file;
  echelon_cmd->add_option("file", echelon_file, "presentation file")->required();
  cup_cmd->add_option("file", cup_file, "presentation file")->required();
  homology_cmd->add_option("file", homology_file, "presentation file")->required();

  // group subcommands
  auto* ac_cmd = app.add_subcommand("almost-conjugate",
                                    "almost-conjugacy check for two subgroups");
  std::string ac_file;
  ac_cmd->add_option("file", ac_file, "group file with two sub: lines")->required();

  auto* epi_cmd = app.add_subcommand("epi-search",
                                     "surjections onto a finite group");
  std::string epi_pres, epi_group;
  long long epi_budget = EpiSearchOptions{}.budget;
  int epi_max = EpiSearchOptions{}.max_results;
  epi_cmd->add_option("presentation", epi_pres, "presentation file")->required();
  epi_cmd->add_option("group", epi_group, "group file")->required();
  epi_cmd->add_option("--budget", epi_budget, "candidate assignment budget");
  epi_cmd->add_option("--max-results", epi_max, "stop after this many");

  auto* sunada_cmd = app.add_subcommand("sunada", "Sunada pair pipeline");
  std::string sunada_pres, sunada_group;
  long long sunada_budget = EpiSearchOptions{}.budget;
  bool no_simplify = false;
  sunada_cmd->add_option("presentation", sunada_pres, "base presentation file")
      ->required();
  sunada_cmd->add_option("group", sunada_group,
                         "group file with two sub: lines")->required();
  sunada_cmd->add_option("--budget", sunada_budget,
                         "candidate assignment budget for the search");
  sunada_cmd->add_flag("--no-simplify", no_simplify,
                       "keep the raw rewritten subgroup presentations");

  // --json is also accepted after the subcommand name
  for (CLI::App* sub : {fox, echelon_cmd, cup_cmd, homology_cmd, ac_cmd,
                        epi_cmd, sunada_cmd})
    sub->add_flag("--json", as_json, "emit a machine-readable record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e); // prints usage/help to the right stream
    return code == 0 ? 0 : 1;
  }
  auto started = std::chrono::steady_clock::now();

  if (fox->parsed()) {
    int s = parse_index(fox_index);
    int t_hint = fox_second.empty() ? 1 : parse_index(fox_second);
    int n = fox_n > 0 ? fox_n
                      : std::max({infer_alphabet_size(fox_word), s, t_hint});
    Word w = parse_word(fox_word, n);
    if (s < 1 || s > n)
      throw domain_error("index out of range for alphabet size " +
                         std::to_string(n));
    std::string digest = input_digest({"fox", fox_word, fox_index, fox_second,
                                       std::to_string(n),
                                       fox_augmented ? "aug" : ""});
    Alphabet alphabet = default_alphabet(n);
    if (fox_augmented && !fox_second.empty())
      throw domain_error("--augmented and --double are mutually exclusive");
    if (fox_augmented) {
      mpz_class v = augmented_fox(w, s);
      emit("fox", digest, as_json,
           json{{"word", fox_word}, {"index", s}, {"augmented", v.get_str()}},
           v.get_str() + "\n");
    } else if (!fox_second.empty()) {
      int t = parse_index(fox_second);
      if (t < 1 || t > n)
        throw domain_error("second index out of range for alphabet size " +
                           std::to_string(n));
      mpz_class v = double_fox(w, s, t);
      emit("fox", digest, as_json,
           json{{"word", fox_word}, {"index", s}, {"second", t},
                {"double", v.get_str()}},
           v.get_str() + "\n");
    } else {
      GroupRingElement d = fox_derivative(w, s);
      std::string rendered = render(d, alphabet);
      emit("fox", digest, as_json,
           json{{"word", fox_word}, {"index", s}, {"derivative", rendered}},
           rendered + "\n");
    }
  } else if (echelon_cmd->parsed()) {
    std::string text = read_file(echelon_file);
    EchelonPresentation e = echelon_presentation(parse_presentation(text));
    std::string pres_text = render_presentation(e.base);
    std::ostringstream out;
    out << pres_text << "transform:\n" << render(e.transform)
        << "jacobian:\n" << render(e.jacobian);
    emit("echelon", input_digest({"echelon", text}), as_json,
         json{{"presentation", pres_text},
              {"transform", int_matrix_json(e.transform)},
              {"jacobian", int_matrix_json(e.jacobian)}},
         out.str());
  } else if (cup_cmd->parsed()) {
    std::string text = read_file(cup_file);
    CupMatrix c = cup_matrix(parse_presentation(text));
    std::ostringstream out;
    out << "b = " << c.betti << "\n"
        << "dim H^2 = " << c.h2_dim << "\n"
        << "cup matrix (" << c.entries.rows() << " x " << c.entries.cols()
        << "):\n" << render(c.entries)
        << "rank = " << c.rank << "\n"
        << "nullity = " << c.nullity << "\n";
    emit("cup", input_digest({"cup", text}), as_json,
         json{{"b", c.betti}, {"dim_h2", c.h2_dim},
              {"matrix", rat_matrix_json(c.entries)}, {"rank", c.rank},
              {"nullity", c.nullity}},
         out.str());
  } else if (homology_cmd->parsed()) {
    std::string text = read_file(homology_file);
    HomologyReport h = h1_integral(parse_presentation(text));
    emit("homology", input_digest({"homology", text}), as_json,
         homology_json(h), render_homology(h) + "\n");
  } else if (ac_cmd->parsed()) {
    std::string text = read_file(ac_file);
    PairOfSubgroups in = load_group_pair(ac_file);
    bool almost = is_almost_conjugate(in.group, in.h1, in.h2);
    bool conj = are_conjugate_subgroups(in.group, in.h1, in.h2);
    std::ostringstream out;
    out << "group order = " << in.group.order() << "\n"
        << "subgroup orders = " << in.h1.order() << ", " << in.h2.order()
        << "\n"
        << "almost conjugate = " << (almost ? "yes" : "no") << "\n"
        << "conjugate = " << (conj ? "yes" : "no") << "\n";
    emit("almost-conjugate", input_digest({"almost-conjugate", text}), as_json,
         json{{"group_order", in.group.order()},
              {"subgroup_orders", json::array({in.h1.order(), in.h2.order()})},
              {"almost_conjugate", almost}, {"conjugate", conj}},
         out.str());
  } else if (epi_cmd->parsed()) {
    std::string pres_text = read_file(epi_pres);
    std::string group_text = read_file(epi_group);
    Presentation p = parse_presentation(pres_text);
    GroupFile gf = parse_group_file(group_text);
    EpiSearchOptions opts;
    opts.budget = epi_budget;
    opts.max_results = epi_max;
    auto epis = find_epimorphisms(p, gf.group, opts);
    std::ostringstream out;
    out << "found " << epis.size() << " epimorphism(s)\n";
    json list = json::array();
    for (const auto& phi : epis) {
      json images = json::array();
      out << " ";
      for (int i = 0; i < p.generator_count(); ++i) {
        images.push_back(phi.images[i]);
        out << " " << render_word(Word({i + 1}), p.alphabet()) << " -> "
            << gf.group.name(phi.images[i]);
      }
      out << "\n";
      list.push_back(std::move(images));
    }
    emit("epi-search",
         input_digest({"epi-search", pres_text, group_text,
                       std::to_string(epi_budget), std::to_string(epi_max)}),
         as_json,
         json{{"count", epis.size()}, {"epimorphisms", std::move(list)}},
         out.str());
  } else if (sunada_cmd->parsed()) {
    std::string pres_text = read_file(sunada_pres);
    std::string group_text = read_file(sunada_group);
    Presentation p = parse_presentation(pres_text);
    PairOfSubgroups in = load_group_pair(sunada_group);
    SunadaOptions opts;
    opts.simplify = !no_simplify;
    opts.search.budget = sunada_budget;
    SunadaReport r = sunada_pipeline(p, in.group, in.h1, in.h2, opts);

    json phi_named = json::array();
    std::ostringstream out;
    out << "phi:";
    for (int i = 0; i < p.generator_count(); ++i) {
      out << " " << render_word(Word({i + 1}), p.alphabet()) << " -> "
          << in.group.name(r.phi.images[i]);
      phi_named.push_back(in.group.name(r.phi.images[i]));
    }
    out << "\n\nsubgroup 1 presentation:\n"
        << render_presentation(r.subgroup_presentation_1)
        << "H_1 = " << render_homology(r.homology_1) << "\n"
        << "cup: b = " << r.cup_1.betti << ", dim H^2 = " << r.cup_1.h2_dim
        << ", rank = " << r.cup_1.rank << ", nullity = " << r.cup_1.nullity
        << "\n\nsubgroup 2 presentation:\n"
        << render_presentation(r.subgroup_presentation_2)
        << "H_1 = " << render_homology(r.homology_2) << "\n"
        << "cup: b = " << r.cup_2.betti << ", dim H^2 = " << r.cup_2.h2_dim
        << ", rank = " << r.cup_2.rank << ", nullity = " << r.cup_2.nullity
        << "\n\nhomology distinguishes = "
        << (r.homology_distinguishes ? "yes" : "no")
        << "\ncup distinguishes = " << (r.cup_distinguishes ? "yes" : "no")
        << "\ncaveat: " << r.caveat << "\n";
    emit("sunada",
         input_digest({"sunada", pres_text, group_text,
                       no_simplify ? "raw" : "simplified",
                       std::to_string(sunada_budget)}),
         as_json,
         json{{"phi", r.phi.images}, {"phi_named", std::move(phi_named)},
              {"subgroup_presentation_1",
               render_presentation(r.subgroup_presentation_1)},
              {"subgroup_presentation_2",
               render_presentation(r.subgroup_presentation_2)},
              {"homology_1", homology_json(r.homology_1)},
              {"homology_2", homology_json(r.homology_2)},
              {"cup_1", cup_json(r.cup_1)}, {"cup_2", cup_json(r.cup_2)},
              {"homology_distinguishes", r.homology_distinguishes},
              {"cup_distinguishes", r.cup_distinguishes},
              {"caveat", r.caveat}},
         out.str());
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "# wall_time_us=" << elapsed.count() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
