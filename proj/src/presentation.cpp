#include "foxcup/presentation.hpp"

#include <cctype>
#include <sstream>

#include "foxcup/error.hpp"

namespace foxcup {

namespace {

constexpr const char* kDefaultLetters = "abcdefghijklmnopqrstuvwxyz";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

void validate_relators(const Alphabet& alphabet,
                       const std::vector<Word>& relators) {
  for (std::size_t k = 0; k < relators.size(); ++k)
    for (Letter l : relators[k])
      if (generator_of(l) < 1 || generator_of(l) > alphabet.size)
        throw domain_error("relator " + std::to_string(k + 1) +
                           " references generator index " +
                           std::to_string(generator_of(l)) +
                           " outside 1.." + std::to_string(alphabet.size));
}

// Word parsing against a declared letter alphabet (names need not be a..z).
Word parse_lettered_word(std::string_view text, const Alphabet& alphabet,
                         int line_no) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int idx = alphabet.index_of(lower);
    if (idx == 0)
      throw parse_error("line " + std::to_string(line_no) + ": character '" +
                        std::string(1, c) + "' at position " +
                        std::to_string(i + 1) +
                        " references an undeclared generator");
    out.push_back(std::islower(static_cast<unsigned char>(c)) ? idx : -idx);
  }
  return Word(std::move(out));
}

} // namespace

Alphabet default_alphabet(int n) {
  if (n < 0) throw domain_error("negative generator count");
  Alphabet a;
  a.size = n;
  if (n >= 1 && n <= 26) a.names.assign(kDefaultLetters, n);
  return a;
}

Presentation::Presentation(int generator_count, std::vector<Word> relators)
    : Presentation(default_alphabet(generator_count), std::move(relators)) {}

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  validate_relators(alphabet_, relators_);
}

Presentation parse_presentation(std::string_view text) {
  Alphabet alphabet;
  bool have_gens = false;
  std::vector<Word> relators;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.substr(0, 5) == "gens:") {
      if (have_gens)
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate gens: declaration");
      std::string_view rest = trim(line.substr(5));
      std::istringstream toks{std::string(rest)};
      std::vector<std::string> tokens;
      for (std::string t; toks >> t;) tokens.push_back(t);
      if (tokens.empty())
        throw parse_error("line " + std::to_string(line_no) +
                          ": empty generator list");
      bool numeric = tokens.size() == 1 &&
                     tokens[0].find_first_not_of("0123456789") == std::string::npos;
      if (numeric) {
        alphabet.size = std::atoi(tokens[0].c_str());
      } else {
        for (const std::string& t : tokens) {
          if (t.size() != 1 || t[0] < 'a' || t[0] > 'z')
            throw parse_error("line " + std::to_string(line_no) +
                              ": generator name '" + t +
                              "' is not a single lowercase letter");
          if (alphabet.index_of(t[0]) != 0)
            throw parse_error("line " + std::to_string(line_no) +
                              ": duplicate generator declaration '" + t + "'");
          alphabet.names.push_back(t[0]);
        }
        alphabet.size = static_cast<int>(alphabet.names.size());
      }
      have_gens = true;
      continue;
    }

    if (line.substr(0, 4) == "rel:") {
      if (!have_gens)
        throw parse_error("line " + std::to_string(line_no) +
                          ": rel: before gens:");
      std::string_view rest = trim(line.substr(4));
      if (rest.empty())
        throw parse_error("line " + std::to_string(line_no) +
                          ": empty relator line");
      relators.push_back(alphabet.lettered()
                             ? parse_lettered_word(rest, alphabet, line_no)
                             : parse_word(rest, alphabet.size));
      continue;
    }

    throw parse_error("line " + std::to_string(line_no) +
                      ": expected gens:, rel:, blank line, or # comment");
  }
  if (!have_gens) throw parse_error("missing gens: declaration");
  return Presentation(std::move(alphabet), std::move(relators));
}

std::string render_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  if (alphabet.lettered()) {
    for (Letter l : w) {
      char c = alphabet.names.at(generator_of(l) - 1);
      out.push_back(l > 0 ? c
                          : static_cast<char>(std::toupper(
                                static_cast<unsigned char>(c))));
    }
    return out;
  }
  for (Letter l : w) {
    if (!out.empty()) out.push_back(' ');
    out += (l > 0 ? "x" : "X") + std::to_string(generator_of(l));
  }
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "gens:";
  if (p.alphabet().lettered())
    for (char c : p.alphabet().names) {
      out.push_back(' ');
      out.push_back(c);
    }
  else
    out += " " + std::to_string(p.generator_count());
  out.push_back('\n');
  for (const Word& r : p.relators()) {
    if (r.empty()) continue; // not expressible in the text format
    out += "rel: " + render_word(r, p.alphabet()) + "\n";
  }
  return out;
}

} // namespace foxcup
