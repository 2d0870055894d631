#ifndef FOXCUP_ERROR_HPP
#define FOXCUP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace foxcup {

// Malformed textual input (words, presentation files, group files).
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid request (index out of range, precondition violated,
// no epimorphism exists, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search or size budget was exceeded.  Always loud, never a
// silent truncation.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace foxcup

#endif
