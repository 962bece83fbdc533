#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oclam/ast.hpp"

namespace oclam {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col,
             std::vector<std::string> expected = {})
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line), col(col), expected(std::move(expected)) {}
  int line;
  int col;
  std::vector<std::string> expected;
};

// Whitespace-insensitive concrete syntax; `--` starts a line comment.
// Scalar literals follow the codec of the given semiring.
TermPtr parse_term(const std::string& text, const Semiring& ring);
TypePtr parse_type(const std::string& text);

// A term file holds one term, optionally preceded by a `-- type: T` header
// pinning its expected type.
struct TermFile {
  TermPtr term;
  TypePtr pinned_type; // may be null
};
TermFile parse_term_file(const std::string& text, const Semiring& ring);

} // namespace oclam
