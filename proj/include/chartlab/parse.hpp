#ifndef CHARTLAB_PARSE_HPP
#define CHARTLAB_PARSE_HPP

#include <stdexcept>
#include <string>

#include "chartlab/scalar.hpp"

namespace chartlab::sym {

/// Syntax or semantic error while parsing, with the 0-based offset of
/// the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
  size_t pos;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := rational | identifier | 'i' | 'pi'
///           | ('exp'|'sin'|'cos') '(' expr ')' | '(' expr ')' | '-' factor
/// Identifiers must be coordinates of the chart. Printing a parsed
/// expression and parsing it again is the identity on normal forms.
ScalarExpr parse(const std::string& text, const Chart& chart);

} // namespace chartlab::sym

#endif
