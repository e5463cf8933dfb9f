#pragma once

// Parser for the function-expression grammar shared with the CLI:
//
//   const ::= decimal | decimal "i" | "(" const ("+"|"-") const ")"
//   expr  ::= const | "t" | expr op expr | "exp(" expr ")" | "sin(" expr ")"
//           | "cos(" expr ")" | "pow(" const "," expr ")" | expr "^" integer
//
// with op in {+,-,*,/}, whitespace insensitive.  Unary minus and a bare
// "i" literal are accepted as conveniences.

#include <stdexcept>
#include <string>

#include "weyl/function.hpp"

namespace weyl {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

AnalyticFunction parse_function(const std::string& text, Domain domain = Domain::All);

}  // namespace weyl
