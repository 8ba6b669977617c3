#pragma once

#include <stdexcept>
#include <string>

#include "frobtangle/term.hpp"

namespace frobtangle {

struct SyntaxError : std::runtime_error {
  SyntaxError(std::string msg, int line_, int column_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_), column(column_) {}
  int line;
  int column;
};

// Grammar:
//   term := par ( ";" par )*
//   par  := atom ( "*" atom )*
//   atom := "m" | "u" | "d" | "e" | "g" | "id(" nat ")" | "(" term ")"
// ";" composes in diagrammatic order (top to bottom), "*" is tensor,
// ";" binds looser than "*". Whitespace-insensitive.
Term parse_term(const std::string& src);

}  // namespace frobtangle
