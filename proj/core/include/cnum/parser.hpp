#pragma once

#include <span>
#include <vector>

#include "cnum/ast.hpp"
#include "cnum/lexer.hpp"

namespace cnum {

// Grammar (standard precedence, left associativity):
//
//   expr  := sum
//   sum   := prod (("+" | "-") prod)*
//   prod  := unary (("*" | "/") unary)*
//   unary := "-" unary | atom
//   atom  := UP "(" sum ")" | DOWN "(" sum ")" | "|" sum "|" | "(" sum ")"
//          | NUMBER | I | NUMBER I          -- "3i" only with no gap
//
/// Throws ParseError with expected-token diagnostics and a byte position.
ExprPtr parse(std::span<const Token> tokens);

/// tokenize + parse.
ExprPtr parse_text(std::string_view source);

}  // namespace cnum
