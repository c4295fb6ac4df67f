#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cnum/rational.hpp"

namespace cnum {

enum class TokenKind {
    Number,
    ImagUnit,  // i
    Up,        // "up" or the arrow alias
    Down,      // "down" or the arrow alias
    Plus,
    Minus,
    Star,
    Slash,
    Pipe,
    LParen,
    RParen,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string lexeme;
    std::size_t position = 0;  // byte offset into the source
    Rational number;           // set for Number tokens; exact decimal value
};

/// Longest-match lexing. Number tokens are digits with an optional '.' and
/// digits; finite decimals convert exactly. Whitespace is skipped. Every
/// stream ends with an End token and positions are non-decreasing. Throws
/// LexError (with the byte offset) on any other character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace cnum
