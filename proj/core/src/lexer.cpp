#include "cnum/lexer.hpp"

#include <cctype>

#include "cnum/errors.hpp"

namespace cnum {

namespace {

constexpr std::string_view kUpArrow = "\xE2\x86\x91";    // U+2191
constexpr std::string_view kDownArrow = "\xE2\x86\x93";  // U+2193

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
    return s.substr(pos, prefix.size()) == prefix;
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    std::size_t i = 0;

    const auto push = [&](TokenKind kind, std::size_t pos, std::string_view lexeme) {
        out.push_back(Token{kind, std::string(lexeme), pos, Rational()});
    };

    while (i < source.size()) {
        const char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '+': push(TokenKind::Plus, i, "+"); ++i; continue;
            case '-': push(TokenKind::Minus, i, "-"); ++i; continue;
            case '*': push(TokenKind::Star, i, "*"); ++i; continue;
            case '/': push(TokenKind::Slash, i, "/"); ++i; continue;
            case '|': push(TokenKind::Pipe, i, "|"); ++i; continue;
            case '(': push(TokenKind::LParen, i, "("); ++i; continue;
            case ')': push(TokenKind::RParen, i, ")"); ++i; continue;
            default: break;
        }
        if (is_digit(c)) {
            const std::size_t start = i;
            while (i < source.size() && is_digit(source[i])) ++i;
            if (i + 1 < source.size() && source[i] == '.' && is_digit(source[i + 1])) {
                ++i;
                while (i < source.size() && is_digit(source[i])) ++i;
            }
            const std::string lexeme(source.substr(start, i - start));
            out.push_back(Token{TokenKind::Number, lexeme, start,
                                Rational::from_decimal_text(lexeme)});
            continue;
        }
        if (starts_with(source, i, "up")) {
            push(TokenKind::Up, i, "up");
            i += 2;
            continue;
        }
        if (starts_with(source, i, "down")) {
            push(TokenKind::Down, i, "down");
            i += 4;
            continue;
        }
        if (starts_with(source, i, kUpArrow)) {
            push(TokenKind::Up, i, kUpArrow);
            i += kUpArrow.size();
            continue;
        }
        if (starts_with(source, i, kDownArrow)) {
            push(TokenKind::Down, i, kDownArrow);
            i += kDownArrow.size();
            continue;
        }
        if (c == 'i') {
            push(TokenKind::ImagUnit, i, "i");
            ++i;
            continue;
        }
        throw LexError("unexpected character", i);
    }
    push(TokenKind::End, source.size(), "");
    return out;
}

}  // namespace cnum
