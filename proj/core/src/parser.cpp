#include "cnum/parser.hpp"

#include "cnum/errors.hpp"

namespace cnum {

namespace {

std::string_view describe(TokenKind kind) {
    switch (kind) {
        case TokenKind::Number: return "number";
        case TokenKind::ImagUnit: return "'i'";
        case TokenKind::Up: return "'up'";
        case TokenKind::Down: return "'down'";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Pipe: return "'|'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::End: return "end of input";
    }
    return "token";
}

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        if (peek().kind != TokenKind::End) {
            fail("end of input");
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& advance() { return tokens_[pos_++]; }

    bool match(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    void expect(TokenKind kind, std::string_view what) {
        if (!match(kind)) fail(what);
    }

    [[noreturn]] void fail(std::string_view expected) const {
        const Token& t = peek();
        throw ParseError("expected " + std::string(expected) + ", found " +
                             std::string(describe(t.kind)),
                         t.position);
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_prod();
        while (true) {
            if (match(TokenKind::Plus)) {
                lhs = make_binary(BinaryOp::Add, std::move(lhs), parse_prod());
            } else if (match(TokenKind::Minus)) {
                lhs = make_binary(BinaryOp::Sub, std::move(lhs), parse_prod());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_prod() {
        ExprPtr lhs = parse_unary();
        while (true) {
            if (match(TokenKind::Star)) {
                lhs = make_binary(BinaryOp::Mul, std::move(lhs), parse_unary());
            } else if (match(TokenKind::Slash)) {
                lhs = make_binary(BinaryOp::Div, std::move(lhs), parse_unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        if (match(TokenKind::Minus)) {
            return make_unary(UnaryOp::Neg, parse_unary());
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Up:
            case TokenKind::Down: {
                const UnaryOp op = t.kind == TokenKind::Up ? UnaryOp::Up : UnaryOp::Down;
                advance();
                expect(TokenKind::LParen, "'('");
                ExprPtr inner = parse_sum();
                expect(TokenKind::RParen, "')'");
                return make_unary(op, std::move(inner));
            }
            case TokenKind::Pipe: {
                advance();
                ExprPtr inner = parse_sum();
                expect(TokenKind::Pipe, "closing '|'");
                return make_unary(UnaryOp::Abs, std::move(inner));
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_sum();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::Number: {
                const Token number = advance();
                // "3i" is one atom only when i sits tight against the digits.
                const Token& next = peek();
                if (next.kind == TokenKind::ImagUnit &&
                    next.position == number.position + number.lexeme.size()) {
                    advance();
                    return make_binary(BinaryOp::Mul, make_number(number.number),
                                       make_imag_unit());
                }
                return make_number(number.number);
            }
            case TokenKind::ImagUnit:
                advance();
                return make_imag_unit();
            default:
                fail("expression");
        }
    }

    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::span<const Token> tokens) { return Parser(tokens).run(); }

ExprPtr parse_text(std::string_view source) {
    const std::vector<Token> tokens = tokenize(source);
    return parse(tokens);
}

}  // namespace cnum
