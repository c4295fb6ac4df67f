#include <gtest/gtest.h>

#include <vector>

#include "cnum/errors.hpp"
#include "cnum/eval.hpp"
#include "cnum/lexer.hpp"
#include "cnum/parser.hpp"
#include "cnum/rng.hpp"
#include "helpers.hpp"

namespace cnum {
namespace {

using testing::c;
using testing::cn;
using testing::cq;
using testing::dn;
using testing::up;

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
    std::vector<TokenKind> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.kind);
    return out;
}

TEST(Lexer, BasicStream) {
    const auto tokens = tokenize("up(2+3i)");
    EXPECT_EQ(kinds(tokens),
              (std::vector<TokenKind>{TokenKind::Up, TokenKind::LParen, TokenKind::Number,
                                      TokenKind::Plus, TokenKind::Number, TokenKind::ImagUnit,
                                      TokenKind::RParen, TokenKind::End}));
}

TEST(Lexer, ArrowAliases) {
    const auto down = tokenize("↓(1)");
    EXPECT_EQ(down[0].kind, TokenKind::Down);
    const auto up_tokens = tokenize("↑(1)");
    EXPECT_EQ(up_tokens[0].kind, TokenKind::Up);
    // Arrow is 3 bytes; the paren position reflects that.
    EXPECT_EQ(down[1].position, 3u);
}

TEST(Lexer, ErrorWithByteOffset) {
    try {
        tokenize("2 @ 3");
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Lexer, PositionsNonDecreasingAndEndTerminated) {
    const auto tokens = tokenize("up(25+25i) / down(4)");
    for (std::size_t k = 1; k < tokens.size(); ++k) {
        EXPECT_GE(tokens[k].position, tokens[k - 1].position);
    }
    EXPECT_EQ(tokens.back().kind, TokenKind::End);
}

TEST(Lexer, ExactDecimals) {
    const auto tokens = tokenize("2.50");
    ASSERT_EQ(tokens[0].kind, TokenKind::Number);
    EXPECT_EQ(tokens[0].number, Rational(5, 2));
}

TEST(Lexer, BareDotRejected) {
    EXPECT_THROW(tokenize("3."), LexError);   // '.' needs digits on both sides
    EXPECT_THROW(tokenize(".5"), LexError);
}

TEST(Parser, Precedence) {
    // 1+2*3 parses as 1+(2*3).
    const ExprPtr e = parse_text("1+2*3");
    const auto& add = std::get<BinaryExpr>(e->node);
    EXPECT_EQ(add.op, BinaryOp::Add);
    EXPECT_EQ(std::get<NumberLit>(add.lhs->node).value, Rational(1));
    const auto& mul = std::get<BinaryExpr>(add.rhs->node);
    EXPECT_EQ(mul.op, BinaryOp::Mul);
}

TEST(Parser, LeftAssociativity) {
    // 1-2-3 parses as (1-2)-3 and evaluates to -4.
    EXPECT_EQ(eval_text("1-2-3"), EvalValue(up(-4, 0)));
    EXPECT_EQ(eval_text("8/4/2"), EvalValue(up(1, 0)));
}

TEST(Parser, DivisionOfTaggedZero) {
    const ExprPtr e = parse_text("up(1)/up(0)");
    const auto& div = std::get<BinaryExpr>(e->node);
    EXPECT_EQ(div.op, BinaryOp::Div);
    EXPECT_EQ(std::get<UnaryExpr>(div.lhs->node).op, UnaryOp::Up);
    EXPECT_EQ(std::get<UnaryExpr>(div.rhs->node).op, UnaryOp::Up);
}

TEST(Parser, UnterminatedInputFails) {
    try {
        parse_text("(2+");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);  // at end of input
    }
    EXPECT_THROW(parse_text("up(1"), ParseError);
    EXPECT_THROW(parse_text("|1+2i"), ParseError);
}

TEST(Parser, TrailingTokensFail) {
    EXPECT_THROW(parse_text("1 2"), ParseError);
}

TEST(Parser, TightImaginaryJuxtaposition) {
    EXPECT_EQ(eval_text("3i"), EvalValue(up(0, 3)));
    // With a gap the juxtaposition form does not apply.
    EXPECT_THROW(parse_text("3 i"), ParseError);
}

TEST(Parser, NestedNegation) {
    EXPECT_EQ(eval_text("--1"), EvalValue(up(1, 0)));
    EXPECT_EQ(eval_text("-(1+2i)"), EvalValue(up(-1, -2)));
}

TEST(Eval, WorkedExamples) {
    EXPECT_EQ(eval_text("up(2+3i) + up(5+7i)"), EvalValue(up(7, 10)));
    EXPECT_EQ(eval_text("up(5+5i)-up(5+5i)"), EvalValue(up(0, 0)));
    EXPECT_EQ(eval_text("up(3+5i)*up(4+7i)"), EvalValue(up(-23, 41)));
    EXPECT_EQ(eval_text("up(25+25i)/up(4+3i)"), EvalValue(up(7, 1)));
    EXPECT_EQ(eval_text("|up(3+4i)|"), EvalValue(up(5, 0)));
}

TEST(Eval, BareLiteralsAreUpIndexed) {
    EXPECT_EQ(eval_text("1/0"), EvalValue(dn(1, 0)));
    EXPECT_EQ(eval_text("i"), EvalValue(up(0, 1)));
    EXPECT_EQ(eval_text("7"), EvalValue(up(7, 0)));
}

TEST(Eval, DecimalLiteralsAreExact) {
    EXPECT_EQ(eval_text("2.50"), EvalValue(up(cq(5, 2, 0, 1))));
    EXPECT_EQ(to_string(eval_text("up(2.50)")), "up(5/2)");
    EXPECT_EQ(eval_text("0.1+0.2"), EvalValue(up(cq(3, 10, 0, 1))));
}

TEST(Eval, SpecialDivisionThroughSurfaceSyntax) {
    EXPECT_EQ(eval_text("down(1)/down(0)"), EvalValue::void_value());
    EXPECT_EQ(eval_text("down(0)/down(1)"), EvalValue(up(1, 0)));
    EXPECT_EQ(eval_text("up(0)/up(1)"), EvalValue::void_value());
    EXPECT_EQ(eval_text("up(0)/up(1)", Mode::Lenient), EvalValue(up(0, 0)));
}

TEST(Eval, MixedOperandsEmbed) {
    EXPECT_EQ(eval_text("up(1+2i) + down(3+4i)"), EvalValue(cn(1, 2, 3, 4)));
    EXPECT_EQ(eval_text("(up(2)+down(3))/(up(1)+down(1))"),
              EvalValue(cn(c(1, 0), cq(3, 2, 0, 1))));
    EXPECT_EQ(eval_text("up(1)/down(1)"), EvalValue(cn(1, 0, 0, 0)));
}

TEST(Eval, MixedDivisionRoundTripOracle) {
    // (up(2)+down(3))/(up(1)+down(1)): multiplying back by the divisor must
    // reproduce the dividend.
    const EvalValue divisor = eval_text("up(1)+down(1)");
    const EvalValue quotient = eval_text("(up(2)+down(3))/(up(1)+down(1))");
    ASSERT_TRUE(quotient.is_full());
    EXPECT_EQ(divisor.as_full() * quotient.as_full(), cn(2, 0, 3, 0));
}

TEST(Eval, RetagIsIdempotentOnPure) {
    EXPECT_EQ(eval_text("up(down(1))"), EvalValue(up(1, 0)));
    EXPECT_EQ(eval_text("down(up(1))"), EvalValue(dn(1, 0)));
    EXPECT_EQ(eval_text("up(up(5))"), EvalValue(up(5, 0)));
}

TEST(Eval, VoidPassesThroughAndAbsorbs) {
    EXPECT_EQ(eval_text("up(down(1)/down(0))"), EvalValue::void_value());
    EXPECT_EQ(eval_text("down(1)/down(0) + 1"), EvalValue::void_value());
    EXPECT_EQ(eval_text("1 * (down(1)/down(0))"), EvalValue::void_value());
    EXPECT_EQ(eval_text("|down(1)/down(0)|"), EvalValue::void_value());
}

TEST(Eval, Errors) {
    EXPECT_THROW(eval_text("up(up(1)+down(1))"), RetagOfFull);
    EXPECT_THROW(eval_text("|up(1)+down(1)|"), RetagOfFull);
    EXPECT_THROW(eval_text("|up(1+1i)|"), IrrationalModulus);
    EXPECT_THROW(eval_text("1/(up(1)+down(-1))"), SingularDenominator);
    EXPECT_THROW(eval_text("(up(1)+down(2))/(up(1)+down(-1))"), SingularDenominator);
}

TEST(Format, CanonicalRendering) {
    EXPECT_EQ(to_string(EvalValue(up(7, 10))), "up(7+10i)");
    EXPECT_EQ(to_string(EvalValue(dn(1, 0))), "down(1)");
    EXPECT_EQ(to_string(EvalValue(cn(c(1, 0), cq(3, 2, 0, 1)))), "up(1) + down(3/2)");
    EXPECT_EQ(to_string(EvalValue::void_value()), "void");
}

TEST(Format, RoundTripRandomized) {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const EvalValue v = trial % 2 == 0 ? EvalValue(gen_indexed(rng, 10))
                                           : EvalValue(gen_complete(rng, 10));
        EXPECT_EQ(eval_text(to_string(v)), v) << to_string(v);
    }
}

TEST(Format, Determinism) {
    EXPECT_EQ(to_string(eval_text("up(25+25i)/up(4+3i)")),
              to_string(eval_text("up(25+25i)/up(4+3i)")));
}

}  // namespace
}  // namespace cnum
