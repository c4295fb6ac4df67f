#pragma once

#include <memory>
#include <variant>

#include "cnum/rational.hpp"

namespace cnum {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class UnaryOp { Neg, Up, Down, Abs };
enum class BinaryOp { Add, Sub, Mul, Div };

struct NumberLit {
    Rational value;
};

struct ImagUnitLit {};

struct UnaryExpr {
    UnaryOp op;
    ExprPtr operand;
};

struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<NumberLit, ImagUnitLit, UnaryExpr, BinaryExpr> node;
};

inline ExprPtr make_number(Rational value) {
    return std::make_unique<Expr>(Expr{NumberLit{std::move(value)}});
}
inline ExprPtr make_imag_unit() { return std::make_unique<Expr>(Expr{ImagUnitLit{}}); }
inline ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
    return std::make_unique<Expr>(Expr{UnaryExpr{op, std::move(operand)}});
}
inline ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_unique<Expr>(Expr{BinaryExpr{op, std::move(lhs), std::move(rhs)}});
}

}  // namespace cnum
