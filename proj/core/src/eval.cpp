#include "cnum/eval.hpp"

#include "cnum/parser.hpp"

namespace cnum {

EvalValue eval(const Expr& e, Mode mode) {
    return std::visit(
        [mode](const auto& node) -> EvalValue {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NumberLit>) {
                return IndexedComplex{Index::Vastavic, Complex(node.value, Rational(0))};
            } else if constexpr (std::is_same_v<T, ImagUnitLit>) {
                return IndexedComplex{Index::Vastavic, Complex::imaginary_unit()};
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                const EvalValue inner = eval(*node.operand, mode);
                switch (node.op) {
                    case UnaryOp::Neg: return negate(inner);
                    case UnaryOp::Up: return retag(inner, Index::Vastavic);
                    case UnaryOp::Down: return retag(inner, Index::Calpanic);
                    case UnaryOp::Abs: return modulus_of(inner);
                }
                return VoidValue{};  // unreachable
            } else {
                static_assert(std::is_same_v<T, BinaryExpr>);
                const EvalValue lhs = eval(*node.lhs, mode);
                const EvalValue rhs = eval(*node.rhs, mode);
                switch (node.op) {
                    case BinaryOp::Add: return add(lhs, rhs);
                    case BinaryOp::Sub: return sub(lhs, rhs);
                    case BinaryOp::Mul: return mul(lhs, rhs);
                    case BinaryOp::Div: return divide(lhs, rhs, mode);
                }
                return VoidValue{};  // unreachable
            }
        },
        e.node);
}

EvalValue eval_text(std::string_view source, Mode mode) {
    return eval(*parse_text(source), mode);
}

}  // namespace cnum
