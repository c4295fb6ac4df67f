#pragma once

#include <string_view>

#include "cnum/ast.hpp"
#include "cnum/complete.hpp"

namespace cnum {

/// Evaluates an expression tree. Bare literals and i are up-indexed; the
/// index-transforming division rules apply while both operands are pure and
/// share an index; anything mixed embeds to a full complete number. Void
/// absorbs every operation.
EvalValue eval(const Expr& e, Mode mode = Mode::Strict);

/// tokenize + parse + eval.
EvalValue eval_text(std::string_view source, Mode mode = Mode::Strict);

}  // namespace cnum
