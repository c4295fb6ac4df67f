#pragma once

#include <string_view>

namespace cnum {

/// The two-valued tag carried by every indexed number. Vastavic ("up") is
/// the index of ordinary complex numbers; Calpanic ("down") is the index of
/// the numbers produced by dividing an up-indexed number by exact zero.
enum class Index { Vastavic, Calpanic };

/// Index product. Full table:
///
///   up   * up   = up      (property 1)
///   up   * down = down    (eqn 2)
///   down * up   = up      (eqn 3)
///   down * down = down    (property 5)
///
/// The table is right projection: the result is always the second operand.
/// That closed form is verified by the "index_right_projection" law; the
/// implementation keeps the literal table so each entry stays traceable.
Index index_mul(Index a, Index b);

/// Same-index quotient: up/up = up (property 2), down/down = down
/// (property 6). Throws MixedIndexDivision for mixed operands; those only
/// have meaning with complex payloads attached (see special_div).
Index index_div(Index a, Index b);

/// Modulus leaves either index unchanged (properties 3 and 7).
Index index_abs(Index a) noexcept;

/// Canonical rendering: "up" or "down".
std::string_view to_string(Index i) noexcept;

}  // namespace cnum
