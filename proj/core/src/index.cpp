#include "cnum/index.hpp"

#include "cnum/errors.hpp"

namespace cnum {

Index index_mul(Index a, Index b) {
    // The literal four-entry table; see index.hpp for the closed form.
    if (a == Index::Vastavic && b == Index::Vastavic) return Index::Vastavic;
    if (a == Index::Vastavic && b == Index::Calpanic) return Index::Calpanic;
    if (a == Index::Calpanic && b == Index::Vastavic) return Index::Vastavic;
    return Index::Calpanic;
}

Index index_div(Index a, Index b) {
    if (a != b) {
        throw MixedIndexDivision("bare-index division is defined only for equal indices");
    }
    return a;
}

Index index_abs(Index a) noexcept { return a; }

std::string_view to_string(Index i) noexcept {
    return i == Index::Vastavic ? "up" : "down";
}

}  // namespace cnum
