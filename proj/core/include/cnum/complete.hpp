#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "cnum/complex.hpp"
#include "cnum/index.hpp"

namespace cnum {

/// A complex payload carrying an up/down index. up(0) and down(0) are
/// distinct values of this type; the distinction is what drives the special
/// division rules, and it is lost by embed().
struct IndexedComplex {
    Index index = Index::Vastavic;
    Complex value;

    friend bool operator==(const IndexedComplex& a, const IndexedComplex& b) = default;
};

/// A complete number: the formal sum of an up part and a down part. Both
/// parts are always present; the zero complete number has both parts 0.
/// Equality is part-wise.
struct CompleteNumber {
    Complex vast;  // the up part
    Complex calp;  // the down part

    friend bool operator==(const CompleteNumber& a, const CompleteNumber& b) = default;
};

/// Switch for the one case the rules leave double-edged: up(0)/up(z) with
/// z != 0. Strict reads it as the void quantity; Lenient keeps quotients
/// linear and yields up(0). Always passed as a parameter, never ambient.
enum class Mode { Strict, Lenient };

/// The absorbing void quantity. A value, not an error: any arithmetic
/// involving it yields void again.
struct VoidValue {
    friend bool operator==(const VoidValue&, const VoidValue&) = default;
};

/// Result of evaluating an expression: a pure indexed complex, a full
/// two-part complete number, or void. Pure and Full are distinct kinds even
/// when they embed identically; equality never crosses kinds.
class EvalValue {
public:
    EvalValue(IndexedComplex v) : v_(std::move(v)) {}   // NOLINT
    EvalValue(CompleteNumber v) : v_(std::move(v)) {}   // NOLINT
    EvalValue(VoidValue v) : v_(v) {}                   // NOLINT

    static EvalValue void_value() { return EvalValue(VoidValue{}); }

    bool is_pure() const { return std::holds_alternative<IndexedComplex>(v_); }
    bool is_full() const { return std::holds_alternative<CompleteNumber>(v_); }
    bool is_void() const { return std::holds_alternative<VoidValue>(v_); }

    const IndexedComplex& as_pure() const { return std::get<IndexedComplex>(v_); }
    const CompleteNumber& as_full() const { return std::get<CompleteNumber>(v_); }

    friend bool operator==(const EvalValue& a, const EvalValue& b) = default;

private:
    std::variant<IndexedComplex, CompleteNumber, VoidValue> v_;
};

/// Places the payload in the part matching its index and 0 in the other.
/// Loses the up(0)/down(0) distinction: both embed to the zero complete
/// number. Special division must therefore fire before embedding.
CompleteNumber embed(const IndexedComplex& a);

/// The part sum vast + calp: the complex number division divides by, and a
/// homomorphic image under both + and *.
Complex shadow(const CompleteNumber& p);

/// Display-only view of a one-part complete number as a pure value: calp = 0
/// reads as up(vast), vast = 0 as down(calp), the zero complete number as
/// up(0). Internal dispatch never re-purifies a full value; embedding is a
/// one-way door.
std::optional<IndexedComplex> purify(const CompleteNumber& p);

CompleteNumber operator+(const CompleteNumber& p, const CompleteNumber& q);
CompleteNumber operator-(const CompleteNumber& p, const CompleteNumber& q);

/// Non-commutative product (shadow(p) * q.vast, shadow(p) * q.calp). This is
/// the factored form of the four-term expansion of (up p1 + down p2) *
/// (up q1 + down q2) under the mixed-index products up*down = down and
/// down*up = up; the law suite checks the two forms agree.
CompleteNumber operator*(const CompleteNumber& p, const CompleteNumber& q);

/// Quotient (p.vast / shadow(q), p.calp / shadow(q)); satisfies
/// q * (p / q) == p exactly. Throws SingularDenominator when shadow(q) = 0:
/// no rule covers a divisor whose parts cancel.
CompleteNumber operator/(const CompleteNumber& p, const CompleteNumber& q);

/// Division of pure same-index values, including the index-transforming
/// zero rules. Dispatch, in order (z != 0 throughout):
///
///   1. up(z)   / up(0)    -> down(z)        demotion (property 4)
///   2. up(0)   / up(0)    -> void
///   3. x       / down(0)  -> void           (property 8's void partner)
///   4. down(0) / down(z)  -> up(1/z)        promotion (property 8)
///   5. up(0)   / up(z)    -> void (Strict) | up(0) (Lenient)
///   6. same index, z / w  -> index_div applied to the complex quotient
///
/// Rules 1 and 4 generalize the payload from 1 to any z != 0; rule 2 keeps
/// 0/0 unvalued. Throws MixedIndexDivision when the indices differ; mixed
/// pure division goes through embed() and complete-number division.
EvalValue special_div(const IndexedComplex& n, const IndexedComplex& d,
                      Mode mode = Mode::Strict);

/// Same index: stays pure, payloads add. Mixed: forms the full complete
/// number with one value in each part.
EvalValue indexed_add(const IndexedComplex& a, const IndexedComplex& b);

/// Same-index and mixed analogues of indexed_add for - and *.
EvalValue indexed_sub(const IndexedComplex& a, const IndexedComplex& b);
EvalValue indexed_mul(const IndexedComplex& a, const IndexedComplex& b);

/// Modulus distributes over the index: (|index|, |value|). The index is
/// unaffected; the payload modulus is exact.
std::pair<Index, Radical> indexed_modulus(const IndexedComplex& a);

// Total operations on evaluation values. Void absorbs everything; pure
// operands of the same index stay pure; anything else embeds to full.
EvalValue add(const EvalValue& a, const EvalValue& b);
EvalValue sub(const EvalValue& a, const EvalValue& b);
EvalValue mul(const EvalValue& a, const EvalValue& b);
EvalValue divide(const EvalValue& a, const EvalValue& b, Mode mode = Mode::Strict);

/// Part-wise payload negation; the index is untouched. Agrees with
/// subtraction from the zero complete number up to embedding.
EvalValue negate(const EvalValue& v);

/// Re-tags a pure value's index (idempotent; up(down(x)) re-tags to up).
/// Void passes through; full values throw RetagOfFull.
EvalValue retag(const EvalValue& v, Index target);

/// Exact modulus as a value. Void passes through; full values throw
/// RetagOfFull (modulus is defined for pure values only); an irrational
/// result throws IrrationalModulus because radicals cannot be operands.
EvalValue modulus_of(const EvalValue& v);

std::string to_string(const IndexedComplex& a);   // "up(7+10i)"
std::string to_string(const CompleteNumber& p);   // "up(...) + down(...)", both parts always shown
std::string to_string(const EvalValue& v);        // the above, or "void"

inline std::ostream& operator<<(std::ostream& os, const IndexedComplex& a) {
    return os << to_string(a);
}
inline std::ostream& operator<<(std::ostream& os, const CompleteNumber& p) {
    return os << to_string(p);
}
inline std::ostream& operator<<(std::ostream& os, const EvalValue& v) {
    return os << to_string(v);
}

}  // namespace cnum
