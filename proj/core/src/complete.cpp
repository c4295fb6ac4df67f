#include "cnum/complete.hpp"

#include "cnum/errors.hpp"

namespace cnum {

CompleteNumber embed(const IndexedComplex& a) {
    if (a.index == Index::Vastavic) return {a.value, Complex::zero()};
    return {Complex::zero(), a.value};
}

Complex shadow(const CompleteNumber& p) { return p.vast + p.calp; }

std::optional<IndexedComplex> purify(const CompleteNumber& p) {
    if (p.calp.is_zero()) return IndexedComplex{Index::Vastavic, p.vast};
    if (p.vast.is_zero()) return IndexedComplex{Index::Calpanic, p.calp};
    return std::nullopt;
}

CompleteNumber operator+(const CompleteNumber& p, const CompleteNumber& q) {
    return {p.vast + q.vast, p.calp + q.calp};
}

CompleteNumber operator-(const CompleteNumber& p, const CompleteNumber& q) {
    return {p.vast - q.vast, p.calp - q.calp};
}

CompleteNumber operator*(const CompleteNumber& p, const CompleteNumber& q) {
    const Complex s = shadow(p);
    return {s * q.vast, s * q.calp};
}

CompleteNumber operator/(const CompleteNumber& p, const CompleteNumber& q) {
    const Complex s = shadow(q);
    if (s.is_zero()) {
        throw SingularDenominator("divisor's up and down parts sum to 0");
    }
    return {p.vast / s, p.calp / s};
}

EvalValue special_div(const IndexedComplex& n, const IndexedComplex& d, Mode mode) {
    if (n.index != d.index) {
        throw MixedIndexDivision("pure division requires matching indices");
    }
    const bool numerator_zero = n.value.is_zero();
    const bool divisor_zero = d.value.is_zero();

    if (d.index == Index::Vastavic && divisor_zero) {
        if (!numerator_zero) {
            return IndexedComplex{Index::Calpanic, n.value};  // rule 1: demotion
        }
        return VoidValue{};  // rule 2: up(0)/up(0)
    }
    if (d.index == Index::Calpanic && divisor_zero) {
        return VoidValue{};  // rule 3
    }
    if (n.index == Index::Calpanic && numerator_zero) {
        return IndexedComplex{Index::Vastavic, Complex::one() / d.value};  // rule 4: promotion
    }
    if (n.index == Index::Vastavic && numerator_zero) {
        if (mode == Mode::Strict) return VoidValue{};  // rule 5
        return IndexedComplex{Index::Vastavic, Complex::zero()};
    }
    return IndexedComplex{index_div(n.index, d.index), n.value / d.value};  // rule 6
}

EvalValue indexed_add(const IndexedComplex& a, const IndexedComplex& b) {
    if (a.index == b.index) {
        return IndexedComplex{a.index, a.value + b.value};
    }
    return embed(a) + embed(b);
}

EvalValue indexed_sub(const IndexedComplex& a, const IndexedComplex& b) {
    if (a.index == b.index) {
        return IndexedComplex{a.index, a.value - b.value};
    }
    return embed(a) - embed(b);
}

EvalValue indexed_mul(const IndexedComplex& a, const IndexedComplex& b) {
    if (a.index == b.index) {
        return IndexedComplex{index_mul(a.index, b.index), a.value * b.value};
    }
    return embed(a) * embed(b);
}

std::pair<Index, Radical> indexed_modulus(const IndexedComplex& a) {
    return {index_abs(a.index), modulus(a.value)};
}

namespace {

CompleteNumber to_full(const EvalValue& v) {
    return v.is_pure() ? embed(v.as_pure()) : v.as_full();
}

}  // namespace

EvalValue add(const EvalValue& a, const EvalValue& b) {
    if (a.is_void() || b.is_void()) return VoidValue{};
    if (a.is_pure() && b.is_pure()) return indexed_add(a.as_pure(), b.as_pure());
    return to_full(a) + to_full(b);
}

EvalValue sub(const EvalValue& a, const EvalValue& b) {
    if (a.is_void() || b.is_void()) return VoidValue{};
    if (a.is_pure() && b.is_pure()) return indexed_sub(a.as_pure(), b.as_pure());
    return to_full(a) - to_full(b);
}

EvalValue mul(const EvalValue& a, const EvalValue& b) {
    if (a.is_void() || b.is_void()) return VoidValue{};
    if (a.is_pure() && b.is_pure()) return indexed_mul(a.as_pure(), b.as_pure());
    return to_full(a) * to_full(b);
}

EvalValue divide(const EvalValue& a, const EvalValue& b, Mode mode) {
    if (a.is_void() || b.is_void()) return VoidValue{};
    if (a.is_pure() && b.is_pure()) {
        if (a.as_pure().index == b.as_pure().index) {
            return special_div(a.as_pure(), b.as_pure(), mode);
        }
        return to_full(a) / to_full(b);
    }
    return to_full(a) / to_full(b);
}

EvalValue negate(const EvalValue& v) {
    if (v.is_void()) return v;
    if (v.is_pure()) return IndexedComplex{v.as_pure().index, -v.as_pure().value};
    return CompleteNumber{-v.as_full().vast, -v.as_full().calp};
}

EvalValue retag(const EvalValue& v, Index target) {
    if (v.is_void()) return v;
    if (v.is_full()) {
        throw RetagOfFull("cannot re-tag a full complete number; operand must be pure");
    }
    return IndexedComplex{target, v.as_pure().value};
}

EvalValue modulus_of(const EvalValue& v) {
    if (v.is_void()) return v;
    if (v.is_full()) {
        throw RetagOfFull("modulus of a full complete number is not defined; operand must be pure");
    }
    const auto [idx, rad] = indexed_modulus(v.as_pure());
    if (!rad.exact_root) {
        throw IrrationalModulus("modulus is not rational: " + to_string(rad));
    }
    return IndexedComplex{idx, Complex(*rad.exact_root, Rational(0))};
}

std::string to_string(const IndexedComplex& a) {
    return std::string(to_string(a.index)) + "(" + to_string(a.value) + ")";
}

std::string to_string(const CompleteNumber& p) {
    return "up(" + to_string(p.vast) + ") + down(" + to_string(p.calp) + ")";
}

std::string to_string(const EvalValue& v) {
    if (v.is_void()) return "void";
    if (v.is_pure()) return to_string(v.as_pure());
    return to_string(v.as_full());
}

}  // namespace cnum
