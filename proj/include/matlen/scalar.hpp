#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "matlen/field.hpp"

namespace matlen {

/// A field element tagged with its field at runtime. Immutable value type.
///
/// Rationals are always canonical (gcd(|num|, den) = 1, den >= 1, zero is 0/1);
/// GF(p) residues lie in [0, p). Binary operations on elements of different
/// fields throw field_mismatch.
class Scalar {
public:
    Scalar() : Scalar(rationals(), mpq_class(0)) {}

    static Scalar rational(mpq_class q) {
        q.canonicalize();
        return Scalar(rationals(), std::move(q));
    }
    static Scalar residue(const PrimeField& f, std::uint32_t r) { return Scalar(f.desc(), r % f.modulus()); }

    template <ExactField F>
    static Scalar from(const F& f, const typename F::value_type& v) {
        if constexpr (std::same_as<F, RationalField>)
            return rational(v);
        else
            return residue(f, v);
    }

    [[nodiscard]] const FieldDesc& field() const noexcept { return field_; }
    [[nodiscard]] bool is_rational() const noexcept { return field_.kind == FieldKind::Rationals; }

    [[nodiscard]] const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
    [[nodiscard]] std::uint32_t as_residue() const { return std::get<std::uint32_t>(value_); }

    [[nodiscard]] mpz_class numerator() const {
        return is_rational() ? mpz_class(as_rational().get_num()) : mpz_class(as_residue());
    }
    [[nodiscard]] mpz_class denominator() const {
        return is_rational() ? mpz_class(as_rational().get_den()) : mpz_class(1);
    }

    [[nodiscard]] bool is_zero() const {
        return is_rational() ? sgn(as_rational()) == 0 : as_residue() == 0;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& f, const auto& x, const auto& y) { return f.add(x, y); });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& f, const auto& x, const auto& y) { return f.sub(x, y); });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& f, const auto& x, const auto& y) { return f.mul(x, y); });
    }
    friend Scalar operator-(const Scalar& a) {
        return visit_field(a.field_, [&](const auto& f) { return Scalar::from(f, f.neg(a.get(f))); });
    }

    [[nodiscard]] Scalar inverse() const {
        return visit_field(field_, [&](const auto& f) { return Scalar::from(f, f.inv(get(f))); });
    }

    [[nodiscard]] std::string str() const {
        return is_rational() ? as_rational().get_str(10) : std::to_string(as_residue());
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

    template <ExactField F>
    [[nodiscard]] typename F::value_type get(const F& f) const {
        if (!(f.desc() == field_)) throw field_mismatch("scalar over " + to_string(field_) + " used in " + to_string(f.desc()));
        if constexpr (std::same_as<F, RationalField>)
            return as_rational();
        else
            return as_residue();
    }

private:
    Scalar(FieldDesc f, mpq_class q) : field_(f), value_(std::move(q)) {}
    Scalar(FieldDesc f, std::uint32_t r) : field_(f), value_(r) {}

    template <class Op>
    static Scalar binary(const Scalar& a, const Scalar& b, Op op) {
        if (!(a.field_ == b.field_))
            throw field_mismatch("cannot combine " + to_string(a.field_) + " and " + to_string(b.field_) + " scalars");
        return visit_field(a.field_, [&](const auto& f) { return Scalar::from(f, op(f, a.get(f), b.get(f))); });
    }

    FieldDesc field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

inline Scalar scalar_add(const Scalar& x, const Scalar& y) { return x + y; }
inline Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Scalar scalar_neg(const Scalar& x) { return -x; }
inline Scalar scalar_inv(const Scalar& x) { return x.inverse(); }

inline Scalar parse_scalar(std::string_view text, const FieldDesc& field) {
    return visit_field(field, [&](const auto& f) { return Scalar::from(f, f.parse(text)); });
}

}  // namespace matlen
