#pragma once

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "matlen/errors.hpp"

namespace matlen {

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of a ground field: Q or GF(p) with 2 <= p < 2^31 prime.
struct FieldDesc {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;  // 0 for Q

    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// Deterministic trial division; adequate below 2^31 (at most ~23k odd divisors).
constexpr bool is_prime(std::uint64_t x) noexcept {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

inline FieldDesc rationals() noexcept { return {}; }

inline FieldDesc prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("GF(p) requires p < 2^31");
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires prime p, got " + std::to_string(p));
    return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

inline std::string to_string(const FieldDesc& f) {
    if (f.kind == FieldKind::Rationals) return "Q";
    return "GF(" + std::to_string(f.p) + ")";
}

/// Parses "Q" or "GF(p)".
inline FieldDesc parse_field(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        auto digits = text.substr(3, text.size() - 4);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
            try {
                return prime_field(p);
            } catch (const std::invalid_argument& e) {
                throw parse_error(std::string("invalid field \"") + std::string(text) + "\": " + e.what());
            }
        }
    }
    throw parse_error("invalid field \"" + std::string(text) + "\" (expected Q or GF(p))");
}

namespace detail {

struct ScalarText {
    bool negative = false;
    std::string_view numerator;
    std::string_view denominator;  // empty when absent
};

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// optional sign, decimal digits, optional "/" + decimal digits
inline ScalarText split_scalar(std::string_view text) {
    ScalarText out;
    auto body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        out.negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    out.numerator = body.substr(0, slash);
    if (slash != std::string_view::npos) {
        out.denominator = body.substr(slash + 1);
        if (!all_digits(out.denominator))
            throw parse_error("malformed scalar \"" + std::string(text) + "\"");
        if (out.denominator.find_first_not_of('0') == std::string_view::npos)
            throw parse_error("zero denominator in \"" + std::string(text) + "\"");
    }
    if (!all_digits(out.numerator)) throw parse_error("malformed scalar \"" + std::string(text) + "\"");
    return out;
}

}  // namespace detail

/// The rationals, backed by GMP. Values are always canonical (reduced, positive denominator).
class RationalField {
public:
    using value_type = mpq_class;

    [[nodiscard]] FieldDesc desc() const noexcept { return rationals(); }

    [[nodiscard]] value_type zero() const { return value_type(0); }
    [[nodiscard]] value_type one() const { return value_type(1); }
    [[nodiscard]] value_type from_int(long v) const { return value_type(v); }

    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw division_by_zero();
        return 1 / a;
    }
    // acc -= a * b
    void sub_mul(value_type& acc, const value_type& a, const value_type& b) const { acc -= a * b; }
    void add_mul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }

    [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }

    [[nodiscard]] value_type parse(std::string_view text) const {
        auto parts = detail::split_scalar(text);
        mpz_class num(std::string(parts.numerator), 10);
        mpz_class den(parts.denominator.empty() ? std::string("1") : std::string(parts.denominator), 10);
        if (parts.negative) num = -num;
        value_type q(num, den);
        q.canonicalize();
        return q;
    }

    [[nodiscard]] std::string to_string(const value_type& a) const { return a.get_str(10); }

    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

/// GF(p) for prime p < 2^31; residues in [0, p), products in 64-bit.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(prime_field(p).p) {}
    explicit PrimeField(const FieldDesc& d) : PrimeField(d.p) {
        if (d.kind != FieldKind::PrimeField) throw field_mismatch("PrimeField built from Q descriptor");
    }

    [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
    [[nodiscard]] FieldDesc desc() const noexcept { return {FieldKind::PrimeField, p_}; }

    [[nodiscard]] value_type zero() const noexcept { return 0; }
    [[nodiscard]] value_type one() const noexcept { return 1 % p_; }
    [[nodiscard]] value_type from_int(long v) const noexcept {
        auto r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
        std::uint32_t s = a + b;  // < 2^32 since a, b < 2^31
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] value_type inv(value_type a) const {
        if (a == 0) throw division_by_zero();
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    void sub_mul(value_type& acc, value_type a, value_type b) const noexcept { acc = sub(acc, mul(a, b)); }
    void add_mul(value_type& acc, value_type a, value_type b) const noexcept { acc = add(acc, mul(a, b)); }

    [[nodiscard]] bool is_zero(value_type a) const noexcept { return a == 0; }

    [[nodiscard]] value_type parse(std::string_view text) const {
        auto parts = detail::split_scalar(text);
        value_type num = reduce(parts.numerator);
        if (parts.negative) num = neg(num);
        if (parts.denominator.empty()) return num;
        value_type den = reduce(parts.denominator);
        if (den == 0)
            throw parse_error("denominator of \"" + std::string(text) + "\" vanishes in " + to_string_desc());
        return mul(num, inv(den));
    }

    [[nodiscard]] std::string to_string(value_type a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    [[nodiscard]] value_type reduce(std::string_view digits) const {
        std::uint64_t r = 0;
        for (char c : digits) r = (r * 10 + static_cast<unsigned>(c - '0')) % p_;
        return static_cast<value_type>(r);
    }
    [[nodiscard]] std::string to_string_desc() const { return matlen::to_string(desc()); }

    std::uint32_t p_;
};

template <class F>
concept ExactField = std::equality_comparable<F> &&
    requires(const F f, const typename F::value_type a, typename F::value_type acc, std::string_view s) {
        { f.desc() } -> std::same_as<FieldDesc>;
        { f.zero() } -> std::same_as<typename F::value_type>;
        { f.one() } -> std::same_as<typename F::value_type>;
        { f.from_int(1L) } -> std::same_as<typename F::value_type>;
        { f.add(a, a) } -> std::same_as<typename F::value_type>;
        { f.sub(a, a) } -> std::same_as<typename F::value_type>;
        { f.mul(a, a) } -> std::same_as<typename F::value_type>;
        { f.neg(a) } -> std::same_as<typename F::value_type>;
        { f.inv(a) } -> std::same_as<typename F::value_type>;
        { f.is_zero(a) } -> std::same_as<bool>;
        { f.parse(s) } -> std::same_as<typename F::value_type>;
        { f.to_string(a) } -> std::same_as<std::string>;
        f.sub_mul(acc, a, a);
        f.add_mul(acc, a, a);
    };

/// Calls fn with the static field object matching desc.
template <class Fn>
decltype(auto) visit_field(const FieldDesc& desc, Fn&& fn) {
    if (desc.kind == FieldKind::Rationals) return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField{desc});
}

}  // namespace matlen
