#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matlen/matrix.hpp"
#include "matlen/span.hpp"

namespace matlen {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <ExactField F>
class Polynomial {
public:
    using value_type = typename F::value_type;

    explicit Polynomial(F field) : field_(std::move(field)) {}
    Polynomial(F field, std::vector<value_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial from_ints(F field, const std::vector<long>& coeffs) {
        std::vector<value_type> c;
        for (long x : coeffs) c.push_back(field.from_int(x));
        return Polynomial(std::move(field), std::move(c));
    }

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] value_type coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<value_type> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.field_.add(a.coeff(k), b.coeff(k));
        return Polynomial(a.field_, std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<value_type> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.field_.sub(a.coeff(k), b.coeff(k));
        return Polynomial(a.field_, std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<value_type> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) a.field_.add_mul(c[i + j], a.coeffs_[i], b.coeffs_[j]);
        return Polynomial(a.field_, std::move(c));
    }

    /// Quotient and remainder of *this by a nonzero divisor.
    [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
        std::vector<value_type> rem = coeffs_;
        const auto dd = static_cast<std::size_t>(divisor.degree());
        if (rem.size() <= dd) return {Polynomial(field_), *this};
        std::vector<value_type> quot(rem.size() - dd, field_.zero());
        const auto lead_inv = field_.inv(divisor.coeffs_.back());
        for (std::size_t k = rem.size(); k-- > dd;) {
            const auto c = field_.mul(rem[k], lead_inv);
            quot[k - dd] = c;
            if (field_.is_zero(c)) continue;
            for (std::size_t j = 0; j <= dd; ++j) field_.sub_mul(rem[k - dd + j], c, divisor.coeffs_[j]);
        }
        return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
    }

    /// p(A) by Horner's rule.
    [[nodiscard]] Matrix<F> evaluate(const Matrix<F>& a) const {
        Matrix<F> acc(a.field(), a.size());
        const auto id = Matrix<F>::identity(a.field(), a.size());
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * a + coeffs_[k] * id;
        return acc;
    }

    [[nodiscard]] std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (field_.is_zero(coeffs_[k])) continue;
            auto c = field_.to_string(coeffs_[k]);
            if (!out.empty()) out += " + ";
            if (k == 0)
                out += c;
            else {
                if (c != "1") out += c + "*";
                out += k == 1 ? "x" : "x^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    F field_;
    std::vector<value_type> coeffs_;
};

/// Characteristic polynomial det(xI - A): similarity reduction to upper Hessenberg form,
/// then the standard determinant recurrence on the leading principal submatrices.
/// O(n^3) field operations, valid in any characteristic.
template <ExactField F>
Polynomial<F> char_poly(const Matrix<F>& a) {
    const auto& f = a.field();
    const std::size_t n = a.size();
    Matrix<F> h = a;

    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && f.is_zero(h(i, m - 1))) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const auto t = f.inv(h(m, m - 1));
        for (std::size_t r = m + 1; r < n; ++r) {
            const auto u = f.mul(h(r, m - 1), t);
            if (f.is_zero(u)) continue;
            for (std::size_t j = 0; j < n; ++j) f.sub_mul(h(r, j), u, h(m, j));
            for (std::size_t j = 0; j < n; ++j) f.add_mul(h(j, m), u, h(j, r));
        }
    }

    // p[k] is the characteristic polynomial of the leading k x k block of h.
    std::vector<Polynomial<F>> p;
    p.reserve(n + 1);
    p.emplace_back(f, std::vector<typename F::value_type>{f.one()});
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial<F> linear(f, {f.neg(h(m - 1, m - 1)), f.one()});
        auto next = linear * p[m - 1];
        auto sub_diag = f.one();
        for (std::size_t i = m - 1; i >= 1; --i) {
            sub_diag = f.mul(sub_diag, h(i, i - 1));
            if (f.is_zero(sub_diag)) break;
            const auto c = f.mul(h(i - 1, m - 1), sub_diag);
            if (!f.is_zero(c)) next = next - Polynomial<F>(f, {c}) * p[i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

/// Minimal polynomial from the first linear dependence among vec(I), vec(A), vec(A^2), ...
///
/// Powers are inserted into a span over F^(n^2 + n + 1) whose trailing coordinates record
/// which powers were combined, so the dependence coefficients fall out of the reduction.
template <ExactField F>
Polynomial<F> min_poly(const Matrix<F>& a) {
    const auto& f = a.field();
    const std::size_t n = a.size();
    const std::size_t head = n * n;
    SpanBasis<F> basis(f, head + n + 1);

    auto power = Matrix<F>::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<typename F::value_type> v(head + n + 1, f.zero());
        std::copy(power.vec().begin(), power.vec().end(), v.begin());
        v[head + k] = f.one();
        auto reduced = basis.reduce(v);
        const bool dependent = std::all_of(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(head),
                                           [&](const auto& x) { return f.is_zero(x); });
        if (dependent) {
            // reduced tail = coefficients r with sum r_j A^j = 0 and r_k = 1.
            std::vector<typename F::value_type> coeffs(reduced.begin() + static_cast<std::ptrdiff_t>(head),
                                                       reduced.begin() + static_cast<std::ptrdiff_t>(head + k + 1));
            return Polynomial<F>(f, std::move(coeffs));
        }
        basis.insert(std::move(v), static_cast<int>(k));
        power = power * a;
    }
    throw std::logic_error("min_poly: no dependence among I..A^n (Cayley-Hamilton violated)");
}

/// Rank by row elimination over the rows of A.
template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
    const std::size_t n = a.size();
    SpanBasis<F> basis(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = a.entries().subspan(i * n, n);
        basis.insert(std::vector<typename F::value_type>(row.begin(), row.end()));
    }
    return basis.dim();
}

template <ExactField F>
bool is_invertible(const Matrix<F>& a) {
    return rank(a) == a.size();
}

template <ExactField F>
bool is_derogatory(const Matrix<F>& a) {
    return min_poly(a).degree() < static_cast<int>(a.size());
}

/// Certificate that I_n lies in the span of A, A^2, ..., A^m, m = deg(min_poly(A)).
template <ExactField F>
struct IdentityBound {
    /// m * word length of A.
    std::size_t bound;
    /// coefficients[k - 1] multiplies A^k, k = 1..m.
    std::vector<typename F::value_type> coefficients;
};

/// If A is invertible and lies in the layer of words of length <= word_len, the identity is a
/// combination of A, ..., A^m and therefore lies in the layer m * word_len (identity not assumed).
template <ExactField F>
IdentityBound<F> identity_length_bound(const Matrix<F>& a, std::size_t word_len) {
    if (word_len == 0) throw std::invalid_argument("word length of A must be positive");
    if (!is_invertible(a)) throw std::domain_error("identity_length_bound requires an invertible matrix");
    const auto& f = a.field();
    const auto q = min_poly(a);
    const auto m = static_cast<std::size_t>(q.degree());
    // q_0 I + q_1 A + ... + A^m = 0  =>  I = sum_k (-q_k / q_0) A^k
    const auto scale = f.neg(f.inv(q.coeff(0)));
    IdentityBound<F> out{m * word_len, {}};
    for (std::size_t k = 1; k <= m; ++k) out.coefficients.push_back(f.mul(scale, q.coeff(k)));

    Matrix<F> sum(f, a.size());
    auto power = a;
    for (const auto& c : out.coefficients) {
        sum = sum + c * power;
        power = power * a;
    }
    if (!(sum == Matrix<F>::identity(f, a.size())))
        throw std::logic_error("identity_length_bound: certificate failed to reproduce the identity");
    return out;
}

}  // namespace matlen
