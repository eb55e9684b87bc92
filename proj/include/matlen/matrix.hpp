#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matlen/field.hpp"

namespace matlen {

/// Dense n x n matrix over an exact field, entries row-major.
template <ExactField F>
class Matrix {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t n) : field_(std::move(field)), n_(n), data_(n * n, field_.zero()) {
        if (n == 0) throw dimension_mismatch("matrix dimension must be at least 1");
    }

    Matrix(F field, std::size_t n, std::vector<value_type> entries)
        : field_(std::move(field)), n_(n), data_(std::move(entries)) {
        if (n == 0) throw dimension_mismatch("matrix dimension must be at least 1");
        if (data_.size() != n * n)
            throw dimension_mismatch("expected " + std::to_string(n * n) + " entries, got " + std::to_string(data_.size()));
    }

    static Matrix identity(F field, std::size_t n) {
        Matrix m(std::move(field), n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    // 0-based
    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    /// Row-major vectorization, the coordinates used by SpanBasis.
    [[nodiscard]] std::span<const value_type> entries() const noexcept { return data_; }
    [[nodiscard]] const std::vector<value_type>& vec() const noexcept { return data_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_compatible(b);
        const auto n = a.n_;
        const auto& f = a.field_;
        Matrix out(f, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& aik = a(i, k);
                if (f.is_zero(aik)) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!f.is_zero(b(k, j))) f.add_mul(out(i, j), aik, b(k, j));
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_compatible(b);
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_compatible(b);
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
        return out;
    }

    friend Matrix operator*(const value_type& c, const Matrix& a) {
        Matrix out = a;
        for (auto& x : out.data_) x = a.field_.mul(c, x);
        return out;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix out(field_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    [[nodiscard]] Matrix pow(unsigned e) const {
        Matrix result = identity(field_, n_);
        Matrix base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    void check_compatible(const Matrix& b) const {
        if (!(field_ == b.field_))
            throw field_mismatch("matrices over " + to_string(field_.desc()) + " and " + to_string(b.field_.desc()));
        if (n_ != b.n_)
            throw dimension_mismatch("matrix sizes " + std::to_string(n_) + " and " + std::to_string(b.n_) + " differ");
    }

private:
    F field_;
    std::size_t n_;
    std::vector<value_type> data_;
};

template <ExactField F>
Matrix<F> identity(const F& field, std::size_t n) {
    return Matrix<F>::identity(field, n);
}

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& a) {
    return a.transpose();
}

template <ExactField F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b;
}

template <ExactField F>
Matrix<F> mat_add(const Matrix<F>& a, const Matrix<F>& b) {
    return a + b;
}

template <ExactField F>
Matrix<F> scalar_mul_mat(const typename F::value_type& c, const Matrix<F>& a) {
    return c * a;
}

/// Builds a matrix from integer rows, e.g. {{0, 1}, {0, 0}}.
template <ExactField F>
Matrix<F> from_rows(const F& field, const std::vector<std::vector<long>>& rows) {
    const auto n = rows.size();
    Matrix<F> m(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw dimension_mismatch("row " + std::to_string(i) + " is not of length " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

/// Ensures every matrix shares the first one's size and field; returns that size.
template <ExactField F>
std::size_t common_size(std::span<const Matrix<F>> set) {
    if (set.empty()) return 0;
    for (const auto& m : set) set.front().check_compatible(m);
    return set.front().size();
}

}  // namespace matlen
