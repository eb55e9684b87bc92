#pragma once

#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matlen/matrix.hpp"
#include "matlen/span.hpp"

namespace matlen {

/// k x k Jordan block with eigenvalue lambda: lambda on the diagonal, 1 on the superdiagonal.
template <ExactField F>
Matrix<F> jordan(const F& field, std::size_t n, const typename F::value_type& lambda) {
    Matrix<F> m(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = lambda;
        if (i + 1 < n) m(i, i + 1) = field.one();
    }
    return m;
}

/// Nilpotent Jordan block J_n.
template <ExactField F>
Matrix<F> jordan(const F& field, std::size_t n) {
    return jordan(field, n, field.zero());
}

/// Matrix unit E_{i,j}, 1-based indices.
template <ExactField F>
Matrix<F> elem(const F& field, std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("E_{" + std::to_string(i) + "," + std::to_string(j) + "} outside " + std::to_string(n) +
                                "x" + std::to_string(n));
    Matrix<F> m(field, n);
    m(i - 1, j - 1) = field.one();
    return m;
}

/// (J_n, B_n) with B_n = E_{n-1,1} - E_{n,2} on the -(n-2)-diagonal.
/// B_n J_n^(n-3) B_n = -E_{n,1} always; for n >= 4 this forces B_n^2 = 0, but B_3^2 = -E_{3,1}.
template <ExactField F>
std::pair<Matrix<F>, Matrix<F>> nilpotent_pair(const F& field, std::size_t n) {
    if (n < 3) throw std::invalid_argument("nilpotent_pair requires n >= 3");
    auto b = elem(field, n, n - 1, 1) - elem(field, n, n, 2);
    auto j = jordan(field, n);
    Matrix<F> minus_en1(field, n);
    minus_en1(n - 1, 0) = field.neg(field.one());
    if (b * j.pow(static_cast<unsigned>(n - 3)) * b != minus_en1) throw std::logic_error("B_n J_n^(n-3) B_n != -E_{n,1}");
    if (n >= 4 && !(b * b).is_zero()) throw std::logic_error("B_n does not square to zero");
    return {std::move(j), std::move(b)};
}

/// (J_n^i, (J_n^T)^(n-i)).
template <ExactField F>
std::pair<Matrix<F>, Matrix<F>> jordan_power_pair(const F& field, std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::invalid_argument("jordan_power_pair requires 1 <= i < n");
    const auto j = jordan(field, n);
    return {j.pow(static_cast<unsigned>(i)), j.transpose().pow(static_cast<unsigned>(n - i))};
}

template <ExactField F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
    const auto n = a.size(), m = b.size();
    Matrix<F> out(a.field(), n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a.field().mul(a(i, j), b(k, l));
    return out;
}

/// The set of k for which the k-diagonal (entries a_{i,i+k}) has a nonzero entry.
struct DiagonalSupport {
    std::size_t n = 0;
    std::set<int> diagonals;
};

template <ExactField F>
DiagonalSupport k_diagonal_support(const Matrix<F>& a) {
    DiagonalSupport out{a.size(), {}};
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (!a.field().is_zero(a(r, c))) out.diagonals.insert(static_cast<int>(c) - static_cast<int>(r));
    return out;
}

inline void check_diagonal(std::size_t n, int k) {
    if (std::abs(k) >= static_cast<int>(n))
        throw std::out_of_range("diagonal " + std::to_string(k) + " outside an " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix");
}

/// Matrix units spanning the k-diagonal; there are n - |k| of them.
template <ExactField F>
std::vector<Matrix<F>> diagonal_units(const F& field, std::size_t n, int k) {
    check_diagonal(n, k);
    std::vector<Matrix<F>> out;
    for (std::size_t r = 0; r < n; ++r) {
        const auto c = static_cast<long>(r) + k;
        if (c < 0 || c >= static_cast<long>(n)) continue;
        Matrix<F> m(field, n);
        m(r, static_cast<std::size_t>(c)) = field.one();
        out.push_back(std::move(m));
    }
    return out;
}

/// Orbit of k under k -> k + (n - i) for k <= i, k -> k - i otherwise, up to and including
/// the first repeated value.
inline std::vector<int> k_sequence(int n, int i, int k0) {
    if (i < 1 || i >= n) throw std::invalid_argument("k_sequence requires 1 <= i < n");
    if (k0 < 1 || k0 > n) throw std::invalid_argument("k_sequence requires 1 <= k0 <= n");
    std::vector<int> seq{k0};
    std::set<int> seen{k0};
    for (;;) {
        const int k = seq.back();
        const int next = k <= i ? k + (n - i) : k - i;
        seq.push_back(next);
        if (!seen.insert(next).second) return seq;
    }
}

/// The diagonal space carrying the length-(n-2) words in J_n^i and (J_n^T)^(n-i):
///   2i < n:      diagonals {n-2i, -2i}
///   2i > n:      diagonals {n-2i, 2n-2i}
///   n=2, i=1:    diagonal {0}
/// Its dimension is n in every case.
struct WSpace {
    std::size_t n = 0;
    std::size_t i = 0;
    std::vector<int> diagonals;
    std::size_t dim = 0;
};

inline WSpace w_space(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::invalid_argument("w_space requires 1 <= i < n");
    if (std::gcd(n, i) != 1)
        throw std::invalid_argument("w_space requires gcd(n, i) = 1, got n=" + std::to_string(n) + ", i=" + std::to_string(i));
    const int ni = static_cast<int>(n), ii = static_cast<int>(i);
    WSpace w{n, i, {}, 0};
    if (2 * ii < ni)
        w.diagonals = {ni - 2 * ii, -2 * ii};
    else if (2 * ii > ni)
        w.diagonals = {ni - 2 * ii, 2 * ni - 2 * ii};
    else
        w.diagonals = {0};  // only n = 2, i = 1 is co-prime here
    for (int k : w.diagonals) {
        check_diagonal(n, k);
        w.dim += n - static_cast<std::size_t>(std::abs(k));
    }
    if (w.dim != n) throw std::logic_error("w_space dimension " + std::to_string(w.dim) + " != n");
    return w;
}

/// Matrix-unit basis of w_space(n, i), vectorized row-major.
template <ExactField F>
SpanBasis<F> w_space_basis(const F& field, std::size_t n, std::size_t i) {
    const auto w = w_space(n, i);
    SpanBasis<F> basis(field, n * n);
    for (int k : w.diagonals)
        for (const auto& u : diagonal_units(field, n, k)) basis.insert(u.vec());
    if (basis.dim() != n) throw std::logic_error("w_space_basis: expected dimension n");
    return basis;
}

}  // namespace matlen
