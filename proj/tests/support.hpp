#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "matlen/matlen.hpp"

namespace matlen::testing {

inline const RationalField Q{};

/// Large random rational with up to `digits` decimal digits in numerator and denominator.
inline mpq_class big_rational(Rng& rng, int digits) {
    auto draw = [&](bool allow_zero) {
        std::string s;
        const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(digits)));
        for (int k = 0; k < len; ++k) s.push_back(static_cast<char>('0' + rng.below(10)));
        mpz_class z(s, 10);
        if (!allow_zero && z == 0) z = 1;
        return z;
    };
    mpq_class q(draw(true), draw(false));
    q.canonicalize();
    if (rng.below(2)) q = -q;
    return q;
}

/// Determinant by the Leibniz permutation sum; only for small n.
template <ExactField F>
typename F::value_type leibniz_det(const Matrix<F>& a) {
    const auto& f = a.field();
    const auto n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto total = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (perm[x] > perm[y]) ++inversions;
        auto term = f.one();
        for (std::size_t r = 0; r < n; ++r) term = f.mul(term, a(r, perm[r]));
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <ExactField F>
typename F::value_type evaluate_at(const Polynomial<F>& p, const typename F::value_type& x) {
    const auto& f = p.field();
    auto acc = f.zero();
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

/// Random matrix supported on the k-diagonal.
template <ExactField F>
Matrix<F> random_on_diagonal(const F& f, std::size_t n, int k, Rng& rng, long magnitude) {
    Matrix<F> m(f, n);
    for (const auto& u : diagonal_units(f, n, k)) m = m + random_scalar(f, rng, magnitude) * u;
    return m;
}

template <ExactField F>
std::vector<Matrix<F>> units(const F& f, std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> ij) {
    std::vector<Matrix<F>> out;
    for (auto [i, j] : ij) out.push_back(elem(f, n, i, j));
    return out;
}

}  // namespace matlen::testing
