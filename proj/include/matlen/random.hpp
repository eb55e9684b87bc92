#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <vector>

#include "matlen/matrix.hpp"

namespace matlen {

/// Reproducible random source: std::mt19937_64 (its output sequence is fixed by the
/// standard) plus integer range mapping done here, since std distributions differ
/// between standard libraries. Trial t of a search with seed s draws from
/// Rng::for_trial(s, t), so any single trial can be replayed in isolation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(mix(seed ^ mix(trial + 1))); }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    long between(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// splitmix64 finalizer.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

/// Random field element: integers in [-magnitude, magnitude] over Q, uniform residues over GF(p).
template <ExactField F>
typename F::value_type random_scalar(const F& field, Rng& rng, long magnitude) {
    if constexpr (std::same_as<F, RationalField>)
        return field.from_int(rng.between(-magnitude, magnitude));
    else
        return static_cast<typename F::value_type>(rng.below(field.modulus()));
}

template <ExactField F>
Matrix<F> random_matrix(const F& field, std::size_t n, Rng& rng, long magnitude) {
    Matrix<F> m(field, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_scalar(field, rng, magnitude);
    return m;
}

template <ExactField F>
std::vector<Matrix<F>> random_set(const F& field, std::size_t n, std::size_t count, Rng& rng, long magnitude) {
    std::vector<Matrix<F>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix(field, n, rng, magnitude));
    return out;
}

}  // namespace matlen
