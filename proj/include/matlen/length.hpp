#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matlen/matrix.hpp"
#include "matlen/span.hpp"

namespace matlen {

/// Per-layer dimensions of the word-span filtration L_0 <= L_1 <= ... of a generating set.
struct LengthProfile {
    bool include_identity = true;
    /// dims[k] = dim L_k; strictly increasing, ending at the stable dimension.
    std::vector<std::size_t> dims;
    /// Smallest k with L_k = L_{k+1}.
    std::size_t length = 0;
    bool generates = false;
    std::size_t final_dim = 0;
    /// False only for truncated enumerations that never observed L_k = L_{k+1}.
    bool stabilized = true;
    /// Words whose evaluations form a basis of the final span, in insertion order.
    std::vector<Word> witnesses;
    std::vector<std::string> notes;

    /// dims extended with the stable value (or truncated) to exactly count entries.
    [[nodiscard]] std::vector<std::size_t> dims_padded(std::size_t count) const {
        std::vector<std::size_t> out(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(std::min(count, dims.size())));
        while (out.size() < count) out.push_back(dims.empty() ? 0 : dims.back());
        return out;
    }
};

inline constexpr std::uint64_t default_oracle_budget = 10'000'000;

/// Evaluates a word as the left-to-right product of the indexed generators.
template <ExactField F>
Matrix<F> eval_word(std::span<const Matrix<F>> set, const Word& w, const F& field, std::size_t n) {
    auto out = Matrix<F>::identity(field, n);
    for (auto idx : w) {
        if (idx >= set.size()) throw std::out_of_range("word index " + std::to_string(idx) + " out of range");
        out = out * set[idx];
    }
    return out;
}

template <ExactField F>
Matrix<F> eval_word(std::span<const Matrix<F>> set, const Word& w) {
    if (set.empty()) throw std::invalid_argument("cannot evaluate a word over an empty generating set");
    return eval_word(set, w, set.front().field(), set.front().size());
}

/// The filtration together with its basis; witness evaluations[r] is the unreduced matrix of
/// basis row r.
template <ExactField F>
struct Filtration {
    LengthProfile profile;
    SpanBasis<F> basis;
    std::vector<Matrix<F>> evaluations;
};

namespace detail {

template <ExactField F>
std::vector<std::string> duplicate_notes(std::span<const Matrix<F>> set) {
    std::vector<std::string> notes;
    for (std::size_t j = 1; j < set.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (set[i] == set[j]) {
                notes.push_back("generator " + std::to_string(j) + " duplicates generator " + std::to_string(i));
                break;
            }
    return notes;
}

inline Word prepend(std::size_t g, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(g);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

}  // namespace detail

/// Computes L_k(S) (include_identity) or L^0_k(S) layer by layer until it stabilizes.
///
/// Layer k only multiplies generators into the words added at layer k-1:
/// L_k = L_{k-1} + S * L_{k-1}, and S * L_{k-2} is already inside L_{k-1}.
/// Candidates are tried in order (generator index, parent insertion order), so the
/// witnesses are deterministic.
template <ExactField F>
Filtration<F> build_filtration(std::span<const Matrix<F>> set, bool include_identity) {
    if (set.empty()) throw std::invalid_argument("empty generating set: dimension unknown");
    const auto n = common_size(set);
    const auto& field = set.front().field();
    Filtration<F> out{{}, SpanBasis<F>(field, n * n), {}};
    auto& basis = out.basis;
    auto& prof = out.profile;
    prof.include_identity = include_identity;
    prof.notes = detail::duplicate_notes(set);

    std::vector<std::size_t> frontier;
    auto try_insert = [&](Matrix<F> m, int layer, Word w, std::vector<std::size_t>& next) {
        if (basis.insert(m.vec(), layer, std::move(w))) {
            next.push_back(out.evaluations.size());
            out.evaluations.push_back(std::move(m));
        }
    };

    if (include_identity) try_insert(Matrix<F>::identity(field, n), 0, {}, frontier);
    prof.dims.push_back(basis.dim());

    const std::size_t cap = n * n + 1;
    for (std::size_t k = 1;; ++k) {
        if (k > cap) throw std::logic_error("filtration failed to stabilize within n^2 + 1 layers");
        if (basis.full()) break;
        std::vector<std::size_t> next;
        const auto layer = static_cast<int>(k);
        if (k == 1 && !include_identity) {
            for (std::size_t g = 0; g < set.size(); ++g) try_insert(set[g], layer, {g}, next);
        } else {
            for (std::size_t g = 0; g < set.size(); ++g)
                for (auto r : frontier)
                    try_insert(set[g] * out.evaluations[r], layer, detail::prepend(g, basis.rows()[r].witness), next);
        }
        if (next.empty()) break;
        prof.dims.push_back(basis.dim());
        frontier = std::move(next);
    }

    prof.length = prof.dims.size() - 1;
    prof.final_dim = basis.dim();
    prof.generates = prof.final_dim == n * n;
    for (const auto& row : basis.rows()) prof.witnesses.push_back(row.witness);
    return out;
}

template <ExactField F>
LengthProfile length_profile(std::span<const Matrix<F>> set, bool include_identity) {
    if (set.empty() && !include_identity) {
        // No words at all: the zero space is already stable.
        LengthProfile p;
        p.include_identity = false;
        p.dims = {0};
        return p;
    }
    return build_filtration(set, include_identity).profile;
}

template <ExactField F>
LengthProfile length_profile(const std::vector<Matrix<F>>& set, bool include_identity) {
    return length_profile(std::span<const Matrix<F>>(set), include_identity);
}

/// Span of the evaluations of all words of length exactly m (m = 0 gives span{I}).
template <ExactField F>
SpanBasis<F> exact_length_span(std::span<const Matrix<F>> set, std::size_t m) {
    if (set.empty()) throw std::invalid_argument("exact_length_span needs at least one generator");
    const auto n = common_size(set);
    const auto& field = set.front().field();

    SpanBasis<F> current(field, n * n);
    std::vector<Matrix<F>> evals{Matrix<F>::identity(field, n)};
    current.insert(evals.front().vec(), 0, {});
    for (std::size_t j = 1; j <= m && current.dim() > 0; ++j) {
        SpanBasis<F> next(field, n * n);
        std::vector<Matrix<F>> next_evals;
        for (std::size_t g = 0; g < set.size(); ++g)
            for (std::size_t r = 0; r < evals.size(); ++r) {
                auto prod = set[g] * evals[r];
                if (next.insert(prod.vec(), static_cast<int>(j), detail::prepend(g, current.rows()[r].witness)))
                    next_evals.push_back(std::move(prod));
            }
        current = std::move(next);
        evals = std::move(next_evals);
    }
    return current;
}

template <ExactField F>
SpanBasis<F> exact_length_span(const std::vector<Matrix<F>>& set, std::size_t m) {
    return exact_length_span(std::span<const Matrix<F>>(set), m);
}

namespace detail {

inline bool power_exceeds(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > limit / base) return true;
        acc *= base;
    }
    return acc > limit;
}

template <ExactField F>
void insert_words_of_length(std::span<const Matrix<F>> set, const Matrix<F>& prefix, std::size_t remaining,
                            SpanBasis<F>& basis, int layer, Word& word) {
    if (remaining == 0) {
        basis.insert(prefix.vec(), layer, word);
        return;
    }
    for (std::size_t g = 0; g < set.size(); ++g) {
        word.push_back(g);
        insert_words_of_length(set, prefix * set[g], remaining - 1, basis, layer, word);
        word.pop_back();
    }
}

}  // namespace detail

/// Independent oracle: enumerates every word of each length <= max_len, inserting them all
/// into a fresh span. dims has max_len + 1 entries.
template <ExactField F>
LengthProfile brute_force_profile(std::span<const Matrix<F>> set, bool include_identity, std::size_t max_len,
                                  std::uint64_t budget = default_oracle_budget) {
    if (set.empty()) throw std::invalid_argument("brute_force_profile needs at least one generator");
    if (detail::power_exceeds(set.size(), max_len, budget))
        throw resource_error(std::to_string(set.size()) + "^" + std::to_string(max_len) +
                             " word evaluations exceed the oracle budget of " + std::to_string(budget));
    const auto n = common_size(set);
    const auto& field = set.front().field();
    SpanBasis<F> basis(field, n * n);
    LengthProfile prof;
    prof.include_identity = include_identity;
    prof.stabilized = false;
    if (include_identity) basis.insert(Matrix<F>::identity(field, n).vec(), 0, {});
    prof.dims.push_back(basis.dim());
    const auto id = Matrix<F>::identity(field, n);
    for (std::size_t k = 1; k <= max_len; ++k) {
        Word w;
        detail::insert_words_of_length(set, id, k, basis, static_cast<int>(k), w);
        prof.dims.push_back(basis.dim());
    }
    for (std::size_t k = 0; k + 1 < prof.dims.size(); ++k)
        if (prof.dims[k] == prof.dims[k + 1]) {
            prof.length = k;
            prof.stabilized = true;
            break;
        }
    if (!prof.stabilized) prof.length = max_len;
    prof.final_dim = basis.dim();
    prof.generates = prof.final_dim == n * n;
    for (const auto& row : basis.rows()) prof.witnesses.push_back(row.witness);
    return prof;
}

template <ExactField F>
LengthProfile brute_force_profile(const std::vector<Matrix<F>>& set, bool include_identity, std::size_t max_len,
                                  std::uint64_t budget = default_oracle_budget) {
    return brute_force_profile(std::span<const Matrix<F>>(set), include_identity, max_len, budget);
}

/// n^2 words of length <= l(S) whose evaluations form a basis of M_n.
template <ExactField F>
std::vector<std::pair<Word, Matrix<F>>> word_basis(std::span<const Matrix<F>> set) {
    auto filt = build_filtration(set, true);
    const auto n = set.front().size();
    if (!filt.profile.generates) throw not_generating(filt.profile.final_dim, n * n);
    std::vector<std::pair<Word, Matrix<F>>> out;
    for (std::size_t r = 0; r < filt.evaluations.size(); ++r)
        out.emplace_back(filt.basis.rows()[r].witness, std::move(filt.evaluations[r]));
    return out;
}

template <ExactField F>
std::vector<std::pair<Word, Matrix<F>>> word_basis(const std::vector<Matrix<F>>& set) {
    return word_basis(std::span<const Matrix<F>>(set));
}

}  // namespace matlen
