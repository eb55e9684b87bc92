#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matlen/field.hpp"

namespace matlen {

/// A word in the generators: 0-based indices, evaluated as the left-to-right product.
/// The empty word evaluates to the identity.
using Word = std::vector<std::size_t>;

/// Incrementally maintained reduced row echelon basis of a subspace of F^d.
///
/// Invariants after every insert:
///   - each row's pivot entry is 1 and is its first nonzero entry;
///   - pivots are pairwise distinct and every other row is zero in each pivot column;
///   - layer tags are non-decreasing in insertion order.
/// Each row remembers the layer and word that produced it. The row vector itself is the
/// reduced form, not the word's evaluation.
template <ExactField F>
class SpanBasis {
public:
    using value_type = typename F::value_type;

    struct Row {
        std::vector<value_type> vec;
        std::size_t pivot;
        int layer;
        Word witness;
    };

    SpanBasis(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
    [[nodiscard]] bool full() const noexcept { return rows_.size() == ambient_; }
    [[nodiscard]] const std::vector<Row>& rows() const noexcept { return rows_; }
    [[nodiscard]] int max_layer() const noexcept { return rows_.empty() ? 0 : rows_.back().layer; }

    /// Reduces v against every row; the result is zero iff v lies in the span.
    void reduce_in_place(std::vector<value_type>& v) const {
        check_dim(v.size());
        for (const auto& row : rows_) {
            const auto c = v[row.pivot];
            if (field_.is_zero(c)) continue;
            for (std::size_t j = row.pivot; j < ambient_; ++j)
                if (!field_.is_zero(row.vec[j])) field_.sub_mul(v[j], c, row.vec[j]);
        }
    }

    [[nodiscard]] std::vector<value_type> reduce(std::vector<value_type> v) const {
        reduce_in_place(v);
        return v;
    }

    [[nodiscard]] bool contains(std::span<const value_type> v) const {
        std::vector<value_type> copy(v.begin(), v.end());
        reduce_in_place(copy);
        return first_nonzero(copy) == npos;
    }

    /// Inserts v if it is independent of the current rows. Returns whether the span grew.
    bool insert(std::vector<value_type> v, int layer = 0, Word witness = {}) {
        check_dim(v.size());
        if (layer < max_layer())
            throw std::invalid_argument("layer " + std::to_string(layer) + " precedes existing layer " +
                                        std::to_string(max_layer()));
        reduce_in_place(v);
        const auto pivot = first_nonzero(v);
        if (pivot == npos) return false;

        const auto scale = field_.inv(v[pivot]);
        for (std::size_t j = pivot; j < ambient_; ++j)
            if (!field_.is_zero(v[j])) v[j] = field_.mul(scale, v[j]);

        // Clear the new pivot column from existing rows. Their first nonzero entries are
        // unaffected: a row with an earlier pivot keeps it, a row with a later pivot is
        // already zero in this column.
        for (auto& row : rows_) {
            const auto c = row.vec[pivot];
            if (field_.is_zero(c)) continue;
            for (std::size_t j = pivot; j < ambient_; ++j)
                if (!field_.is_zero(v[j])) field_.sub_mul(row.vec[j], c, v[j]);
        }
        rows_.push_back(Row{std::move(v), pivot, layer, std::move(witness)});
        return true;
    }

    /// Coordinates of v in terms of the rows (in row order), or nullopt if v is outside the span.
    [[nodiscard]] std::optional<std::vector<value_type>> coordinates(std::span<const value_type> v) const {
        check_dim(v.size());
        // Rows are fully reduced, so the coefficient of row r is v[pivot_r].
        std::vector<value_type> coeffs;
        coeffs.reserve(rows_.size());
        for (const auto& row : rows_) coeffs.push_back(v[row.pivot]);
        std::vector<value_type> rest(v.begin(), v.end());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (!field_.is_zero(coeffs[r]))
                for (std::size_t j = rows_[r].pivot; j < ambient_; ++j)
                    if (!field_.is_zero(rows_[r].vec[j])) field_.sub_mul(rest[j], coeffs[r], rows_[r].vec[j]);
        if (first_nonzero(rest) != npos) return std::nullopt;
        return coeffs;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void check_dim(std::size_t d) const {
        if (d != ambient_)
            throw dimension_mismatch("vector of length " + std::to_string(d) + " in a span of ambient dimension " +
                                     std::to_string(ambient_));
    }

    [[nodiscard]] std::size_t first_nonzero(const std::vector<value_type>& v) const {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!field_.is_zero(v[j])) return j;
        return npos;
    }

    F field_;
    std::size_t ambient_;
    std::vector<Row> rows_;
};

/// span_insert as a free function.
template <ExactField F>
bool span_insert(SpanBasis<F>& basis, std::vector<typename F::value_type> v, int layer = 0, Word w = {}) {
    return basis.insert(std::move(v), layer, std::move(w));
}

/// Rank of a list of vectors by elimination.
template <ExactField F>
std::size_t rank_of(const F& field, std::size_t dim, const std::vector<std::vector<typename F::value_type>>& vectors) {
    SpanBasis<F> basis(field, dim);
    for (const auto& v : vectors) basis.insert(v);
    return basis.dim();
}

}  // namespace matlen
