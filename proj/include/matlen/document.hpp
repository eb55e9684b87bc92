#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matlen/field.hpp"
#include "matlen/matrix.hpp"

namespace matlen {

/// A generating set in text form: every entry is a scalar string so rationals stay exact.
struct InputDocument {
    FieldDesc field;
    std::size_t n = 0;
    /// matrices[m][row][col]
    std::vector<std::vector<std::vector<std::string>>> matrices;
    bool include_identity = true;
    std::optional<std::size_t> max_len;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

template <ExactField F>
InputDocument to_document(std::span<const Matrix<F>> set, bool include_identity = true) {
    InputDocument doc;
    doc.include_identity = include_identity;
    if (set.empty()) return doc;
    doc.field = set.front().field().desc();
    doc.n = set.front().size();
    for (const auto& m : set) {
        auto& grid = doc.matrices.emplace_back();
        for (std::size_t r = 0; r < m.size(); ++r) {
            auto& row = grid.emplace_back();
            for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.field().to_string(m(r, c)));
        }
    }
    return doc;
}

template <ExactField F>
InputDocument to_document(const std::vector<Matrix<F>>& set, bool include_identity = true) {
    return to_document(std::span<const Matrix<F>>(set), include_identity);
}

/// Parses every entry in `field` (which may differ from doc.field when overriding).
/// Errors name the offending position as matrices[m][row][col].
template <ExactField F>
std::vector<Matrix<F>> matrices_from(const InputDocument& doc, const F& field) {
    if (doc.n == 0) throw parse_error("\"n\" must be at least 1");
    std::vector<Matrix<F>> out;
    for (std::size_t m = 0; m < doc.matrices.size(); ++m) {
        const auto& grid = doc.matrices[m];
        const auto where = "matrices[" + std::to_string(m) + "]";
        if (grid.size() != doc.n)
            throw parse_error(where + " has " + std::to_string(grid.size()) + " rows, expected " + std::to_string(doc.n));
        Matrix<F> mat(field, doc.n);
        for (std::size_t r = 0; r < doc.n; ++r) {
            if (grid[r].size() != doc.n)
                throw parse_error(where + "[" + std::to_string(r) + "] has " + std::to_string(grid[r].size()) +
                                  " entries, expected " + std::to_string(doc.n) + " (matrix is not square)");
            for (std::size_t c = 0; c < doc.n; ++c) {
                try {
                    mat(r, c) = field.parse(grid[r][c]);
                } catch (const parse_error& e) {
                    throw parse_error(where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: " + e.what());
                }
            }
        }
        out.push_back(std::move(mat));
    }
    return out;
}

}  // namespace matlen
