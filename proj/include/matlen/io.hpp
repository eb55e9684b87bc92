#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "matlen/document.hpp"
#include "matlen/length.hpp"
#include "matlen/verifier.hpp"

namespace matlen {

using json = nlohmann::ordered_json;

inline constexpr std::string_view version = "matlen 1.0.0";

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::string entry_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw parse_error(where + ": entries must be strings or integers (floating-point values are not exact)");
}

}  // namespace detail

inline InputDocument document_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("input document must be a JSON object");
    InputDocument doc;
    if (!j.contains("field") || !j["field"].is_string()) throw parse_error("\"field\" must be a string (\"Q\" or \"GF(p)\")");
    doc.field = parse_field(j["field"].get<std::string>());
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw parse_error("\"n\" must be a positive integer");
    doc.n = j["n"].get<std::size_t>();
    if (!j.contains("matrices") || !j["matrices"].is_array()) throw parse_error("\"matrices\" must be an array");
    const auto& mats = j["matrices"];
    for (std::size_t m = 0; m < mats.size(); ++m) {
        const auto where = "matrices[" + std::to_string(m) + "]";
        if (!mats[m].is_array()) throw parse_error(where + " must be an array of rows");
        auto& grid = doc.matrices.emplace_back();
        for (std::size_t r = 0; r < mats[m].size(); ++r) {
            const auto& row = mats[m][r];
            const auto rw = where + "[" + std::to_string(r) + "]";
            if (!row.is_array()) throw parse_error(rw + " must be an array of entries");
            auto& out_row = grid.emplace_back();
            for (std::size_t c = 0; c < row.size(); ++c)
                out_row.push_back(detail::entry_text(row[c], rw + "[" + std::to_string(c) + "]"));
        }
    }
    if (j.contains("include_identity")) {
        if (!j["include_identity"].is_boolean()) throw parse_error("\"include_identity\" must be a boolean");
        doc.include_identity = j["include_identity"].get<bool>();
    }
    if (j.contains("max_len")) {
        if (!j["max_len"].is_number_unsigned()) throw parse_error("\"max_len\" must be a non-negative integer");
        doc.max_len = j["max_len"].get<std::size_t>();
    }
    return doc;
}

/// Parses document text; syntax errors carry line and column.
inline InputDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("JSON syntax error at " + detail::line_col(text, e.byte) + ": " + e.what());
    }
    return document_from_json(j);
}

inline json to_json(const InputDocument& doc) {
    json j;
    j["field"] = to_string(doc.field);
    j["n"] = doc.n;
    j["matrices"] = doc.matrices;
    j["include_identity"] = doc.include_identity;
    if (doc.max_len) j["max_len"] = *doc.max_len;
    return j;
}

/// FNV-1a over the canonical serialization of the document.
inline std::string input_hash(const InputDocument& doc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(doc).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

inline json words_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(w);
    return arr;
}

inline json to_json(const CheckReport& r, bool include_timing = true) {
    json j;
    j["id"] = r.id;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["claim"] = r.claim;
    j["provenance"] = to_string(r.provenance);
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["passed"] = r.passed;
    if (r.finding) j["finding"] = *r.finding;
    if (r.input) j["input"] = to_json(*r.input);
    if (include_timing) j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace matlen
