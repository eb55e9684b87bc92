#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matlen/io.hpp"

namespace matlen::cli {

enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    usage_error = 2,  // bad flags, malformed documents or scalars
    resource_exceeded = 3,
    verification_failed = 4,  // a published check failed, or oracle and engine disagree
    conjecture_finding = 5,   // a search found l(S) > 2n - 2
};

/// Environment variable overriding the brute-force oracle budget (word evaluations).
inline constexpr const char* oracle_budget_env = "MATLEN_ORACLE_BUDGET";
inline constexpr std::size_t verify_n_cap = 12;

inline std::uint64_t oracle_budget() {
    if (const char* v = std::getenv(oracle_budget_env)) {
        char* end = nullptr;
        const auto parsed = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        throw parse_error(std::string(oracle_budget_env) + " must be a positive integer");
    }
    return default_oracle_budget;
}

inline std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file \"" + path + "\"");
    return {std::istreambuf_iterator<char>(in), {}};
}

namespace detail {

template <ExactField F>
json matrix_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.field().to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

inline std::string word_text(const Word& w) {
    if (w.empty()) return "I";
    std::string out;
    for (auto g : w) out += (out.empty() ? "S" : "*S") + std::to_string(g);
    return out;
}

struct Effective {
    InputDocument doc;
    FieldDesc field;
};

inline Effective load(const std::string& path, const std::string& field_override, bool no_identity) {
    auto doc = parse_document(read_input(path));
    const auto field = field_override.empty() ? doc.field : parse_field(field_override);
    doc.include_identity = doc.include_identity && !no_identity;
    return {std::move(doc), field};
}

/// Parses the matrices in the effective field and rebuilds the document in canonical form.
template <ExactField F>
std::pair<std::vector<Matrix<F>>, InputDocument> canonical(const Effective& e, const F& f) {
    auto mats = matrices_from(e.doc, f);
    auto doc = to_document(mats, e.doc.include_identity);
    doc.field = f.desc();
    doc.n = e.doc.n;
    doc.max_len = e.doc.max_len;
    return {std::move(mats), std::move(doc)};
}

inline json header(const char* command) {
    json j;
    j["version"] = std::string(version);
    j["command"] = command;
    return j;
}

}  // namespace detail

struct LengthOptions {
    std::string input;
    bool no_identity = false;
    bool witnesses = false;
    std::string field_override;
    std::string format = "json";
    bool timing = true;
};

inline json length_report(const LengthOptions& o) {
    const auto eff = detail::load(o.input, o.field_override, o.no_identity);
    matlen::detail::Stopwatch sw;
    return visit_field(eff.field, [&](const auto& f) {
        auto [mats, doc] = detail::canonical(eff, f);
        json j = detail::header("length");
        j["input_hash"] = input_hash(doc);
        j["input"] = to_json(doc);
        LengthProfile p;
        std::vector<std::pair<Word, json>> wits;
        if (mats.empty()) {
            p = length_profile(mats, doc.include_identity);
        } else {
            auto filt = build_filtration(std::span<const Matrix<std::decay_t<decltype(f)>>>(mats), doc.include_identity);
            p = filt.profile;
            if (o.witnesses)
                for (std::size_t r = 0; r < filt.evaluations.size(); ++r)
                    wits.emplace_back(filt.basis.rows()[r].witness, detail::matrix_json(filt.evaluations[r]));
        }
        j["include_identity"] = p.include_identity;
        j["dims"] = p.dims;
        j["length"] = p.length;
        j["generates"] = p.generates;
        j["final_dim"] = p.final_dim;
        j["full_dim"] = doc.n * doc.n;
        j["notes"] = p.notes;
        if (o.witnesses) {
            json arr = json::array();
            for (auto& [w, m] : wits) {
                json e;
                e["word"] = w;
                e["length"] = w.size();
                e["matrix"] = std::move(m);
                arr.push_back(std::move(e));
            }
            j["witnesses"] = std::move(arr);
        }
        if (o.timing) j["timing_ms"] = sw.ms();
        return j;
    });
}

inline void print_length_text(const json& j, std::ostream& out) {
    out << "field: " << j["input"]["field"].get<std::string>() << "\n"
        << "n: " << j["input"]["n"].get<std::size_t>() << "\n"
        << "include_identity: " << (j["include_identity"].get<bool>() ? "true" : "false") << "\n"
        << "dims: " << detail::join(j["dims"].get<std::vector<std::size_t>>()) << "\n"
        << "length: " << j["length"].get<std::size_t>() << "\n"
        << "generates: " << (j["generates"].get<bool>() ? "true" : "false") << "\n"
        << "final_dim: " << j["final_dim"].get<std::size_t>() << "\n";
    for (const auto& note : j["notes"]) out << "note: " << note.get<std::string>() << "\n";
    if (j.contains("witnesses"))
        for (const auto& w : j["witnesses"]) out << "witness: " << detail::word_text(w["word"].get<Word>()) << "\n";
}

struct OracleOptions {
    std::string input;
    std::optional<std::size_t> max_len;
    bool no_identity = false;
    std::string field_override;
    std::string format = "json";
    bool timing = true;
};

inline json oracle_report(const OracleOptions& o) {
    auto eff = detail::load(o.input, o.field_override, o.no_identity);
    if (o.max_len) eff.doc.max_len = o.max_len;
    if (!eff.doc.max_len) throw parse_error("oracle needs --max-len or a \"max_len\" field in the document");
    const auto k = *eff.doc.max_len;
    const auto budget = oracle_budget();
    matlen::detail::Stopwatch sw;
    return visit_field(eff.field, [&](const auto& f) {
        auto [mats, doc] = detail::canonical(eff, f);
        if (mats.empty()) throw parse_error("oracle needs at least one matrix");
        const auto oracle = brute_force_profile(mats, doc.include_identity, k, budget);
        const auto engine = length_profile(mats, doc.include_identity);
        const auto engine_dims = engine.dims_padded(k + 1);
        json j = detail::header("oracle");
        j["input_hash"] = input_hash(doc);
        j["input"] = to_json(doc);
        j["include_identity"] = doc.include_identity;
        j["max_len"] = k;
        j["budget"] = budget;
        j["oracle_dims"] = oracle.dims;
        j["engine_dims"] = engine_dims;
        j["verdict"] = oracle.dims == engine_dims ? "match" : "mismatch";
        if (o.timing) j["timing_ms"] = sw.ms();
        return j;
    });
}

struct SearchOptions {
    SearchConfig config;
    std::string field = "GF(3)";
    std::string format = "json";
    bool timing = true;
};

inline json search_report(SearchOptions o) {
    o.config.field = parse_field(o.field);
    const auto res = length_bound_search(o.config);
    json j = detail::header("search");
    json cfg;
    cfg["n"] = o.config.n;
    cfg["field"] = to_string(o.config.field);
    cfg["set_size"] = o.config.set_size;
    cfg["trials"] = o.config.trials;
    cfg["seed"] = o.config.seed;
    cfg["magnitude"] = o.config.magnitude;
    cfg["include_nilpotent_pair"] = o.config.include_nilpotent_pair;
    j["config"] = cfg;
    j["draws"] = res.draws;
    j["generating"] = res.generating;
    j["max_length"] = res.max_length;
    j["bound"] = res.bound;
    j["counterexample"] = res.counterexample;
    json hist = json::object();
    for (auto [len, count] : res.histogram) hist[std::to_string(len)] = count;
    j["length_histogram"] = hist;
    j["argmax"] = to_json(res.argmax);
    j["report"] = to_json(res.report, o.timing);
    return j;
}

struct VerifyOptions {
    std::size_t n_max = 8;
    std::string suite = "all";
    std::size_t trials = 10'000;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool timing = true;
};

inline const std::map<std::string, Suite>& suite_names() {
    static const std::map<std::string, Suite> names{
        {"all", Suite::All},        {"thm33", Suite::NilpotentPair}, {"thm42", Suite::JordanPowerGeneration},
        {"thm44", Suite::JordanPowerLengths}, {"lemma43", Suite::ExactLengthSubspace}, {"m2", Suite::M2},
        {"m3", Suite::M3},          {"example", Suite::Example}};
    return names;
}

inline json verify_report(const VerifyOptions& o) {
    const auto it = suite_names().find(o.suite);
    if (it == suite_names().end()) throw parse_error("unknown suite \"" + o.suite + "\"");
    if (o.n_max > verify_n_cap)
        throw resource_error("--nmax " + std::to_string(o.n_max) + " exceeds the cap of " + std::to_string(verify_n_cap));
    const auto reports = run_suite(it->second, {.n_max = o.n_max, .m3_trials = o.trials, .seed = o.seed});
    json j = detail::header("verify");
    j["suite"] = o.suite;
    j["nmax"] = o.n_max;
    json arr = json::array();
    std::size_t passed = 0, published_failed = 0;
    for (const auto& r : reports) {
        arr.push_back(to_json(r, o.timing));
        if (r.passed)
            ++passed;
        else if (r.provenance == Provenance::Published)
            ++published_failed;
    }
    j["reports"] = std::move(arr);
    json summary;
    summary["total"] = reports.size();
    summary["passed"] = passed;
    summary["failed"] = reports.size() - passed;
    summary["published_failed"] = published_failed;
    j["summary"] = summary;
    return j;
}

inline void print_verify_text(const json& j, std::ostream& out) {
    for (const auto& r : j["reports"]) {
        out << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["id"].get<std::string>()
            << "  expected: " << r["expected"].get<std::string>() << "  computed: " << r["computed"].get<std::string>();
        if (r.contains("runtime_ms")) out << "  (" << r["runtime_ms"].get<double>() << " ms)";
        out << "\n";
    }
    const auto& s = j["summary"];
    out << s["passed"].get<std::size_t>() << "/" << s["total"].get<std::size_t>() << " checks passed\n";
}

/// Runs one command; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lengths of generating sets of matrix algebras over exact fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    LengthOptions lo;
    auto* length = app.add_subcommand("length", "Compute the word-span filtration and length of a generating set");
    length->add_option("input", lo.input, "Input document (JSON), or - for stdin")->required();
    length->add_flag("--no-identity", lo.no_identity, "Do not assume the identity as a length-0 word");
    length->add_flag("--witnesses", lo.witnesses, "Emit basis words and their matrices");
    length->add_option("--field-override", lo.field_override, "Reinterpret entries over Q or GF(p)");
    length->add_option("--format", lo.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    bool length_no_timing = false;
    length->add_flag("--no-timing", length_no_timing, "Omit wall-clock timings");

    OracleOptions oo;
    auto* oracle = app.add_subcommand("oracle", "Brute-force word enumeration cross-checked against the engine");
    oracle->add_option("input", oo.input, "Input document (JSON), or - for stdin")->required();
    oracle->add_option("--max-len", oo.max_len, "Longest word length to enumerate");
    oracle->add_flag("--no-identity", oo.no_identity, "Do not assume the identity");
    oracle->add_option("--field-override", oo.field_override, "Reinterpret entries over Q or GF(p)");
    oracle->add_option("--format", oo.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    bool oracle_no_timing = false;
    oracle->add_flag("--no-timing", oracle_no_timing, "Omit wall-clock timings");

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Random search for generating sets of large length");
    search->add_option("--n", so.config.n, "Matrix size")->required();
    search->add_option("--size", so.config.set_size, "Generators per sampled set");
    search->add_option("--trials", so.config.trials, "Generating sets to sample");
    search->add_option("--seed", so.config.seed, "PRNG seed");
    search->add_option("--field", so.field, "Q or GF(p)");
    search->add_option("--magnitude", so.config.magnitude, "Rational entries drawn from [-m, m]");
    search->add_option("--n-cap", so.config.n_cap, "Largest n accepted");
    search->add_flag("--include-nilpotent-pair", so.config.include_nilpotent_pair, "Also evaluate {J_n, B_n}");
    search->add_option("--format", so.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    bool search_no_timing = false;
    search->add_flag("--no-timing", search_no_timing, "Omit wall-clock timings");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Re-derive the published length and dimension results");
    verify->add_option("--nmax", vo.n_max, "Largest n for the family checks");
    verify->add_option("--suite", vo.suite, "Which checks to run")
        ->check(CLI::IsMember({"all", "thm33", "thm42", "thm44", "lemma43", "m2", "m3", "example"}));
    verify->add_option("--trials", vo.trials, "Generating samples per M_3 sampling run");
    verify->add_option("--seed", vo.seed, "PRNG seed for the sampling runs");
    verify->add_option("--format", vo.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    bool verify_no_timing = false;
    verify->add_flag("--no-timing", verify_no_timing, "Omit wall-clock timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*length) {
            lo.timing = !length_no_timing;
            const auto j = length_report(lo);
            if (lo.format == "text")
                print_length_text(j, out);
            else
                out << j.dump(2) << "\n";
            return ok;
        }
        if (*oracle) {
            oo.timing = !oracle_no_timing;
            const auto j = oracle_report(oo);
            if (oo.format == "text")
                out << "oracle_dims: " << detail::join(j["oracle_dims"].get<std::vector<std::size_t>>()) << "\n"
                    << "engine_dims: " << detail::join(j["engine_dims"].get<std::vector<std::size_t>>()) << "\n"
                    << "verdict: " << j["verdict"].get<std::string>() << "\n";
            else
                out << j.dump(2) << "\n";
            return j["verdict"] == "match" ? ok : verification_failed;
        }
        if (*search) {
            so.timing = !search_no_timing;
            const auto j = search_report(so);
            if (so.format == "text")
                out << "max_length: " << j["max_length"].get<std::size_t>() << " (bound 2n-2 = "
                    << j["bound"].get<std::size_t>() << ")\n"
                    << "generating: " << j["generating"].get<std::size_t>() << " of "
                    << j["draws"].get<std::size_t>() << " draws\n"
                    << "counterexample: " << (j["counterexample"].get<bool>() ? "YES" : "no") << "\n"
                    << "argmax: " << j["argmax"].dump() << "\n";
            else
                out << j.dump(2) << "\n";
            if (j["counterexample"].get<bool>()) {
                err << "FINDING: generating set with length above 2n-2; see argmax\n";
                return conjecture_finding;
            }
            return ok;
        }
        if (*verify) {
            vo.timing = !verify_no_timing;
            const auto j = verify_report(vo);
            if (vo.format == "text")
                print_verify_text(j, out);
            else
                out << j.dump(2) << "\n";
            return j["summary"]["published_failed"].get<std::size_t>() == 0 ? ok : verification_failed;
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return resource_exceeded;
    } catch (const std::invalid_argument& e) {
        // field_mismatch, dimension_mismatch and bad parameters all land here
        err << "invalid input: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return internal_error;
}

}  // namespace matlen::cli
