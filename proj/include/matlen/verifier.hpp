#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matlen/constructions.hpp"
#include "matlen/document.hpp"
#include "matlen/length.hpp"
#include "matlen/polynomial.hpp"
#include "matlen/random.hpp"

namespace matlen {

/// Where an expected value comes from. Published values must be reproduced; conjectured
/// bounds are probed and any violation is surfaced as a finding.
enum class Provenance { Published, Derived, Conjecture };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Published: return "published";
        case Provenance::Derived: return "derived";
        case Provenance::Conjecture: return "conjecture";
    }
    return "unknown";
}

struct CheckReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    Provenance provenance = Provenance::Published;
    /// Human-readable statement of the claim being checked.
    std::string claim;
    std::string computed;
    bool passed = false;
    double runtime_ms = 0.0;
    /// The offending generating set, attached whenever a check fails.
    std::optional<InputDocument> input;
    /// Set when a conjecture probe found something worth reporting.
    std::optional<std::string> finding;
};

struct SearchConfig {
    std::size_t n = 3;
    FieldDesc field{FieldKind::PrimeField, 5};
    std::size_t set_size = 2;
    /// Number of generating sets to collect; non-generating draws are skipped.
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    /// Rational entries are drawn from [-magnitude, magnitude].
    long magnitude = 3;
    /// Evaluate {J_n, B_n} before the random samples.
    bool include_nilpotent_pair = false;
    std::size_t n_cap = 6;
    /// Draws allowed per requested generating sample before giving up.
    std::size_t max_draws_per_trial = 100;
};

namespace detail {

class Stopwatch {
public:
    [[nodiscard]] double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string lengths_text(bool generates, std::size_t l, std::size_t l0) {
    return "generates=" + yes_no(generates) + " l=" + std::to_string(l) + " l0=" + std::to_string(l0);
}

template <ExactField F>
std::vector<Matrix<F>> units_set(const F& f, std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> ij) {
    std::vector<Matrix<F>> out;
    for (auto [i, j] : ij) out.push_back(elem(f, n, i, j));
    return out;
}

}  // namespace detail

/// {E12, E21, E22} has l = 1, l0 = 2; adding E11 gives l = l0 = 1.
inline CheckReport verify_identity_example(const FieldDesc& field = rationals()) {
    detail::Stopwatch sw;
    CheckReport rep;
    rep.id = "example/" + to_string(field);
    rep.params = {{"field", to_string(field)}, {"n", "2"}};
    rep.claim = "{E12,E21,E22}: l=1, l0=2; with E11 added: l=1, l0=1";
    rep.expected = "S: generates=true l=1 l0=2; S': generates=true l=1 l0=1";
    visit_field(field, [&](const auto& f) {
        auto s = detail::units_set(f, 2, {{1, 2}, {2, 1}, {2, 2}});
        auto s2 = s;
        s2.push_back(elem(f, 2, 1, 1));
        const auto a = length_profile(s, true), a0 = length_profile(s, false);
        const auto b = length_profile(s2, true), b0 = length_profile(s2, false);
        rep.computed = "S: " + detail::lengths_text(a.generates && a0.generates, a.length, a0.length) +
                       "; S': " + detail::lengths_text(b.generates && b0.generates, b.length, b0.length);
        rep.passed = rep.computed == rep.expected;
        if (!rep.passed) rep.input = to_document(s);
    });
    rep.runtime_ms = sw.ms();
    return rep;
}

/// {J_n, B_n} over Q generates M_n with l = 2n - 3 and l0 = 2n - 2, for n = 3..n_max.
inline std::vector<CheckReport> verify_nilpotent_pair_lengths(std::size_t n_max) {
    std::vector<CheckReport> out;
    const RationalField q;
    for (std::size_t n = 3; n <= n_max; ++n) {
        detail::Stopwatch sw;
        CheckReport rep;
        rep.id = "thm33/n=" + std::to_string(n);
        rep.params = {{"n", std::to_string(n)}, {"field", "Q"}};
        rep.claim = "{J_n, B_n} with B_n = E_{n-1,1} - E_{n,2} generates M_n, l = 2n-3, l0 = 2n-2";
        rep.expected = detail::lengths_text(true, 2 * n - 3, 2 * n - 2);
        auto [j, b] = nilpotent_pair(q, n);
        std::vector<Matrix<RationalField>> s{j, b};
        const auto p = length_profile(s, true), p0 = length_profile(s, false);
        rep.computed = detail::lengths_text(p.generates && p0.generates, p.length, p0.length);
        rep.passed = rep.computed == rep.expected;
        if (!rep.passed) rep.input = to_document(s);
        rep.runtime_ms = sw.ms();
        out.push_back(std::move(rep));
    }
    return out;
}

/// The algebra generated by J_n^i and (J_n^T)^(n-i) has dimension (n/gcd(n,i))^2,
/// for every 1 <= i < n <= n_max over Q.
inline std::vector<CheckReport> verify_jordan_power_generation(std::size_t n_max) {
    std::vector<CheckReport> out;
    const RationalField q;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            detail::Stopwatch sw;
            const auto d = std::gcd(n, i);
            const auto expected_dim = (n / d) * (n / d);
            CheckReport rep;
            rep.id = "thm42/n=" + std::to_string(n) + ",i=" + std::to_string(i);
            rep.params = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"d", std::to_string(d)}, {"field", "Q"}};
            rep.claim = "dim of the algebra generated by J_n^i, (J_n^T)^(n-i) is (n/d)^2, d = gcd(n,i); generates iff d = 1";
            rep.expected = "final_dim=" + std::to_string(expected_dim) + " generates=" + detail::yes_no(d == 1);
            auto [a, b] = jordan_power_pair(q, n, i);
            std::vector<Matrix<RationalField>> s{a, b};
            const auto p = length_profile(s, true);
            rep.computed = "final_dim=" + std::to_string(p.final_dim) + " generates=" + detail::yes_no(p.generates);
            rep.passed = rep.computed == rep.expected;
            if (!rep.passed) rep.input = to_document(s);
            rep.runtime_ms = sw.ms();
            out.push_back(std::move(rep));
        }
    return out;
}

/// l = l0 = 2n/d - 2 for {J_n^i, (J_n^T)^(n-i)}, every 1 <= i < n <= n_max over Q.
inline std::vector<CheckReport> verify_jordan_power_lengths(std::size_t n_max) {
    std::vector<CheckReport> out;
    const RationalField q;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            detail::Stopwatch sw;
            const auto d = std::gcd(n, i);
            const auto expected = 2 * (n / d) - 2;
            CheckReport rep;
            rep.id = "thm44/n=" + std::to_string(n) + ",i=" + std::to_string(i);
            rep.params = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"d", std::to_string(d)}, {"field", "Q"}};
            rep.claim = "l = l0 = 2n/d - 2 for {J_n^i, (J_n^T)^(n-i)}";
            rep.expected = "l=" + std::to_string(expected) + " l0=" + std::to_string(expected);
            auto [a, b] = jordan_power_pair(q, n, i);
            std::vector<Matrix<RationalField>> s{a, b};
            const auto p = length_profile(s, true), p0 = length_profile(s, false);
            rep.computed = "l=" + std::to_string(p.length) + " l0=" + std::to_string(p0.length);
            rep.passed = rep.computed == rep.expected;
            if (!rep.passed) rep.input = to_document(s);
            rep.runtime_ms = sw.ms();
            out.push_back(std::move(rep));
        }
    return out;
}

/// Outcome of comparing the exact-length-(n-2) word span with the diagonal space W(n,i).
struct ExactLengthComparison {
    std::size_t n = 0, i = 0;
    std::size_t span_dim = 0;
    std::size_t w_dim = 0;
    bool contained = false;
};

template <ExactField F>
ExactLengthComparison compare_exact_length_span(const F& field, std::size_t n, std::size_t i) {
    auto [a, b] = jordan_power_pair(field, n, i);
    std::vector<Matrix<F>> s{a, b};
    const auto words = exact_length_span(s, n - 2);
    const auto w = w_space_basis(field, n, i);
    ExactLengthComparison out{n, i, words.dim(), w.dim(), true};
    for (const auto& row : words.rows())
        if (!w.contains(row.vec)) out.contained = false;
    return out;
}

/// For co-prime (n, i), n <= n_max: words of length exactly n-2 span a proper subspace of W(n,i).
inline std::vector<CheckReport> verify_exact_length_subspace(std::size_t n_max) {
    std::vector<CheckReport> out;
    const RationalField q;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            if (std::gcd(n, i) != 1) continue;
            detail::Stopwatch sw;
            CheckReport rep;
            rep.id = "lemma43/n=" + std::to_string(n) + ",i=" + std::to_string(i);
            rep.params = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"field", "Q"}};
            rep.claim = "span of length-(n-2) words in J_n^i, (J_n^T)^(n-i) is a proper subspace of W(n,i), dim W(n,i) = n";
            rep.expected = "contained=true span_dim<" + std::to_string(n) + " w_dim=" + std::to_string(n);
            const auto c = compare_exact_length_span(q, n, i);
            rep.computed = "contained=" + detail::yes_no(c.contained) + " span_dim=" + std::to_string(c.span_dim) +
                           " w_dim=" + std::to_string(c.w_dim);
            rep.passed = c.contained && c.span_dim < n && c.w_dim == n;
            if (!rep.passed) {
                auto [a, b] = jordan_power_pair(q, n, i);
                rep.input = to_document(std::vector<Matrix<RationalField>>{a, b});
            }
            rep.runtime_ms = sw.ms();
            out.push_back(std::move(rep));
        }
    return out;
}

/// Exhaustive scan of all 2^16 subsets of M_2(GF(2)).
struct M2Exhaustion {
    std::size_t subsets = 0;
    std::size_t generating = 0;
    std::size_t max_l = 0;
    std::size_t max_l0 = 0;
    /// Generating subsets with l0 = l and with l0 = l + 1.
    std::size_t equal_lengths = 0;
    std::size_t l0_exceeds = 0;
    /// Generating with the identity but not without it, or l0 - l outside {0, 1}.
    std::size_t anomalies = 0;
    InputDocument argmax_l0;
    CheckReport report;
};

inline M2Exhaustion exhaust_m2_gf2() {
    detail::Stopwatch sw;
    const PrimeField f(2);
    std::vector<Matrix<PrimeField>> all;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Matrix<PrimeField> m(f, 2);
        for (unsigned b = 0; b < 4; ++b) m(b / 2, b % 2) = (mask >> b) & 1u;
        all.push_back(std::move(m));
    }

    M2Exhaustion out;
    std::vector<Matrix<PrimeField>> subset;
    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
        ++out.subsets;
        subset.clear();
        for (unsigned k = 0; k < 16; ++k)
            if ((bits >> k) & 1u) subset.push_back(all[k]);
        if (subset.empty()) continue;
        const auto p = length_profile(subset, true);
        const auto p0 = length_profile(subset, false);
        if (p.generates && !p0.generates) ++out.anomalies;
        if (!p.generates) continue;
        ++out.generating;
        out.max_l = std::max(out.max_l, p.length);
        if (p0.length > out.max_l0) {
            out.max_l0 = p0.length;
            out.argmax_l0 = to_document(subset, false);
        }
        if (p0.length == p.length)
            ++out.equal_lengths;
        else if (p0.length == p.length + 1)
            ++out.l0_exceeds;
        else
            ++out.anomalies;
    }

    auto& rep = out.report;
    rep.id = "m2/GF(2)";
    rep.params = {{"n", "2"}, {"field", "GF(2)"}, {"subsets", std::to_string(out.subsets)}};
    rep.claim = "max l0 and max l over all generating subsets of M_2(GF(2)) are both 2";
    rep.expected = "max_l=2 max_l0=2 anomalies=0";
    rep.computed = "max_l=" + std::to_string(out.max_l) + " max_l0=" + std::to_string(out.max_l0) +
                   " anomalies=" + std::to_string(out.anomalies) + " generating=" + std::to_string(out.generating) +
                   " l0=l:" + std::to_string(out.equal_lengths) + " l0=l+1:" + std::to_string(out.l0_exceeds);
    rep.passed = out.max_l == 2 && out.max_l0 == 2 && out.anomalies == 0;
    if (!rep.passed) rep.input = out.argmax_l0;
    rep.runtime_ms = sw.ms();
    return out;
}

/// Random sampling of generating sets in M_3, tracking the largest l0.
struct SampleResult {
    std::size_t draws = 0;
    std::size_t generating = 0;
    std::size_t max_l0 = 0;
    /// Some random sample reached l0 = 4.
    bool attained_by_sample = false;
    /// {J_3, B_3} was evaluated (include_nilpotent_pair) and reached l0 = 4.
    bool attained_by_seed = false;
    InputDocument argmax;
    CheckReport report;
};

namespace detail {

inline void check_config(const SearchConfig& c) {
    if (c.trials < 1) throw std::invalid_argument("search needs at least one trial");
    if (c.set_size < 1) throw std::invalid_argument("search needs a nonempty set size");
    if (c.n < 1) throw std::invalid_argument("search needs n >= 1");
    if (c.n > c.n_cap)
        throw resource_error("n = " + std::to_string(c.n) + " exceeds the search cap of " + std::to_string(c.n_cap));
}

inline std::vector<std::pair<std::string, std::string>> config_params(const SearchConfig& c) {
    return {{"n", std::to_string(c.n)},           {"field", to_string(c.field)},
            {"set_size", std::to_string(c.set_size)}, {"trials", std::to_string(c.trials)},
            {"seed", std::to_string(c.seed)},     {"magnitude", std::to_string(c.magnitude)}};
}

/// Calls visit(set, is_seed) for the seeded pair (if requested) and then for random sets until
/// `trials` generating sets have been seen; visit returns whether the set generates.
template <ExactField F, class Visit>
std::size_t sample_generating(const F& f, const SearchConfig& c, Visit&& visit) {
    if (c.include_nilpotent_pair && c.n >= 3) {
        auto [j, b] = nilpotent_pair(f, c.n);
        visit(std::vector<Matrix<F>>{j, b}, true);
    }
    std::size_t draws = 0, found = 0;
    const auto max_draws = c.trials * c.max_draws_per_trial;
    while (found < c.trials) {
        if (draws == max_draws)
            throw resource_error("only " + std::to_string(found) + " generating sets in " + std::to_string(draws) +
                                 " draws");
        auto rng = Rng::for_trial(c.seed, draws++);
        if (visit(random_set(f, c.n, c.set_size, rng, c.magnitude), false)) ++found;
    }
    return draws;
}

}  // namespace detail

/// Samples generating sets of M_3 and checks l0 <= 4 on every one of them.
inline SampleResult sample_l0_m3(const SearchConfig& config) {
    if (config.n != 3) throw std::invalid_argument("sample_l0_m3 requires n = 3");
    detail::check_config(config);
    detail::Stopwatch sw;
    SampleResult out;
    visit_field(config.field, [&](const auto& f) {
        out.draws = detail::sample_generating(f, config, [&](const auto& set, bool seeded) {
            const auto p0 = length_profile(set, false);
            if (!p0.generates) return false;
            if (!seeded) ++out.generating;
            if (p0.length > out.max_l0 || out.argmax.matrices.empty()) out.argmax = to_document(set, false);
            out.max_l0 = std::max(out.max_l0, p0.length);
            if (p0.length == 4) (seeded ? out.attained_by_seed : out.attained_by_sample) = true;
            return true;
        });
    });

    auto& rep = out.report;
    rep.id = "m3/" + to_string(config.field) + "/size=" + std::to_string(config.set_size);
    rep.params = detail::config_params(config);
    rep.claim = "every generating set of M_3 has l0 <= 4, and 4 is attained";
    rep.expected = "max_l0=4";
    rep.computed = "max_l0=" + std::to_string(out.max_l0) + " generating=" + std::to_string(out.generating) +
                   " draws=" + std::to_string(out.draws) + " attained_by_sample=" + detail::yes_no(out.attained_by_sample) +
                   " attained_by_seed=" + detail::yes_no(out.attained_by_seed);
    rep.passed = out.max_l0 == 4;
    if (!rep.passed) rep.input = out.argmax;
    rep.runtime_ms = sw.ms();
    return out;
}

/// Random probe of l(S) against the conjectured bound 2n - 2.
struct BoundSearchResult {
    std::size_t draws = 0;
    std::size_t generating = 0;
    std::size_t max_length = 0;
    std::size_t bound = 0;
    bool counterexample = false;
    InputDocument argmax;
    /// length -> number of generating samples with that length (random samples only).
    std::map<std::size_t, std::size_t> histogram;
    CheckReport report;
};

inline BoundSearchResult length_bound_search(const SearchConfig& config) {
    detail::check_config(config);
    detail::Stopwatch sw;
    BoundSearchResult out;
    out.bound = config.n >= 1 ? 2 * config.n - 2 : 0;
    visit_field(config.field, [&](const auto& f) {
        out.draws = detail::sample_generating(f, config, [&](const auto& set, bool seeded) {
            const auto p = length_profile(set, true);
            if (!p.generates) return false;
            if (!seeded) {
                ++out.generating;
                ++out.histogram[p.length];
            }
            if (p.length > out.max_length || out.argmax.matrices.empty()) {
                out.max_length = std::max(out.max_length, p.length);
                out.argmax = to_document(set, true);
            }
            if (p.length > out.bound && !out.counterexample) {
                out.counterexample = true;
                out.argmax = to_document(set, true);
            }
            return true;
        });
    });

    auto& rep = out.report;
    rep.id = "bound/n=" + std::to_string(config.n) + "/" + to_string(config.field);
    rep.params = detail::config_params(config);
    rep.provenance = Provenance::Conjecture;
    rep.claim = "conjectured l(S) <= 2n-2 for every generating set of M_n";
    rep.expected = "max_l<=" + std::to_string(out.bound);
    rep.computed = "max_l=" + std::to_string(out.max_length) + " generating=" + std::to_string(out.generating) +
                   " draws=" + std::to_string(out.draws);
    rep.passed = !out.counterexample;
    if (out.counterexample) {
        rep.finding = "COUNTEREXAMPLE CANDIDATE: generating set with l(S) = " + std::to_string(out.max_length) +
                      " > 2n-2 = " + std::to_string(out.bound);
        rep.input = out.argmax;
    }
    rep.runtime_ms = sw.ms();
    return out;
}

/// Bound probe backed by the full M_2(GF(2)) scan instead of sampling.
inline CheckReport length_bound_exhaustive_m2_gf2(const M2Exhaustion& scan) {
    CheckReport rep;
    rep.id = "bound/n=2/GF(2)/exhaustive";
    rep.params = {{"n", "2"}, {"field", "GF(2)"}};
    rep.provenance = Provenance::Conjecture;
    rep.claim = "conjectured l(S) <= 2n-2 for every generating set of M_n";
    rep.expected = "max_l=2";
    rep.computed = "max_l=" + std::to_string(scan.max_l);
    rep.passed = scan.max_l == 2;
    if (scan.max_l > 2) rep.finding = "COUNTEREXAMPLE CANDIDATE in M_2(GF(2))";
    rep.runtime_ms = scan.report.runtime_ms;
    return rep;
}

/// An invertible element of L^0_layer(S) together with its expression as a combination of words.
template <ExactField F>
struct InvertibleWitness {
    Matrix<F> matrix;
    std::vector<std::pair<typename F::value_type, Word>> combination;
};

/// Heuristic search for an invertible (optionally also derogatory) element of L^0_layer(S),
/// layer in {1, 2}. Tries the generators, then every product of two generators, then `trials`
/// random combinations of a word basis of L^0_layer(S). nullopt means "not found", which is
/// not a proof that no such element exists.
template <ExactField F>
std::optional<InvertibleWitness<F>> find_invertible_witness(const std::vector<Matrix<F>>& set, int layer,
                                                            std::size_t trials, std::uint64_t seed,
                                                            bool require_derogatory = false) {
    if (layer != 1 && layer != 2) throw std::invalid_argument("find_invertible_witness: layer must be 1 or 2");
    if (set.empty()) return std::nullopt;
    const auto& f = set.front().field();
    const auto n = common_size(std::span<const Matrix<F>>(set));
    auto acceptable = [&](const Matrix<F>& m) { return is_invertible(m) && (!require_derogatory || is_derogatory(m)); };

    std::vector<Word> words;
    for (std::size_t g = 0; g < set.size(); ++g) words.push_back({g});
    if (layer == 2)
        for (std::size_t g = 0; g < set.size(); ++g)
            for (std::size_t h = 0; h < set.size(); ++h) words.push_back({g, h});
    for (const auto& w : words) {
        auto m = eval_word(std::span<const Matrix<F>>(set), w);
        if (acceptable(m)) return InvertibleWitness<F>{std::move(m), {{f.one(), w}}};
    }

    const auto filt = build_filtration(std::span<const Matrix<F>>(set), false);
    std::vector<std::size_t> basis_rows;
    for (std::size_t r = 0; r < filt.basis.rows().size(); ++r)
        if (filt.basis.rows()[r].layer <= layer) basis_rows.push_back(r);
    if (basis_rows.empty()) return std::nullopt;

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = Rng::for_trial(seed, t);
        Matrix<F> m(f, n);
        std::vector<std::pair<typename F::value_type, Word>> combo;
        for (auto r : basis_rows) {
            auto c = random_scalar(f, rng, 10);
            if (f.is_zero(c)) continue;
            m = m + c * filt.evaluations[r];
            combo.emplace_back(std::move(c), filt.basis.rows()[r].witness);
        }
        if (acceptable(m)) return InvertibleWitness<F>{std::move(m), std::move(combo)};
    }
    return std::nullopt;
}

/// Suites selectable from the command line.
enum class Suite { All, NilpotentPair, JordanPowerGeneration, JordanPowerLengths, ExactLengthSubspace, M2, M3, Example };

struct SuiteOptions {
    std::size_t n_max = 8;
    /// Generating samples per m3 sampling run.
    std::size_t m3_trials = 10'000;
    std::uint64_t seed = 1;
};

inline std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& opt) {
    std::vector<CheckReport> out;
    auto append = [&](std::vector<CheckReport> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Example) {
        out.push_back(verify_identity_example(rationals()));
        out.push_back(verify_identity_example(prime_field(7)));
    }
    if (all || suite == Suite::NilpotentPair) append(verify_nilpotent_pair_lengths(opt.n_max));
    if (all || suite == Suite::JordanPowerGeneration) append(verify_jordan_power_generation(opt.n_max));
    if (all || suite == Suite::JordanPowerLengths) append(verify_jordan_power_lengths(opt.n_max));
    if (all || suite == Suite::ExactLengthSubspace) append(verify_exact_length_subspace(opt.n_max));
    if (all || suite == Suite::M2) out.push_back(exhaust_m2_gf2().report);
    if (all || suite == Suite::M3) {
        SearchConfig gf5{.n = 3, .field = prime_field(5), .set_size = 3, .trials = opt.m3_trials, .seed = opt.seed,
                         .include_nilpotent_pair = true};
        out.push_back(sample_l0_m3(gf5).report);
        SearchConfig q{.n = 3, .field = rationals(), .set_size = 2, .trials = opt.m3_trials, .seed = opt.seed,
                       .magnitude = 3, .include_nilpotent_pair = true};
        out.push_back(sample_l0_m3(q).report);
    }
    return out;
}

}  // namespace matlen
