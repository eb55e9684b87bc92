// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "matlen/matlen.hpp"
#include "support.hpp"

using namespace matlen;
using matlen::testing::Q;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime limit
    std::function<Outcome()> run;
};

bool all_passed(const std::vector<CheckReport>& reports, std::string& detail) {
    std::size_t ok = 0;
    for (const auto& r : reports) {
        if (r.passed)
            ++ok;
        else
            detail += " [" + r.id + ": expected " + r.expected + ", computed " + r.computed + "]";
    }
    detail = std::to_string(ok) + "/" + std::to_string(reports.size()) + " checks" + detail;
    return ok == reports.size() && !reports.empty();
}

Outcome example() {
    std::vector<CheckReport> reps{verify_identity_example(rationals())};
    std::string d;
    const bool ok = all_passed(reps, d);
    return {ok, reps.front().computed};
}

Outcome family(std::vector<CheckReport> reps) {
    std::string d;
    const bool ok = all_passed(reps, d);
    return {ok, d};
}

Outcome nilpotent_pairs() {
    auto reps = verify_nilpotent_pair_lengths(8);
    std::string d;
    bool ok = all_passed(reps, d) && reps.size() == 6;
    return {ok, d + " for n=3..8"};
}

Outcome exact_length_subspace() {
    auto reps = verify_exact_length_subspace(8);
    std::string d;
    bool ok = all_passed(reps, d);
    // every co-prime pair with 1 <= i < n <= 8
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t i = 1; i < n; ++i)
            if (std::gcd(n, i) == 1) ++pairs;
    ok = ok && reps.size() == pairs;
    return {ok, d};
}

Outcome m2_exhaustion() {
    const auto scan = exhaust_m2_gf2();
    return {scan.report.passed && scan.max_l0 == 2 && scan.max_l == 2, scan.report.computed};
}

Outcome m3_sampling() {
    std::string d;
    bool ok = true;
    const SearchConfig gf5{.n = 3, .field = prime_field(5), .set_size = 3, .trials = 10'000, .seed = 1,
                           .include_nilpotent_pair = true};
    const SearchConfig q{.n = 3, .field = rationals(), .set_size = 2, .trials = 10'000, .seed = 1, .magnitude = 3,
                         .include_nilpotent_pair = true};
    for (const auto& c : {gf5, q}) {
        const auto r = sample_l0_m3(c);
        ok = ok && r.generating >= 10'000 && r.max_l0 <= 4 && r.max_l0 == 4 && r.report.passed;
        d += to_string(c.field) + ": " + r.report.computed + "; ";
    }
    return {ok, d};
}

Outcome oracle_equivalence() {
    const PrimeField f(5);
    std::size_t mismatches = 0, layers = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = Rng::for_trial(8, t);
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto m = static_cast<std::size_t>(rng.between(1, 3));
        const auto s = random_set(f, n, m, rng, 0);
        for (bool with_id : {true, false}) {
            const auto engine = length_profile(s, with_id);
            const auto k = engine.length + 1;
            const auto brute = brute_force_profile(s, with_id, k);
            layers += k + 1;
            if (brute.dims != engine.dims_padded(k + 1) || !brute.stabilized) ++mismatches;
        }
    }
    return {mismatches == 0, "200 sets, " + std::to_string(layers) + " layers compared, " + std::to_string(mismatches) +
                                 " mismatches"};
}

template <ExactField F>
std::size_t filtration_violations(const F& f, std::uint64_t seed, int rounds, long magnitude, std::size_t& generating) {
    std::size_t bad = 0;
    for (int t = 0; t < rounds; ++t) {
        auto rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        const auto n = static_cast<std::size_t>(rng.between(1, 4));
        const auto s = random_set(f, n, static_cast<std::size_t>(rng.between(1, 3)), rng, magnitude);
        const auto p = length_profile(s, true), p0 = length_profile(s, false);
        for (std::size_t k = 0; k + 1 < p.dims.size(); ++k)
            if (p.dims[k] >= p.dims[k + 1]) ++bad;
        for (std::size_t k = 0; k + 1 < p0.dims.size(); ++k)
            if (p0.dims[k] >= p0.dims[k + 1]) ++bad;
        // stabilization is permanent: one more enumerated layer adds nothing
        if (s.size() <= 2 || p.length <= 6) {
            const auto brute = brute_force_profile(s, true, p.length + 1);
            if (brute.dims.back() != p.final_dim) ++bad;
        }
        const bool nonzero = std::any_of(s.begin(), s.end(), [](const auto& g) { return !g.is_zero(); });
        if (p.generates && nonzero) {
            ++generating;
            if (!p0.generates) ++bad;
            if (p.length > p0.length || p0.length > p.length + 1) ++bad;
        }
    }
    return bad;
}

template <ExactField F>
std::size_t polynomial_violations(const F& f, std::uint64_t seed, int rounds, long magnitude) {
    std::size_t bad = 0;
    Rng rng(seed);
    for (int t = 0; t < rounds; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 6));
        auto a = random_matrix(f, n, rng, magnitude);
        if (t % 4 == 0) a = a * a * jordan(f, n);
        const auto chi = char_poly(a), mu = min_poly(a);
        if (!chi.evaluate(a).is_zero()) ++bad;
        if (!chi.divmod(mu).second.is_zero()) ++bad;
        if (!mu.evaluate(a).is_zero()) ++bad;
    }
    return bad;
}

Outcome invariants() {
    std::size_t generating = 0;
    std::size_t filt = filtration_violations(PrimeField(2), 1, 300, 0, generating) +
                       filtration_violations(PrimeField(5), 2, 300, 0, generating) +
                       filtration_violations(Q, 3, 150, 2, generating);

    std::size_t diag = 0;
    Rng rng(32);
    for (int t = 0; t < 500; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 8));
        const int lim = static_cast<int>(n) - 1;
        const int k = static_cast<int>(rng.between(-lim, lim)), l = static_cast<int>(rng.between(-lim, lim));
        const auto prod = matlen::testing::random_on_diagonal(Q, n, k, rng, 5) *
                          matlen::testing::random_on_diagonal(Q, n, l, rng, 5);
        for (int d : k_diagonal_support(prod).diagonals)
            if (d != k + l) ++diag;
    }

    const std::size_t poly = polynomial_violations(Q, 4, 200, 4) + polynomial_violations(PrimeField(5), 5, 200, 0) +
                             polynomial_violations(PrimeField(2), 6, 200, 0);
    return {filt + diag + poly == 0, "filtration violations " + std::to_string(filt) + " (" + std::to_string(generating) +
                                         " generating sets), diagonal rule violations " + std::to_string(diag) +
                                         " over 500 pairs, polynomial violations " + std::to_string(poly)};
}

Outcome length_bound_exploration() {
    const auto scan = exhaust_m2_gf2();
    const auto exhaustive = length_bound_exhaustive_m2_gf2(scan);
    bool ok = exhaustive.passed && scan.max_l == 2;
    std::string d = "n=2 GF(2) exhaustive max_l=" + std::to_string(scan.max_l);
    std::size_t findings = 0;
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& field : {prime_field(2), prime_field(3), rationals()}) {
            SearchConfig c{.n = n, .field = field, .set_size = 2, .trials = n <= 3 ? 500u : 100u, .seed = 7,
                           .include_nilpotent_pair = true};
            const auto r = length_bound_search(c);
            if (r.report.finding) {
                ++findings;
                std::printf("FINDING %s: %s\n", r.report.id.c_str(), r.report.finding->c_str());
            }
            d += "; n=" + std::to_string(n) + " " + to_string(field) + " max_l=" + std::to_string(r.max_length);
        }
    ok = ok && findings == 0;
    return {ok, d};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "identity example reproduction", 1.0, example},
        {2, "nilpotent pair lengths, n = 3..8", 60.0, nilpotent_pairs},
        {3, "Jordan power pair algebra dimension, n <= 8", 120.0,
         [] { return family(verify_jordan_power_generation(8)); }},
        {4, "Jordan power pair lengths, n <= 8", 0.0, [] { return family(verify_jordan_power_lengths(8)); }},
        {5, "exact-length word span inside the diagonal space, n <= 8", 0.0, exact_length_subspace},
        {6, "exhaustive M_2(GF(2)) lengths", 30.0, m2_exhaustion},
        {7, "M_3 sampling over GF(5) and Q, l0 <= 4 attained", 0.0, m3_sampling},
        {8, "engine/oracle equivalence on 200 random GF(5) sets", 0.0, oracle_equivalence},
        {9, "invariant suite", 0.0, invariants},
        {10, "2n-2 bound exploration", 0.0, length_bound_exploration},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        const bool pass = o.passed && in_time;
        if (!pass) ++failed;
        std::printf("%s  %2d  %-58s %8.2fs%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    in_time ? "" : " (over time limit)", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
