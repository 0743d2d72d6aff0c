#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compare.hpp"
#include "galois.hpp"
#include "lyndon_finite.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "stream.hpp"

namespace glyndon {

constexpr std::uint64_t kDefaultSuiteSeed = 0x5EED;

struct SuiteReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failure_samples;

    void record(bool ok, const std::string& detail) {
        ++trials;
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (failure_samples.size() < 8) failure_samples.push_back(detail);
        }
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"c1", "h", "j", "m", "phi", "uniqueness"};
    return names;
}

namespace suites {

inline AlphabetPtr pick_alphabet(TrialRng& rng) {
    return rng.coin() ? Alphabet::binary() : Alphabet::ternary();
}

/// The four omega-power inequalities u^w < v^w, (uv)^w < v^w, u^w < (vu)^w,
/// (uv)^w < (vu)^w always agree.
inline SuiteReport run_omega_equivalences(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "c1";
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        AlphabetPtr ab = pick_alphabet(rng);
        FiniteWord u = random_finite_word(rng, ab, 1, 8);
        FiniteWord v = random_finite_word(rng, ab, 1, 8);
        bool ok = true;
        std::string detail;
        for (const auto& ord : named_schedules(ab)) {
            bool c1 = omega_compare(u, v, ord) == Ordering::LT;
            bool c2 = omega_compare(u + v, v, ord) == Ordering::LT;
            bool c3 = omega_compare(u, v + u, ord) == Ordering::LT;
            bool c4 = omega_compare(u + v, v + u, ord) == Ordering::LT;
            if (c1 != c2 || c1 != c3 || c1 != c4) {
                ok = false;
                detail = "u=" + u.str() + " v=" + v.str();
                break;
            }
        }
        report.record(ok, detail);
    }
    return report;
}

/// u^w > v iff uv > v, and the same with < (v infinite).
inline SuiteReport run_omega_vs_concat(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "h";
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        AlphabetPtr ab = pick_alphabet(rng);
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(schedules.size())];
        FiniteWord u = random_finite_word(rng, ab, 1, 6);
        EventuallyPeriodicWord v = random_ep_word(rng, ab, 5, 4);
        Ordering a = compare_eventually_periodic(EventuallyPeriodicWord::omega(u), v, ord).order;
        Ordering b = compare_eventually_periodic(prepend(u, v), v, ord).order;
        bool ok = ((a == Ordering::GT) == (b == Ordering::GT)) &&
                  ((a == Ordering::LT) == (b == Ordering::LT));
        report.record(ok, ok ? "" : "u=" + u.str() + " v=" + v.str());
    }
    return report;
}

/// A word sandwiched as u^w <~ v <~ u^n v (or the reversed chain) is
/// prefix-compatible with u^w.
inline SuiteReport run_sandwich_prefix(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "j";
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        AlphabetPtr ab = pick_alphabet(rng);
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(schedules.size())];
        FiniteWord u = random_finite_word(rng, ab, 1, 5);
        FiniteWord v = rng.coin()
                           ? FractionalPower(u, rng.between(1, 12)).realize()
                           : random_finite_word(rng, ab, 1, 8);
        std::size_t reps = rng.between(1, 4);
        std::vector<WordValue> chain = {EventuallyPeriodicWord::omega(u), v,
                                        u.power(reps) + v};
        std::vector<WordValue> reversed_chain(chain.rbegin(), chain.rend());
        bool sandwiched =
            compare_weak_chain(chain, ord) || compare_weak_chain(reversed_chain, ord);
        bool ok = !sandwiched || prefix_compatible(v, EventuallyPeriodicWord::omega(u));
        report.record(ok, ok ? "" : "u=" + u.str() + " v=" + v.str());
    }
    return report;
}

/// The omega power of a word whose primitive root is not generalized Lyndon
/// has no generalized Lyndon prefix of length 2|l| or more. The root
/// restriction matters: a proper power of a generalized Lyndon word is not
/// itself generalized Lyndon, yet its omega power can keep producing
/// generalized Lyndon prefixes forever ((0101)^w under the alternating order
/// does, via the prefixes (01)^k0).
inline SuiteReport run_nongl_power_prefixes(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "m";
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        AlphabetPtr ab = Alphabet::binary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(schedules.size())];
        FiniteWord ell = random_finite_word(rng, ab, 1, 6);
        int guard = 0;
        while (is_generalized_lyndon(primitive_root(ell).root, ord) && ++guard < 64)
            ell = random_finite_word(rng, ab, 1, 6);
        if (is_generalized_lyndon(primitive_root(ell).root, ord)) continue;  // draw failed
        CensusReport census =
            gl_prefix_census(EventuallyPeriodicWord::omega(ell), 10 * ell.size(), ord);
        bool ok = true;
        for (std::size_t len : census.gl_prefix_lengths)
            if (len >= 2 * ell.size()) ok = false;
        report.record(ok, ok ? "" : "l=" + ell.str());
    }
    return report;
}

/// Continued-fraction comparison agrees with the alternating order on
/// positive-digit words.
inline SuiteReport run_phi_agreement(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "phi";
    AlphabetPtr ab = Alphabet::digits(4);
    OrderSchedule alt = OrderSchedule::alternating(ab);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        DigitWord a(random_ep_word(rng, ab, 3, 3));
        DigitWord b(random_ep_word(rng, ab, 3, 3));
        Ordering by_phi = compare_via_phi(a, b);
        Ordering by_order = compare_eventually_periodic(a.word(), b.word(), alt).order;
        bool ok = by_phi == by_order;
        report.record(ok, ok ? "" : a.word().str() + " vs " + b.word().str());
    }
    return report;
}

/// Exhaustive enumeration finds exactly one nonincreasing generalized Lyndon
/// factorization, and it is the one the factorizer returns.
inline SuiteReport run_factorization_uniqueness(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.name = "uniqueness";
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng = trial_rng(seed, t);
        AlphabetPtr ab = pick_alphabet(rng);
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(schedules.size())];
        FiniteWord w = random_finite_word(rng, ab, 1, 10);
        auto all = oracle::enumerate_factorizations(w, ord);
        bool ok = all.size() == 1 && all.front().factors == factorize_finite(w, ord).factors;
        report.record(ok, ok ? "" : "w=" + w.str());
    }
    return report;
}

}  // namespace suites

/// Run a named invariant suite: c1, h, j, m, phi, or uniqueness.
inline SuiteReport run_suite(const std::string& name, std::uint64_t trials,
                             std::uint64_t seed = kDefaultSuiteSeed) {
    if (name == "c1") return suites::run_omega_equivalences(trials, seed);
    if (name == "h") return suites::run_omega_vs_concat(trials, seed);
    if (name == "j") return suites::run_sandwich_prefix(trials, seed);
    if (name == "m") return suites::run_nongl_power_prefixes(trials, seed);
    if (name == "phi") return suites::run_phi_agreement(trials, seed);
    if (name == "uniqueness") return suites::run_factorization_uniqueness(trials, seed);
    throw usage_error("unknown suite '" + name + "' (expected c1|h|j|m|phi|uniqueness)");
}

}  // namespace glyndon
