#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "lyndon_finite.hpp"
#include "lyndon_infinite.hpp"
#include "word.hpp"

namespace glyndon {

/// A lazily generated infinite word. Letters are produced on demand by a
/// deterministic rule and cached; the cache only ever grows, and access is
/// internally synchronized so concurrent readers observe a consistent
/// prefix. Copies share the cache.
class StreamWord {
public:
    /// Grows the cache to at least `need` letters.
    using Extender = std::function<void(std::vector<symbol_id>&, std::size_t)>;

    static StreamWord make(AlphabetPtr alphabet, Extender extend) {
        auto impl = std::make_shared<Impl>();
        impl->alphabet = std::move(alphabet);
        impl->extend = std::move(extend);
        return StreamWord(std::move(impl));
    }

    /// Letter n is the parity of the bit count of n-1.
    static StreamWord thue_morse() {
        return make(Alphabet::binary(), [](std::vector<symbol_id>& cache, std::size_t need) {
            while (cache.size() < need)
                cache.push_back(static_cast<symbol_id>(
                    std::popcount(static_cast<std::uint64_t>(cache.size())) & 1));
        });
    }

    /// Fixed point of 0 -> 01, 1 -> 0.
    static StreamWord fibonacci_word() {
        return from_morphism(Alphabet::binary(), {{0, {0, 1}}, {1, {0}}}, 0);
    }

    /// Fixed point of 0 -> 01, 1 -> 00.
    static StreamWord period_doubling() {
        return from_morphism(Alphabet::binary(), {{0, {0, 1}}, {1, {0, 0}}}, 0);
    }

    /// Binary expansions of 1, 2, 3, ... concatenated.
    static StreamWord champernowne_binary() {
        struct Cursor {
            std::uint64_t number = 1;
            unsigned bit = 0;
        };
        auto cur = std::make_shared<Cursor>();
        return make(Alphabet::binary(), [cur](std::vector<symbol_id>& cache, std::size_t need) {
            while (cache.size() < need) {
                unsigned width = std::bit_width(cur->number);
                cache.push_back(
                    static_cast<symbol_id>((cur->number >> (width - 1 - cur->bit)) & 1));
                if (++cur->bit == width) {
                    ++cur->number;
                    cur->bit = 0;
                }
            }
        });
    }

    /// Fixed point of a substitution: the seed letter's image must start
    /// with the seed and be at least two letters long, and every image must
    /// be nonempty, so the expansion grows without bound.
    static StreamWord from_morphism(AlphabetPtr alphabet,
                                    std::map<symbol_id, std::vector<symbol_id>> rules,
                                    symbol_id seed) {
        if (seed >= alphabet->size()) throw domain_error("morphism seed outside the alphabet");
        for (symbol_id s = 0; s < alphabet->size(); ++s) {
            auto it = rules.find(s);
            if (it == rules.end())
                throw domain_error("morphism is missing a rule for symbol '" +
                                   alphabet->symbol(s) + "'");
            if (it->second.empty())
                throw domain_error("morphism images must be nonempty");
            for (symbol_id t : it->second)
                if (t >= alphabet->size())
                    throw domain_error("morphism image uses a symbol outside the alphabet");
        }
        const auto& seed_image = rules.at(seed);
        if (seed_image.front() != seed || seed_image.size() < 2)
            throw domain_error(
                "morphism is not prolongable: the seed's image must start with the seed "
                "and have length >= 2");
        struct State {
            std::map<symbol_id, std::vector<symbol_id>> rules;
            std::size_t expanded = 0;
            symbol_id seed;
        };
        auto st = std::make_shared<State>(State{std::move(rules), 0, seed});
        return make(std::move(alphabet), [st](std::vector<symbol_id>& cache, std::size_t need) {
            if (cache.empty()) {
                const auto& img = st->rules.at(st->seed);
                cache.insert(cache.end(), img.begin(), img.end());
                st->expanded = 1;
            }
            while (cache.size() < need) {
                const auto& img = st->rules.at(cache[st->expanded]);
                cache.insert(cache.end(), img.begin(), img.end());
                ++st->expanded;
            }
        });
    }

    /// An eventually periodic word viewed as a stream.
    static StreamWord from_word(EventuallyPeriodicWord w) {
        auto word = std::make_shared<EventuallyPeriodicWord>(std::move(w));
        return make(word->alphabet(), [word](std::vector<symbol_id>& cache, std::size_t need) {
            while (cache.size() < need) cache.push_back(word->letter_at(cache.size() + 1));
        });
    }

    const AlphabetPtr& alphabet() const { return impl_->alphabet; }

    symbol_id letter_at(std::size_t n) const {
        if (n == 0) throw domain_error("letter positions are 1-based");
        std::lock_guard<std::mutex> lock(impl_->mu);
        ensure(n);
        return impl_->cache[n - 1];
    }

    /// Exactly the first n letters; repeated calls agree.
    FiniteWord prefix(std::size_t n) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        ensure(n);
        return FiniteWord(impl_->alphabet,
                          {impl_->cache.begin(), impl_->cache.begin() + n});
    }

private:
    struct Impl {
        AlphabetPtr alphabet;
        mutable std::mutex mu;
        std::vector<symbol_id> cache;
        Extender extend;
    };

    explicit StreamWord(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    void ensure(std::size_t n) const {
        if (impl_->cache.size() < n) {
            impl_->extend(impl_->cache, n);
            if (impl_->cache.size() < n)
                throw invariant_violation("stream generator failed to make progress");
        }
    }

    std::shared_ptr<Impl> impl_;
};

enum class CensusVerdict { LikelyGl, LikelyNotGl, Inconclusive };

inline const char* to_string(CensusVerdict v) {
    switch (v) {
        case CensusVerdict::LikelyGl: return "LIKELY_GL";
        case CensusVerdict::LikelyNotGl: return "LIKELY_NOT_GL";
        default: return "INCONCLUSIVE";
    }
}

/// Lengths of all generalized Lyndon prefixes up to the budget, plus a
/// heuristic verdict: LIKELY_GL when a generalized Lyndon prefix falls in
/// the top quarter of the budget, LIKELY_NOT_GL when none lies beyond a
/// quarter of it, INCONCLUSIVE otherwise. Verdicts are heuristics, not
/// proofs.
struct CensusReport {
    std::size_t budget;
    std::vector<std::size_t> gl_prefix_lengths;
    CensusVerdict verdict;
};

inline CensusReport gl_prefix_census(const StreamWord& w, std::size_t budget,
                                     const OrderSchedule& ord) {
    if (budget < 1) throw usage_error("census budget must be >= 1");
    detail::require_word_order(w.alphabet(), ord);
    CensusReport report{budget, {}, CensusVerdict::Inconclusive};
    FiniteWord full = w.prefix(budget);
    std::span<const symbol_id> s = full.letters();
    for (std::size_t n = 1; n <= budget; ++n)
        if (detail::gl_scan(s.first(n), ord)) report.gl_prefix_lengths.push_back(n);
    bool in_top_quarter = false, beyond_quarter = false;
    for (std::size_t len : report.gl_prefix_lengths) {
        if (4 * len > 3 * budget) in_top_quarter = true;
        if (4 * len > budget) beyond_quarter = true;
    }
    report.verdict = in_top_quarter
                         ? CensusVerdict::LikelyGl
                         : (beyond_quarter ? CensusVerdict::Inconclusive
                                           : CensusVerdict::LikelyNotGl);
    return report;
}

inline CensusReport gl_prefix_census(const EventuallyPeriodicWord& w, std::size_t budget,
                                     const OrderSchedule& ord) {
    return gl_prefix_census(StreamWord::from_word(w), budget, ord);
}

/// Budgeted prefix-stabilization factorization: factorize a geometric ladder
/// of prefixes (powers of two up to the budget) and emit the leading factors
/// shared by the top three rungs. The tail is always open: nothing is
/// claimed past the residual index, and growing the budget may only extend
/// the stable head.
inline InfiniteFactorization factorize_stream(const StreamWord& w, std::size_t budget,
                                              const OrderSchedule& ord) {
    if (budget < 2) throw usage_error("stream factorization budget must be >= 2");
    detail::require_word_order(w.alphabet(), ord);
    std::vector<std::size_t> rungs;
    for (std::size_t n = 2; n <= budget; n *= 2) rungs.push_back(n);
    std::vector<std::vector<FiniteWord>> lists;
    lists.reserve(rungs.size());
    for (std::size_t n : rungs) lists.push_back(factorize_finite(w.prefix(n), ord).factors);

    const std::size_t top = std::min<std::size_t>(3, lists.size());
    const auto& base = lists[lists.size() - top];
    std::size_t stable = base.size();
    for (std::size_t t = lists.size() - top + 1; t < lists.size(); ++t) {
        const auto& cur = lists[t];
        std::size_t limit = std::min(stable, cur.size());
        std::size_t j = 0;
        while (j < limit && cur[j] == base[j]) ++j;
        stable = j;
    }

    std::vector<FiniteWord> head(base.begin(), base.begin() + stable);
    std::size_t residual = 1;
    for (const auto& h : head) residual += h.size();
    return {std::move(head), OpenTail{residual}};
}

}  // namespace glyndon
