#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "eventually_periodic.hpp"
#include "order.hpp"
#include "word.hpp"

namespace glyndon {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Small deterministic generator with identical output on every platform.
/// Randomized suites derive one of these per trial from (seed, trial index),
/// so trials are reproducible and order-independent.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    /// Draw in [lo, hi] inclusive.
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

inline TrialRng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return TrialRng(splitmix64(seed) ^ splitmix64(0x517CC1B727220A95ULL + trial));
}

inline FiniteWord random_finite_word(TrialRng& rng, const AlphabetPtr& ab, std::size_t min_len,
                                     std::size_t max_len) {
    std::size_t len = rng.between(min_len, max_len);
    std::vector<symbol_id> ids(len);
    for (auto& s : ids) s = static_cast<symbol_id>(rng.below(ab->size()));
    return FiniteWord(ab, std::move(ids));
}

inline EventuallyPeriodicWord random_ep_word(TrialRng& rng, const AlphabetPtr& ab,
                                             std::size_t max_pre, std::size_t max_per) {
    FiniteWord pre = random_finite_word(rng, ab, 0, max_pre);
    FiniteWord per = random_finite_word(rng, ab, 1, max_per);
    return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

inline OrderSchedule::Permutation random_permutation(TrialRng& rng, std::size_t k) {
    OrderSchedule::Permutation p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<symbol_id>(i);
    for (std::size_t i = k; i-- > 1;) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

inline OrderSchedule random_schedule(TrialRng& rng, AlphabetPtr ab, std::size_t pre_len,
                                     std::size_t period_len) {
    std::vector<OrderSchedule::Permutation> pre, per;
    for (std::size_t i = 0; i < pre_len; ++i) pre.push_back(random_permutation(rng, ab->size()));
    for (std::size_t i = 0; i < period_len; ++i)
        per.push_back(random_permutation(rng, ab->size()));
    return OrderSchedule::make(std::move(ab), std::move(pre), std::move(per));
}

/// The three named schedules over an alphabet, in a fixed order.
inline std::vector<OrderSchedule> named_schedules(const AlphabetPtr& ab) {
    return {OrderSchedule::standard(ab), OrderSchedule::opposite(ab),
            OrderSchedule::alternating(ab)};
}

}  // namespace glyndon
