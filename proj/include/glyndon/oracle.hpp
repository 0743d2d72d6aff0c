#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "lyndon_finite.hpp"
#include "lyndon_infinite.hpp"
#include "order.hpp"
#include "word.hpp"

namespace glyndon::oracle {

/// Letterwise comparison written from the definition, kept independent of
/// the main comparison path so that a disagreement flags a bug.
inline int compare_letters(std::span<const symbol_id> a, std::span<const symbol_id> b,
                           const OrderSchedule& ord) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare_at(i + 1, a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

inline std::vector<symbol_id> expand_power(const FiniteWord& u, std::size_t len) {
    std::vector<symbol_id> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(u.ids()[i % u.size()]);
    return out;
}

/// a^w >= b^w decided on a window four times the provable bound.
inline bool omega_not_less(const FiniteWord& a, const FiniteWord& b, const OrderSchedule& ord) {
    const std::size_t len = 4 * (a.size() + b.size());
    auto ea = expand_power(a, len);
    auto eb = expand_power(b, len);
    return compare_letters(ea, eb, ord) >= 0;
}

/// Generalized Lyndon test by materializing and sorting the whole rotation
/// class, then checking that w is its strict, unique minimum.
inline bool gl_by_rotations_oracle(const FiniteWord& w, const OrderSchedule& ord,
                                   std::size_t cap = 14) {
    if (w.size() > cap) throw usage_error("rotation oracle cap exceeded");
    if (w.is_empty()) return false;
    std::vector<FiniteWord> rotations;
    rotations.reserve(w.size());
    for (std::size_t i = 1; i <= w.size(); ++i) rotations.push_back(w.rotation_from(i));
    std::stable_sort(rotations.begin(), rotations.end(),
                     [&](const FiniteWord& x, const FiniteWord& y) {
                         return compare_letters(x.letters(), y.letters(), ord) < 0;
                     });
    if (!(rotations.front() == w)) return false;
    return rotations.size() == 1 || rotations[1] != rotations[0];
}

/// Every composition of w into generalized Lyndon factors forming a
/// nonincreasing omega-power chain, by exhaustion. Exactly one is expected.
inline std::vector<FiniteFactorization> enumerate_factorizations(const FiniteWord& w,
                                                                 const OrderSchedule& ord,
                                                                 std::size_t cap = 14) {
    if (w.is_empty()) throw usage_error("cannot factorize the empty word");
    if (w.size() > cap) throw usage_error("factorization enumeration cap exceeded");
    const std::size_t n = w.size();
    // gl[i][j]: cached oracle verdict for w[i..j], -1 unknown.
    std::vector<std::vector<int>> gl(n + 1, std::vector<int>(n + 1, -1));
    auto factor_is_gl = [&](std::size_t i, std::size_t j) {
        int& slot = gl[i][j];
        if (slot < 0) slot = gl_by_rotations_oracle(w.slice(i, j), ord, cap) ? 1 : 0;
        return slot == 1;
    };

    std::vector<FiniteFactorization> out;
    std::vector<FiniteWord> current;
    auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (pos > n) {
            out.push_back({current});
            return;
        }
        for (std::size_t end = pos; end <= n; ++end) {
            if (!factor_is_gl(pos, end)) continue;
            FiniteWord f = w.slice(pos, end);
            if (!current.empty() && !omega_not_less(current.back(), f, ord)) continue;
            current.push_back(std::move(f));
            self(self, end + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

struct ConjectureBounds {
    std::size_t max_period = 8;
    std::size_t max_preperiod = 12;
};

namespace detail_search {

/// Advance a base-k odometer; false when it wraps around to all zeros.
inline bool next_tuple(std::vector<symbol_id>& digits, std::size_t k) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < k) return true;
        digits[i] = 0;
    }
    return !digits.empty() ? false : false;
}

}  // namespace detail_search

/// Bounded search for an eventually periodic infinite generalized Lyndon
/// word extending w. Witnesses are enumerated by increasing total size
/// |preperiod| + |period|, so the first hit is a smallest witness. An empty
/// result only means the bounded search was exhausted, never a refutation.
inline std::optional<EventuallyPeriodicWord> conjecture_search(const FiniteWord& w,
                                                               const OrderSchedule& ord,
                                                               const ConjectureBounds& bounds) {
    if (w.size() < 2) throw usage_error("conjecture search needs a word of length >= 2");
    if (!is_generalized_lyndon(w, ord))
        throw usage_error("conjecture search needs a generalized Lyndon word");
    const AlphabetPtr& ab = w.alphabet();
    const std::size_t k = ab->size();

    auto try_candidate = [&](const FiniteWord& pre,
                             const FiniteWord& per) -> std::optional<EventuallyPeriodicWord> {
        EventuallyPeriodicWord x(pre, per);
        for (std::size_t i = 1; i <= w.size(); ++i)
            if (x.letter_at(i) != w.letter(i)) return std::nullopt;
        if (is_infinite_generalized_lyndon(x, ord)) return x;
        return std::nullopt;
    };

    for (std::size_t total = 1; total <= bounds.max_preperiod + bounds.max_period; ++total) {
        for (std::size_t lp = 0; lp <= std::min(total - 1, bounds.max_preperiod); ++lp) {
            std::size_t lq = total - lp;
            if (lq < 1 || lq > bounds.max_period) continue;
            std::vector<symbol_id> period(lq, 0);
            do {
                FiniteWord per(ab, period);
                if (lp <= w.size()) {
                    if (auto hit = try_candidate(w.prefix(lp), per)) return hit;
                } else {
                    std::vector<symbol_id> free_part(lp - w.size(), 0);
                    do {
                        std::vector<symbol_id> pre = w.ids();
                        pre.insert(pre.end(), free_part.begin(), free_part.end());
                        if (auto hit = try_candidate(FiniteWord(ab, std::move(pre)), per))
                            return hit;
                    } while (detail_search::next_tuple(free_part, k));
                }
            } while (detail_search::next_tuple(period, k));
        }
    }
    return std::nullopt;
}

}  // namespace glyndon::oracle
