#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "order.hpp"
#include "word.hpp"

namespace glyndon {

enum class Ordering { LT, EQ, GT };

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        default: return "GT";
    }
}

inline Ordering reversed(Ordering o) {
    if (o == Ordering::LT) return Ordering::GT;
    if (o == Ordering::GT) return Ordering::LT;
    return Ordering::EQ;
}

/// A comparison outcome plus the 1-based position that decided it.
/// The index is 0 when the words are equal or when the prefix rule decided
/// (one operand ran out of letters while matching the other).
struct CompareResult {
    Ordering order;
    std::size_t index;
};

/// Either a finite word or an eventually periodic infinite word.
using WordValue = std::variant<FiniteWord, EventuallyPeriodicWord>;

namespace detail {

inline void require_word_order(const AlphabetPtr& w, const OrderSchedule& ord) {
    if (!same_alphabet(w, ord.alphabet()))
        throw domain_error("word and order schedule use different alphabets");
}

/// Maximum number of letters that must agree before two eventually periodic
/// words are letterwise equal everywhere: past the longer preperiod both are
/// periodic, and agreement across one lcm window forces agreement forever.
inline std::size_t equality_bound(const EventuallyPeriodicWord& a,
                                  const EventuallyPeriodicWord& b) {
    std::size_t lcm = std::lcm(a.period_length(), b.period_length());
    return std::max(a.preperiod_length(), b.preperiod_length()) + lcm;
}

}  // namespace detail

/// Generalized lexicographic comparison of two finite words: the first
/// differing position decides under that position's order; otherwise the
/// shorter word is smaller (proper-prefix rule).
inline CompareResult compare_finite(const FiniteWord& x, const FiniteWord& y,
                                    const OrderSchedule& ord) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    detail::require_word_order(x.alphabet(), ord);
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare_at(i + 1, x.ids()[i], y.ids()[i]);
        if (c != 0) return {c < 0 ? Ordering::LT : Ordering::GT, i + 1};
    }
    if (x.size() == y.size()) return {Ordering::EQ, 0};
    return {x.size() < y.size() ? Ordering::LT : Ordering::GT, 0};
}

namespace detail {

/// Compare u^w and v^w on the first `window` letters only.
inline CompareResult omega_compare_window(const FiniteWord& u, const FiniteWord& v,
                                          const OrderSchedule& ord, std::size_t window) {
    for (std::size_t i = 0; i < window; ++i) {
        symbol_id a = u.ids()[i % u.size()];
        symbol_id b = v.ids()[i % v.size()];
        int c = ord.compare_at(i + 1, a, b);
        if (c != 0) return {c < 0 ? Ordering::LT : Ordering::GT, i + 1};
    }
    return {Ordering::EQ, 0};
}

}  // namespace detail

/// Compare the omega powers u^w and v^w. A |u|+|v| letter window suffices:
/// by Fine and Wilf, two distinct omega powers disagree within
/// |u|+|v|-gcd(|u|,|v|) positions, and the position of the first mismatch
/// does not depend on the order schedule.
inline Ordering omega_compare(const FiniteWord& u, const FiniteWord& v,
                              const OrderSchedule& ord) {
    if (u.is_empty() || v.is_empty())
        throw domain_error("omega power of the empty word is undefined");
    require_same_alphabet(u.alphabet(), v.alphabet());
    detail::require_word_order(u.alphabet(), ord);
    return detail::omega_compare_window(u, v, ord, u.size() + v.size()).order;
}

/// Exact comparison of two eventually periodic words. Equality on the first
/// max(preperiods) + lcm(periods) letters implies equality everywhere.
inline CompareResult compare_eventually_periodic(const EventuallyPeriodicWord& a,
                                                 const EventuallyPeriodicWord& b,
                                                 const OrderSchedule& ord) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    detail::require_word_order(a.alphabet(), ord);
    const std::size_t bound = detail::equality_bound(a, b);
    for (std::size_t i = 1; i <= bound; ++i) {
        int c = ord.compare_at(i, a.letter_at(i), b.letter_at(i));
        if (c != 0) return {c < 0 ? Ordering::LT : Ordering::GT, i};
    }
    return {Ordering::EQ, 0};
}

/// Compare a finite word against an infinite one; a finite word that matches
/// all of its letters is a proper prefix, hence smaller.
inline CompareResult mixed_compare(const FiniteWord& x, const EventuallyPeriodicWord& w,
                                   const OrderSchedule& ord) {
    require_same_alphabet(x.alphabet(), w.alphabet());
    detail::require_word_order(x.alphabet(), ord);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        int c = ord.compare_at(i, x.letter(i), w.letter_at(i));
        if (c != 0) return {c < 0 ? Ordering::LT : Ordering::GT, i};
    }
    return {Ordering::LT, 0};
}

/// One word is a prefix of the other (the ~ relation).
inline bool prefix_compatible(const FiniteWord& a, const FiniteWord& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.ids()[i] != b.ids()[i]) return false;
    return true;
}

inline bool prefix_compatible(const FiniteWord& a, const EventuallyPeriodicWord& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    for (std::size_t i = 1; i <= a.size(); ++i)
        if (a.letter(i) != b.letter_at(i)) return false;
    return true;
}

inline bool prefix_compatible(const EventuallyPeriodicWord& a, const FiniteWord& b) {
    return prefix_compatible(b, a);
}

/// Two infinite words are prefix-compatible exactly when they are equal;
/// equality is decided on the finite equality bound.
inline bool prefix_compatible(const EventuallyPeriodicWord& a,
                              const EventuallyPeriodicWord& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t bound = detail::equality_bound(a, b);
    for (std::size_t i = 1; i <= bound; ++i)
        if (a.letter_at(i) != b.letter_at(i)) return false;
    return true;
}

inline bool prefix_compatible(const WordValue& a, const WordValue& b) {
    return std::visit([](const auto& x, const auto& y) { return prefix_compatible(x, y); },
                      a, b);
}

namespace detail {

inline const AlphabetPtr& alphabet_of(const WordValue& w) {
    return std::visit([](const auto& v) -> const AlphabetPtr& { return v.alphabet(); }, w);
}

inline symbol_id letter_of(const WordValue& w, std::size_t n) {
    if (const auto* f = std::get_if<FiniteWord>(&w)) return f->letter(n);
    return std::get<EventuallyPeriodicWord>(w).letter_at(n);
}

}  // namespace detail

/// The weak chain w1 <~ w2 <~ ... <~ wn: truncate every word to the minimum
/// length present and check that the truncations are nondecreasing. Infinite
/// words are never the minimum unless all words are infinite, in which case
/// the pairwise equality bound is used as the truncation length.
inline bool compare_weak_chain(const std::vector<WordValue>& words, const OrderSchedule& ord) {
    if (words.size() < 2) throw usage_error("weak chain needs at least two words");
    for (const auto& w : words) {
        require_same_alphabet(detail::alphabet_of(w), ord.alphabet());
        require_same_alphabet(detail::alphabet_of(w), detail::alphabet_of(words.front()));
    }
    std::size_t cut = 0;
    bool any_finite = false;
    for (const auto& w : words) {
        if (const auto* f = std::get_if<FiniteWord>(&w)) {
            cut = any_finite ? std::min(cut, f->size()) : f->size();
            any_finite = true;
        }
    }
    if (!any_finite) {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                cut = std::max(cut, detail::equality_bound(
                                        std::get<EventuallyPeriodicWord>(words[i]),
                                        std::get<EventuallyPeriodicWord>(words[j])));
        if (cut > (std::size_t{1} << 22))
            throw domain_error("weak chain equality bound beyond desk scale");
    }
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
        for (std::size_t i = 1; i <= cut; ++i) {
            int c = ord.compare_at(i, detail::letter_of(words[k], i),
                                   detail::letter_of(words[k + 1], i));
            if (c > 0) return false;
            if (c < 0) break;
        }
    }
    return true;
}

}  // namespace glyndon
