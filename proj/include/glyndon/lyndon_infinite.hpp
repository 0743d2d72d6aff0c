#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compare.hpp"
#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "lyndon_finite.hpp"

namespace glyndon {

/// Final term of a finite factorization: an infinite generalized Lyndon word.
struct InfiniteTerm {
    EventuallyPeriodicWord word;
};

/// The factorization continues with this generalized Lyndon word forever.
struct PeriodicTail {
    FiniteWord word;
};

/// Budgeted stream results only: the factorization is stable up to (not
/// including) residual_start, and nothing is claimed beyond it.
struct OpenTail {
    std::size_t residual_start;
};

/// A nonincreasing generalized Lyndon factorization of an infinite word:
/// finitely many finite head factors followed by one of the tail forms.
struct InfiniteFactorization {
    std::vector<FiniteWord> head;
    std::variant<InfiniteTerm, PeriodicTail, OpenTail> tail;

    const InfiniteTerm* infinite_term() const { return std::get_if<InfiniteTerm>(&tail); }
    const PeriodicTail* periodic_tail() const { return std::get_if<PeriodicTail>(&tail); }
    const OpenTail* open_tail() const { return std::get_if<OpenTail>(&tail); }
};

/// True iff w is strictly smaller than every proper suffix of itself.
/// Distinct suffix classes start within the first preperiod+period+1
/// positions, so the bounded scan is exhaustive. A purely periodic word is
/// never infinite generalized Lyndon: some proper suffix equals the word.
inline bool is_infinite_generalized_lyndon(const EventuallyPeriodicWord& w,
                                           const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    const std::size_t bound = w.preperiod_length() + w.period_length() + 1;
    for (std::size_t i = 2; i <= bound; ++i)
        if (compare_eventually_periodic(w, w.suffix_from(i), ord).order != Ordering::LT)
            return false;
    return true;
}

/// Least start index m such that w[m..) is infinite generalized Lyndon, if
/// any. Suffix classes repeat with the period beyond the preperiod, so
/// indices up to preperiod+period cover every class.
inline std::optional<std::size_t> first_gl_suffix_index(const EventuallyPeriodicWord& w,
                                                        const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    const std::size_t bound = w.preperiod_length() + w.period_length();
    for (std::size_t m = 1; m <= bound; ++m)
        if (is_infinite_generalized_lyndon(w.suffix_from(m), ord)) return m;
    return std::nullopt;
}

/// The unique nonincreasing generalized Lyndon factorization of an
/// eventually periodic word.
///
/// When the word has an infinite generalized Lyndon suffix, the suffix with
/// the least start index m is the last term, and the head is the finite
/// factorization of the first m-1 letters. Otherwise the factorization ends
/// in ell^w, where ell is the generalized Lyndon rotation of the primitive
/// period; the head is found by absorbing copies of ell into the finite
/// prefix until its factorization's last factor dominates ell.
inline InfiniteFactorization factorize_eventually_periodic(const EventuallyPeriodicWord& w,
                                                           const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    if (auto m = first_gl_suffix_index(w, ord)) {
        InfiniteTerm tail{w.suffix_from(*m)};
        std::vector<FiniteWord> head;
        if (*m > 1) head = factorize_finite(w.prefix_word(*m - 1), ord).factors;
        if (!head.empty()) {
            Ordering junction =
                compare_eventually_periodic(EventuallyPeriodicWord::omega(head.back()),
                                            tail.word, ord)
                    .order;
            if (junction == Ordering::LT)
                throw invariant_violation(
                    "last head factor does not dominate the infinite tail; this is a bug");
        }
        return {std::move(head), std::move(tail)};
    }

    FiniteWord p = primitive_root(w.period()).root;
    FiniteWord ell = minimal_rotation(p, ord);
    std::size_t offset = 0;
    while (p.rotation_from(offset + 1) != ell) {
        ++offset;
        if (offset >= p.size())
            throw invariant_violation("generalized Lyndon rotation not found; this is a bug");
    }
    // Align ell^w at the earliest possible position so the head is shortest.
    FiniteWord residue = w.prefix_word(w.preperiod_length() + offset);
    if (residue.is_empty()) return {{}, PeriodicTail{std::move(ell)}};
    const std::size_t cap = residue.size() + ell.size() + 64;
    for (std::size_t j = 0; j <= cap; ++j) {
        std::vector<FiniteWord> head = factorize_finite(residue + ell.power(j), ord).factors;
        if (omega_compare(head.back(), ell, ord) != Ordering::LT)
            return {std::move(head), PeriodicTail{std::move(ell)}};
    }
    throw invariant_violation("periodic tail absorption did not converge; this is a bug");
}

/// Checks every structural invariant of a factorization against its source:
/// head factors generalized Lyndon, chain nonincreasing, tail well formed,
/// head/tail junction nonincreasing, and letterwise agreement with the
/// source over 10 * (|preperiod| + |period|) letters.
inline bool validate_infinite_factorization(const InfiniteFactorization& f,
                                            const EventuallyPeriodicWord& source,
                                            const OrderSchedule& ord,
                                            std::string* reason = nullptr) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    for (const auto& h : f.head)
        if (!is_generalized_lyndon(h, ord))
            return fail("head factor is not generalized Lyndon: " + h.str());
    for (std::size_t i = 0; i + 1 < f.head.size(); ++i)
        if (omega_compare(f.head[i], f.head[i + 1], ord) == Ordering::LT)
            return fail("head chain increases after factor " + std::to_string(i + 1));

    std::size_t pos = 1;
    for (const auto& h : f.head)
        for (std::size_t k = 1; k <= h.size(); ++k, ++pos)
            if (h.letter(k) != source.letter_at(pos))
                return fail("head letters disagree with the source at position " +
                            std::to_string(pos));

    const std::size_t window =
        10 * (source.preperiod_length() + source.period_length());
    if (const auto* t = f.infinite_term()) {
        if (!is_infinite_generalized_lyndon(t->word, ord))
            return fail("tail term is not infinite generalized Lyndon");
        if (!f.head.empty() &&
            compare_eventually_periodic(EventuallyPeriodicWord::omega(f.head.back()),
                                        t->word, ord)
                    .order == Ordering::LT)
            return fail("junction: last head factor is below the tail");
        for (std::size_t k = 0; k < window; ++k)
            if (t->word.letter_at(k + 1) != source.letter_at(pos + k))
                return fail("tail letters disagree with the source");
    } else if (const auto* t = f.periodic_tail()) {
        if (!is_generalized_lyndon(t->word, ord))
            return fail("periodic tail word is not generalized Lyndon");
        if (!f.head.empty() && omega_compare(f.head.back(), t->word, ord) == Ordering::LT)
            return fail("junction: last head factor is below the periodic tail");
        for (std::size_t k = 0; k < window; ++k)
            if (t->word.ids()[k % t->word.size()] != source.letter_at(pos + k))
                return fail("periodic tail letters disagree with the source");
    }
    return true;
}

}  // namespace glyndon
