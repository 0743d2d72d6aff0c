#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace glyndon {

/// An infinite word of the form preperiod . period^w, kept in canonical form:
/// the period is primitive, and the preperiod is as short as possible (its
/// last letter differs from the period letter that would rotate into that
/// position). Canonicalization happens at construction, so letterwise-equal
/// representations compare equal memberwise.
class EventuallyPeriodicWord {
public:
    EventuallyPeriodicWord(FiniteWord preperiod, FiniteWord period)
        : pre_(std::move(preperiod)), per_(std::move(period)) {
        require_same_alphabet(pre_.alphabet(), per_.alphabet());
        if (per_.is_empty()) throw domain_error("period must be nonempty");
        canonicalize();
    }

    /// u^w for a nonempty finite u.
    static EventuallyPeriodicWord omega(const FiniteWord& u) {
        if (u.is_empty()) throw domain_error("omega power of the empty word is undefined");
        return EventuallyPeriodicWord(FiniteWord::empty(u.alphabet()), u);
    }

    const AlphabetPtr& alphabet() const { return pre_.alphabet(); }
    const FiniteWord& preperiod() const { return pre_; }
    const FiniteWord& period() const { return per_; }
    std::size_t preperiod_length() const { return pre_.size(); }
    std::size_t period_length() const { return per_.size(); }

    /// 1-based letter access; total for every n >= 1.
    symbol_id letter_at(std::size_t n) const {
        if (n == 0) throw domain_error("letter positions are 1-based");
        if (n <= pre_.size()) return pre_.ids()[n - 1];
        return per_.ids()[(n - pre_.size() - 1) % per_.size()];
    }

    /// The first k letters as a finite word.
    FiniteWord prefix_word(std::size_t k) const {
        std::vector<symbol_id> out;
        out.reserve(k);
        for (std::size_t n = 1; n <= k; ++n) out.push_back(letter_at(n));
        return FiniteWord(alphabet(), std::move(out));
    }

    /// The suffix starting at position i >= 1 (i = 1 is the word itself).
    EventuallyPeriodicWord suffix_from(std::size_t i) const {
        if (i == 0) throw domain_error("suffix positions are 1-based");
        if (i <= pre_.size() + 1)
            return EventuallyPeriodicWord(pre_.suffix_from(i), per_);
        std::size_t shift = (i - pre_.size() - 1) % per_.size();
        return EventuallyPeriodicWord(FiniteWord::empty(alphabet()),
                                      per_.rotation_from(shift + 1));
    }

    bool operator==(const EventuallyPeriodicWord& other) const {
        return pre_ == other.pre_ && per_ == other.per_;
    }
    bool operator!=(const EventuallyPeriodicWord& other) const { return !(*this == other); }

    /// Shared text syntax: PREFIX(PERIOD)^w.
    std::string str() const { return pre_.str() + "(" + per_.str() + ")^w"; }

private:
    void canonicalize() {
        std::size_t root = detail::primitive_root_length(per_.letters());
        if (root < per_.size()) per_ = per_.prefix(root);
        // Absorb preperiod letters that the period can be rotated over:
        // u.a (v)^w equals u (a v[1..k-1])^w whenever a matches v's last letter.
        while (!pre_.is_empty() && pre_.ids().back() == per_.ids().back()) {
            std::vector<symbol_id> rotated;
            rotated.reserve(per_.size());
            rotated.push_back(per_.ids().back());
            rotated.insert(rotated.end(), per_.ids().begin(), per_.ids().end() - 1);
            per_ = FiniteWord(alphabet(), std::move(rotated));
            pre_ = pre_.prefix(pre_.size() - 1);
        }
    }

    FiniteWord pre_;
    FiniteWord per_;
};

/// u . w for a finite u and an infinite w.
inline EventuallyPeriodicWord prepend(const FiniteWord& u, const EventuallyPeriodicWord& w) {
    return EventuallyPeriodicWord(u + w.preperiod(), w.period());
}

}  // namespace glyndon
