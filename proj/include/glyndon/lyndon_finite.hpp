#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "compare.hpp"
#include "errors.hpp"
#include "order.hpp"
#include "word.hpp"

namespace glyndon {

namespace detail {

/// Rotation scan over a letter block: true iff the block is strictly smaller
/// than each of its other rotations. A rotation equal to the block (so the
/// block is a power) also fails the strictness requirement.
inline bool gl_scan(std::span<const symbol_id> s, const OrderSchedule& ord) {
    const std::size_t n = s.size();
    if (n == 0) return false;
    for (std::size_t m = 1; m < n; ++m) {
        bool smaller = false;
        for (std::size_t i = 0; i < n; ++i) {
            int c = ord.compare_at(i + 1, s[i], s[(m + i) % n]);
            if (c > 0) return false;
            if (c < 0) {
                smaller = true;
                break;
            }
        }
        if (!smaller) return false;
    }
    return true;
}

/// Smallest-period lookup for every suffix of a fixed block, via the border
/// table of the reversed block. Lets suffix scans skip non-primitive
/// suffixes in O(1), which matters on highly periodic inputs.
class SuffixPeriods {
public:
    explicit SuffixPeriods(std::span<const symbol_id> block) {
        std::vector<symbol_id> rev(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) rev[i] = block[block.size() - 1 - i];
        pi_ = border_table(rev);
    }

    /// Primitivity of the suffix of length len.
    bool primitive(std::size_t len) const {
        if (len <= 1) return len == 1;
        std::size_t p = len - pi_[len - 1];
        return !(p < len && len % p == 0);
    }

private:
    std::vector<std::size_t> pi_;
};

}  // namespace detail

/// True iff w is nonempty and strictly smallest among its rotations: for
/// every nontrivial split w = uv, w compares below vu at the first
/// difference. The empty word is never generalized Lyndon.
inline bool is_generalized_lyndon(const FiniteWord& w, const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    return detail::gl_scan(w.letters(), ord);
}

/// Ascending start indices i such that w[i..|w|] is generalized Lyndon.
/// Always contains |w| for nonempty w, since single letters qualify.
inline std::vector<std::size_t> all_gl_suffixes(const FiniteWord& w, const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    std::vector<std::size_t> out;
    if (w.is_empty()) return out;
    detail::SuffixPeriods periods(w.letters());
    std::span<const symbol_id> s = w.letters();
    for (std::size_t i = 1; i <= w.size(); ++i) {
        std::size_t len = w.size() - i + 1;
        if (!periods.primitive(len)) continue;
        if (detail::gl_scan(s.subspan(i - 1), ord)) out.push_back(i);
    }
    return out;
}

struct PrimitiveRoot {
    FiniteWord root;
    std::size_t exponent;
};

/// The shortest word whose power reproduces w, together with the maximal
/// exponent.
inline PrimitiveRoot primitive_root(const FiniteWord& w) {
    if (w.is_empty()) throw domain_error("primitive root of the empty word is undefined");
    std::size_t p = detail::primitive_root_length(w.letters());
    return {w.prefix(p), w.size() / p};
}

/// The unique generalized Lyndon rotation of a primitive word: the strict
/// minimum over all |w| rotations, which are pairwise distinct by
/// primitivity.
inline FiniteWord minimal_rotation(const FiniteWord& w, const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    if (w.is_empty()) throw domain_error("minimal rotation of the empty word is undefined");
    if (primitive_root(w).exponent != 1)
        throw domain_error("minimal rotation requires a primitive word");
    FiniteWord best = w;
    for (std::size_t i = 2; i <= w.size(); ++i) {
        FiniteWord rot = w.rotation_from(i);
        if (compare_finite(rot, best, ord).order == Ordering::LT) best = std::move(rot);
    }
    return best;
}

/// An exponent reported as the exact pair of lengths, never as a float.
struct Fraction {
    std::size_t num;
    std::size_t den;

    Fraction reduced() const {
        std::size_t g = std::gcd(num, den);
        return g ? Fraction{num / g, den / g} : *this;
    }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
};

/// Exponent |w|/|base| when w is a fractional power of base (w ~ base^w),
/// otherwise absent.
inline std::optional<Fraction> fractional_power_of(const FiniteWord& w, const FiniteWord& base) {
    if (base.is_empty()) throw domain_error("fractional power base must be nonempty");
    require_same_alphabet(w.alphabet(), base.alphabet());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.ids()[i] != base.ids()[i % base.size()]) return std::nullopt;
    return Fraction{w.size(), base.size()};
}

/// A fractional power base^(length/|base|): the realized word is the first
/// `length` letters of base^w.
struct FractionalPower {
    FiniteWord base;
    std::size_t length;

    FractionalPower(FiniteWord b, std::size_t len) : base(std::move(b)), length(len) {
        if (base.is_empty()) throw domain_error("fractional power base must be nonempty");
        if (length == 0) throw domain_error("fractional power length must be >= 1");
    }

    FiniteWord realize() const {
        std::vector<symbol_id> out;
        out.reserve(length);
        for (std::size_t i = 0; i < length; ++i) out.push_back(base.ids()[i % base.size()]);
        return FiniteWord(base.alphabet(), std::move(out));
    }

    Fraction exponent() const { return {length, base.size()}; }
};

/// A nonincreasing generalized Lyndon factorization of a finite word.
struct FiniteFactorization {
    std::vector<FiniteWord> factors;
};

inline bool chain_nonincreasing(const std::vector<FiniteWord>& factors, const OrderSchedule& ord) {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (omega_compare(factors[i], factors[i + 1], ord) == Ordering::LT) return false;
    return true;
}

/// All three factorization invariants: factors generalized Lyndon, chain
/// nonincreasing under omega powers, concatenation equal to the source.
inline bool is_valid_finite_factorization(const std::vector<FiniteWord>& factors,
                                          const FiniteWord& w, const OrderSchedule& ord) {
    if (factors.empty()) return false;
    std::size_t pos = 0;
    for (const auto& f : factors) {
        if (!is_generalized_lyndon(f, ord)) return false;
        for (std::size_t k = 0; k < f.size(); ++k, ++pos)
            if (pos >= w.size() || f.ids()[k] != w.ids()[pos]) return false;
    }
    if (pos != w.size()) return false;
    return chain_nonincreasing(factors, ord);
}

namespace detail {

/// Right-to-left factorizer. The greedy pass strips the longest generalized
/// Lyndon suffix, then peels literal repeats of it; any candidate whose chain
/// validates is the factorization, by uniqueness. Validation failure falls
/// back to a memoized exhaustive search over generalized Lyndon suffix
/// splits, which cannot miss the factorization.
class FiniteFactorizer {
public:
    FiniteFactorizer(const FiniteWord& w, const OrderSchedule& ord) : w_(w), ord_(ord) {}

    std::vector<FiniteWord> run() {
        std::vector<FiniteWord> fast = fast_path();
        if (chain_nonincreasing(fast, ord_)) return fast;
        return run_search();
    }

    std::vector<FiniteWord> run_search() {
        auto slow = search(w_.size(), 0, 0);
        if (!slow)
            throw invariant_violation(
                "no nonincreasing generalized Lyndon factorization found; this is a bug");
        return to_factors(*slow);
    }

private:
    std::vector<FiniteWord> fast_path() {
        std::vector<FiniteWord> rev;
        std::size_t end = w_.size();
        while (end > 0) {
            std::size_t i = longest_gl_suffix_start(end);
            FiniteWord f = w_.slice(i, end);
            const std::size_t len = f.size();
            rev.push_back(f);
            end = i - 1;
            while (end >= len && block_equals(end - len + 1, f)) {
                rev.push_back(f);
                end -= len;
            }
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    }

    bool block_equals(std::size_t start, const FiniteWord& f) const {
        const auto& ids = w_.ids();
        for (std::size_t k = 0; k < f.size(); ++k)
            if (ids[start - 1 + k] != f.ids()[k]) return false;
        return true;
    }

    std::size_t longest_gl_suffix_start(std::size_t end) const {
        std::span<const symbol_id> block(w_.ids().data(), end);
        SuffixPeriods periods(block);
        for (std::size_t i = 1; i <= end; ++i) {
            std::size_t len = end - i + 1;
            if (!periods.primitive(len)) continue;
            if (gl_scan(block.subspan(i - 1), ord_)) return i;
        }
        throw invariant_violation("single letters are generalized Lyndon; unreachable");
    }

    const std::vector<std::size_t>& gl_starts(std::size_t end) {
        auto it = gl_starts_.find(end);
        if (it != gl_starts_.end()) return it->second;
        std::span<const symbol_id> block(w_.ids().data(), end);
        SuffixPeriods periods(block);
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= end; ++i) {
            std::size_t len = end - i + 1;
            if (!periods.primitive(len)) continue;
            if (gl_scan(block.subspan(i - 1), ord_)) out.push_back(i);
        }
        return gl_starts_.emplace(end, std::move(out)).first->second;
    }

    // Factor start positions for w[1..end] whose last factor f satisfies
    // f^w >= c^w, where c = w[c_start..c_end] (c_start 0: unconstrained).
    std::optional<std::vector<std::size_t>> search(std::size_t end, std::size_t c_start,
                                                   std::size_t c_end) {
        if (end == 0) return std::vector<std::size_t>{};
        Key key{end, c_start, c_end};
        auto mit = memo_.find(key);
        if (mit != memo_.end()) return mit->second;
        std::optional<std::vector<std::size_t>> result;
        for (std::size_t i : gl_starts(end)) {
            if (c_start != 0) {
                FiniteWord cand = w_.slice(i, end);
                FiniteWord constraint = w_.slice(c_start, c_end);
                if (omega_compare(cand, constraint, ord_) == Ordering::LT) continue;
            }
            auto rec = search(i - 1, i, end);
            if (rec) {
                rec->push_back(i);
                result = std::move(rec);
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    std::vector<FiniteWord> to_factors(const std::vector<std::size_t>& starts) const {
        std::vector<FiniteWord> out;
        out.reserve(starts.size());
        for (std::size_t k = 0; k < starts.size(); ++k) {
            std::size_t hi = (k + 1 < starts.size()) ? starts[k + 1] - 1 : w_.size();
            out.push_back(w_.slice(starts[k], hi));
        }
        return out;
    }

    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

    const FiniteWord& w_;
    const OrderSchedule& ord_;
    std::map<Key, std::optional<std::vector<std::size_t>>> memo_;
    std::map<std::size_t, std::vector<std::size_t>> gl_starts_;
};

/// The search route alone, skipping the greedy pass. Exists so the fallback
/// can be exercised and cross-checked directly even on inputs where the
/// greedy pass succeeds.
inline FiniteFactorization factorize_finite_via_search(const FiniteWord& w,
                                                       const OrderSchedule& ord) {
    if (w.is_empty()) throw usage_error("cannot factorize the empty word");
    FiniteFactorizer factorizer(w, ord);
    return {factorizer.run_search()};
}

}  // namespace detail

/// The unique nonincreasing generalized Lyndon factorization of a nonempty
/// finite word.
inline FiniteFactorization factorize_finite(const FiniteWord& w, const OrderSchedule& ord) {
    detail::require_word_order(w.alphabet(), ord);
    if (w.is_empty()) throw usage_error("cannot factorize the empty word");
    detail::FiniteFactorizer factorizer(w, ord);
    return {factorizer.run()};
}

}  // namespace glyndon
