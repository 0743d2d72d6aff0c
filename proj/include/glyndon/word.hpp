#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"

namespace glyndon {

namespace detail {

/// Longest-proper-border lengths for every prefix of s (classic failure
/// function). pi[i] is the border length of s[0..i].
inline std::vector<std::size_t> border_table(std::span<const symbol_id> s) {
    std::vector<std::size_t> pi(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    return pi;
}

inline std::size_t smallest_period(std::span<const symbol_id> s) {
    if (s.empty()) return 0;
    auto pi = border_table(s);
    return s.size() - pi.back();
}

/// Length of the primitive root: p when s = root^(n/p) with p | n, else n.
inline std::size_t primitive_root_length(std::span<const symbol_id> s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::size_t p = smallest_period(s);
    return (p < n && n % p == 0) ? p : n;
}

}  // namespace detail

/// A finite word: an immutable sequence of symbol ids bound to an alphabet.
/// All positional accessors are 1-based, and x.slice(i, j) is the inclusive
/// substring x[i..j].
class FiniteWord {
public:
    FiniteWord(AlphabetPtr alphabet, std::vector<symbol_id> ids)
        : alphabet_(std::move(alphabet)), ids_(std::move(ids)) {
        if (!alphabet_) throw domain_error("word requires an alphabet");
        for (symbol_id s : ids_)
            if (s >= alphabet_->size()) throw domain_error("symbol id outside the alphabet");
    }

    static FiniteWord empty(AlphabetPtr alphabet) { return FiniteWord(std::move(alphabet), {}); }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t size() const { return ids_.size(); }
    bool is_empty() const { return ids_.empty(); }
    const std::vector<symbol_id>& ids() const { return ids_; }
    std::span<const symbol_id> letters() const { return ids_; }

    /// 1-based letter access.
    symbol_id letter(std::size_t i) const {
        if (i == 0 || i > ids_.size()) throw domain_error("letter index out of range");
        return ids_[i - 1];
    }

    /// Inclusive 1-based slice x[i..j]; requires 1 <= i <= j <= |x|.
    FiniteWord slice(std::size_t i, std::size_t j) const {
        if (i == 0 || i > j || j > ids_.size()) throw domain_error("slice indices out of range");
        return FiniteWord(alphabet_, {ids_.begin() + (i - 1), ids_.begin() + j});
    }

    /// First k letters; k may be 0 or |x|.
    FiniteWord prefix(std::size_t k) const {
        if (k > ids_.size()) throw domain_error("prefix length out of range");
        return FiniteWord(alphabet_, {ids_.begin(), ids_.begin() + k});
    }

    /// Letters from position i on; i may be |x|+1, giving the empty word.
    FiniteWord suffix_from(std::size_t i) const {
        if (i == 0 || i > ids_.size() + 1) throw domain_error("suffix index out of range");
        return FiniteWord(alphabet_, {ids_.begin() + (i - 1), ids_.end()});
    }

    /// The rotation that starts at position i: x[i..n] x[1..i-1].
    FiniteWord rotation_from(std::size_t i) const {
        if (i == 0 || i > ids_.size()) throw domain_error("rotation index out of range");
        std::vector<symbol_id> out;
        out.reserve(ids_.size());
        out.insert(out.end(), ids_.begin() + (i - 1), ids_.end());
        out.insert(out.end(), ids_.begin(), ids_.begin() + (i - 1));
        return FiniteWord(alphabet_, std::move(out));
    }

    FiniteWord operator+(const FiniteWord& other) const {
        require_same_alphabet(alphabet_, other.alphabet_);
        std::vector<symbol_id> out;
        out.reserve(ids_.size() + other.ids_.size());
        out.insert(out.end(), ids_.begin(), ids_.end());
        out.insert(out.end(), other.ids_.begin(), other.ids_.end());
        return FiniteWord(alphabet_, std::move(out));
    }

    FiniteWord power(std::size_t k) const {
        std::vector<symbol_id> out;
        out.reserve(ids_.size() * k);
        for (std::size_t r = 0; r < k; ++r) out.insert(out.end(), ids_.begin(), ids_.end());
        return FiniteWord(alphabet_, std::move(out));
    }

    bool operator==(const FiniteWord& other) const {
        return same_alphabet(alphabet_, other.alphabet_) && ids_ == other.ids_;
    }
    bool operator!=(const FiniteWord& other) const { return !(*this == other); }

    /// Word in the shared text syntax: compact when every symbol is a single
    /// character, comma-separated otherwise.
    std::string str() const {
        std::string out;
        bool compact = alphabet_->compact_tokens();
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (!compact && i > 0) out += ',';
            out += alphabet_->symbol(ids_[i]);
        }
        return out;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<symbol_id> ids_;
};

}  // namespace glyndon
