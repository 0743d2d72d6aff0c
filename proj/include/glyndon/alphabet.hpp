#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace glyndon {

using symbol_id = std::uint32_t;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// An ordered, finite set of distinct symbol tokens. A symbol's position in
/// the list is its canonical id, and the listing order is the base order the
/// named schedules (standard/opposite/alternating) are built from.
class Alphabet {
public:
    static AlphabetPtr make(std::vector<std::string> symbols) {
        return AlphabetPtr(new Alphabet(std::move(symbols)));
    }

    static AlphabetPtr binary() { return make({"0", "1"}); }
    static AlphabetPtr ternary() { return make({"0", "1", "2"}); }

    /// Digit tokens "1".."d" in numeric order.
    static AlphabetPtr digits(std::size_t d) {
        std::vector<std::string> symbols;
        symbols.reserve(d);
        for (std::size_t i = 1; i <= d; ++i) symbols.push_back(std::to_string(i));
        return make(std::move(symbols));
    }

    std::size_t size() const { return symbols_.size(); }

    const std::string& symbol(symbol_id id) const {
        if (id >= symbols_.size()) throw domain_error("symbol id out of range");
        return symbols_[id];
    }

    std::optional<symbol_id> find(const std::string& token) const {
        auto it = index_.find(token);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    symbol_id id_of(const std::string& token) const {
        auto id = find(token);
        if (!id) throw domain_error("symbol '" + token + "' is not in the alphabet");
        return *id;
    }

    const std::vector<std::string>& symbols() const { return symbols_; }

    /// True when every symbol is a single character, which enables the
    /// compact word syntax ("0110" instead of "0,1,1,0").
    bool compact_tokens() const { return compact_; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw domain_error("alphabet must have at least one symbol");
        compact_ = true;
        for (symbol_id id = 0; id < symbols_.size(); ++id) {
            const auto& tok = symbols_[id];
            if (tok.empty()) throw domain_error("alphabet symbols must be nonempty");
            if (tok.size() != 1) compact_ = false;
            if (!index_.emplace(tok, id).second)
                throw domain_error("alphabet symbols must be distinct: '" + tok + "'");
        }
    }

    std::vector<std::string> symbols_;
    std::unordered_map<std::string, symbol_id> index_;
    bool compact_ = true;
};

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (!same_alphabet(a, b)) throw domain_error("operands use different alphabets");
}

}  // namespace glyndon
