#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "compare.hpp"
#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "order.hpp"
#include "word.hpp"

namespace glyndon {

namespace detail {

/// Split a finite-word literal into symbol tokens. Comma syntax always
/// works; the compact one-character-per-symbol form is accepted only when
/// every alphabet symbol is a single character.
inline std::vector<std::string> word_tokens(const std::string& text, const AlphabetPtr& ab,
                                            std::size_t offset) {
    std::vector<std::string> tokens;
    if (text.empty()) return tokens;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string tok = text.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
            if (tok.empty())
                throw usage_error("empty symbol token at position " +
                                  std::to_string(offset + start + 1));
            tokens.push_back(std::move(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return tokens;
    }
    if (ab->compact_tokens()) {
        for (char c : text) tokens.emplace_back(1, c);
        return tokens;
    }
    tokens.push_back(text);
    return tokens;
}

inline FiniteWord word_from_tokens(const std::vector<std::string>& tokens,
                                   const AlphabetPtr& ab) {
    std::vector<symbol_id> ids;
    ids.reserve(tokens.size());
    for (const auto& tok : tokens) ids.push_back(ab->id_of(tok));
    return FiniteWord(ab, std::move(ids));
}

}  // namespace detail

/// Parse a finite word literal ("0110" or "1,2,2").
inline FiniteWord parse_finite_word(const std::string& text, const AlphabetPtr& ab) {
    return detail::word_from_tokens(detail::word_tokens(text, ab, 0), ab);
}

/// Parse a word in the shared syntax: a finite token string, or an
/// eventually periodic word written PREFIX(PERIOD)^w, e.g. 010000100(1)^w
/// or, with an empty prefix, (01)^w.
inline WordValue parse_word(const std::string& text, const AlphabetPtr& ab) {
    std::size_t open = text.find('(');
    if (open == std::string::npos) {
        if (text.find(')') != std::string::npos)
            throw usage_error("unmatched ')' at position " +
                              std::to_string(text.find(')') + 1));
        return parse_finite_word(text, ab);
    }
    std::size_t close = text.find(')', open);
    if (close == std::string::npos)
        throw usage_error("missing ')' for '(' at position " + std::to_string(open + 1));
    if (text.substr(close) != ")^w")
        throw usage_error("expected \")^w\" at position " + std::to_string(close + 1));
    if (text.find('(', open + 1) != std::string::npos)
        throw usage_error("unexpected second '(' at position " +
                          std::to_string(text.find('(', open + 1) + 1));
    std::string pre_text = text.substr(0, open);
    std::string per_text = text.substr(open + 1, close - open - 1);
    if (per_text.empty())
        throw usage_error("empty period at position " + std::to_string(open + 2));
    if (!pre_text.empty() && pre_text.back() == ',') pre_text.pop_back();
    FiniteWord pre = detail::word_from_tokens(detail::word_tokens(pre_text, ab, 0), ab);
    FiniteWord per =
        detail::word_from_tokens(detail::word_tokens(per_text, ab, open + 1), ab);
    return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

inline std::string format_word(const FiniteWord& w) { return w.str(); }
inline std::string format_word(const EventuallyPeriodicWord& w) { return w.str(); }
inline std::string format_word(const WordValue& w) {
    return std::visit([](const auto& v) { return v.str(); }, w);
}

/// Resolve a named schedule shortcut; nullopt when the name is not one of
/// standard, opposite, alternating.
inline std::optional<OrderSchedule> named_schedule(const std::string& name,
                                                   const AlphabetPtr& ab) {
    if (name == "standard") return OrderSchedule::standard(ab);
    if (name == "opposite") return OrderSchedule::opposite(ab);
    if (name == "alternating") return OrderSchedule::alternating(ab);
    return std::nullopt;
}

/// Parse a comma-separated alphabet listing ("0,1" or "a,b,n").
inline AlphabetPtr parse_alphabet(const std::string& text) {
    std::vector<std::string> symbols;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty())
            throw usage_error("empty alphabet symbol at position " + std::to_string(start + 1));
        symbols.push_back(std::move(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Alphabet::make(std::move(symbols));
}

}  // namespace glyndon
