#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "order.hpp"
#include "stream.hpp"
#include "text.hpp"

namespace glyndon {

/// Order schedule file:
///   { "alphabet": ["0","1"], "preperiod": [], "period": [["0","1"],["1","0"]] }
/// Each inner list names the symbols from smallest to largest for that
/// position.
inline OrderSchedule schedule_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("period"))
        throw usage_error("order schedule file needs \"alphabet\" and \"period\" fields");
    if (!j["alphabet"].is_array())
        throw usage_error("order schedule \"alphabet\" must be a list of symbols");
    std::vector<std::string> symbols;
    for (const auto& s : j["alphabet"]) {
        if (!s.is_string()) throw usage_error("alphabet symbols must be strings");
        symbols.push_back(s.get<std::string>());
    }
    AlphabetPtr ab = Alphabet::make(std::move(symbols));

    auto parse_perms = [&](const nlohmann::json& arr, const char* what) {
        if (!arr.is_array())
            throw usage_error(std::string("order schedule \"") + what + "\" must be a list");
        std::vector<OrderSchedule::Permutation> perms;
        for (const auto& perm : arr) {
            if (!perm.is_array())
                throw usage_error("each order position must list symbols smallest to largest");
            OrderSchedule::Permutation p;
            for (const auto& s : perm) {
                if (!s.is_string()) throw usage_error("order symbols must be strings");
                p.push_back(ab->id_of(s.get<std::string>()));
            }
            perms.push_back(std::move(p));
        }
        return perms;
    };

    std::vector<OrderSchedule::Permutation> pre;
    if (j.contains("preperiod")) pre = parse_perms(j["preperiod"], "preperiod");
    std::vector<OrderSchedule::Permutation> per = parse_perms(j["period"], "period");
    return OrderSchedule::make(std::move(ab), std::move(pre), std::move(per));
}

inline nlohmann::json schedule_to_json(const OrderSchedule& ord) {
    nlohmann::json j;
    j["alphabet"] = ord.alphabet()->symbols();
    auto dump = [&](const std::vector<OrderSchedule::Permutation>& perms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : perms) {
            nlohmann::json perm = nlohmann::json::array();
            for (symbol_id s : p) perm.push_back(ord.alphabet()->symbol(s));
            arr.push_back(std::move(perm));
        }
        return arr;
    };
    j["preperiod"] = dump(ord.preperiod());
    j["period"] = dump(ord.period());
    return j;
}

/// Morphism file: { "seed": "0", "rules": { "0": "01", "1": "0" } }.
/// The alphabet is the sorted set of rule keys unless one is supplied.
inline StreamWord morphism_from_json(const nlohmann::json& j, AlphabetPtr alphabet = nullptr) {
    if (!j.is_object() || !j.contains("seed") || !j.contains("rules"))
        throw usage_error("morphism file needs \"seed\" and \"rules\" fields");
    if (!j["rules"].is_object()) throw usage_error("morphism \"rules\" must be an object");
    if (!alphabet) {
        std::vector<std::string> symbols;
        for (const auto& [key, value] : j["rules"].items()) symbols.push_back(key);
        alphabet = Alphabet::make(std::move(symbols));
    }
    std::map<symbol_id, std::vector<symbol_id>> rules;
    for (const auto& [key, value] : j["rules"].items()) {
        if (!value.is_string()) throw usage_error("morphism images must be word strings");
        rules[alphabet->id_of(key)] =
            parse_finite_word(value.get<std::string>(), alphabet).ids();
    }
    if (!j["seed"].is_string()) throw usage_error("morphism \"seed\" must be a symbol string");
    symbol_id seed = alphabet->id_of(j["seed"].get<std::string>());
    return StreamWord::from_morphism(std::move(alphabet), std::move(rules), seed);
}

}  // namespace glyndon
