// Batch front end for the generalized Lyndon toolkit. Every subcommand
// prints line-delimited JSON on stdout; structured errors go to stderr.
// Exit codes: 0 success/true, 1 false, 2 usage error, 3 domain error,
// 4 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <glyndon/glyndon.hpp>

namespace {

using nlohmann::json;
using namespace glyndon;

struct CommonOptions {
    std::string order = "standard";
    std::string alphabet = "0,1";
    bool alphabet_given = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--order", opts.order,
                    "order schedule: standard|opposite|alternating|@file.json")
        ->capture_default_str();
    auto* a = cmd->add_option("--alphabet", opts.alphabet,
                              "comma-separated alphabet symbols, smallest first")
                  ->capture_default_str();
    cmd->callback([&opts, a]() { opts.alphabet_given = a->count() > 0; });
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw usage_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

OrderSchedule resolve_order(const CommonOptions& opts) {
    if (!opts.order.empty() && opts.order.front() == '@') {
        OrderSchedule ord = schedule_from_json(load_json_file(opts.order.substr(1)));
        if (opts.alphabet_given) {
            AlphabetPtr requested = parse_alphabet(opts.alphabet);
            if (!same_alphabet(requested, ord.alphabet()))
                throw usage_error("--alphabet disagrees with the order file's alphabet");
        }
        return ord;
    }
    AlphabetPtr ab = parse_alphabet(opts.alphabet);
    auto named = named_schedule(opts.order, ab);
    if (!named)
        throw usage_error("unknown order '" + opts.order +
                          "' (expected standard|opposite|alternating|@file)");
    return *named;
}

StreamWord resolve_stream(const std::string& name, const OrderSchedule& ord) {
    if (name.find('(') != std::string::npos) {
        auto parsed = parse_word(name, ord.alphabet());
        return StreamWord::from_word(std::get<EventuallyPeriodicWord>(parsed));
    }
    if (!name.empty() && name.front() == '@')
        return morphism_from_json(load_json_file(name.substr(1)));
    if (name == "thue_morse") return StreamWord::thue_morse();
    if (name == "fibonacci_word") return StreamWord::fibonacci_word();
    if (name == "period_doubling") return StreamWord::period_doubling();
    if (name == "champernowne_binary") return StreamWord::champernowne_binary();
    throw usage_error(
        "unknown stream '" + name +
        "' (expected a (PERIOD)^w word, @morphism.json, or one of thue_morse, "
        "fibonacci_word, period_doubling, champernowne_binary)");
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_is_lyndon(const std::string& word_text, const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    WordValue w = parse_word(word_text, ord.alphabet());
    json out{{"word", format_word(w)}, {"order", opts.order}};
    bool verdict;
    if (const auto* f = std::get_if<FiniteWord>(&w)) {
        verdict = is_generalized_lyndon(*f, ord);
        out["is_gl"] = verdict;
        if (!verdict && !f->is_empty()) {
            for (std::size_t i = 2; i <= f->size(); ++i) {
                FiniteWord rot = f->rotation_from(i);
                if (compare_finite(rot, *f, ord).order != Ordering::GT) {
                    out["witness_rotation"] = rot.str();
                    break;
                }
            }
        }
    } else {
        const auto& ep = std::get<EventuallyPeriodicWord>(w);
        verdict = is_infinite_generalized_lyndon(ep, ord);
        out["is_gl"] = verdict;
        if (!verdict) {
            std::size_t bound = ep.preperiod_length() + ep.period_length() + 1;
            for (std::size_t i = 2; i <= bound; ++i) {
                if (compare_eventually_periodic(ep, ep.suffix_from(i), ord).order !=
                    Ordering::LT) {
                    out["witness_suffix_index"] = i;
                    break;
                }
            }
        }
    }
    emit(out);
    return verdict ? 0 : 1;
}

int run_compare(const std::string& w1, const std::string& w2, const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    WordValue a = parse_word(w1, ord.alphabet());
    WordValue b = parse_word(w2, ord.alphabet());
    CompareResult r{Ordering::EQ, 0};
    if (std::holds_alternative<FiniteWord>(a) && std::holds_alternative<FiniteWord>(b)) {
        r = compare_finite(std::get<FiniteWord>(a), std::get<FiniteWord>(b), ord);
    } else if (std::holds_alternative<FiniteWord>(a)) {
        r = mixed_compare(std::get<FiniteWord>(a), std::get<EventuallyPeriodicWord>(b), ord);
    } else if (std::holds_alternative<FiniteWord>(b)) {
        r = mixed_compare(std::get<FiniteWord>(b), std::get<EventuallyPeriodicWord>(a), ord);
        r.order = reversed(r.order);
    } else {
        r = compare_eventually_periodic(std::get<EventuallyPeriodicWord>(a),
                                        std::get<EventuallyPeriodicWord>(b), ord);
    }
    emit(json{{"w1", format_word(a)},
              {"w2", format_word(b)},
              {"order", opts.order},
              {"ordering", to_string(r.order)},
              {"decision_index", r.index}});
    return 0;
}

json factors_json(const std::vector<FiniteWord>& factors) {
    json arr = json::array();
    for (const auto& f : factors) arr.push_back(f.str());
    return arr;
}

int run_factorize(const std::string& word_text, const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    WordValue w = parse_word(word_text, ord.alphabet());
    json out{{"word", format_word(w)}, {"order", opts.order}};
    if (const auto* f = std::get_if<FiniteWord>(&w)) {
        out["factors"] = factors_json(factorize_finite(*f, ord).factors);
    } else {
        InfiniteFactorization fz =
            factorize_eventually_periodic(std::get<EventuallyPeriodicWord>(w), ord);
        out["head"] = factors_json(fz.head);
        if (const auto* t = fz.infinite_term())
            out["tail"] = json{{"kind", "infinite"}, {"value", t->word.str()}};
        else if (const auto* t = fz.periodic_tail())
            out["tail"] = json{{"kind", "periodic"}, {"value", t->word.str()}};
    }
    emit(out);
    return 0;
}

int run_census(const std::string& stream, std::size_t budget, const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    CensusReport report = gl_prefix_census(resolve_stream(stream, ord), budget, ord);
    emit(json{{"stream", stream},
              {"order", opts.order},
              {"budget", report.budget},
              {"gl_prefix_lengths", report.gl_prefix_lengths},
              {"verdict", to_string(report.verdict)}});
    return 0;
}

int run_factorize_stream(const std::string& stream, std::size_t budget,
                         const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    InfiniteFactorization fz = factorize_stream(resolve_stream(stream, ord), budget, ord);
    emit(json{{"stream", stream},
              {"order", opts.order},
              {"budget", budget},
              {"head", factors_json(fz.head)},
              {"tail", json{{"kind", "open"},
                            {"residual_start", fz.open_tail()->residual_start}}}});
    return 0;
}

int run_check(const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
    SuiteReport report = run_suite(suite, trials, seed);
    json out{{"suite", report.name},
             {"trials", report.trials},
             {"passed", report.passed},
             {"failed", report.failed},
             {"seed", seed}};
    if (!report.failure_samples.empty()) out["failure_samples"] = report.failure_samples;
    emit(out);
    return report.failed == 0 ? 0 : 1;
}

int run_conjecture(const std::string& word_text, std::size_t max_period,
                   std::size_t max_preperiod, const CommonOptions& opts) {
    OrderSchedule ord = resolve_order(opts);
    WordValue parsed = parse_word(word_text, ord.alphabet());
    const auto* w = std::get_if<FiniteWord>(&parsed);
    if (!w) throw usage_error("conjecture search takes a finite word");
    auto witness = oracle::conjecture_search(*w, ord, {max_period, max_preperiod});
    json out{{"word", w->str()}, {"order", opts.order}};
    if (witness) {
        out["witness"] = witness->str();
        emit(out);
        return 0;
    }
    out["result"] = "inconclusive";
    emit(out);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Lyndon words: predicates, factorizations, censuses"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string word_arg, word2_arg, stream_arg, suite_arg;
    std::size_t budget = 1024, max_period = 8, max_preperiod = 12;
    std::uint64_t trials = 1000, seed = kDefaultSuiteSeed;

    auto* is_lyndon = app.add_subcommand(
        "is-lyndon", "test whether a finite or infinite word is generalized Lyndon");
    is_lyndon->add_option("word", word_arg, "word, e.g. 01000010 or 010000100(1)^w")
        ->required();
    add_common(is_lyndon, opts);

    auto* compare = app.add_subcommand("compare", "compare two words");
    compare->add_option("w1", word_arg)->required();
    compare->add_option("w2", word2_arg)->required();
    add_common(compare, opts);

    auto* factorize = app.add_subcommand(
        "factorize", "nonincreasing generalized Lyndon factorization of a word");
    factorize->add_option("word", word_arg)->required();
    add_common(factorize, opts);

    auto* census = app.add_subcommand(
        "census", "generalized Lyndon prefix census of a stream or infinite word");
    census->add_option("stream", stream_arg)->required();
    census->add_option("--budget", budget, "prefix budget")->capture_default_str();
    add_common(census, opts);

    auto* fstream = app.add_subcommand(
        "factorize-stream", "budgeted prefix-stabilization factorization of a stream");
    fstream->add_option("stream", stream_arg)->required();
    fstream->add_option("--budget", budget, "prefix budget")->capture_default_str();
    add_common(fstream, opts);

    auto* check = app.add_subcommand("check", "run a named invariant suite");
    check->add_option("suite", suite_arg, "one of c1|h|j|m|phi|uniqueness")->required();
    check->add_option("--trials", trials)->capture_default_str();
    check->add_option("--seed", seed)->capture_default_str();

    auto* conjecture = app.add_subcommand(
        "conjecture", "search for an eventually periodic infinite generalized Lyndon "
                      "extension of a finite generalized Lyndon word");
    conjecture->add_option("word", word_arg)->required();
    conjecture->add_option("--max-period", max_period)->capture_default_str();
    conjecture->add_option("--max-preperiod", max_preperiod)->capture_default_str();
    add_common(conjecture, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*is_lyndon) return run_is_lyndon(word_arg, opts);
        if (*compare) return run_compare(word_arg, word2_arg, opts);
        if (*factorize) return run_factorize(word_arg, opts);
        if (*census) return run_census(stream_arg, budget, opts);
        if (*fstream) return run_factorize_stream(stream_arg, budget, opts);
        if (*check) return run_check(suite_arg, trials, seed);
        if (*conjecture) return run_conjecture(word_arg, max_period, max_preperiod, opts);
    } catch (const usage_error& e) {
        std::cerr << nlohmann::json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << nlohmann::json{{"error", "domain"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const invariant_violation& e) {
        std::cerr << nlohmann::json{{"error", "invariant"}, {"detail", e.what()}}.dump()
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"detail", e.what()}}.dump()
                  << "\n";
        return 4;
    }
    return 2;
}
