#include <catch2/catch_amalgamated.hpp>

#include <glyndon/glyndon.hpp>

using namespace glyndon;

namespace {

FiniteWord fw(const std::string& text, const AlphabetPtr& ab) {
    return parse_finite_word(text, ab);
}

EventuallyPeriodicWord ep(const std::string& text, const AlphabetPtr& ab) {
    return std::get<EventuallyPeriodicWord>(parse_word(text, ab));
}

// Reference comparator written from the definition: walk the letters and
// decide at the first difference using the position's permutation directly.
Ordering reference_compare(const FiniteWord& x, const FiniteWord& y, const OrderSchedule& ord) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 1; i <= n; ++i) {
        if (x.letter(i) == y.letter(i)) continue;
        const auto& perm = ord.permutation_at(i);
        for (symbol_id s : perm) {
            if (s == x.letter(i)) return Ordering::LT;
            if (s == y.letter(i)) return Ordering::GT;
        }
    }
    if (x.size() == y.size()) return Ordering::EQ;
    return x.size() < y.size() ? Ordering::LT : Ordering::GT;
}

std::vector<FiniteWord> all_words_up_to(const AlphabetPtr& ab, std::size_t max_len) {
    std::vector<FiniteWord> out{FiniteWord::empty(ab)};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<symbol_id> ids(len, 0);
        while (true) {
            out.emplace_back(ab, ids);
            std::size_t i = len;
            bool carried = true;
            while (i-- > 0) {
                if (++ids[i] < ab->size()) {
                    carried = false;
                    break;
                }
                ids[i] = 0;
            }
            if (carried) break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("alphabet construction and lookup", "[core]") {
    auto ab = Alphabet::make({"a", "b", "n"});
    CHECK(ab->size() == 3);
    CHECK(ab->id_of("n") == 2);
    CHECK(ab->symbol(0) == "a");
    CHECK_FALSE(ab->find("z").has_value());
    CHECK_THROWS_AS(ab->id_of("z"), domain_error);
    CHECK_THROWS_AS(Alphabet::make({"0", "0"}), domain_error);
    CHECK_THROWS_AS(Alphabet::make({}), domain_error);
}

TEST_CASE("order schedule positions and validation", "[core]") {
    auto ab = Alphabet::binary();
    auto alt = OrderSchedule::alternating(ab);
    CHECK(alt.compare_at(1, 0, 1) < 0);  // standard at odd positions
    CHECK(alt.compare_at(2, 0, 1) > 0);  // reversed at even positions
    CHECK(alt.compare_at(3, 0, 1) < 0);
    CHECK(alt.compare_at(5, 1, 1) == 0);

    auto sched = OrderSchedule::make(ab, {{1, 0}}, {{0, 1}});
    CHECK(sched.compare_at(1, 0, 1) > 0);  // preperiod slot
    CHECK(sched.compare_at(2, 0, 1) < 0);
    CHECK(sched.compare_at(7, 0, 1) < 0);

    CHECK_THROWS_AS(OrderSchedule::make(ab, {}, {}), domain_error);
    CHECK_THROWS_AS(OrderSchedule::make(ab, {}, {{0, 0}}), domain_error);
    CHECK_THROWS_AS(OrderSchedule::make(ab, {}, {{0}}), domain_error);
}

TEST_CASE("finite word slicing and rotation", "[core]") {
    auto ab = Alphabet::binary();
    FiniteWord w = fw("0110", ab);
    CHECK(w.slice(2, 3).str() == "11");
    CHECK(w.slice(1, 4) == w);
    CHECK(w.rotation_from(3).str() == "1001");
    CHECK(w.prefix(0).is_empty());
    CHECK(w.suffix_from(5).is_empty());
    CHECK_THROWS_AS(w.slice(0, 2), domain_error);
    CHECK_THROWS_AS(w.slice(3, 2), domain_error);
    CHECK_THROWS_AS(w.slice(2, 5), domain_error);
    CHECK_THROWS_AS(FiniteWord(ab, {0, 2}), domain_error);
}

TEST_CASE("compare_finite reference vectors", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    auto opp = OrderSchedule::opposite(ab);
    auto alt = OrderSchedule::alternating(ab);

    auto r = compare_finite(fw("0", ab), fw("01", ab), std_ord);
    CHECK(r.order == Ordering::LT);  // proper prefix
    CHECK(r.index == 0);

    r = compare_finite(fw("01", ab), fw("10", ab), alt);
    CHECK(r.order == Ordering::LT);
    CHECK(r.index == 1);

    r = compare_finite(fw("00", ab), fw("01", ab), opp);
    CHECK(r.order == Ordering::GT);  // reversed order: 1 < 0
    CHECK(r.index == 2);

    CHECK(compare_finite(fw("0110", ab), fw("0110", ab), alt).order == Ordering::EQ);
}

TEST_CASE("compare_finite agrees with the reference comparator exhaustively", "[core]") {
    auto ab = Alphabet::binary();
    auto words = all_words_up_to(ab, 3);
    for (const auto& ord : named_schedules(ab))
        for (const auto& x : words)
            for (const auto& y : words)
                REQUIRE(compare_finite(x, y, ord).order == reference_compare(x, y, ord));
}

TEST_CASE("comparison is a total order", "[core]") {
    auto ab = Alphabet::ternary();
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng = trial_rng(11, t);
        auto schedules = named_schedules(ab);
        OrderSchedule ord = rng.coin() ? schedules[rng.below(3)]
                                       : random_schedule(rng, ab, rng.below(2), 1 + rng.below(3));
        FiniteWord x = random_finite_word(rng, ab, 0, 6);
        FiniteWord y = random_finite_word(rng, ab, 0, 6);
        FiniteWord z = random_finite_word(rng, ab, 0, 6);
        auto xy = compare_finite(x, y, ord).order;
        CHECK(compare_finite(y, x, ord).order == reversed(xy));
        CHECK((xy == Ordering::EQ) == (x == y));
        // transitivity
        if (xy != Ordering::GT && compare_finite(y, z, ord).order != Ordering::GT)
            CHECK(compare_finite(x, z, ord).order != Ordering::GT);
    }
}

TEST_CASE("prefix compatibility", "[core]") {
    auto ab = Alphabet::binary();
    CHECK(prefix_compatible(fw("01", ab), fw("0111", ab)));
    CHECK(prefix_compatible(fw("01", ab), fw("01", ab)));
    CHECK_FALSE(prefix_compatible(fw("01", ab), fw("10", ab)));
    CHECK(prefix_compatible(FiniteWord::empty(ab), fw("10", ab)));
    CHECK(prefix_compatible(fw("010", ab), ep("(01)^w", ab)));
    CHECK_FALSE(prefix_compatible(fw("011", ab), ep("(01)^w", ab)));
    CHECK(prefix_compatible(ep("0(10)^w", ab), ep("(01)^w", ab)));
    CHECK_FALSE(prefix_compatible(ep("(0)^w", ab), ep("(01)^w", ab)));
}

TEST_CASE("weak chain reference vectors", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    auto alt = OrderSchedule::alternating(ab);

    CHECK(compare_weak_chain({fw("0", ab), fw("01", ab), fw("1", ab)}, std_ord));
    CHECK_FALSE(compare_weak_chain({fw("1", ab), fw("0", ab)}, std_ord));

    // truncations to length 2 under alternating: 01 <= 01 <= 10
    std::vector<WordValue> chain{fw("01", ab), fw("0111", ab), fw("10", ab)};
    CHECK(compare_finite(fw("01", ab), fw("10", ab), alt).order == Ordering::LT);
    CHECK(compare_weak_chain(chain, alt));

    CHECK_THROWS_AS(compare_weak_chain({fw("0", ab)}, std_ord), usage_error);
    CHECK_THROWS_AS(compare_weak_chain({}, std_ord), usage_error);

    // all-infinite chains fall back to the equality bound
    CHECK(compare_weak_chain({ep("(0)^w", ab), ep("(01)^w", ab), ep("(1)^w", ab)}, std_ord));
    CHECK_FALSE(compare_weak_chain({ep("(1)^w", ab), ep("(0)^w", ab)}, std_ord));
}

TEST_CASE("omega_compare reference vectors", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    auto alt = OrderSchedule::alternating(ab);

    CHECK(omega_compare(fw("0", ab), fw("01", ab), std_ord) == Ordering::LT);
    CHECK(omega_compare(fw("01", ab), fw("0101", ab), std_ord) == Ordering::EQ);

    // expanding both powers to |u|+|v| letters and comparing matches
    FiniteWord u = fw("01", ab), v = fw("0111", ab);
    FiniteWord eu = FractionalPower(u, 6).realize();
    FiniteWord ev = FractionalPower(v, 6).realize();
    CHECK(omega_compare(u, v, alt) == compare_finite(eu, ev, alt).order);

    CHECK_THROWS_AS(omega_compare(FiniteWord::empty(ab), fw("0", ab), std_ord), domain_error);
}

TEST_CASE("omega window of |u|+|v| letters is always enough", "[core]") {
    auto ab = Alphabet::ternary();
    for (std::uint64_t t = 0; t < 500; ++t) {
        TrialRng rng = trial_rng(23, t);
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        FiniteWord u = random_finite_word(rng, ab, 1, 7);
        FiniteWord v = random_finite_word(rng, ab, 1, 7);
        auto tight = detail::omega_compare_window(u, v, ord, u.size() + v.size()).order;
        auto wide = detail::omega_compare_window(u, v, ord, 4 * (u.size() + v.size())).order;
        REQUIRE(tight == wide);
    }
}

TEST_CASE("omega equality means the words commute", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    for (std::uint64_t t = 0; t < 500; ++t) {
        TrialRng rng = trial_rng(37, t);
        FiniteWord u = random_finite_word(rng, ab, 1, 6);
        FiniteWord v = rng.coin() ? random_finite_word(rng, ab, 1, 6)
                                  : primitive_root(u).root.power(rng.between(1, 3));
        bool eq = omega_compare(u, v, std_ord) == Ordering::EQ;
        CHECK(eq == (u + v == v + u));
    }
}

TEST_CASE("eventually periodic comparison reference vectors", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);

    CHECK(compare_eventually_periodic(ep("(01)^w", ab), ep("(01)^w", ab), std_ord).order ==
          Ordering::EQ);

    auto r = compare_eventually_periodic(ep("0(1)^w", ab), ep("(0)^w", ab), std_ord);
    CHECK(r.order == Ordering::GT);
    CHECK(r.index == 2);

    // same letter sequence; canonicalization makes them identical
    CHECK(ep("(01)^w", ab) == ep("0(10)^w", ab));
    CHECK(compare_eventually_periodic(ep("(01)^w", ab), ep("0(10)^w", ab), std_ord).order ==
          Ordering::EQ);
}

TEST_CASE("mixed comparison reference vectors", "[core]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);

    auto r = mixed_compare(fw("0", ab), ep("(01)^w", ab), std_ord);
    CHECK(r.order == Ordering::LT);
    CHECK(r.index == 0);  // proper prefix

    r = mixed_compare(fw("1", ab), ep("(01)^w", ab), std_ord);
    CHECK(r.order == Ordering::GT);
    CHECK(r.index == 1);

    CHECK(mixed_compare(fw("0111", ab), ep("0(1)^w", ab), std_ord).order == Ordering::LT);
}

TEST_CASE("omega power versus infinite word transfers across concatenation", "[core]") {
    auto ab = Alphabet::binary();
    for (std::uint64_t t = 0; t < 800; ++t) {
        TrialRng rng = trial_rng(53, t);
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        FiniteWord u = random_finite_word(rng, ab, 1, 5);
        EventuallyPeriodicWord v = random_ep_word(rng, ab, 4, 4);
        Ordering omega_side =
            compare_eventually_periodic(EventuallyPeriodicWord::omega(u), v, ord).order;
        Ordering concat_side = compare_eventually_periodic(prepend(u, v), v, ord).order;
        REQUIRE((omega_side == Ordering::GT) == (concat_side == Ordering::GT));
        REQUIRE((omega_side == Ordering::LT) == (concat_side == Ordering::LT));
    }
}

TEST_CASE("canonicalization is idempotent and letter-preserving", "[core]") {
    auto ab = Alphabet::ternary();
    for (std::uint64_t t = 0; t < 400; ++t) {
        TrialRng rng = trial_rng(71, t);
        FiniteWord pre = random_finite_word(rng, ab, 0, 5);
        FiniteWord per = random_finite_word(rng, ab, 1, 5);
        EventuallyPeriodicWord w(pre, per);
        EventuallyPeriodicWord again(w.preperiod(), w.period());
        REQUIRE(w == again);
        // letters agree with the raw, uncanonicalized representation
        for (std::size_t i = 1; i <= pre.size() + 3 * per.size(); ++i) {
            symbol_id raw = i <= pre.size() ? pre.letter(i)
                                            : per.ids()[(i - pre.size() - 1) % per.size()];
            REQUIRE(w.letter_at(i) == raw);
        }
        REQUIRE(primitive_root(w.period()).exponent == 1);
        if (!w.preperiod().is_empty())
            REQUIRE(w.preperiod().ids().back() != w.period().ids().back());
    }
}

TEST_CASE("alphabet mismatches are domain errors", "[core]") {
    auto ab = Alphabet::binary();
    auto abc = Alphabet::ternary();
    auto ord = OrderSchedule::standard(ab);
    CHECK_THROWS_AS(compare_finite(fw("0", ab), fw("0", abc), ord), domain_error);
    CHECK_THROWS_AS(compare_finite(fw("0", abc), fw("0", abc), ord), domain_error);
    CHECK_THROWS_AS(fw("0", ab) + fw("0", abc), domain_error);
}
