#include <catch2/catch_amalgamated.hpp>

#include <glyndon/glyndon.hpp>

using namespace glyndon;

namespace {

EventuallyPeriodicWord ep(const std::string& text, const AlphabetPtr& ab) {
    return std::get<EventuallyPeriodicWord>(parse_word(text, ab));
}

}  // namespace

TEST_CASE("infinite generalized Lyndon vectors", "[infinite]") {
    auto ab = Alphabet::binary();
    auto alt = OrderSchedule::alternating(ab);

    CHECK(is_infinite_generalized_lyndon(ep("010000100(1)^w", ab), alt));
    CHECK_FALSE(is_infinite_generalized_lyndon(ep("01000010(0)^w", ab), alt));
    CHECK_FALSE(is_infinite_generalized_lyndon(ep("01000010(1)^w", ab), alt));
    CHECK_FALSE(is_infinite_generalized_lyndon(ep("(01)^w", ab), alt));
    // the suffix starting at index 3 equals the word itself
    CHECK(compare_eventually_periodic(ep("(01)^w", ab), ep("(01)^w", ab).suffix_from(3), alt)
              .order == Ordering::EQ);
}

TEST_CASE("purely periodic words are never infinite generalized Lyndon", "[infinite]") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng = trial_rng(211, t);
        AlphabetPtr ab = rng.coin() ? Alphabet::binary() : Alphabet::ternary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        FiniteWord per = random_finite_word(rng, ab, 1, 6);
        REQUIRE_FALSE(
            is_infinite_generalized_lyndon(EventuallyPeriodicWord::omega(per), ord));
    }
}

TEST_CASE("first generalized Lyndon suffix index", "[infinite]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    auto alt = OrderSchedule::alternating(ab);

    auto m = first_gl_suffix_index(ep("0(1)^w", ab), std_ord);
    REQUIRE(m.has_value());
    CHECK(*m == 1);

    CHECK_FALSE(first_gl_suffix_index(ep("(01)^w", ab), alt).has_value());

    m = first_gl_suffix_index(ep("10(1)^w", ab), std_ord);
    REQUIRE(m.has_value());
    CHECK(*m == 2);
}

TEST_CASE("factorization vectors for eventually periodic words", "[infinite]") {
    auto ab = Alphabet::binary();
    auto std_ord = OrderSchedule::standard(ab);
    auto alt = OrderSchedule::alternating(ab);

    SECTION("(01)^w under alternating ends in the periodic tail 01") {
        auto f = factorize_eventually_periodic(ep("(01)^w", ab), alt);
        CHECK(f.head.empty());
        REQUIRE(f.periodic_tail() != nullptr);
        CHECK(f.periodic_tail()->word.str() == "01");
    }

    SECTION("the extendable word is its own single-term factorization") {
        auto w = ep("010000100(1)^w", ab);
        auto f = factorize_eventually_periodic(w, alt);
        CHECK(f.head.empty());
        REQUIRE(f.infinite_term() != nullptr);
        CHECK(f.infinite_term()->word == w);
    }

    SECTION("(0)^w under standard") {
        auto f = factorize_eventually_periodic(ep("(0)^w", ab), std_ord);
        CHECK(f.head.empty());
        REQUIRE(f.periodic_tail() != nullptr);
        CHECK(f.periodic_tail()->word.str() == "0");
    }

    SECTION("a word with both a head and an infinite tail") {
        auto f = factorize_eventually_periodic(ep("10(1)^w", ab), std_ord);
        REQUIRE(f.head.size() == 1);
        CHECK(f.head[0].str() == "1");
        REQUIRE(f.infinite_term() != nullptr);
        CHECK(f.infinite_term()->word == ep("0(1)^w", ab));
    }

    SECTION("a word with a head before a periodic tail") {
        auto f = factorize_eventually_periodic(ep("1(0)^w", ab), std_ord);
        REQUIRE(f.head.size() == 1);
        CHECK(f.head[0].str() == "1");
        REQUIRE(f.periodic_tail() != nullptr);
        CHECK(f.periodic_tail()->word.str() == "0");
    }
}

TEST_CASE("factorization satisfies every invariant on random words", "[infinite]") {
    for (std::uint64_t t = 0; t < 400; ++t) {
        TrialRng rng = trial_rng(223, t);
        AlphabetPtr ab = rng.coin() ? Alphabet::binary() : Alphabet::ternary();
        auto schedules = named_schedules(ab);
        OrderSchedule ord = rng.coin() ? schedules[rng.below(3)]
                                       : random_schedule(rng, ab, rng.below(2), 1 + rng.below(3));
        EventuallyPeriodicWord w = random_ep_word(rng, ab, 5, 5);
        auto f = factorize_eventually_periodic(w, ord);
        std::string reason;
        REQUIRE(validate_infinite_factorization(f, w, ord, &reason));
    }
}

TEST_CASE("a periodic-tail factorization implies no generalized Lyndon suffix",
          "[infinite]") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng = trial_rng(241, t);
        AlphabetPtr ab = rng.coin() ? Alphabet::binary() : Alphabet::ternary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        EventuallyPeriodicWord w = random_ep_word(rng, ab, 4, 4);
        auto f = factorize_eventually_periodic(w, ord);
        if (f.periodic_tail() != nullptr)
            REQUIRE_FALSE(first_gl_suffix_index(w, ord).has_value());
        else
            REQUIRE(first_gl_suffix_index(w, ord).has_value());
    }
}

TEST_CASE("the tail starts at the first generalized Lyndon suffix and no earlier",
          "[infinite]") {
    std::size_t checked = 0;
    for (std::uint64_t t = 0; checked < 200 && t < 4000; ++t) {
        TrialRng rng = trial_rng(257, t);
        AlphabetPtr ab = rng.coin() ? Alphabet::binary() : Alphabet::ternary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        EventuallyPeriodicWord w = random_ep_word(rng, ab, 5, 4);
        auto m = first_gl_suffix_index(w, ord);
        if (!m) continue;
        ++checked;
        auto f = factorize_eventually_periodic(w, ord);
        REQUIRE(f.infinite_term() != nullptr);
        std::size_t head_letters = 0;
        for (const auto& h : f.head) head_letters += h.size();
        REQUIRE(head_letters + 1 == *m);
        for (std::size_t i = 1; i < *m; ++i)
            REQUIRE_FALSE(is_infinite_generalized_lyndon(w.suffix_from(i), ord));
    }
    REQUIRE(checked == 200);
}

TEST_CASE("exactly one rotation of a primitive word is generalized Lyndon", "[infinite]") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng = trial_rng(271, t);
        AlphabetPtr ab = rng.coin() ? Alphabet::binary() : Alphabet::ternary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        FiniteWord p = random_finite_word(rng, ab, 1, 7);
        if (primitive_root(p).exponent != 1) continue;
        std::size_t hits = 0;
        for (std::size_t i = 1; i <= p.size(); ++i)
            if (is_generalized_lyndon(p.rotation_from(i), ord)) ++hits;
        REQUIRE(hits == 1);
    }
}

TEST_CASE("stream factorization of an eventually periodic word stabilizes to the exact one",
          "[infinite]") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        TrialRng rng = trial_rng(283, t);
        AlphabetPtr ab = Alphabet::binary();
        auto schedules = named_schedules(ab);
        const OrderSchedule& ord = schedules[rng.below(3)];
        EventuallyPeriodicWord w = random_ep_word(rng, ab, 4, 4);
        auto exact = factorize_eventually_periodic(w, ord);
        auto streamed = factorize_stream(StreamWord::from_word(w), 1 << 10, ord);
        // stable stream factors follow the exact head, then (for a periodic
        // tail) copies of the tail word
        for (std::size_t i = 0; i < streamed.head.size(); ++i) {
            if (i < exact.head.size()) {
                REQUIRE(streamed.head[i] == exact.head[i]);
            } else if (const auto* tail = exact.periodic_tail()) {
                REQUIRE(streamed.head[i] == tail->word);
            }
        }
    }
}
