#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smp/core.hpp"
#include "smp/gale_shapley.hpp"
#include "smp/generate.hpp"
#include "smp/io.hpp"

using namespace smp;

TEST_CASE("canonical text format parses") {
    const Profile p = parse_profile(fixtures::example_one_text());
    CHECK(p.size() == 3);
    CHECK(p.men_prefs()[0] == std::vector<int>{0, 1, 2});
    CHECK(p.men_prefs()[2] == std::vector<int>{2, 1, 0});
    CHECK(p.women_prefs()[1] == std::vector<int>{2, 0, 1});
    CHECK(p == fixtures::example_one());
}

TEST_CASE("singleton profile") {
    const Profile p = parse_profile("n=1\nm 1: 1\nw 1: 1\n");
    CHECK(p.size() == 1);
    CHECK(all_stable_matchings(p).size() == 1);
}

TEST_CASE("duplicate entry is rejected with its line number") {
    const char* text = "n=3\nm 1: 1 1 2\nm 2: 2 1 3\nm 3: 3 2 1\n"
                       "w 1: 1 2 3\nw 2: 1 2 3\nw 3: 1 2 3\n";
    try {
        parse_profile(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("malformed profiles are rejected") {
    CHECK_THROWS_AS(parse_profile(""), ParseError);
    CHECK_THROWS_AS(parse_profile("m 1: 1\n"), ParseError);                 // missing header
    CHECK_THROWS_AS(parse_profile("n=2\nm 1: 1 2\nm 2: 2 1\nw 1: 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("n=2\nm 1: 1 2\nm 2: 2 1\nw 1: 1 2\nw 2: 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("n=2\nm 1: 1 2\nm 2: 2 x\nw 1: 1 2\nw 2: 2 1\n"), ParseError);
}

TEST_CASE("text and JSON round trips reproduce the profile") {
    SeededRng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const Profile p = random_profile(n, rng);
        CHECK(parse_profile(serialize_profile(p)) == p);
        CHECK(parse_profile(profile_to_json(p)) == p);
    }
}

TEST_CASE("swap_genders exchanges the sides") {
    const Profile p = fixtures::example_one();
    const Profile s = swap_genders(p);
    CHECK(s.men_prefs() == p.women_prefs());
    CHECK(s.women_prefs() == p.men_prefs());
    CHECK(swap_genders(s) == p);
}

TEST_CASE("swap_genders is an involution and fixes symmetric profiles") {
    SeededRng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Profile p = random_profile(2 + static_cast<int>(rng.below(6)), rng);
        CHECK(swap_genders(swap_genders(p)) == p);
    }
    const Profile sym = fixtures::isomorphic_example();
    CHECK(swap_genders(sym) == sym);
}

TEST_CASE("stability and blocking pairs on the 3x3 instance") {
    const Profile p = fixtures::example_one();
    CHECK(is_stable(p, fixtures::matching({0, 1, 2})));
    const auto blocks = blocking_pairs(p, fixtures::matching({1, 0, 2}));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == BlockingPair{0, 0});
    CHECK_FALSE(is_stable(p, fixtures::matching({1, 0, 2})));
}

TEST_CASE("any 1x1 matching is stable") {
    const Profile p = parse_profile("n=1\nm 1: 1\nw 1: 1\n");
    CHECK(is_stable(p, fixtures::matching({0})));
}

TEST_CASE("non-bijection is rejected") {
    CHECK_THROWS_AS(Matching({0, 0, 2}), std::invalid_argument);
    const Profile p = fixtures::example_one();
    CHECK_THROWS_AS(blocking_pairs(p, fixtures::matching({0})), std::invalid_argument);
}

TEST_CASE("the 3x3 instance has exactly its two one-side-optimal stable matchings") {
    const auto all = all_stable_matchings(fixtures::example_one());
    REQUIRE(all.size() == 2);
    CHECK(all[0] == fixtures::matching({0, 1, 2}));
    CHECK(all[1] == fixtures::matching({0, 2, 1}));
}

TEST_CASE("identical-list profiles have a unique stable matching") {
    CHECK(all_stable_matchings(fixtures::isomorphic_example()).size() == 1);
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(all_stable_matchings(fixtures::distinct_firsts(9)), BoundExceeded);
    CHECK(all_stable_matchings(fixtures::distinct_firsts(9), 9).size() >= 1);
}

TEST_CASE("enumeration is nonempty and contains both deferred-acceptance outcomes") {
    SeededRng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const Profile p = random_profile(2 + static_cast<int>(rng.below(5)), rng);
        const auto all = all_stable_matchings(p);
        REQUIRE(!all.empty());
        CHECK(std::find(all.begin(), all.end(), male_optimal(p)) != all.end());
        CHECK(std::find(all.begin(), all.end(), female_optimal(p)) != all.end());
    }
}

TEST_CASE("stability agrees with a direct list-scan oracle over all bijections") {
    SeededRng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Profile p = random_profile(n, rng);
        std::vector<int> wife(n);
        std::iota(wife.begin(), wife.end(), 0);
        do {
            const Matching mu(wife);
            CHECK(is_stable(p, mu) == oracles::stable_scan(p, mu));
            CHECK(is_stable(p, mu) == blocking_pairs(p, mu).empty());
        } while (std::next_permutation(wife.begin(), wife.end()));
    }
}

TEST_CASE("stability is invariant under swapping with the transposed matching") {
    SeededRng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const Profile p = random_profile(n, rng);
        std::vector<int> wife(n);
        std::iota(wife.begin(), wife.end(), 0);
        rng.shuffle(wife);
        const Matching mu(wife);
        CHECK(is_stable(p, mu) == is_stable(swap_genders(p), mu.transposed()));
    }
}
