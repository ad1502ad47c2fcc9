#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smp/gale_shapley.hpp"
#include "smp/generate.hpp"
#include "smp/manipulation.hpp"
#include "smp/procedures.hpp"

using namespace smp;

TEST_CASE("the five-condition check on the universally manipulable instance") {
    const Profile p = fixtures::universal_example();
    const auto witness = universally_manipulable_by(p, 0);
    REQUIRE(witness.has_value());
    CHECK(*witness == ManipulationWitness{0, 1, 1});  // m1, m2, w2
    CHECK_FALSE(universally_manipulable_by(p, 1).has_value());
    CHECK_FALSE(universally_manipulable_by(p, 2).has_value());
}

TEST_CASE("distinct first choices leave every woman with a single proposal") {
    const Profile p = fixtures::distinct_firsts(4);
    for (int w = 0; w < p.size(); ++w)
        CHECK_FALSE(universally_manipulable_by(p, w).has_value());
}

TEST_CASE("the universal manipulation moves the male-optimal partner last") {
    const Profile p = fixtures::universal_example();
    const Profile manipulated = universal_manipulation(p, 0);
    CHECK(manipulated.women_prefs()[0] == std::vector<int>{1, 2, 0});  // m2 > m3 > m1
    CHECK(manipulated.men_prefs() == p.men_prefs());

    for (const auto& entry : registered_procedures()) {
        REQUIRE(entry.applicable(manipulated));
        CHECK(entry.run(manipulated).husband_of(0) == 1);  // (m2, w1) everywhere
    }
    for (const auto& mu : all_stable_matchings(manipulated))
        CHECK(mu.husband_of(0) == 1);
    CHECK(male_optimal(manipulated).husband_of(0) == female_optimal(manipulated).husband_of(0));

    CHECK_THROWS_AS(universal_manipulation(p, 2), std::invalid_argument);
}

TEST_CASE("report search against the male-optimal procedure") {
    const Profile p = fixtures::universal_example();
    const auto proc = find_procedure("gs-male");

    const auto rep = brute_force_manipulation(proc, p, {Gender::women, 0});
    REQUIRE(rep.has_value());
    CHECK(rep->manipulated_partner == 1);  // m2, her favourite
    CHECK(rep->truthful_partner == 0);
    CHECK(rep->verdict == Verdict::strictly_better);

    CHECK_FALSE(brute_force_manipulation(proc, p, {Gender::women, 2}).has_value());
    CHECK_FALSE(brute_force_manipulation(proc, p, {Gender::women, 1}).has_value());
}

TEST_CASE("agents already holding their first choice cannot improve") {
    const Profile p = fixtures::distinct_firsts(4);
    const auto proc = find_procedure("gs-male");
    for (int m = 0; m < p.size(); ++m)
        CHECK_FALSE(brute_force_manipulation(proc, p, {Gender::men, m}).has_value());
}

TEST_CASE("reported improvements are confirmed by re-running the procedure") {
    SeededRng rng(71);
    const auto proc = find_procedure("score");
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Profile p = random_profile(n, rng);
        const Agent agent{rng.chance(50) ? Gender::men : Gender::women,
                          static_cast<int>(rng.below(n))};
        const auto rep = brute_force_manipulation(proc, p, agent);
        if (!rep)
            continue;
        const Matching rerun = proc(p.with_list(agent.gender, agent.index, rep->reported_list));
        const int partner = agent.gender == Gender::men ? rerun.wife_of(agent.index)
                                                        : rerun.husband_of(agent.index);
        CHECK(partner == rep->manipulated_partner);
        CHECK(p.rank(agent.gender, agent.index, partner) <
              p.rank(agent.gender, agent.index, rep->truthful_partner));
    }
}

TEST_CASE("the report search refuses oversized instances") {
    const Profile p = fixtures::distinct_firsts(7);
    CHECK_THROWS_AS(brute_force_manipulation(find_procedure("gs-male"), p, {Gender::men, 0}),
                    BoundExceeded);
}

TEST_CASE("first/last rewrite on the 3x3 instance") {
    const Profile p = fixtures::example_one();
    // m2's male-optimal partner is w2, his female-optimal partner w3; his
    // list already reads that way, so the rewrite changes nothing.
    const Profile rewritten = firstlast_heuristic(p, 1);
    CHECK(rewritten.men_prefs()[1] == std::vector<int>{1, 0, 2});
    CHECK(rewritten == p);

    // degenerate case: both optima coincide
    const Profile fixed = fixtures::distinct_firsts(3);
    CHECK(firstlast_heuristic(fixed, 0) == fixed);
}

TEST_CASE("whenever some report beats the score procedure, first/last reaches the optimum") {
    SeededRng rng(72);
    const auto proc = find_procedure("score");
    int manipulable = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const Profile p = random_profile(n, rng);
        for (int man = 0; man < n; ++man) {
            if (!brute_force_manipulation(proc, p, {Gender::men, man}).has_value())
                continue;
            ++manipulable;
            const int target = male_optimal(p).wife_of(man);
            CHECK(proc(firstlast_heuristic(p, man)).wife_of(man) == target);
        }
    }
    CHECK(manipulable > 0);  // the claim was actually exercised
}

TEST_CASE("universal manipulations beat every registered procedure on biased instances") {
    SeededRng rng(73);
    int found = 0;
    while (found < 40) {
        const auto candidate = oracles::biased_universal_candidate(rng);
        if (!candidate)
            continue;
        ++found;
        const auto& [p, w] = *candidate;
        const int target = female_optimal(p).husband_of(w);
        const Profile manipulated = universal_manipulation(p, w);
        for (const auto& entry : registered_procedures())
            if (entry.applicable(manipulated))
                CHECK(entry.run(manipulated).husband_of(w) == target);
        for (const auto& mu : all_stable_matchings(manipulated))
            CHECK(mu.husband_of(w) == target);
    }
}
