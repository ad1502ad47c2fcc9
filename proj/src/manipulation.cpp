#include "smp/manipulation.hpp"

#include <algorithm>
#include <numeric>

#include "smp/gale_shapley.hpp"

namespace smp {

std::optional<ManipulationWitness> universally_manipulable_by(const Profile& p, int woman) {
    const int n = p.size();
    const GSOutcome gs = gale_shapley(p, Gender::men);
    if (gs.proposals_received[woman].size() < 2)
        return std::nullopt;

    const Matching& mo = gs.matching;
    const Matching fo = female_optimal(p);
    const int m = mo.husband_of(woman);
    const int best = fo.husband_of(woman);
    const int v = mo.wife_of(best);  // the woman n is married to in the male optimal

    if (!(p.woman_rank(v, m) < p.woman_rank(v, best)))
        return std::nullopt;
    const int v_pos = p.man_rank(best, v);
    if (v_pos + 1 >= n || p.men_prefs()[best][v_pos + 1] != woman)
        return std::nullopt;
    const int w_pos = p.man_rank(m, woman);
    if (w_pos + 1 >= n || p.men_prefs()[m][w_pos + 1] != v)
        return std::nullopt;
    return ManipulationWitness{m, best, v};
}

Profile universal_manipulation(const Profile& p, int woman) {
    const auto witness = universally_manipulable_by(p, woman);
    if (!witness)
        throw std::invalid_argument("profile is not universally manipulable by w" +
                                    std::to_string(woman + 1));
    std::vector<int> list = p.women_prefs()[woman];
    list.erase(std::find(list.begin(), list.end(), witness->male_optimal_partner));
    list.push_back(witness->male_optimal_partner);
    return p.with_list(Gender::women, woman, std::move(list));
}

std::optional<ManipulationReport> brute_force_manipulation(const MatchingProcedure& proc,
                                                           const Profile& p, Agent agent,
                                                           int bound) {
    const int n = p.size();
    if (n > bound)
        throw BoundExceeded("manipulation search: n=" + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));

    auto partner_of = [&](const Matching& mu) {
        return agent.gender == Gender::men ? mu.wife_of(agent.index) : mu.husband_of(agent.index);
    };
    const int truthful = partner_of(proc(p));
    const int truthful_rank = p.rank(agent.gender, agent.index, truthful);

    std::vector<int> report(n);
    std::iota(report.begin(), report.end(), 0);
    int best_rank = truthful_rank;
    int best_partner = -1;
    std::vector<int> best_report;
    do {
        const int got = partner_of(proc(p.with_list(agent.gender, agent.index, report)));
        const int rank = p.rank(agent.gender, agent.index, got);
        if (rank < best_rank) {  // permutations arrive in lex order, so ties keep the least
            best_rank = rank;
            best_partner = got;
            best_report = report;
        }
    } while (std::next_permutation(report.begin(), report.end()));

    if (best_partner < 0)
        return std::nullopt;
    return ManipulationReport{agent, truthful, best_partner, std::move(best_report),
                              Verdict::strictly_better};
}

Profile firstlast_heuristic(const Profile& p, int man) {
    const int first = male_optimal(p).wife_of(man);
    const int last = female_optimal(p).wife_of(man);
    std::vector<int> list;
    list.reserve(p.size());
    list.push_back(first);
    for (int w : p.men_prefs()[man])
        if (w != first && w != last)
            list.push_back(w);
    if (last != first)
        list.push_back(last);
    return p.with_list(Gender::men, man, std::move(list));
}

namespace {

// Role bookkeeping while assembling the reduction profile. Lists are built
// as (explicit prefix) + (every unused index ascending).
struct ListBuilder {
    int size;
    std::vector<std::vector<int>> lists;

    explicit ListBuilder(int total) : size(total) {}

    int add(std::vector<int> prefix) {
        std::vector<char> used(size, 0);
        for (int x : prefix)
            used[x] = 1;
        for (int x = 0; x < size; ++x)
            if (!used[x])
                prefix.push_back(x);
        lists.push_back(std::move(prefix));
        return static_cast<int>(lists.size()) - 1;
    }
};

}  // namespace

std::vector<int> StvReduction::manipulated_report(const std::vector<int>& cover_sets) const {
    std::vector<char> in_cover(choice_a.size() + 1, 0);
    for (int j : cover_sets) {
        if (j < 1 || j > static_cast<int>(choice_a.size()))
            throw std::invalid_argument("cover index out of range");
        in_cover[j] = 1;
    }
    std::vector<int> report{prize};
    for (std::size_t j = 1; j <= choice_a.size(); ++j)
        report.push_back(in_cover[j] ? choice_a[j - 1] : choice_b[j - 1]);
    report.push_back(target_winner);
    std::vector<char> used(profile.size(), 0);
    for (int x : report)
        used[x] = 1;
    for (int x = 0; x < profile.size(); ++x)
        if (!used[x])
            report.push_back(x);
    return report;
}

StvReduction build_stv_reduction_profile(const ThreeCoverInstance& instance, int size_cap) {
    const int n = instance.ground_size;
    const int m = static_cast<int>(instance.sets.size());
    if (n < 3 || n % 3 != 0)
        throw std::invalid_argument("ground set size must be a positive multiple of 3");
    if (m < 1)
        throw std::invalid_argument("at least one subset is required");
    for (const auto& s : instance.sets) {
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw std::invalid_argument("subset elements must be distinct");
        for (int x : s)
            if (x < 1 || x > n)
                throw std::invalid_argument("subset element outside the ground set");
    }

    // Dummy multiplicities, one seat per dummy woman.
    int dummies = (12 * m - 1) + (12 * m - 2) + (10 * m + 2 * n / 3 - 1) + n * (12 * m - 3) +
                  m * (12 * m - 1);
    for (int j = 1; j <= m; ++j)
        dummies += (6 * m + 4 * j - 6) + 6 + (6 * m + 4 * j - 2) + 2 + (6 * m + 4 * j - 4) + 3 +
                   (6 * m + 4 * j - 4) + 3;
    const int total = 5 * m + n + 5 + dummies;
    if (total > size_cap)
        throw BoundExceeded("reduction profile would have " + std::to_string(total) +
                            " people per side, cap is " + std::to_string(size_cap));

    StvReduction r{Profile({{0}}, {{0}}), 0, 0, 0, 0, 0, 0, 0, {}, {}, {}, {}, {}, 0, {}};

    // Woman indices. The two finalists sit first so they survive
    // fewest-count ties; the dummies sit last so the tie-break eliminates
    // them first.
    int at = 0;
    r.default_winner = at++;
    r.target_winner = at++;
    for (int j = 0; j < m; ++j)
        r.choice_a.push_back(at++);
    for (int j = 0; j < m; ++j)
        r.choice_b.push_back(at++);
    for (int j = 0; j < m; ++j)
        r.feeders_a.push_back(at++);
    for (int j = 0; j < m; ++j)
        r.feeders_b.push_back(at++);
    r.overflow_target = at++;
    for (int j = 0; j < n; ++j)
        r.element_targets.push_back(at++);
    for (int j = 0; j < m; ++j)
        r.absorbers.push_back(at++);
    r.prize = at++;
    r.fallback = at++;
    const int first_dummy_woman = at;

    // Man indices, dummies last again for the men-side election.
    at = 0;
    r.lead_man = at++;
    r.runner_up_man = at++;
    const int overflow_man = at++;
    std::vector<int> absorber_men(m), element_men(n), feeder_a_men(m), feeder_b_men(m),
        choice_a_men(m), choice_b_men(m);
    for (int j = 0; j < m; ++j)
        absorber_men[j] = at++;
    for (int j = 0; j < n; ++j)
        element_men[j] = at++;
    for (int j = 0; j < m; ++j)
        feeder_a_men[j] = at++;
    for (int j = 0; j < m; ++j)
        feeder_b_men[j] = at++;
    for (int j = 0; j < m; ++j)
        choice_a_men[j] = at++;
    for (int j = 0; j < m; ++j)
        choice_b_men[j] = at++;
    r.manipulator = at++;
    const int extra_man = at++;
    const int first_dummy_man = at;

    ListBuilder men(total), women(total);

    // Named men. Ballot prefixes drive the women-side election; every list
    // falls through to (default_winner, target_winner) before the generic
    // ascending tail.
    const int w0 = r.default_winner, y0 = r.target_winner;
    men.add({y0});                                    // lead
    men.add({w0, y0, r.prize});                       // runner-up: prize sits third
    men.add({r.overflow_target, w0, y0});             // overflow man
    for (int j = 0; j < m; ++j)
        men.add({r.absorbers[j], w0, y0});
    for (int j = 0; j < n; ++j)
        men.add({r.element_targets[j], w0, y0});
    for (int j = 0; j < m; ++j)
        men.add({r.feeders_a[j], r.feeders_b[j], w0, y0});
    for (int j = 0; j < m; ++j)
        men.add({r.feeders_b[j], r.feeders_a[j], w0, y0});
    for (int j = 0; j < m; ++j)
        men.add({r.choice_a[j], r.absorbers[j], w0, y0});
    for (int j = 0; j < m; ++j)
        men.add({r.choice_b[j], r.absorbers[j], w0, y0});
    men.add({r.prize, r.fallback});                   // manipulator, truthful
    men.add({r.fallback, r.absorbers[m - 1], w0, y0});  // squareness seat

    // Dummy men: one per dummy woman, each first-choosing his dummy and
    // then the block's transfer prefix.
    int dummy = first_dummy_woman;
    auto dummy_block = [&](int count, std::vector<int> prefix) {
        for (int k = 0; k < count; ++k) {
            std::vector<int> list{dummy++};
            list.insert(list.end(), prefix.begin(), prefix.end());
            men.add(std::move(list));
        }
    };
    dummy_block(12 * m - 1, {y0});
    dummy_block(12 * m - 2, {w0, y0});
    dummy_block(10 * m + 2 * n / 3 - 1, {r.overflow_target, w0, y0});
    for (int j = 0; j < n; ++j)
        dummy_block(12 * m - 3, {r.element_targets[j], w0, y0});
    for (int j = 0; j < m; ++j)
        dummy_block(12 * m - 1, {r.absorbers[j], w0, y0});
    for (int j = 0; j < m; ++j) {
        dummy_block(6 * m + 4 * (j + 1) - 6, {r.feeders_a[j], r.feeders_b[j], w0, y0});
        for (int pass = 0; pass < 2; ++pass)
            for (int element : instance.sets[j])
                dummy_block(1, {r.feeders_a[j], r.element_targets[element - 1], w0, y0});
        dummy_block(6 * m + 4 * (j + 1) - 2, {r.feeders_b[j], r.feeders_a[j], w0, y0});
        dummy_block(2, {r.feeders_b[j], r.overflow_target, w0, y0});
        dummy_block(6 * m + 4 * (j + 1) - 4, {r.choice_a[j], r.absorbers[j], w0, y0});
        dummy_block(1, {r.choice_a[j], r.feeders_a[j], w0, y0});
        dummy_block(2, {r.choice_a[j], r.choice_b[j], w0, y0});
        dummy_block(6 * m + 4 * (j + 1) - 4, {r.choice_b[j], r.absorbers[j], w0, y0});
        dummy_block(1, {r.choice_b[j], r.feeders_b[j], w0, y0});
        dummy_block(2, {r.choice_b[j], r.choice_a[j], w0, y0});
    }

    // Women. Second and third choices funnel the men-side election to the
    // lead man and then the runner-up, whatever the manipulator reports.
    const int lead = r.lead_man, runner = r.runner_up_man;
    women.add({overflow_man, runner, lead});  // default winner ranks her optimal husband second
    women.add({lead, runner});                // target winner
    for (int j = 0; j < m; ++j)
        women.add({choice_a_men[j], lead, runner});
    for (int j = 0; j < m; ++j)
        women.add({choice_b_men[j], lead, runner});
    for (int j = 0; j < m; ++j)
        women.add({feeder_a_men[j], lead, runner});
    for (int j = 0; j < m; ++j)
        women.add({feeder_b_men[j], lead, runner});
    women.add({extra_man, lead, runner});  // overflow target
    for (int j = 0; j < n; ++j)
        women.add({element_men[j], lead, runner});
    for (int j = 0; j < m; ++j)
        women.add({absorber_men[j], lead, runner});
    women.add({runner, lead});            // prize
    women.add({r.manipulator, lead, runner});  // fallback
    for (int d = 0; d < dummies; ++d)
        women.add({first_dummy_man + d, lead, runner});

    r.profile = Profile(std::move(men.lists), std::move(women.lists));
    return r;
}

}  // namespace smp
