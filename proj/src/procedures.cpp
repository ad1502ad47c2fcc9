#include "smp/procedures.hpp"

#include <algorithm>

#include "smp/gale_shapley.hpp"
#include "smp/hardness.hpp"

namespace smp {

int sum_score(const Profile& p, const Matching& mu) {
    if (mu.size() != p.size())
        throw std::invalid_argument("matching size does not match profile");
    int total = 0;
    for (int m = 0; m < p.size(); ++m) {
        total += p.man_rank(m, mu.wife_of(m)) + 1;
        total += p.woman_rank(m, mu.husband_of(m)) + 1;
    }
    return total;
}

Matching score_procedure(const Profile& p) {
    Matching mo = male_optimal(p);
    Matching fo = female_optimal(p);
    const int mo_score = sum_score(p, mo);
    const int fo_score = sum_score(p, fo);
    if (mo_score != fo_score)
        return mo_score < fo_score ? mo : fo;
    return signature_tiebreak(p, {std::move(mo), std::move(fo)});
}

ScoreVectors score_vectors(const Profile& p, const Matching& mu, const PopularityOrders& orders) {
    ScoreVectors sv;
    sv.male.reserve(p.size());
    sv.female.reserve(p.size());
    for (int m : orders.men)
        sv.male.push_back(p.man_rank(m, mu.wife_of(m)) + 1);
    for (int w : orders.women)
        sv.female.push_back(p.woman_rank(w, mu.husband_of(w)) + 1);
    return sv;
}

const std::vector<int>& overall_score(const ScoreVectors& sv) {
    return sv.male >= sv.female ? sv.male : sv.female;
}

Matching lexmin_regret(const Profile& p, const VotingRule& rule,
                       const std::optional<std::vector<Matching>>& candidates) {
    std::vector<Matching> pool;
    if (candidates) {
        if (candidates->empty())
            throw std::invalid_argument("lexmin_regret: empty candidate set");
        for (const auto& mu : *candidates)
            if (!is_stable(p, mu))
                throw std::invalid_argument("lexmin_regret: unstable candidate supplied");
        pool = *candidates;
    } else {
        pool.push_back(male_optimal(p));
        Matching fo = female_optimal(p);
        if (!(fo == pool.front()))
            pool.push_back(std::move(fo));
    }

    const auto orders = popularity_orders(p, rule);
    std::vector<std::vector<int>> overall;
    overall.reserve(pool.size());
    for (const auto& mu : pool)
        overall.push_back(overall_score(score_vectors(p, mu, orders)));

    const auto& least = *std::min_element(overall.begin(), overall.end());
    std::vector<Matching> tied;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (overall[i] == least)
            tied.push_back(pool[i]);
    if (tied.size() == 1)
        return tied.front();
    return signature_tiebreak(p, tied);
}

const std::vector<ProcedureEntry>& registered_procedures() {
    static const std::vector<ProcedureEntry> table = [] {
        auto any = [](const Profile&) { return true; };
        std::vector<ProcedureEntry> t;
        t.push_back({"gs-male", [](const Profile& p) { return male_optimal(p); }, any});
        t.push_back({"gs-female", [](const Profile& p) { return female_optimal(p); }, any});
        t.push_back({"gn:gs-male",
                     gn_wrap([](const Profile& p) { return male_optimal(p); }),
                     any});
        t.push_back({"score", [](const Profile& p) { return score_procedure(p); }, any});
        t.push_back({"lexmin:stv",
                     [](const Profile& p) { return lexmin_regret(p, voting_rule("stv")); },
                     any});
        t.push_back({"ht", [](const Profile& p) { return path_gated_procedure(p); },
                     [](const Profile& p) { return p.size() >= 3; }});
        return t;
    }();
    return table;
}

MatchingProcedure find_procedure(const std::string& name, SignatureMode mode) {
    if (name.rfind("gn:", 0) == 0)
        return gn_wrap(find_procedure(name.substr(3), mode), mode);
    if (name.rfind("lexmin:", 0) == 0) {
        auto rule = voting_rule(name.substr(7));
        return [rule](const Profile& p) { return lexmin_regret(p, rule); };
    }
    if (name == "gs-male")
        return [](const Profile& p) { return male_optimal(p); };
    if (name == "gs-female")
        return [](const Profile& p) { return female_optimal(p); };
    if (name == "score")
        return [](const Profile& p) { return score_procedure(p); };
    if (name == "ht")
        return [](const Profile& p) { return path_gated_procedure(p); };
    throw std::invalid_argument("unknown procedure: " + name);
}

}  // namespace smp
