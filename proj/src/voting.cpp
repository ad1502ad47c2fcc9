#include "smp/voting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smp {

namespace {

// One tally to a single winner over the candidates still in `alive`.
// Ballot pointers only move forward, so a full ordering stays O(C^2 * B).
int run_to_winner(const Election& e, std::vector<char>& alive, int alive_count,
                  std::vector<std::string>* trace) {
    const int c_count = static_cast<int>(e.candidates.size());
    std::vector<std::size_t> cursor(e.ballots.size(), 0);
    std::vector<int> counts(c_count, 0);
    std::vector<std::vector<int>> piles(c_count);  // ballots currently counted for each candidate

    auto advance = [&](int ballot) {
        const auto& prefs = e.ballots[ballot];
        while (cursor[ballot] < prefs.size() && !alive[prefs[cursor[ballot]]])
            ++cursor[ballot];
        const int top = prefs[cursor[ballot]];
        ++counts[top];
        piles[top].push_back(ballot);
    };
    for (std::size_t b = 0; b < e.ballots.size(); ++b)
        advance(static_cast<int>(b));

    for (int round = 1;; ++round) {
        int best = -1, fewest = -1;
        for (int c = 0; c < c_count; ++c) {
            if (!alive[c])
                continue;
            if (best < 0 || counts[c] > counts[best])
                best = c;  // index-first on equal counts
            if (fewest < 0 || counts[c] <= counts[fewest])
                fewest = c;  // index-last on equal counts
        }

        const bool quota_met = counts[best] >= e.quota;
        const int winner = quota_met ? best : (alive_count == 1 ? best : -1);
        if (trace) {
            std::ostringstream line;
            line << "round " << round << ": counts";
            for (int c = 0; c < c_count; ++c)
                if (alive[c])
                    line << ' ' << e.candidates[c] << '=' << counts[c];
            if (winner >= 0)
                line << "; winner=" << e.candidates[winner];
            else
                line << "; eliminated=" << e.candidates[fewest];
            trace->push_back(line.str());
        }
        if (winner >= 0)
            return winner;

        alive[fewest] = 0;
        --alive_count;
        auto pile = std::move(piles[fewest]);
        piles[fewest].clear();
        counts[fewest] = 0;
        for (int ballot : pile)
            advance(ballot);
    }
}

}  // namespace

Election make_election(std::vector<std::string> candidates, std::vector<std::vector<int>> ballots) {
    const int c_count = static_cast<int>(candidates.size());
    if (c_count == 0)
        throw std::invalid_argument("election needs at least one candidate");
    for (const auto& ballot : ballots) {
        std::vector<char> seen(c_count, 0);
        if (static_cast<int>(ballot.size()) != c_count)
            throw std::invalid_argument("ballot does not rank every candidate");
        for (int c : ballot) {
            if (c < 0 || c >= c_count || seen[c])
                throw std::invalid_argument("ballot is not a permutation of the candidates");
            seen[c] = 1;
        }
    }
    const int quota = static_cast<int>(ballots.size()) / 2 + 1;
    return Election{std::move(candidates), std::move(ballots), quota};
}

int stv_winner(const Election& e, std::vector<std::string>* trace) {
    if (e.candidates.empty())
        throw std::invalid_argument("election has no candidates");
    std::vector<char> alive(e.candidates.size(), 1);
    return run_to_winner(e, alive, static_cast<int>(e.candidates.size()), trace);
}

std::vector<int> stv_order(const Election& e, std::vector<std::string>* trace) {
    const int c_count = static_cast<int>(e.candidates.size());
    std::vector<char> alive(c_count, 1);
    std::vector<int> order;
    order.reserve(c_count);
    for (int remaining = c_count; remaining > 0; --remaining) {
        if (trace)
            trace->push_back("rank " + std::to_string(order.size() + 1) + ":");
        std::vector<char> scratch = alive;
        const int winner = run_to_winner(e, scratch, remaining, trace);
        order.push_back(winner);
        alive[winner] = 0;
    }
    return order;
}

std::vector<int> plurality_order(const Election& e) {
    std::vector<int> firsts(e.candidates.size(), 0);
    for (const auto& ballot : e.ballots)
        ++firsts[ballot.front()];
    std::vector<int> order(e.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return firsts[a] > firsts[b]; });
    return order;
}

VotingRule voting_rule(const std::string& name) {
    if (name == "stv")
        return [](const Election& e) { return stv_order(e); };
    if (name == "plurality")
        return [](const Election& e) { return plurality_order(e); };
    throw std::invalid_argument("unknown voting rule: " + name);
}

PopularityOrders popularity_orders(const Profile& p, const VotingRule& rule) {
    const int n = p.size();
    auto names = [&](char tag) {
        std::vector<std::string> out;
        out.reserve(n);
        for (int i = 1; i <= n; ++i)
            out.push_back(tag + std::to_string(i));
        return out;
    };
    Election men_election = make_election(names('m'), p.women_prefs());
    Election women_election = make_election(names('w'), p.men_prefs());
    return PopularityOrders{rule(men_election), rule(women_election)};
}

}  // namespace smp
