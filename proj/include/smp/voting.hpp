#pragma once

#include <functional>
#include <string>

#include "smp/core.hpp"

namespace smp {

/// A single-winner election. Candidate indices double as the tie-break
/// order (index-first wins quota ties, index-last is eliminated first).
/// Every ballot ranks every candidate exactly once.
struct Election {
    std::vector<std::string> candidates;
    std::vector<std::vector<int>> ballots;
    int quota;
};

/// Builds an election with the strict-majority quota floor(#ballots/2)+1,
/// validating the ballots.
Election make_election(std::vector<std::string> candidates, std::vector<std::vector<int>> ballots);

/// STV rounds: each ballot counts for its highest-ranked surviving
/// candidate; if some candidate reaches the quota the highest-count one
/// wins (index-first on ties), otherwise the fewest-vote candidate is
/// eliminated (index-last on ties) and counting repeats. A lone survivor
/// wins outright. `trace` receives one audit line per round.
int stv_winner(const Election& e, std::vector<std::string>* trace = nullptr);

/// Full STV ordering by iterated winner removal: rank 1 is stv_winner, the
/// winner is struck from all ballots, and the tally repeats with the quota
/// unchanged (the ballot count never changes).
std::vector<int> stv_order(const Election& e, std::vector<std::string>* trace = nullptr);

/// Candidates by first-place count, descending; ties index-first.
std::vector<int> plurality_order(const Election& e);

/// A voting rule maps an election to a total order over its candidates.
using VotingRule = std::function<std::vector<int>(const Election&)>;

/// "stv" or "plurality".
VotingRule voting_rule(const std::string& name);

struct PopularityOrders {
    std::vector<int> men;    // most popular first
    std::vector<int> women;
};

/// Orders the men by an election whose voters are the women (and vice
/// versa), quota floor(n/2)+1.
PopularityOrders popularity_orders(const Profile& p, const VotingRule& rule);

}  // namespace smp
