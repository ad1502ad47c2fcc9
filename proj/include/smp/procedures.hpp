#pragma once

#include <optional>

#include "smp/gender_neutral.hpp"
#include "smp/voting.hpp"

namespace smp {

/// Sum over everyone of the 1-based rank of their assigned partner.
/// Ranges over [2n, 2n^2]; defined for any bijection, stable or not.
int sum_score(const Profile& p, const Matching& mu);

/// Chooses between the male- and female-optimal matchings by the smaller
/// sum_score; equal scores fall to signature_tiebreak. Stable and gender
/// neutral.
Matching score_procedure(const Profile& p);

/// Entry i is j iff the i-th member in the popularity order is matched to
/// their j-th (1-based) most preferred partner.
struct ScoreVectors {
    std::vector<int> male;
    std::vector<int> female;
};

ScoreVectors score_vectors(const Profile& p, const Matching& mu, const PopularityOrders& orders);

/// The lexicographically larger of the two vectors.
const std::vector<int>& overall_score(const ScoreVectors& sv);

/// Picks the candidate with the lexicographically least overall score,
/// popularity orders computed by `rule`; ties fall to signature_tiebreak.
/// Candidates default to {male optimal, female optimal}; every supplied
/// candidate must be stable.
Matching lexmin_regret(const Profile& p, const VotingRule& rule,
                       const std::optional<std::vector<Matching>>& candidates = std::nullopt);

struct ProcedureEntry {
    std::string name;
    MatchingProcedure run;
    std::function<bool(const Profile&)> applicable;
};

/// The six named procedures the CLI and the manipulation suites exercise:
/// gs-male, gs-female, gn:gs-male, score, lexmin:stv, ht.
const std::vector<ProcedureEntry>& registered_procedures();

/// Resolves a selector, including the composite forms gn:<proc> and
/// lexmin:<rule>. Throws std::invalid_argument on unknown names.
MatchingProcedure find_procedure(const std::string& name,
                                 SignatureMode mode = SignatureMode::peer_indifferent);

}  // namespace smp
