#pragma once

#include <array>
#include <optional>

#include "smp/gender_neutral.hpp"

namespace smp {

struct Agent {
    Gender gender;
    int index;
};

/// The three people a universal manipulation pivots on: the agent's
/// male-optimal partner m, her female-optimal partner n, and the woman v
/// whose male-optimal partner is n.
struct ManipulationWitness {
    int male_optimal_partner;
    int female_optimal_partner;
    int linking_woman;
    bool operator==(const ManipulationWitness&) const = default;
};

/// Checks the five universal-manipulability conditions for woman w:
/// (1) w receives at least two proposals in men-proposing deferred
/// acceptance (rejected proposals count); (2) some v has n as her
/// male-optimal partner; (3) v prefers m to n; (4) v is immediately
/// followed by w in n's list; (5) w is immediately followed by v in m's
/// list. Returns the witness when all five hold.
std::optional<ManipulationWitness> universally_manipulable_by(const Profile& p, int woman);

/// The manipulation itself: w's list with her male-optimal partner moved
/// to the last position, other relative orders preserved. On the resulting
/// profile w has a unique stable partner (her old female-optimal one), so
/// every stable procedure must marry her to him. Precondition:
/// universally_manipulable_by(p, woman) holds.
Profile universal_manipulation(const Profile& p, int woman);

enum class Verdict { strictly_better, unchanged, strictly_worse };

struct ManipulationReport {
    Agent agent;
    int truthful_partner;
    int manipulated_partner;
    std::vector<int> reported_list;
    Verdict verdict;
};

/// Tries every one of the n! reports for the agent against proc. Returns
/// the report reaching the agent's best achievable partner when that
/// partner beats the truthful one (lexicographically least such report),
/// absent otherwise.
std::optional<ManipulationReport> brute_force_manipulation(const MatchingProcedure& proc,
                                                           const Profile& p, Agent agent,
                                                           int bound = 6);

/// Rewrites the man's list with his male-optimal partner first and his
/// female-optimal partner last, everyone else in their current relative
/// order. When the two coincide the rewrite degenerates to moving that one
/// woman first.
Profile firstlast_heuristic(const Profile& p, int man);

/// A 3-COVER instance: a ground set 1..ground_size (divisible by 3) and
/// 3-element subsets of it.
struct ThreeCoverInstance {
    int ground_size;
    std::vector<std::array<int, 3>> sets;
};

/// The profile family reducing 3-COVER to manipulation of the STV-based
/// minimal-regret procedure, with the role indices tests need to inspect
/// it. All first choices are distinct on both sides, so the male optimal
/// matching marries every man to his first choice and the female optimal
/// marries every woman to hers.
struct StvReduction {
    Profile profile;

    int manipulator;        // the man whose report is the manipulation seat
    int prize;              // his first choice; his male-optimal partner
    int fallback;           // his second choice; his female-optimal partner
    int default_winner;     // woman ordered first by STV under truthful reports
    int target_winner;      // woman the manipulation tries to order first
    int lead_man;           // target_winner's first choice; most popular man
    int runner_up_man;      // default_winner's male-optimal husband; second most popular

    std::vector<int> choice_a, choice_b;      // per-set steering women
    std::vector<int> feeders_a, feeders_b;    // their transfer partners
    std::vector<int> element_targets;         // one woman per ground element
    int overflow_target;                      // fed by the sets left out of the cover
    std::vector<int> absorbers;               // collect the steering women's piles

    /// The manipulator's report for a candidate cover (1-based set
    /// indices): prize first, then per set j its choice_a when j is in the
    /// cover and choice_b otherwise, then the target winner, then the rest
    /// in ascending order.
    std::vector<int> manipulated_report(const std::vector<int>& cover_sets) const;
};

/// Builds the reduction profile. Throws BoundExceeded when the emitted
/// profile would exceed size_cap people per side.
StvReduction build_stv_reduction_profile(const ThreeCoverInstance& instance, int size_cap = 2500);

}  // namespace smp
