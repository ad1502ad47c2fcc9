#pragma once

#include "smp/core.hpp"

namespace smp {

/// Result of a deferred-acceptance run. `matching` is always expressed as a
/// man -> woman map of the input profile, whichever side proposed.
/// `proposals_received` is indexed by the proposed-to gender and lists every
/// proposal in the order it was made, including rejected ones.
struct GSOutcome {
    Matching matching;
    Gender proposers;
    std::vector<std::vector<int>> proposals_received;
};

/// Deferred acceptance with a FIFO queue of free proposers. The final
/// matching is invariant under the processing order; FIFO makes the
/// proposal trace reproducible. At most n^2 proposals are made.
GSOutcome gale_shapley(const Profile& p, Gender proposers);

/// Proposer-optimal matchings for either side.
Matching male_optimal(const Profile& p);
Matching female_optimal(const Profile& p);

}  // namespace smp
