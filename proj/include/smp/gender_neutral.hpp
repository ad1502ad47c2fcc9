#pragma once

#include <functional>
#include <string>

#include "smp/core.hpp"

namespace smp {

/// Canonical vector summarizing one gender's preferences: n blocks of n
/// digits, each block a permutation of 1..n, the first block exactly
/// (1, 2, ..., n). Compared lexicographically.
class Signature {
public:
    explicit Signature(std::vector<int> digits) : digits_(std::move(digits)) {}

    const std::vector<int>& digits() const { return digits_; }
    /// "123123312" when n <= 9, space-separated otherwise.
    std::string str() const;

    bool operator==(const Signature&) const = default;
    auto operator<=>(const Signature& other) const { return digits_ <=> other.digits_; }

private:
    std::vector<int> digits_;
};

/// The lexicographically smallest concatenation of the gender's lists over
/// every reordering of its members and renaming of the other gender.
/// Computed anchor by anchor: renumber the other gender so the anchor's
/// list reads 1..n, put that block first, append the remaining renumbered
/// blocks in sorted order, and keep the smallest result. Invariant under
/// within-gender permutation and opposite-gender renaming.
Signature gender_signature(const Profile& p, Gender g);

/// Plain concatenation of the gender's lists in index order, no
/// canonicalization. Cheaper, but not invariant under renaming.
Signature simple_signature(const Profile& p, Gender g);

enum class SignatureMode { peer_indifferent, simple };

struct GnDecision {
    Profile profile;
    bool swapped;
};

/// Pre-round: swap the genders iff the male signature is strictly smaller
/// than the female signature under the selected variant.
GnDecision gn_rule(const Profile& p, SignatureMode mode = SignatureMode::peer_indifferent);

using MatchingProcedure = std::function<Matching(const Profile&)>;

/// Wraps a stable-marriage procedure so the result is invariant under
/// swapping the genders: decide an orientation, run proc, transpose back
/// if a swap happened.
///
/// When the peer-indifferent signatures tie, the comparison falls through
/// to the simple signatures. Equal canonical signatures do not force a
/// unique stable matching (a 3x3 instance with two stable matchings and
/// equal signatures exists), so without the fallback the wrapper would not
/// be gender neutral on such profiles. Equal simple signatures mean the two
/// sides hold literally identical lists, where swapping is a no-op.
MatchingProcedure gn_wrap(MatchingProcedure proc,
                          SignatureMode mode = SignatureMode::peer_indifferent);

/// The member order realizing the gender's signature: the winning anchor
/// first, the rest sorted by their renumbered lists. Among optimal orders,
/// the lexicographically least index sequence is returned.
std::vector<int> canonical_member_order(const Profile& p, Gender g);

/// Deterministic, gender-neutral selection among stable candidates: the
/// gender with the larger signature (canonical, then simple on ties) picks
/// the candidate whose rank sequence, read in that gender's canonical
/// member order, is lexicographically smallest. If both comparisons tie the
/// candidates must coincide and the first is returned.
Matching signature_tiebreak(const Profile& p, const std::vector<Matching>& candidates);

}  // namespace smp
