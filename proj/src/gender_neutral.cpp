#include "smp/gender_neutral.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smp {

namespace {

// Renaming that makes `anchor_list` read 0..n-1.
std::vector<int> renaming_for(const std::vector<int>& anchor_list) {
    std::vector<int> pi(anchor_list.size());
    for (std::size_t pos = 0; pos < anchor_list.size(); ++pos)
        pi[anchor_list[pos]] = static_cast<int>(pos);
    return pi;
}

std::vector<int> renamed(const std::vector<int>& list, const std::vector<int>& pi) {
    std::vector<int> out(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
        out[i] = pi[list[i]];
    return out;
}

struct SignatureBuild {
    std::vector<int> digits;  // 0-based
    std::vector<int> member_order;
};

SignatureBuild build_signature(const std::vector<std::vector<int>>& lists) {
    const int n = static_cast<int>(lists.size());
    SignatureBuild best;
    for (int anchor = 0; anchor < n; ++anchor) {
        const auto pi = renaming_for(lists[anchor]);
        std::vector<std::pair<std::vector<int>, int>> blocks;  // (renamed list, member)
        blocks.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != anchor)
                blocks.emplace_back(renamed(lists[i], pi), i);
        std::sort(blocks.begin(), blocks.end());

        SignatureBuild cand;
        cand.digits.reserve(n * n);
        cand.member_order.reserve(n);
        for (int d = 0; d < n; ++d)
            cand.digits.push_back(d);
        cand.member_order.push_back(anchor);
        for (auto& [block, member] : blocks) {
            cand.digits.insert(cand.digits.end(), block.begin(), block.end());
            cand.member_order.push_back(member);
        }
        if (best.digits.empty() || cand.digits < best.digits ||
            (cand.digits == best.digits && cand.member_order < best.member_order))
            best = std::move(cand);
    }
    return best;
}

std::vector<int> shift_one_based(std::vector<int> digits) {
    for (int& d : digits)
        ++d;
    return digits;
}

// Three-way orientation decision: canonical signatures first, simple
// signatures on a tie. 0 means the profile equals its own swap.
int compare_sides(const Profile& p, SignatureMode mode) {
    if (mode == SignatureMode::simple) {
        const auto ms = simple_signature(p, Gender::men);
        const auto ws = simple_signature(p, Gender::women);
        return ms < ws ? -1 : ms == ws ? 0 : 1;
    }
    const auto ms = gender_signature(p, Gender::men);
    const auto ws = gender_signature(p, Gender::women);
    if (ms != ws)
        return ms < ws ? -1 : 1;
    const auto sm = simple_signature(p, Gender::men);
    const auto sw = simple_signature(p, Gender::women);
    return sm < sw ? -1 : sm == sw ? 0 : 1;
}

std::vector<int> rank_sequence(const Profile& p, const Matching& mu, Gender g,
                               const std::vector<int>& order) {
    std::vector<int> seq;
    seq.reserve(order.size());
    for (int who : order) {
        const int partner = g == Gender::men ? mu.wife_of(who) : mu.husband_of(who);
        seq.push_back(p.rank(g, who, partner));
    }
    return seq;
}

}  // namespace

std::string Signature::str() const {
    const bool compact = digits_.size() < 100;  // n <= 9 implies single digits
    std::ostringstream out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i && !compact)
            out << ' ';
        out << digits_[i];
    }
    return out.str();
}

Signature gender_signature(const Profile& p, Gender g) {
    return Signature(shift_one_based(build_signature(p.prefs(g)).digits));
}

Signature simple_signature(const Profile& p, Gender g) {
    std::vector<int> digits;
    digits.reserve(p.size() * p.size());
    for (const auto& list : p.prefs(g))
        for (int x : list)
            digits.push_back(x + 1);
    return Signature(std::move(digits));
}

std::vector<int> canonical_member_order(const Profile& p, Gender g) {
    return build_signature(p.prefs(g)).member_order;
}

GnDecision gn_rule(const Profile& p, SignatureMode mode) {
    const bool swapped = mode == SignatureMode::simple
                             ? simple_signature(p, Gender::men) < simple_signature(p, Gender::women)
                             : gender_signature(p, Gender::men) < gender_signature(p, Gender::women);
    return GnDecision{swapped ? swap_genders(p) : p, swapped};
}

MatchingProcedure gn_wrap(MatchingProcedure proc, SignatureMode mode) {
    return [proc = std::move(proc), mode](const Profile& p) -> Matching {
        const int cmp = compare_sides(p, mode);
        if (cmp < 0)
            return proc(swap_genders(p)).transposed();
        return proc(p);
    };
}

Matching signature_tiebreak(const Profile& p, const std::vector<Matching>& candidates) {
    if (candidates.empty())
        throw std::invalid_argument("signature_tiebreak: empty candidate list");
    if (candidates.size() == 1)
        return candidates.front();

    const int cmp = compare_sides(p, SignatureMode::peer_indifferent);
    if (cmp == 0) {
        // Both sides hold identical lists, so the profile has a unique
        // stable matching and stable candidates must coincide.
        for (const auto& mu : candidates)
            if (!(mu == candidates.front()))
                throw std::logic_error("signature_tiebreak: distinct candidates on a symmetric profile");
        return candidates.front();
    }

    const Gender deciding = cmp > 0 ? Gender::men : Gender::women;
    const auto order = canonical_member_order(p, deciding);
    const Matching* best = &candidates.front();
    auto best_key = rank_sequence(p, *best, deciding, order);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        auto key = rank_sequence(p, candidates[i], deciding, order);
        if (key < best_key) {
            best = &candidates[i];
            best_key = std::move(key);
        }
    }
    return *best;
}

}  // namespace smp
