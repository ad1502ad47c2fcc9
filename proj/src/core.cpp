#include "smp/core.hpp"

#include <algorithm>
#include <numeric>

namespace smp {

namespace {

bool is_permutation_of_iota(const std::vector<int>& xs, int n) {
    if (static_cast<int>(xs.size()) != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int x : xs) {
        if (x < 0 || x >= n || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

std::vector<std::vector<int>> rank_table(const std::vector<std::vector<int>>& lists) {
    const int n = static_cast<int>(lists.size());
    std::vector<std::vector<int>> ranks(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int pos = 0; pos < n; ++pos)
            ranks[i][lists[i][pos]] = pos;
    return ranks;
}

}  // namespace

Matching::Matching(std::vector<int> wife_of_man) : wife_(std::move(wife_of_man)) {
    const int n = static_cast<int>(wife_.size());
    if (!is_permutation_of_iota(wife_, n))
        throw std::invalid_argument("matching is not a bijection");
    husband_.assign(n, -1);
    for (int m = 0; m < n; ++m)
        husband_[wife_[m]] = m;
}

Profile::Profile(std::vector<std::vector<int>> men_prefs, std::vector<std::vector<int>> women_prefs)
    : men_prefs_(std::move(men_prefs)), women_prefs_(std::move(women_prefs)) {
    const int n = static_cast<int>(men_prefs_.size());
    if (n == 0)
        throw std::invalid_argument("profile must have at least one person per gender");
    if (static_cast<int>(women_prefs_.size()) != n)
        throw std::invalid_argument("men and women counts differ");
    for (int i = 0; i < n; ++i) {
        if (!is_permutation_of_iota(men_prefs_[i], n))
            throw std::invalid_argument("man " + std::to_string(i + 1) +
                                        ": list is not a permutation of 1.." + std::to_string(n));
        if (!is_permutation_of_iota(women_prefs_[i], n))
            throw std::invalid_argument("woman " + std::to_string(i + 1) +
                                        ": list is not a permutation of 1.." + std::to_string(n));
    }
    man_rank_ = rank_table(men_prefs_);
    woman_rank_ = rank_table(women_prefs_);
}

Profile Profile::with_list(Gender g, int who, std::vector<int> list) const {
    auto men = men_prefs_;
    auto women = women_prefs_;
    (g == Gender::men ? men : women).at(who) = std::move(list);
    return Profile(std::move(men), std::move(women));
}

Profile swap_genders(const Profile& p) {
    return Profile(p.women_prefs(), p.men_prefs());
}

std::vector<BlockingPair> blocking_pairs(const Profile& p, const Matching& mu) {
    if (mu.size() != p.size())
        throw std::invalid_argument("matching size does not match profile");
    std::vector<BlockingPair> result;
    const int n = p.size();
    for (int m = 0; m < n; ++m) {
        const int assigned = p.man_rank(m, mu.wife_of(m));
        for (int pos = 0; pos < assigned; ++pos) {
            const int w = p.men_prefs()[m][pos];  // every woman m prefers to his wife
            if (p.woman_rank(w, m) < p.woman_rank(w, mu.husband_of(w)))
                result.push_back({m, w});
        }
    }
    return result;
}

bool is_stable(const Profile& p, const Matching& mu) {
    return blocking_pairs(p, mu).empty();
}

std::vector<Matching> all_stable_matchings(const Profile& p, int bound) {
    const int n = p.size();
    if (n > bound)
        throw BoundExceeded("stable-set enumeration: n=" + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
    std::vector<int> wife(n);
    std::iota(wife.begin(), wife.end(), 0);
    std::vector<Matching> result;
    do {
        Matching mu(wife);
        if (is_stable(p, mu))
            result.push_back(std::move(mu));
    } while (std::next_permutation(wife.begin(), wife.end()));
    return result;
}

}  // namespace smp
