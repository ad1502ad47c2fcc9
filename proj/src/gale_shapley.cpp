#include "smp/gale_shapley.hpp"

#include <deque>

namespace smp {

namespace {

// Men-proposing deferred acceptance on an already-oriented profile.
GSOutcome run(const Profile& p, Gender proposers) {
    const int n = p.size();
    std::vector<int> next_choice(n, 0);
    std::vector<int> fiance(n, -1);  // per woman
    std::vector<std::vector<int>> proposals(n);
    std::deque<int> free_men;
    for (int m = 0; m < n; ++m)
        free_men.push_back(m);

    while (!free_men.empty()) {
        const int m = free_men.front();
        free_men.pop_front();
        const int w = p.men_prefs()[m][next_choice[m]++];
        proposals[w].push_back(m);
        if (fiance[w] < 0) {
            fiance[w] = m;
        } else if (p.woman_rank(w, m) < p.woman_rank(w, fiance[w])) {
            free_men.push_back(fiance[w]);
            fiance[w] = m;
        } else {
            free_men.push_back(m);
        }
    }

    std::vector<int> wife(n, -1);
    for (int w = 0; w < n; ++w)
        wife[fiance[w]] = w;
    return GSOutcome{Matching(std::move(wife)), proposers, std::move(proposals)};
}

}  // namespace

GSOutcome gale_shapley(const Profile& p, Gender proposers) {
    if (proposers == Gender::men)
        return run(p, proposers);
    GSOutcome outcome = run(swap_genders(p), proposers);
    outcome.matching = outcome.matching.transposed();
    return outcome;
}

Matching male_optimal(const Profile& p) {
    return gale_shapley(p, Gender::men).matching;
}

Matching female_optimal(const Profile& p) {
    return gale_shapley(p, Gender::women).matching;
}

}  // namespace smp
