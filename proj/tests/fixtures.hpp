#pragma once

#include "smp/core.hpp"

namespace fixtures {

// 3x3 instance with two stable matchings: the proposer-optimal one per
// side. Men: w1>w2>w3, w2>w1>w3, w3>w2>w1; women: m1>m2>m3, m3>m1>m2,
// m2>m1>m3.
inline smp::Profile example_one() {
    return smp::Profile({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}},
                        {{0, 1, 2}, {2, 0, 1}, {1, 0, 2}});
}

inline const char* example_one_text() {
    return "# 3x3 instance with two stable matchings\n"
           "n=3\n"
           "m 1: 1 2 3\n"
           "m 2: 2 1 3\n"
           "m 3: 3 2 1\n"
           "w 1: 1 2 3\n"
           "w 2: 3 1 2\n"
           "w 3: 2 1 3\n";
}

// 3x3 instance whose signatures are 123123312 (men) and 123213312 (women),
// so the pre-round swaps. Men: w2>w1>w3, w3>w2>w1, w2>w1>w3; women:
// m1>m2>m3, m3>m1>m2, m2>m1>m3.
inline smp::Profile signature_example() {
    return smp::Profile({{1, 0, 2}, {2, 1, 0}, {1, 0, 2}},
                        {{0, 1, 2}, {2, 0, 1}, {1, 0, 2}});
}

// 3x3 instance universally manipulable by w1 (witness m1, m2, w2) and by
// nobody else: w2 and w3 receive one proposal each. Men: w1>w2>w3,
// w2>w1>w3, w1>w3>w2; women: m2>m1>m3, m1>m2>m3, m1>m2>m3.
inline smp::Profile universal_example() {
    return smp::Profile({{0, 1, 2}, {1, 0, 2}, {0, 2, 1}},
                        {{1, 0, 2}, {0, 1, 2}, {0, 1, 2}});
}

// Both sides hold literally identical lists, so the identity bijection is
// preference-preserving and the stable matching is unique.
inline smp::Profile isomorphic_example() {
    return smp::Profile({{1, 0, 2}, {2, 1, 0}, {1, 2, 0}},
                        {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}});
}

// Everyone ranked first by exactly one member of the other side; the
// identity matching gives everyone their first choice.
inline smp::Profile distinct_firsts(int n) {
    std::vector<std::vector<int>> lists(n);
    for (int i = 0; i < n; ++i) {
        lists[i].push_back(i);
        for (int x = 0; x < n; ++x)
            if (x != i)
                lists[i].push_back(x);
    }
    return smp::Profile(lists, lists);
}

inline smp::Matching matching(std::vector<int> wife) {
    return smp::Matching(std::move(wife));
}

}  // namespace fixtures
