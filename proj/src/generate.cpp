#include "smp/generate.hpp"

#include <numeric>

namespace smp {

std::uint32_t SeededRng::below(std::uint32_t n) {
    if (n <= 1)
        return 0;
    std::uint32_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    for (;;) {
        const std::uint32_t draw = static_cast<std::uint32_t>(engine_()) & mask;
        if (draw < n)
            return draw;
    }
}

void SeededRng::shuffle(std::vector<int>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i)
        std::swap(xs[i - 1], xs[below(static_cast<std::uint32_t>(i))]);
}

Profile random_profile(int n, SeededRng& rng) {
    auto side = [&] {
        std::vector<std::vector<int>> lists(n);
        for (auto& list : lists) {
            list.resize(n);
            std::iota(list.begin(), list.end(), 0);
            rng.shuffle(list);
        }
        return lists;
    };
    auto men = side();
    auto women = side();
    return Profile(std::move(men), std::move(women));
}

DiGraph random_digraph(int vertices, int edge_percent, SeededRng& rng) {
    DiGraph g(vertices);
    for (int i = 0; i < vertices; ++i)
        for (int j = 0; j < vertices; ++j)
            if (i != j && rng.chance(edge_percent))
                g.add_edge(i, j);
    return g;
}

}  // namespace smp
