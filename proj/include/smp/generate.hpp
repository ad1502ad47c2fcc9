#pragma once

#include <cstdint>
#include <random>

#include "smp/core.hpp"
#include "smp/hardness.hpp"

namespace smp {

/// Deterministic random source for fixtures: mt19937 (bit-exact across
/// platforms) with mask-rejection bounded draws, so the same seed yields
/// the same profiles everywhere. std::uniform_int_distribution is
/// implementation-defined and deliberately avoided.
class SeededRng {
public:
    explicit SeededRng(std::uint32_t seed) : engine_(seed) {}

    static constexpr const char* algorithm = "mt19937/mask-rejection";

    /// Uniform draw from [0, n).
    std::uint32_t below(std::uint32_t n);

    /// Fisher-Yates shuffle.
    void shuffle(std::vector<int>& xs);

    /// True with probability percent/100.
    bool chance(int percent) { return below(100) < static_cast<std::uint32_t>(percent); }

private:
    std::mt19937 engine_;
};

/// Uniform random profile: every list an independent uniform permutation.
Profile random_profile(int n, SeededRng& rng);

/// Each ordered pair (i, j), i != j, is an edge with the given probability.
DiGraph random_digraph(int vertices, int edge_percent, SeededRng& rng);

}  // namespace smp
