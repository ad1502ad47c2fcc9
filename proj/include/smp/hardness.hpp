#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "smp/core.hpp"

namespace smp {

/// Directed graph on vertices 0..n-1, no self-loops.
class DiGraph {
public:
    explicit DiGraph(int vertex_count);

    int vertex_count() const { return n_; }
    bool has_edge(int from, int to) const { return adj_[from][to]; }
    void add_edge(int from, int to);
    std::vector<std::pair<int, int>> edges() const;
    /// True when every ordered pair (i, j), i != j, is an edge.
    bool complete() const;

    bool operator==(const DiGraph&) const = default;

private:
    int n_;
    std::vector<std::vector<char>> adj_;
};

/// Text format: "n=<int>" then lines "e <i> <j>" (directed edge i -> j,
/// 1-based); "#" starts a comment.
DiGraph parse_digraph(std::string_view text);
std::string serialize_digraph(const DiGraph& g);

/// Profiles consumed by the gated procedure have n+3 people per side with
/// a fixed index convention: men 1,2 play the two distinguished roles,
/// men 3..n+3 are the path men p_1..p_{n+1}; women symmetric (w_1, w_2,
/// v_1..v_{n+1}). Any square profile of size >= 3 qualifies.

/// Reads the graph encoded by women v_1..v_n: edge (i, j) present iff man
/// p_j precedes man p_{n+1} in v_i's list.
DiGraph decode_graph(const Profile& hp);

/// Reads positions 3..n+2 of w_1's list as a successor map over vertices
/// and returns the induced vertex sequence iff it forms a Hamiltonian path
/// of decode_graph(hp); any non-path man in those positions yields absent.
std::optional<std::vector<int>> decode_path(const Profile& hp);

/// Returns the female-optimal matching when w_1's list encodes a
/// Hamiltonian path, the male-optimal matching otherwise. Always stable.
Matching path_gated_procedure(const Profile& hp);

/// Builds the profile whose manipulation by w_1 is equivalent to finding a
/// Hamiltonian path in g: every first choice is distinct, the women
/// v_1..v_n encode g, and w_1's list is forced not to encode a path.
/// g must have >= 2 vertices and at least one non-edge.
Profile build_reduction_profile(const DiGraph& g);

/// w_1's report spelling out `path` (a permutation of the vertices):
/// m_1 and m_2 stay first, position 2+v names p of the successor of v,
/// remaining path men fill the gaps in ascending order.
Profile encode_path_report(const Profile& hp, const std::vector<int>& path);

/// Exact backtracking search over all start vertices.
std::optional<std::vector<int>> find_hamiltonian_path(const DiGraph& g, int bound = 10);

}  // namespace smp
