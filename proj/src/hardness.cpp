#include "smp/hardness.hpp"

#include <algorithm>
#include <sstream>

#include "smp/gale_shapley.hpp"

namespace smp {

namespace {

// Index conventions inside a gated profile of size n+3.
constexpr int kM1 = 0, kM2 = 1, kW1 = 0;
int p_man(int p_index) { return 2 + p_index; }       // p_index 0..n (n is the terminal p)
int v_woman(int v_index) { return 2 + v_index; }

int path_size(const Profile& hp) {
    if (hp.size() < 3)
        throw std::invalid_argument("gated procedure needs a profile with n+3 people per side");
    return hp.size() - 3;
}

// Appends every index in 0..limit-1 not yet used.
void fill_ascending(std::vector<int>& list, int limit, std::vector<char>& used) {
    for (int x = 0; x < limit; ++x)
        if (!used[x]) {
            list.push_back(x);
            used[x] = 1;
        }
}

}  // namespace

DiGraph::DiGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(n_, std::vector<char>(n_, 0));
}

void DiGraph::add_edge(int from, int to) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (from == to)
        throw std::invalid_argument("self-loops are not allowed");
    adj_[from][to] = 1;
}

std::vector<std::pair<int, int>> DiGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adj_[i][j])
                out.emplace_back(i, j);
    return out;
}

bool DiGraph::complete() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !adj_[i][j])
                return false;
    return true;
}

DiGraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<DiGraph> graph;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        if (!graph) {
            int n = -1;
            if (std::sscanf(raw.c_str(), " n = %d", &n) != 1 &&
                std::sscanf(raw.c_str(), " n=%d", &n) != 1)
                throw ParseError(line_no, "expected header \"n=<int>\"");
            if (n < 0)
                throw ParseError(line_no, "vertex count must be non-negative");
            graph.emplace(n);
            continue;
        }
        char tag = 0;
        int i = 0, j = 0;
        std::istringstream fields{raw};
        fields >> tag >> i >> j;
        if (fields.fail() || tag != 'e')
            throw ParseError(line_no, "expected edge line \"e <i> <j>\"");
        try {
            graph->add_edge(i - 1, j - 1);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!graph)
        throw ParseError(0, "empty graph file");
    return *graph;
}

std::string serialize_digraph(const DiGraph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << "\n";
    for (auto [i, j] : g.edges())
        out << "e " << i + 1 << ' ' << j + 1 << "\n";
    return out.str();
}

DiGraph decode_graph(const Profile& hp) {
    const int n = path_size(hp);
    DiGraph g(n);
    const int terminal = p_man(n);
    for (int i = 0; i < n; ++i) {
        const int terminal_pos = hp.woman_rank(v_woman(i), terminal);
        for (int j = 0; j < n; ++j)
            if (j != i && hp.woman_rank(v_woman(i), p_man(j)) < terminal_pos)
                g.add_edge(i, j);
    }
    return g;
}

std::optional<std::vector<int>> decode_path(const Profile& hp) {
    const int n = path_size(hp);
    if (n == 0)
        return std::vector<int>{};
    const auto& w1 = hp.women_prefs()[kW1];
    std::vector<int> succ(n, -1);  // value n means the terminal p man
    for (int v = 0; v < n; ++v) {
        const int man = w1[2 + v];
        if (man < 2)
            return std::nullopt;  // a non-path man breaks the encoding
        succ[v] = man - 2;
    }
    const DiGraph g = decode_graph(hp);
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        std::vector<char> visited(n, 0);
        visited[start] = 1;
        while (static_cast<int>(path.size()) < n) {
            const int from = path.back();
            const int to = succ[from];
            if (to >= n || visited[to] || !g.has_edge(from, to))
                break;
            visited[to] = 1;
            path.push_back(to);
        }
        if (static_cast<int>(path.size()) == n)
            return path;
    }
    return std::nullopt;
}

Matching path_gated_procedure(const Profile& hp) {
    return decode_path(hp) ? female_optimal(hp) : male_optimal(hp);
}

Profile build_reduction_profile(const DiGraph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("reduction needs a graph with at least 2 vertices");

    // The forcing non-edge: p_j sits at w_1's slot for vertex i, so no path
    // can step through i. The terminal p man occupies a second slot a != i,
    // so no path can step through a either; a path would have to end at
    // both, hence none exists whatever the remaining fill.
    int force_i = -1, force_j = -1;
    for (int i = 0; i < n && force_i < 0; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !g.has_edge(i, j)) {
                force_i = i;
                force_j = j;
                break;
            }
    if (force_i < 0)
        throw std::invalid_argument("reduction needs a non-complete graph");
    const int blocker_slot = force_i == 0 ? 1 : 0;

    const int size = n + 3;
    std::vector<std::vector<int>> men(size), women(size);

    {  // w_1: m_1, m_2, the forced middle, leftover path men.
        auto& list = women[kW1];
        std::vector<char> used(size, 0);
        list = {kM1, kM2};
        used[kM1] = used[kM2] = 1;
        std::vector<int> slots(n, -1);
        slots[force_i] = p_man(force_j);
        slots[blocker_slot] = p_man(n);
        used[p_man(force_j)] = used[p_man(n)] = 1;
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (slots[v] >= 0)
                continue;
            while (used[p_man(next)])
                ++next;
            slots[v] = p_man(next);
            used[p_man(next)] = 1;
        }
        list.insert(list.end(), slots.begin(), slots.end());
        fill_ascending(list, size, used);
    }
    {  // w_2: m_2 first.
        auto& list = women[1];
        std::vector<char> used(size, 0);
        list = {kM2};
        used[kM2] = 1;
        fill_ascending(list, size, used);
    }
    for (int i = 0; i < n; ++i) {  // v_i: p_i, edge targets, terminal, the rest.
        auto& list = women[v_woman(i)];
        std::vector<char> used(size, 0);
        list = {p_man(i)};
        used[p_man(i)] = 1;
        for (int j = 0; j < n; ++j)
            if (j != i && g.has_edge(i, j)) {
                list.push_back(p_man(j));
                used[p_man(j)] = 1;
            }
        list.push_back(p_man(n));
        used[p_man(n)] = 1;
        fill_ascending(list, size, used);
    }
    {  // v_{n+1}: the terminal p man first.
        auto& list = women[v_woman(n)];
        std::vector<char> used(size, 0);
        list = {p_man(n)};
        used[p_man(n)] = 1;
        fill_ascending(list, size, used);
    }

    {  // m_1 most prefers w_2; m_2 most prefers w_1.
        std::vector<char> used(size, 0);
        men[kM1] = {1};
        used[1] = 1;
        fill_ascending(men[kM1], size, used);
    }
    {
        std::vector<char> used(size, 0);
        men[kM2] = {kW1};
        used[kW1] = 1;
        fill_ascending(men[kM2], size, used);
    }
    for (int i = 0; i <= n; ++i) {  // p_i most prefers v_i.
        auto& list = men[p_man(i)];
        std::vector<char> used(size, 0);
        list = {v_woman(i)};
        used[v_woman(i)] = 1;
        fill_ascending(list, size, used);
    }

    return Profile(std::move(men), std::move(women));
}

Profile encode_path_report(const Profile& hp, const std::vector<int>& path) {
    const int n = path_size(hp);
    if (static_cast<int>(path.size()) != n)
        throw std::invalid_argument("path must visit every vertex");
    const int size = hp.size();
    std::vector<char> used(size, 0);
    std::vector<int> slots(n, -1);
    for (int k = 0; k + 1 < n; ++k) {
        slots[path[k]] = p_man(path[k + 1]);
        used[p_man(path[k + 1])] = 1;
    }
    std::vector<int> list{kM1, kM2};
    used[kM1] = used[kM2] = 1;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (slots[v] < 0) {
            while (used[p_man(next)])
                ++next;
            slots[v] = p_man(next);
            used[p_man(next)] = 1;
        }
        list.push_back(slots[v]);
    }
    fill_ascending(list, size, used);
    return hp.with_list(Gender::women, kW1, std::move(list));
}

std::optional<std::vector<int>> find_hamiltonian_path(const DiGraph& g, int bound) {
    const int n = g.vertex_count();
    if (n > bound)
        throw BoundExceeded("hamiltonian search: " + std::to_string(n) + " vertices exceeds bound " +
                            std::to_string(bound));
    if (n == 0)
        return std::vector<int>{};
    std::vector<int> path;
    std::vector<char> visited(n, 0);
    auto dfs = [&](auto&& self, int at) -> bool {
        path.push_back(at);
        visited[at] = 1;
        if (static_cast<int>(path.size()) == n)
            return true;
        for (int to = 0; to < n; ++to)
            if (!visited[to] && g.has_edge(at, to) && self(self, to))
                return true;
        path.pop_back();
        visited[at] = 0;
        return false;
    };
    for (int start = 0; start < n; ++start)
        if (dfs(dfs, start))
            return path;
    return std::nullopt;
}

}  // namespace smp
