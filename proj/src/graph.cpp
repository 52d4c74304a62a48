#include "lefkit/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefkit {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 62) throw std::invalid_argument("graphs beyond 62 vertices are not supported");
    adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u > v) std::swap(u, v);
        if (adj_[u - 1] & (1ull << (v - 1))) throw std::invalid_argument("duplicate edge");
        adj_[u - 1] |= 1ull << (v - 1);
        adj_[v - 1] |= 1ull << (u - 1);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return adj_[u - 1] & (1ull << (v - 1));
}

bool Graph::is_independent(std::uint64_t mask) const {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = __builtin_ctzll(m) + 1;
        if (adj_[v - 1] & mask) return false;
    }
    return true;
}

bool Graph::is_maximal_independent(std::uint64_t mask) const {
    if (!is_independent(mask)) return false;
    std::uint64_t all = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
    for (std::uint64_t m = all & ~mask; m; m &= m - 1) {
        int v = __builtin_ctzll(m) + 1;
        if ((adj_[v - 1] & mask) == 0) return false;
    }
    return true;
}

void Graph::for_each_independent_set(
    const std::function<void(std::uint64_t, int)>& fn) const {
    // branch on each vertex in order, pruning via neighbor masks
    std::function<void(int, std::uint64_t, int)> rec = [&](int v, std::uint64_t mask,
                                                           int size) {
        if (v > n_) {
            fn(mask, size);
            return;
        }
        rec(v + 1, mask, size);
        if ((adj_[v - 1] & mask) == 0) rec(v + 1, mask | (1ull << (v - 1)), size + 1);
    };
    rec(1, 0, 0);
}

Graph whisker(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + n);
    return Graph(2 * n, edges);
}

IndependenceSequence independence_sequence(const Graph& g) {
    IndependenceSequence seq;
    seq.counts.assign(g.vertex_count() + 1, 0);
    g.for_each_independent_set([&](std::uint64_t, int size) { seq.counts[size] += 1; });
    while (seq.counts.size() > 1 && seq.counts.back() == 0) seq.counts.pop_back();
    seq.alpha = static_cast<int>(seq.counts.size()) - 1;
    return seq;
}

int independence_number(const Graph& g) { return independence_sequence(g).alpha; }

bool is_well_covered(const Graph& g) {
    int size = -1;
    bool ok = true;
    g.for_each_independent_set([&](std::uint64_t mask, int s) {
        if (!ok || !g.is_maximal_independent(mask)) return;
        if (size < 0)
            size = s;
        else if (size != s)
            ok = false;
    });
    return ok;
}

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g) {
    std::vector<std::uint64_t> out;
    g.for_each_independent_set([&](std::uint64_t mask, int) {
        if (g.is_maximal_independent(mask)) out.push_back(mask);
    });
    std::sort(out.begin(), out.end());
    return out;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 2; j <= n; ++j) edges.emplace_back(1, j);
    return Graph(n, edges);
}

Graph broom_graph(int m) {
    if (m < 1) throw std::invalid_argument("broom needs at least one bristle");
    // vertices: x_1..x_m = 1..m, y_1,y_2,y_3 = m+1,m+2,m+3
    std::vector<std::pair<int, int>> edges = {{m + 1, m + 2}, {m + 2, m + 3}};
    for (int i = 1; i <= m; ++i) edges.emplace_back(i, m + 3);
    return Graph(m + 3, edges);
}

bool bipartite_check(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
                int w = __builtin_ctzll(m) + 1;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : pairs) {
        if (u > v) std::swap(u, v);
        auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end())
            throw std::invalid_argument("remove_edges: {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} is not an edge");
        edges.erase(it);
    }
    return Graph(g.vertex_count(), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u - 1], perm[v - 1]);
    return Graph(g.vertex_count(), edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("parse error at line 1: empty input");
    std::istringstream head(line);
    int n = 0, m = 0;
    if (!(head >> n >> m))
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": expected \"n m\"");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_line())
            throw std::invalid_argument("parse error at line " + std::to_string(lineno + 1) +
                                        ": expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v))
            throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                        ": expected \"u v\"");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) + ": " +
                                    e.what());
    }
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> vs;
    for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(__builtin_ctzll(m) + 1);
    return vs;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t mask = 0;
    for (int v : vs) mask |= 1ull << (v - 1);
    return mask;
}

}  // namespace lefkit
