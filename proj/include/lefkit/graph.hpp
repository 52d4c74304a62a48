#ifndef LEFKIT_GRAPH_HPP
#define LEFKIT_GRAPH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lefkit {

// Simple undirected graph on vertices 1..n. Immutable after construction.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    // neighbor bitmask of v, bit (w-1) set when {v,w} is an edge
    std::uint64_t neighbors(int v) const { return adj_[v - 1]; }

    bool is_independent(std::uint64_t mask) const;
    // true when no vertex outside the set can be added
    bool is_maximal_independent(std::uint64_t mask) const;

    // Calls fn for every independent set (including the empty set).
    void for_each_independent_set(const std::function<void(std::uint64_t, int)>& fn) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

struct IndependenceSequence {
    std::vector<mpz_class> counts;  // i_0 .. i_alpha
    int alpha = 0;
};

Graph whisker(const Graph& g);
IndependenceSequence independence_sequence(const Graph& g);
int independence_number(const Graph& g);
bool is_well_covered(const Graph& g);
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g);

Graph complete_graph(int n);
Graph star_graph(int n);   // center is vertex 1
Graph broom_graph(int m);  // handle vertices m+1,m+2,m+3; bristles 1..m hang off m+3
bool bipartite_check(const Graph& g);
Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs);
// Applies vertex relabeling: vertex v becomes perm[v-1] (a bijection on 1..n).
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Edge-list format: first line "n m", then m lines "u v".
Graph parse_graph(const std::string& text);

std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<int>& vs);

}  // namespace lefkit

#endif
