#include "lefkit/graph_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lefkit {

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1) throw std::invalid_argument("all_graphs_up_to_iso: n must be positive");
    if (n > 6) throw std::invalid_argument("all_graphs_up_to_iso: bound too large (max 6)");

    // pair index table: edge {i,j}, i<j (0-based), in lexicographic order
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[i][j] = pair_index[j][i] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    const int ne = static_cast<int>(pairs.size());

    // precompute, per vertex permutation, the induced permutation of pair slots
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> edge_perms;
    do {
        std::vector<int> ep(ne);
        for (int e = 0; e < ne; ++e)
            ep[e] = pair_index[perm[pairs[e].first]][perm[pairs[e].second]];
        edge_perms.push_back(ep);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& ep : edge_perms) {
            std::uint32_t img = 0;
            for (std::uint32_t m = mask; m; m &= m - 1)
                img |= 1u << ep[__builtin_ctz(m)];
            canon = std::min(canon, img);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::uint32_t m = canon; m; m &= m - 1) {
            auto [i, j] = pairs[__builtin_ctz(m)];
            edges.emplace_back(i + 1, j + 1);
        }
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace lefkit
