#ifndef LEFKIT_GRAPH_ENUM_HPP
#define LEFKIT_GRAPH_ENUM_HPP

#include <vector>

#include "lefkit/graph.hpp"

namespace lefkit {

// One representative per isomorphism class of graphs on exactly n vertices,
// by edge-set enumeration with canonical-form dedup (min over all vertex
// permutations). Practical for n <= 6.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace lefkit

#endif
