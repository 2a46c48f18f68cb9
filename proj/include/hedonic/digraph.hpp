#pragma once

#include <vector>

namespace hedonic {

// Small digraph helpers shared by the verifiers and constructive algorithms.
// Graphs are adjacency lists over vertices [0, n); callers restrict to
// induced subgraphs by passing membership flags.

struct SccResult {
    int count = 0;
    std::vector<int> comp;  // vertex -> component id, -1 for excluded vertices
};

// Tarjan components of the subgraph induced by `member` (all vertices when
// empty). Component ids are in reverse topological order of the condensation:
// id 0 is a sink component.
SccResult strongly_connected_components(const std::vector<std::vector<int>>& out,
                                        const std::vector<char>& member = {});

// Weakly connected components of the same induced subgraph.
SccResult weakly_connected_components(const std::vector<std::vector<int>>& out,
                                      const std::vector<char>& member = {});

// Kahn order with lowest-index-first tie-breaking; empty when cyclic.
std::vector<int> topological_order(const std::vector<std::vector<int>>& out);

// Some cycle of the subgraph induced by `member`, as a vertex list in cycle
// order; empty when acyclic. Deterministic (smallest reachable cycle found
// by DFS from the lowest-index vertex).
std::vector<int> find_cycle(const std::vector<std::vector<int>>& out,
                            const std::vector<char>& member = {});

}  // namespace hedonic
