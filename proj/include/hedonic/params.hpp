#pragma once

#include "hedonic/core.hpp"

namespace hedonic {

// Structural parameters of an instance. For FE the relevant graph is the
// friendship graph; for FEN it is the union of friendship and enemy arcs
// (the union of the two digraphs is what both degree and feedback arc set
// are measured on there).
struct FasValue {
    int value = 0;
    bool exact = false;
};

struct Params {
    int delta = 0;                    // max |N+(i) u N-(i)| over the relevant graph
    std::optional<int> kappa;         // max coalition size, when a partition is given
    FasValue fas;
};

struct FasOptions {
    bool exact = false;
    // Exact mode refuses instances whose residual (after peeling vertices
    // that lie on no cycle) still has more than this many arcs.
    int residual_arc_limit = 20;
};

Params compute_params(const Instance& inst, const Partition* pi = nullptr,
                      FasOptions fas_opts = {});

// Feedback arc set of an explicit digraph; exposed for tests and reuse.
// Arcs must be self-loop free; parallel arcs are collapsed.
int fas_upper_bound(int n, const std::vector<Arc>& arcs);
// Exact minimum via branch over residual arc subsets, seeded by the
// heuristic bound. Throws SizeLimitError past opts.residual_arc_limit.
int fas_exact(int n, const std::vector<Arc>& arcs, int residual_arc_limit = 20);

// Exact value when it is at most k, nullopt otherwise. Cheap for small k
// regardless of graph size (tries only deletion sets up to size k).
std::optional<int> fas_if_at_most(int n, const std::vector<Arc>& arcs, int k);

bool is_acyclic(int n, const std::vector<Arc>& arcs);

// Arcs of the graph that Delta and f are defined on: friendship for FE,
// union of friendship and enemies for FEN.
std::vector<Arc> relevant_arcs(const Instance& inst);

// Max number of distinct in/out neighbors over the relevant graph.
int max_degree(const Instance& inst);

}  // namespace hedonic
