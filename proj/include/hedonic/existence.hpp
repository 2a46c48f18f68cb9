#pragma once

#include "hedonic/certificate.hpp"

namespace hedonic {

// Strongly connected components of the friendship graph; strictly core
// stable for FE instances, core stable for FEN. Coalitions are ordered by
// their smallest member.
struct SccPartitionResult {
    Partition partition;
    Verdict verdict;
};
SccPartitionResult scc_partition(const Instance& inst);

// Greedy along the reverse topological order of the friendship graph; the
// result is individually stable. Requires an acyclic friendship graph.
Partition solve_individ_dag(const Instance& inst);

// Greedy along the reverse topological order of the combined relation
// graph; the result is Nash stable. Requires the union graph acyclic.
Partition solve_nash_dag(const Instance& inst);

// Friendless agents solo, everyone else together; Nash stable whenever all
// relations are symmetric (bidirectional arcs).
Partition solve_nash_symmetric(const Instance& inst);

// Decision procedure for Nash existence on FE instances with feedback arc
// set number at most 2 (verified exactly; refuses anything else).
Verdict decide_nash_fe_f2(const Instance& inst);

}  // namespace hedonic
