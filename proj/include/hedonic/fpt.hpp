#pragma once

#include "hedonic/params.hpp"
#include "hedonic/verify.hpp"

#include <cstdint>
#include <functional>

namespace hedonic {

// Configuration of the random-separation (kappa, Delta) verifier. STABLE
// verdicts are randomized-complete: for each target size p the chance of
// missing an existing blocker is at most failure_prob.
struct SeparationConfig {
    double failure_prob = 0x1p-20;
    std::uint64_t rng_seed = 0;
    long long trial_budget = 1LL << 31;  // per (p) round; beyond it: SizeLimitError
};

// One sampling round: target coalition size p, neighborhood budget q, and
// the repetition count t with (1 - hit_prob)^t <= failure_prob, where
// hit_prob = (p/(p+q))^p * (q/(p+q))^q.
struct SeparationRound {
    int p = 0;
    long long q = 0;
    long long trials = 0;
    double hit_prob = 0.0;
};

SeparationRound separation_round(int n, int delta, int p, double failure_prob);

Verdict verify_core_fpt_kd(const Instance& inst, const Partition& pi, CoreMode mode,
                           const SeparationConfig& cfg = {});

struct ColorCodingConfig {
    double failure_prob = 0x1p-20;
    std::uint64_t rng_seed = 0;
    // Enumerate all colorings exhaustively when |V_S| does not exceed this;
    // above it, fall back to seeded random colorings with the usual
    // repetition bound.
    int exhaustive_singleton_limit = 12;
    long long tree_budget = 30'000'000;   // in-tree templates per (B_NS, b)
    long long pair_budget = 30'000'000;   // (B_NS, b) subsets overall
};

Verdict verify_core_fpt_kf(const Instance& inst, const Partition& pi, CoreMode mode,
                           const ColorCodingConfig& cfg = {});

// Obs-style bound: a core stable partition has at most kappa * f
// non-singleton agents; false signals that pi cannot be core stable.
bool bound_nonsingletons(const Partition& pi, const Params& params);

// In-tree search template over abstract nodes: duplicated non-singleton
// copies, color nodes, and the root t. Exposed for the structural tests.
struct InTreeTemplate {
    int colors = 0;
    std::vector<int> copy_agent;  // copy -> index into B_NS
    std::vector<int> copy_out;    // copy -> color node
    std::vector<int> color_out;   // color -> color node, or -1 for the root
};

// Enumerates every valid template (conditions t1-t3; copies of one agent in
// strictly increasing color order) in the deterministic mixed-radix order.
// Returns false from the callback to stop early.
bool enumerate_in_trees(const std::vector<int>& copy_counts, int colors,
                        const std::function<bool(const InTreeTemplate&)>& visit);

}  // namespace hedonic
