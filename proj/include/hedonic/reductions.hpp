#pragma once

#include "hedonic/core.hpp"
#include "hedonic/verify.hpp"

#include <array>
#include <map>

namespace hedonic {

// Exact-cover-by-3-sets seed. Elements are 1-based: [1, 3*n_hat].
struct X3CInstance {
    enum class Side { Out, In };

    int n_hat = 0;
    std::vector<std::array<int, 3>> sets;
    std::optional<std::vector<Side>> side;        // per set, for the planar gadget
    std::optional<std::vector<int>> known_cover;  // indices into sets

    int element_count() const { return 3 * n_hat; }
    void validate() const;  // shape only; generators add their own bounds
};

struct CliqueInstance {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // 0-based, simple
    int h = 0;
    std::optional<std::vector<int>> known_clique;  // vertex set of size h

    void validate() const;
};

// A reduction output: the hedonic instance, the initial partition for
// verification reductions, the seed-derived ground truth when the seed
// carried one, and human-readable agent labels.
struct GeneratedCase {
    Instance instance;
    std::optional<Partition> pi;
    // verification reductions: "a blocking coalition exists";
    // existence reductions: "a stable partition exists"
    std::optional<bool> ground_truth;
    std::vector<std::string> name_map;
    std::map<std::string, AgentId> ids;

    AgentId id(const std::string& label) const;
};

// Verification gadgets (instance + initial partition).
GeneratedCase gen_fe_core_f1(const X3CInstance& seed, CoreMode mode);
GeneratedCase gen_fe_core_planar4(const X3CInstance& seed, CoreMode mode);
GeneratedCase gen_fe_core_clique(const CliqueInstance& seed, CoreMode mode);
GeneratedCase gen_fen_core_f1(const X3CInstance& seed);
GeneratedCase gen_fen_strictcore_dag(const X3CInstance& seed);

// Existence gadgets (instance only).
GeneratedCase gen_fe_nashex(const X3CInstance& seed);
GeneratedCase gen_fen_individex(const X3CInstance& seed);

// Ground-truth helpers for the seeds.
std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& seed, int max_sets = 20);
std::optional<std::vector<int>> clique_bruteforce(const CliqueInstance& seed);

// Explicit witnesses from the forward directions of the constructions,
// for the cases too large for exhaustive search: the blocking coalition of
// the planar gadget, and the stable partitions of the existence gadgets.
std::vector<AgentId> planar4_witness_coalition(const GeneratedCase& gc, const X3CInstance& seed,
                                               const std::vector<int>& cover);
Partition nashex_witness_partition(const GeneratedCase& gc, const X3CInstance& seed,
                                   const std::vector<int>& cover);
Partition individex_witness_partition(const GeneratedCase& gc, const X3CInstance& seed,
                                      const std::vector<int>& cover);
// Blocking coalitions of the two FE f=1-style gadgets, for cross-checks.
std::vector<AgentId> fe_core_f1_witness_coalition(const GeneratedCase& gc, const X3CInstance& seed,
                                                  const std::vector<int>& cover);
std::vector<AgentId> fen_core_f1_witness_coalition(const GeneratedCase& gc,
                                                   const X3CInstance& seed,
                                                   const std::vector<int>& cover);

}  // namespace hedonic
