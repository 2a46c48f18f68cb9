#pragma once

#include "hedonic/certificate.hpp"

namespace hedonic {

// Core verification asks for strictly blocking coalitions, strict-core
// verification for weakly blocking ones.
enum class CoreMode { Core, StrictCore };

enum class BlockSearch { Strict, Weak };

inline BlockSearch block_search_for(CoreMode m) {
    return m == CoreMode::Core ? BlockSearch::Strict : BlockSearch::Weak;
}

struct SearchBudget {
    long long max_subsets = 1LL << 25;  // brute-force / XP coalition enumerations
};

// nullopt: individually rational. Otherwise a NashDeviation certificate with
// target -1 (the agent strictly prefers being alone).
std::optional<BlockingCertificate> individual_rationality_violation(const Instance& inst,
                                                                    const Partition& pi);

Verdict verify_nash(const Instance& inst, const Partition& pi);
Verdict verify_individual(const Instance& inst, const Partition& pi);

// Ground-truth blocking-coalition search by subset enumeration, size
// ascending and lexicographic within a size. `size_cap` limits coalition
// size (otherwise all of [1, n]); enumeration past the subset budget throws
// SizeLimitError. jobs > 1 splits each size class over that many workers;
// the certificate of smallest enumeration rank wins, so results do not
// depend on jobs.
std::optional<BlockingCertificate> find_blocking_bruteforce(
    const Instance& inst, const Partition& pi, BlockSearch mode,
    std::optional<int> size_cap = std::nullopt, const SearchBudget& budget = {}, int jobs = 1);

// Recursive-deletion preprocessing for FE: either a wonderfully blocking
// coalition (every member gains friends strictly), or the guarantee that
// every weakly blocking coalition has at most kappa agents.
struct WonderfulResult {
    std::optional<BlockingCertificate> wonderful;
    int kappa = 0;
};
WonderfulResult preprocess_wonderful(const Instance& inst, const Partition& pi);

// XP verifier in kappa for FE: preprocessing plus enumeration of all
// coalitions of size at most kappa.
Verdict verify_core_xp(const Instance& inst, const Partition& pi, CoreMode mode,
                       const SearchBudget& budget = {});

// Acyclic-friendship shortcuts. nullopt: not applicable (cyclic friendship
// graph, or FEN in strict-core mode). For FE the all-singleton structure is
// the unique core stable one; we use the same characterization for the
// strict core, which holds because any weakly blocking coalition of
// singletons would force every member to gain a friend and hence a
// friendship cycle. FEN core stability on an acyclic friendship graph is
// exactly individual rationality.
std::optional<Verdict> verify_core_dag_shortcut(const Instance& inst, const Partition& pi,
                                                CoreMode mode);

// Re-checks a certificate against a coalition predicate; used by verifiers
// to re-validate everything they emit before returning it.
bool coalition_blocks(const Instance& inst, const Partition& pi,
                      const std::vector<AgentId>& coalition, BlockSearch mode);

}  // namespace hedonic
