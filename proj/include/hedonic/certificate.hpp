#pragma once

#include "hedonic/core.hpp"

#include <map>

namespace hedonic {

enum class BlockKind {
    Strict,         // every member strictly prefers the coalition to her own
    Weak,           // every member weakly prefers, at least one strictly
    Wonderful,      // every member gets strictly more friends than in pi
    NashDeviation,  // agent prefers target u {agent} (target -1: prefers being alone)
    BlockingTuple,  // agent envies target and all its members accept her
};

struct AgentDelta {
    int friends_in_block = 0;
    int enemies_in_block = 0;
    int friends_in_pi = 0;
    int enemies_in_pi = 0;

    friend bool operator==(const AgentDelta&, const AgentDelta&) = default;
};

// The cross-algorithm test currency: every verifier emits these and a
// verifier-independent checker (oracle::certify) re-validates them from
// compare alone.
struct BlockingCertificate {
    BlockKind kind = BlockKind::Strict;
    std::vector<AgentId> coalition;  // sorted; for deviations: target u {agent}
    AgentId agent = -1;              // NashDeviation / BlockingTuple only
    int target_coalition = -1;       // index into pi; -1 for "prefers being alone"
    std::map<AgentId, AgentDelta> per_agent;
};

enum class VerdictKind { Stable, Unstable, Exists, NotExists };

struct Verdict {
    VerdictKind kind = VerdictKind::Stable;
    std::optional<BlockingCertificate> certificate;  // Unstable
    std::optional<Partition> partition;              // Exists
    std::string algorithm;
    // provenance details (parameters, trial counts); stable ordering
    std::vector<std::pair<std::string, std::string>> notes;

    bool stable() const { return kind == VerdictKind::Stable; }
    bool exists() const { return kind == VerdictKind::Exists; }
};

// Recomputes the four per-agent counters for each member of `coalition`.
std::map<AgentId, AgentDelta> make_deltas(const Instance& inst, const Partition& pi,
                                          const std::vector<AgentId>& coalition);

const char* to_string(VerdictKind k);
const char* to_string(BlockKind k);

}  // namespace hedonic
