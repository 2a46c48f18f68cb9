#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedonic {

// Agents are dense integers in [0, n). External names live in the io layer.
using AgentId = int;

enum class Model { FE, FEN };

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arc {
    AgentId from = 0;
    AgentId to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// An instance is the agent set plus the friendship digraph and, for FEN,
// the enemy digraph. FE instances store the friendship graph only; enemy
// queries are answered arithmetically (everyone else is an enemy).
class Instance {
public:
    Instance() = default;  // empty FE instance

    static Instance fe(int n, std::vector<Arc> friend_arcs);
    static Instance fen(int n, std::vector<Arc> friend_arcs, std::vector<Arc> enemy_arcs);

    int n() const { return n_; }
    Model model() const { return model_; }

    const std::vector<AgentId>& friends_out(AgentId i) const { return friends_out_[i]; }
    const std::vector<AgentId>& friends_in(AgentId i) const { return friends_in_[i]; }
    // FEN only; empty adjacency for FE (enemies are implicit there).
    const std::vector<AgentId>& enemies_out(AgentId i) const { return enemies_out_[i]; }
    const std::vector<AgentId>& enemies_in(AgentId i) const { return enemies_in_[i]; }

    bool is_friend(AgentId i, AgentId j) const;
    bool is_enemy(AgentId i, AgentId j) const;

    std::vector<Arc> friend_arcs() const;
    std::vector<Arc> enemy_arcs() const;  // FE: empty (implicit complement)

    std::size_t friend_arc_count() const { return friend_arc_count_; }
    std::size_t enemy_arc_count() const { return enemy_arc_count_; }

private:
    void build(int n, Model model, std::vector<Arc> friend_arcs, std::vector<Arc> enemy_arcs);

    int n_ = 0;
    Model model_ = Model::FE;
    std::size_t friend_arc_count_ = 0;
    std::size_t enemy_arc_count_ = 0;
    std::vector<std::vector<AgentId>> friends_out_, friends_in_;
    std::vector<std::vector<AgentId>> enemies_out_, enemies_in_;
};

// A coalition structure: disjoint non-empty coalitions covering all agents.
// Coalitions are kept sorted; owner maps each agent to its coalition index.
struct Partition {
    std::vector<std::vector<AgentId>> coalitions;
    std::vector<int> owner;

    static Partition of(int n, std::vector<std::vector<AgentId>> coalitions);
    static Partition singletons(int n);
    static Partition grand(int n);

    int n() const { return static_cast<int>(owner.size()); }
    const std::vector<AgentId>& coalition_of(AgentId i) const { return coalitions[owner[i]]; }
    int max_coalition_size() const;

    // equality of the set partitions; coalition order is irrelevant
    friend bool operator==(const Partition& a, const Partition& b);
};

enum class PreferenceOutcome { Prefers, Indifferent, Dispreferred };

struct RelationCount {
    int friends = 0;
    int enemies = 0;

    friend bool operator==(const RelationCount&, const RelationCount&) = default;
};

// Out-neighbor counts of i within S; i itself never counts.
RelationCount count_relations(const Instance& inst, AgentId i, const std::vector<AgentId>& S);

// Friend-oriented comparison of S vs T from i's point of view. Requires i in both.
PreferenceOutcome compare(const Instance& inst, AgentId i,
                          const std::vector<AgentId>& S, const std::vector<AgentId>& T);

// Same order, phrased on raw counts: more friends first, then fewer enemies.
PreferenceOutcome compare_counts(RelationCount s, RelationCount t);

}  // namespace hedonic
