#include "hedonic/core.hpp"

#include <numeric>

namespace hedonic {

namespace {

bool contains_sorted(const std::vector<AgentId>& v, AgentId x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void check_arcs(int n, const std::vector<Arc>& arcs, const char* what) {
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw std::invalid_argument(std::string(what) + " arc endpoint out of range");
        if (a.from == a.to)
            throw std::invalid_argument(std::string(what) + " self-arc");
    }
}

}  // namespace

Instance Instance::fe(int n, std::vector<Arc> friend_arcs) {
    Instance inst;
    inst.build(n, Model::FE, std::move(friend_arcs), {});
    return inst;
}

Instance Instance::fen(int n, std::vector<Arc> friend_arcs, std::vector<Arc> enemy_arcs) {
    Instance inst;
    inst.build(n, Model::FEN, std::move(friend_arcs), std::move(enemy_arcs));
    return inst;
}

void Instance::build(int n, Model model, std::vector<Arc> friend_arcs, std::vector<Arc> enemy_arcs) {
    if (n < 0) throw std::invalid_argument("negative agent count");
    check_arcs(n, friend_arcs, "friend");
    check_arcs(n, enemy_arcs, "enemy");

    std::sort(friend_arcs.begin(), friend_arcs.end());
    friend_arcs.erase(std::unique(friend_arcs.begin(), friend_arcs.end()), friend_arcs.end());
    std::sort(enemy_arcs.begin(), enemy_arcs.end());
    enemy_arcs.erase(std::unique(enemy_arcs.begin(), enemy_arcs.end()), enemy_arcs.end());

    // The two arc sets must be disjoint.
    for (const Arc& a : enemy_arcs)
        if (std::binary_search(friend_arcs.begin(), friend_arcs.end(), a))
            throw std::invalid_argument("arc is both friend and enemy");

    n_ = n;
    model_ = model;
    friend_arc_count_ = friend_arcs.size();
    enemy_arc_count_ = enemy_arcs.size();
    friends_out_.assign(n, {});
    friends_in_.assign(n, {});
    enemies_out_.assign(n, {});
    enemies_in_.assign(n, {});
    for (const Arc& a : friend_arcs) {
        friends_out_[a.from].push_back(a.to);
        friends_in_[a.to].push_back(a.from);
    }
    for (const Arc& a : enemy_arcs) {
        enemies_out_[a.from].push_back(a.to);
        enemies_in_[a.to].push_back(a.from);
    }
    for (auto& v : friends_in_) std::sort(v.begin(), v.end());
    for (auto& v : enemies_in_) std::sort(v.begin(), v.end());
    // out-lists are already sorted by the (from, to) arc ordering
}

bool Instance::is_friend(AgentId i, AgentId j) const {
    return i != j && contains_sorted(friends_out_[i], j);
}

bool Instance::is_enemy(AgentId i, AgentId j) const {
    if (i == j) return false;
    if (model_ == Model::FE) return !contains_sorted(friends_out_[i], j);
    return contains_sorted(enemies_out_[i], j);
}

std::vector<Arc> Instance::friend_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(friend_arc_count_);
    for (AgentId i = 0; i < n_; ++i)
        for (AgentId j : friends_out_[i]) arcs.push_back({i, j});
    return arcs;
}

std::vector<Arc> Instance::enemy_arcs() const {
    std::vector<Arc> arcs;
    arcs.reserve(enemy_arc_count_);
    for (AgentId i = 0; i < n_; ++i)
        for (AgentId j : enemies_out_[i]) arcs.push_back({i, j});
    return arcs;
}

Partition Partition::of(int n, std::vector<std::vector<AgentId>> coalitions) {
    Partition pi;
    pi.owner.assign(n, -1);
    for (auto& c : coalitions) {
        if (c.empty()) throw std::invalid_argument("empty coalition");
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw std::invalid_argument("duplicate agent within coalition");
    }
    pi.coalitions = std::move(coalitions);
    for (std::size_t k = 0; k < pi.coalitions.size(); ++k) {
        for (AgentId a : pi.coalitions[k]) {
            if (a < 0 || a >= n) throw std::invalid_argument("agent id out of range in partition");
            if (pi.owner[a] != -1) throw std::invalid_argument("agent appears in two coalitions");
            pi.owner[a] = static_cast<int>(k);
        }
    }
    for (AgentId a = 0; a < n; ++a)
        if (pi.owner[a] == -1) throw std::invalid_argument("agent missing from partition");
    return pi;
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<AgentId>> cs(n);
    for (AgentId a = 0; a < n; ++a) cs[a] = {a};
    return Partition::of(n, std::move(cs));
}

Partition Partition::grand(int n) {
    if (n == 0) return Partition::of(0, {});
    std::vector<AgentId> all(n);
    std::iota(all.begin(), all.end(), 0);
    return Partition::of(n, {all});
}

int Partition::max_coalition_size() const {
    int k = 0;
    for (const auto& c : coalitions) k = std::max<int>(k, static_cast<int>(c.size()));
    return k;
}

bool operator==(const Partition& a, const Partition& b) {
    if (a.owner.size() != b.owner.size()) return false;
    auto canonical = [](const Partition& p) {
        auto cs = p.coalitions;
        std::sort(cs.begin(), cs.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        return cs;
    };
    return canonical(a) == canonical(b);
}

RelationCount count_relations(const Instance& inst, AgentId i, const std::vector<AgentId>& S) {
    RelationCount rc;
    const auto& fr = inst.friends_out(i);
    int others = 0;
    for (AgentId s : S) {
        if (s == i) continue;
        ++others;
        if (contains_sorted(fr, s)) ++rc.friends;
    }
    if (inst.model() == Model::FE) {
        rc.enemies = others - rc.friends;
    } else {
        const auto& en = inst.enemies_out(i);
        for (AgentId s : S) {
            if (s == i) continue;
            if (contains_sorted(en, s)) ++rc.enemies;
        }
    }
    return rc;
}

PreferenceOutcome compare_counts(RelationCount s, RelationCount t) {
    if (s.friends != t.friends)
        return s.friends > t.friends ? PreferenceOutcome::Prefers : PreferenceOutcome::Dispreferred;
    if (s.enemies != t.enemies)
        return s.enemies < t.enemies ? PreferenceOutcome::Prefers : PreferenceOutcome::Dispreferred;
    return PreferenceOutcome::Indifferent;
}

PreferenceOutcome compare(const Instance& inst, AgentId i,
                          const std::vector<AgentId>& S, const std::vector<AgentId>& T) {
    if (std::find(S.begin(), S.end(), i) == S.end() ||
        std::find(T.begin(), T.end(), i) == T.end())
        throw std::invalid_argument("compare: agent must belong to both coalitions");
    return compare_counts(count_relations(inst, i, S), count_relations(inst, i, T));
}

}  // namespace hedonic
