#include "hedonic/existence.hpp"

#include "hedonic/digraph.hpp"
#include "hedonic/params.hpp"
#include "hedonic/verify.hpp"

#include <numeric>

namespace hedonic {

namespace {

std::vector<std::vector<int>> adjacency(const Instance& inst, bool include_enemies) {
    std::vector<std::vector<int>> out(inst.n());
    for (AgentId i = 0; i < inst.n(); ++i) {
        out[i].assign(inst.friends_out(i).begin(), inst.friends_out(i).end());
        if (include_enemies)
            for (AgentId j : inst.enemies_out(i)) out[i].push_back(j);
    }
    return out;
}

// Greedy placement shared by the two DAG algorithms. `order` is the
// processing order; `admissible` filters candidate coalitions; ties among
// equally preferred coalitions break towards the earliest-created one.
Partition greedy_place(const Instance& inst, const std::vector<int>& order,
                       bool veto_by_members) {
    std::vector<std::vector<AgentId>> coalitions;
    for (int v : order) {
        int best = -1;
        RelationCount best_count;
        for (std::size_t c = 0; c < coalitions.size(); ++c) {
            RelationCount rc = count_relations(inst, v, coalitions[c]);
            if (rc.friends == 0) continue;
            if (veto_by_members) {
                bool vetoed = false;
                for (AgentId u : coalitions[c])
                    if (inst.is_enemy(u, v)) {
                        vetoed = true;
                        break;
                    }
                if (vetoed) continue;
            }
            if (best == -1 || compare_counts(rc, best_count) == PreferenceOutcome::Prefers) {
                best = static_cast<int>(c);
                best_count = rc;
            }
        }
        if (best == -1)
            coalitions.push_back({v});
        else
            coalitions[best].push_back(v);
    }
    return Partition::of(inst.n(), std::move(coalitions));
}

}  // namespace

SccPartitionResult scc_partition(const Instance& inst) {
    auto out = adjacency(inst, false);
    SccResult scc = strongly_connected_components(out);
    std::vector<std::vector<AgentId>> coalitions(scc.count);
    for (AgentId a = 0; a < inst.n(); ++a) coalitions[scc.comp[a]].push_back(a);
    std::sort(coalitions.begin(), coalitions.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SccPartitionResult res{Partition::of(inst.n(), std::move(coalitions)), {}};
    res.verdict.kind = VerdictKind::Exists;
    res.verdict.partition = res.partition;
    res.verdict.algorithm = "scc-partition";
    res.verdict.notes.emplace_back(
        "guarantee", inst.model() == Model::FE ? "strictly-core-stable" : "core-stable");
    return res;
}

Partition solve_individ_dag(const Instance& inst) {
    auto out = adjacency(inst, false);
    std::vector<int> order = topological_order(out);
    if (inst.n() > 0 && order.empty())
        throw PreconditionError("solve_individ_dag: friendship graph has a cycle");
    std::reverse(order.begin(), order.end());
    return greedy_place(inst, order, /*veto_by_members=*/true);
}

Partition solve_nash_dag(const Instance& inst) {
    auto out = adjacency(inst, true);
    std::vector<int> order = topological_order(out);
    if (inst.n() > 0 && order.empty())
        throw PreconditionError("solve_nash_dag: combined relation graph has a cycle");
    std::reverse(order.begin(), order.end());
    return greedy_place(inst, order, /*veto_by_members=*/false);
}

Partition solve_nash_symmetric(const Instance& inst) {
    for (AgentId i = 0; i < inst.n(); ++i) {
        for (AgentId j : inst.friends_out(i))
            if (!inst.is_friend(j, i))
                throw PreconditionError("solve_nash_symmetric: friendship arc lacks its reverse");
        for (AgentId j : inst.enemies_out(i))
            if (!inst.is_enemy(j, i))
                throw PreconditionError("solve_nash_symmetric: enemy arc lacks its reverse");
    }
    std::vector<std::vector<AgentId>> coalitions;
    std::vector<AgentId> grand;
    for (AgentId i = 0; i < inst.n(); ++i) {
        if (inst.friends_out(i).empty())
            coalitions.push_back({i});
        else
            grand.push_back(i);
    }
    if (!grand.empty()) coalitions.push_back(std::move(grand));
    return Partition::of(inst.n(), std::move(coalitions));
}

Verdict decide_nash_fe_f2(const Instance& inst) {
    if (inst.model() != Model::FE)
        throw ModelMismatchError("decide_nash_fe_f2 requires an FE instance");
    Verdict v;
    v.algorithm = "nash-f2";
    const int n = inst.n();
    const std::optional<int> f = fas_if_at_most(n, inst.friend_arcs(), 2);
    if (!f)
        throw PreconditionError("decide_nash_fe_f2: feedback arc set number exceeds 2");
    v.notes.emplace_back("f", std::to_string(*f));
    if (n == 0) {
        v.kind = VerdictKind::Exists;
        v.partition = Partition::of(0, {});
        return v;
    }

    std::vector<char> sink(n, 0);
    for (AgentId i = 0; i < n; ++i) sink[i] = inst.friends_out(i).empty();

    std::vector<int> nonsink_friends(n, 0);
    std::vector<char> has_sink_friend(n, 0);
    for (AgentId i = 0; i < n; ++i) {
        if (sink[i]) continue;
        for (AgentId j : inst.friends_out(i)) {
            if (sink[j]) has_sink_friend[i] = 1;
            else ++nonsink_friends[i];
        }
        if (nonsink_friends[i] == 0) {
            v.kind = VerdictKind::NotExists;
            v.notes.emplace_back("reason", "agent " + std::to_string(i) + " has only sink friends");
            return v;
        }
    }

    std::vector<std::vector<AgentId>> coalitions;
    for (AgentId i = 0; i < n; ++i)
        if (sink[i]) coalitions.push_back({i});

    AgentId forced = -1;
    for (AgentId i = 0; i < n; ++i)
        if (!sink[i] && has_sink_friend[i] && nonsink_friends[i] == 1) {
            forced = i;
            break;
        }

    if (forced == -1) {
        // every non-sink agent with a sink friend has two or more non-sink
        // friends: sinks solo, everyone else together
        std::vector<AgentId> rest;
        for (AgentId i = 0; i < n; ++i)
            if (!sink[i]) rest.push_back(i);
        if (!rest.empty()) coalitions.push_back(std::move(rest));
        Partition pi = Partition::of(n, std::move(coalitions));
        Verdict check = verify_nash(inst, pi);
        if (!check.stable()) throw std::logic_error("nash-f2: guaranteed partition failed to verify");
        v.kind = VerdictKind::Exists;
        v.partition = std::move(pi);
        return v;
    }

    AgentId partner = -1;
    for (AgentId j : inst.friends_out(forced))
        if (!sink[j]) partner = j;
    if (!inst.is_friend(partner, forced)) {
        v.kind = VerdictKind::NotExists;
        v.notes.emplace_back("reason", "forced pair " + std::to_string(forced) + "," +
                                           std::to_string(partner) + " is not mutual");
        return v;
    }
    coalitions.push_back({std::min(forced, partner), std::max(forced, partner)});
    std::vector<AgentId> rest;
    for (AgentId i = 0; i < n; ++i)
        if (!sink[i] && i != forced && i != partner) rest.push_back(i);
    if (!rest.empty()) coalitions.push_back(std::move(rest));
    Partition pi = Partition::of(n, std::move(coalitions));
    if (verify_nash(inst, pi).stable()) {
        v.kind = VerdictKind::Exists;
        v.partition = std::move(pi);
    } else {
        v.kind = VerdictKind::NotExists;
        v.notes.emplace_back("reason", "assembled partition is not Nash stable");
    }
    return v;
}

}  // namespace hedonic
