#include "hedonic/fpt.hpp"

#include "hedonic/digraph.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <functional>
#include <random>

namespace hedonic {

namespace {

BlockingCertificate wrap_certificate(const Instance& inst, const Partition& pi,
                                     std::vector<AgentId> coalition, CoreMode mode) {
    BlockingCertificate cert;
    cert.kind = mode == CoreMode::Core ? BlockKind::Strict : BlockKind::Weak;
    std::sort(coalition.begin(), coalition.end());
    cert.coalition = std::move(coalition);
    cert.per_agent = make_deltas(inst, pi, cert.coalition);
    return cert;
}

std::vector<std::vector<int>> friend_adjacency(const Instance& inst) {
    std::vector<std::vector<int>> out(inst.n());
    for (AgentId i = 0; i < inst.n(); ++i)
        out[i].assign(inst.friends_out(i).begin(), inst.friends_out(i).end());
    return out;
}

// Phase shared by both FPT verifiers and the in-tree search: checks that
// every pi-coalition is strongly connected (P1) and that the singleton
// agents induce no cycle (P2); either failure yields a strictly blocking
// coalition.
std::optional<std::vector<AgentId>> phase_one_blocker(const Instance& inst, const Partition& pi,
                                                      const std::vector<std::vector<int>>& adj) {
    std::vector<char> member(inst.n(), 0);
    for (const auto& coalition : pi.coalitions) {
        if (coalition.size() <= 1) continue;
        std::fill(member.begin(), member.end(), 0);
        for (AgentId a : coalition) member[a] = 1;
        SccResult scc = strongly_connected_components(adj, member);
        if (scc.count <= 1) continue;
        // component id 0 is a sink of the condensation: its members keep all
        // their friends and lose enemies
        std::vector<AgentId> sink;
        for (AgentId a : coalition)
            if (scc.comp[a] == 0) sink.push_back(a);
        return sink;
    }
    std::fill(member.begin(), member.end(), 0);
    for (const auto& coalition : pi.coalitions)
        if (coalition.size() == 1) member[coalition[0]] = 1;
    std::vector<int> cycle = find_cycle(adj, member);
    if (!cycle.empty()) {
        std::sort(cycle.begin(), cycle.end());
        return std::vector<AgentId>(cycle.begin(), cycle.end());
    }
    return std::nullopt;
}

}  // namespace

SeparationRound separation_round(int n, int delta, int p, double failure_prob) {
    SeparationRound round;
    round.p = p;
    // Neighborhood budget: at most Delta neighbors per coalition member, but
    // never more than the agents outside the coalition.
    round.q = std::min<long long>(static_cast<long long>(delta) * p, std::max(n - p, 0));
    const double total = static_cast<double>(p) + static_cast<double>(round.q);
    const double keep = p / total;
    double hit = 1.0;
    for (int i = 0; i < p; ++i) hit *= keep;
    for (long long i = 0; i < round.q; ++i) hit *= (1.0 - keep);
    round.hit_prob = hit;
    if (hit >= 1.0) {
        round.trials = 1;
    } else if (hit <= 0.0) {
        round.trials = std::numeric_limits<long long>::max();  // caller's budget rejects
    } else {
        const double t = std::ceil(std::log(failure_prob) / std::log1p(-hit));
        round.trials = t >= 9e18 ? std::numeric_limits<long long>::max()
                                 : std::max<long long>(static_cast<long long>(t), 1);
    }
    return round;
}

Verdict verify_core_fpt_kd(const Instance& inst, const Partition& pi, CoreMode mode,
                           const SeparationConfig& cfg) {
    if (inst.model() != Model::FE)
        throw ModelMismatchError("verify_core_fpt_kd requires an FE instance");
    Verdict v;
    v.algorithm = mode == CoreMode::Core ? "core-fpt-kd" : "strict-core-fpt-kd";
    const int n = inst.n();
    if (n == 0) {
        v.kind = VerdictKind::Stable;
        return v;
    }

    WonderfulResult pre = preprocess_wonderful(inst, pi);
    if (pre.wonderful) {
        v.kind = VerdictKind::Unstable;
        v.certificate = wrap_certificate(inst, pi, pre.wonderful->coalition, mode);
        v.notes.emplace_back("phase", "wonderful");
        return v;
    }
    const int kappa = pre.kappa;
    const int delta = max_degree(inst);
    const BlockSearch search = block_search_for(mode);
    auto adj = friend_adjacency(inst);

    std::mt19937_64 rng(cfg.rng_seed);
    std::vector<char> member(n, 0);
    long long total_trials = 0;
    for (int p = 1; p <= kappa; ++p) {
        SeparationRound round = separation_round(n, delta, p, cfg.failure_prob);
        if (round.trials > cfg.trial_budget)
            throw SizeLimitError("verify_core_fpt_kd: separation round for p=" +
                                 std::to_string(p) + " needs " + std::to_string(round.trials) +
                                 " trials");
        const double keep = p / (static_cast<double>(p) + static_cast<double>(round.q));
        const auto threshold =
            static_cast<std::uint64_t>(keep * 9007199254740992.0);  // 2^53
        for (long long trial = 0; trial < round.trials; ++trial) {
            ++total_trials;
            for (int a = 0; a < n; ++a) member[a] = (rng() >> 11) < threshold;
            SccResult comps = search == BlockSearch::Strict
                                  ? strongly_connected_components(adj, member)
                                  : weakly_connected_components(adj, member);
            if (comps.count == 0) continue;
            std::vector<std::vector<AgentId>> groups(comps.count);
            for (int a = 0; a < n; ++a)
                if (member[a] && comps.comp[a] >= 0) groups[comps.comp[a]].push_back(a);
            for (auto& group : groups) {
                if (group.empty() || static_cast<int>(group.size()) > kappa) continue;
                if (coalition_blocks(inst, pi, group, search)) {
                    v.kind = VerdictKind::Unstable;
                    v.certificate = wrap_certificate(inst, pi, group, mode);
                    v.notes.emplace_back("phase", "separation");
                    v.notes.emplace_back("p", std::to_string(p));
                    return v;
                }
            }
        }
    }
    v.kind = VerdictKind::Stable;
    v.notes.emplace_back("trials", std::to_string(total_trials));
    return v;
}

bool bound_nonsingletons(const Partition& pi, const Params& params) {
    long long nonsingleton = 0;
    for (const auto& c : pi.coalitions)
        if (c.size() > 1) nonsingleton += static_cast<long long>(c.size());
    const long long kappa = params.kappa ? *params.kappa : pi.max_coalition_size();
    return nonsingleton <= kappa * static_cast<long long>(params.fas.value);
}

bool enumerate_in_trees(const std::vector<int>& copy_counts, int colors,
                        const std::function<bool(const InTreeTemplate&)>& visit) {
    InTreeTemplate t;
    t.colors = colors;
    for (std::size_t agent = 0; agent < copy_counts.size(); ++agent)
        for (int z = 0; z < copy_counts[agent]; ++z) t.copy_agent.push_back(static_cast<int>(agent));
    const int copies = static_cast<int>(t.copy_agent.size());
    t.copy_out.assign(copies, 0);
    std::vector<int> color_digit(colors, 0);  // value == own color encodes the root t

    std::vector<int> state(colors);
    auto colors_acyclic = [&]() {
        // every color must reach the root through the functional graph
        std::fill(state.begin(), state.end(), 0);
        for (int c = 0; c < colors; ++c) {
            if (state[c] != 0) continue;
            int x = c;
            std::vector<int> path;
            while (x != -1 && state[x] == 0) {
                state[x] = 1;
                path.push_back(x);
                x = t.color_out[x];
            }
            if (x != -1 && state[x] == 1) return false;  // ran into the current path
            for (int y : path) state[y] = 2;
        }
        return true;
    };
    auto copies_increasing = [&]() {
        for (int c = 1; c < copies; ++c)
            if (t.copy_agent[c] == t.copy_agent[c - 1] && t.copy_out[c] <= t.copy_out[c - 1])
                return false;
        return true;
    };

    t.color_out.assign(colors, 0);
    while (true) {
        for (int c = 0; c < colors; ++c)
            t.color_out[c] = color_digit[c] == c ? -1 : color_digit[c];
        if (copies_increasing() && colors_acyclic()) {
            if (!visit(t)) return false;
        }
        // mixed-radix odometer: copy digits first, then color digits; the
        // last digit moves fastest
        int pos = copies + colors - 1;
        while (pos >= 0) {
            int* digit = pos < copies ? &t.copy_out[pos] : &color_digit[pos - copies];
            if (++*digit < colors) break;
            *digit = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return true;
}

namespace {

// Search-graph context for one (B_NS, b) pair, restricted to the singletons
// from which the artificial root is reachable; only those can ever be
// collected into a blocking coalition.
struct SearchGraph {
    std::vector<AgentId> singles;            // reachable singletons, ascending
    std::vector<std::vector<int>> in_sing;   // index -> indices of singleton in-neighbors
    std::vector<std::uint32_t> in_bns;       // index -> bitmask over B_NS of friend-agents
    std::vector<char> arc_to_root;           // index -> has a friend inside B_NS
    std::vector<int> topo;                   // indices in topological order
};

std::optional<SearchGraph> build_search_graph(const Instance& inst,
                                              const std::vector<AgentId>& bns,
                                              const std::vector<AgentId>& all_singles) {
    const int n = inst.n();
    std::vector<int> single_index(n, -1);
    for (std::size_t i = 0; i < all_singles.size(); ++i) single_index[all_singles[i]] = static_cast<int>(i);
    std::vector<char> in_bns_set(n, 0);
    for (AgentId a : bns) in_bns_set[a] = 1;

    // reverse reachability from the root: a singleton reaches t iff it has a
    // friend in B_NS or a friend singleton that does
    const int m = static_cast<int>(all_singles.size());
    std::vector<char> reach(m, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> rev(m);
    for (int i = 0; i < m; ++i) {
        const AgentId s = all_singles[i];
        bool direct = false;
        for (AgentId f : inst.friends_out(s)) {
            if (in_bns_set[f]) direct = true;
            else if (single_index[f] >= 0) rev[single_index[f]].push_back(i);
        }
        if (direct && !reach[i]) {
            reach[i] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : rev[x])
            if (!reach[y]) {
                reach[y] = 1;
                stack.push_back(y);
            }
    }

    SearchGraph g;
    std::vector<int> compact(m, -1);
    for (int i = 0; i < m; ++i)
        if (reach[i]) {
            compact[i] = static_cast<int>(g.singles.size());
            g.singles.push_back(all_singles[i]);
        }
    const int r = static_cast<int>(g.singles.size());
    g.in_sing.assign(r, {});
    g.in_bns.assign(r, 0);
    g.arc_to_root.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        const AgentId s = g.singles[i];
        for (AgentId f : inst.friends_in(s)) {
            if (in_bns_set[f]) continue;  // copies handled through in_bns below
            int idx = single_index[f] >= 0 ? compact[single_index[f]] : -1;
            if (idx >= 0) g.in_sing[i].push_back(idx);
        }
        for (std::size_t b = 0; b < bns.size(); ++b)
            if (inst.is_friend(bns[b], s)) g.in_bns[i] |= 1u << b;
        for (AgentId f : inst.friends_out(s))
            if (in_bns_set[f]) g.arc_to_root[i] = 1;
    }
    std::vector<std::vector<int>> out(r);
    for (int i = 0; i < r; ++i)
        for (int j : g.in_sing[i]) out[j].push_back(i);
    g.topo = topological_order(out);
    if (static_cast<int>(g.topo.size()) != r) return std::nullopt;  // singleton cycle: P2 broken
    return g;
}

// One search pass for a fixed coloring and template. Returns the collected
// singleton agents when the template realizes, nullopt otherwise.
std::optional<std::vector<AgentId>> run_tree_dp(const SearchGraph& g, const std::vector<int>& color,
                                                const InTreeTemplate& tree) {
    const int r = static_cast<int>(g.singles.size());
    const int k = tree.colors;

    // per color: which colors and which agents point at it in the template
    std::vector<std::vector<int>> color_in(k);
    std::vector<std::uint32_t> copy_in(k, 0);
    std::vector<int> root_in;
    for (int c = 0; c < k; ++c) {
        if (tree.color_out[c] == -1) root_in.push_back(c);
        else color_in[tree.color_out[c]].push_back(c);
    }
    for (std::size_t z = 0; z < tree.copy_out.size(); ++z)
        copy_in[tree.copy_out[z]] |= 1u << tree.copy_agent[z];

    std::vector<char> alive(r, 1);
    std::vector<std::vector<int>> witness(r);
    for (int v : g.topo) {
        const int c = color[v];
        // every copy pointing at color c in the template must correspond to a
        // friendship arc from that agent to v
        if ((copy_in[c] & ~g.in_bns[v]) != 0) {
            alive[v] = 0;
            continue;
        }
        bool ok = true;
        std::vector<int> chosen;
        for (int d : color_in[c]) {
            int pick = -1;
            for (int u : g.in_sing[v])
                if (alive[u] && color[u] == d && (pick == -1 || g.singles[u] < g.singles[pick]))
                    pick = u;
            if (pick == -1) {
                ok = false;
                break;
            }
            chosen.push_back(pick);
        }
        if (!ok) {
            alive[v] = 0;
            continue;
        }
        witness[v] = std::move(chosen);
    }

    std::vector<int> collected;
    std::vector<char> seen(r, 0);
    std::vector<int> queue;
    for (int d : root_in) {
        int pick = -1;
        for (int u = 0; u < r; ++u)
            if (alive[u] && g.arc_to_root[u] && color[u] == d &&
                (pick == -1 || g.singles[u] < g.singles[pick]))
                pick = u;
        if (pick == -1) return std::nullopt;
        if (!seen[pick]) {
            seen[pick] = 1;
            queue.push_back(pick);
        }
    }
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        collected.push_back(x);
        for (int u : witness[x])
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    if (static_cast<int>(collected.size()) != k) return std::nullopt;
    std::vector<AgentId> agents;
    agents.reserve(k);
    for (int x : collected) agents.push_back(g.singles[x]);
    std::sort(agents.begin(), agents.end());
    return agents;
}

long long ipow_capped(long long base, long long exp, long long cap) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r > cap / std::max<long long>(base, 1)) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

Verdict verify_core_fpt_kf(const Instance& inst, const Partition& pi, CoreMode mode,
                           const ColorCodingConfig& cfg) {
    if (inst.model() != Model::FE)
        throw ModelMismatchError("verify_core_fpt_kf requires an FE instance");
    Verdict v;
    v.algorithm = mode == CoreMode::Core ? "core-fpt-kf" : "strict-core-fpt-kf";
    const int n = inst.n();
    if (n == 0) {
        v.kind = VerdictKind::Stable;
        return v;
    }
    auto adj = friend_adjacency(inst);

    // (P1)+(P2): non-strongly-connected coalitions and singleton cycles are
    // immediate blockers.
    if (auto blocker = phase_one_blocker(inst, pi, adj)) {
        if (!coalition_blocks(inst, pi, *blocker, BlockSearch::Strict))
            throw std::logic_error("phase-one blocker failed re-validation");
        v.kind = VerdictKind::Unstable;
        v.certificate = wrap_certificate(inst, pi, *blocker, mode);
        v.notes.emplace_back("phase", "P1-P2");
        return v;
    }
    // (P3)
    WonderfulResult pre = preprocess_wonderful(inst, pi);
    if (pre.wonderful) {
        v.kind = VerdictKind::Unstable;
        v.certificate = wrap_certificate(inst, pi, pre.wonderful->coalition, mode);
        v.notes.emplace_back("phase", "P3");
        return v;
    }
    const int kappa = pre.kappa;
    const BlockSearch search = block_search_for(mode);

    std::vector<AgentId> vns, vs;
    for (const auto& coalition : pi.coalitions) {
        auto& bucket = coalition.size() > 1 ? vns : vs;
        bucket.insert(bucket.end(), coalition.begin(), coalition.end());
    }
    std::sort(vns.begin(), vns.end());
    std::sort(vs.begin(), vs.end());
    const int nns = static_cast<int>(vns.size());

    long long pairs = 0;
    for (int s = 1; s <= std::min(kappa, nns); ++s) {
        long long c = 1;
        for (int i = 0; i < s; ++i) c = c * (nns - i) / (i + 1);
        pairs += c;
        if (pairs > cfg.pair_budget)
            throw SizeLimitError("verify_core_fpt_kf: too many non-singleton subsets");
    }

    std::mt19937_64 rng(cfg.rng_seed);

    // subsets of V_NS by size ascending, lexicographic within a size
    std::vector<int> pick;
    std::function<bool(int, int)> scan = [&](int start, int want) -> bool {
        if (want == 0) {
            std::vector<AgentId> bns;
            bns.reserve(pick.size());
            for (int idx : pick) bns.push_back(vns[idx]);
            for (int b = static_cast<int>(bns.size()); b <= kappa; ++b) {
                if (b == static_cast<int>(bns.size())) {
                    if (coalition_blocks(inst, pi, bns, search)) {
                        v.kind = VerdictKind::Unstable;
                        v.certificate = wrap_certificate(inst, pi, bns, mode);
                        return true;
                    }
                    continue;
                }
                const int k = b - static_cast<int>(bns.size());
                // required singleton friends r(a_i) per member
                std::vector<int> need(bns.size(), 0);
                bool feasible = true;
                for (std::size_t i = 0; i < bns.size(); ++i) {
                    const AgentId a = bns[i];
                    const int in_pi = count_relations(inst, a, pi.coalition_of(a)).friends;
                    const int in_bns = count_relations(inst, a, bns).friends;
                    int r = 0;
                    if (in_pi >= in_bns) {
                        const int own = static_cast<int>(pi.coalition_of(a).size());
                        const bool bigger = mode == CoreMode::Core ? b >= own : b > own;
                        r = in_pi - in_bns + (bigger ? 1 : 0);
                    }
                    if (r > k) {
                        feasible = false;
                        break;
                    }
                    need[i] = r;
                }
                if (!feasible) continue;

                auto graph = build_search_graph(inst, bns, vs);
                assert(graph.has_value());  // P2 guarantees acyclicity
                if (!graph) continue;
                if (static_cast<int>(graph->singles.size()) < k) continue;

                long long copies = 0;
                for (int r : need) copies += r;
                if (ipow_capped(k, copies + k, cfg.tree_budget) > cfg.tree_budget)
                    throw SizeLimitError("verify_core_fpt_kf: in-tree budget exceeded");

                std::vector<InTreeTemplate> trees;
                enumerate_in_trees(need, k, [&](const InTreeTemplate& t) {
                    trees.push_back(t);
                    return true;
                });
                if (trees.empty()) continue;

                const int nsing = static_cast<int>(graph->singles.size());
                std::vector<int> color(nsing, 0);
                auto try_coloring = [&]() -> bool {
                    for (const auto& tree : trees) {
                        auto found = run_tree_dp(*graph, color, tree);
                        if (!found) continue;
                        std::vector<AgentId> coalition = bns;
                        coalition.insert(coalition.end(), found->begin(), found->end());
                        std::sort(coalition.begin(), coalition.end());
                        // final re-validation against the original instance
                        if (coalition_blocks(inst, pi, coalition, search)) {
                            v.kind = VerdictKind::Unstable;
                            v.certificate = wrap_certificate(inst, pi, coalition, mode);
                            return true;
                        }
                    }
                    return false;
                };

                if (nsing <= cfg.exhaustive_singleton_limit) {
                    while (true) {
                        if (try_coloring()) return true;
                        int pos = nsing - 1;
                        while (pos >= 0 && ++color[pos] == k) color[pos--] = 0;
                        if (pos < 0) break;
                    }
                } else {
                    double hit = 1.0;
                    for (int i = 1; i <= k; ++i) hit *= static_cast<double>(i) / k;
                    long long trials =
                        hit >= 1.0 ? 1
                                   : static_cast<long long>(
                                         std::ceil(std::log(cfg.failure_prob) / std::log1p(-hit)));
                    for (long long trial = 0; trial < std::max<long long>(trials, 1); ++trial) {
                        for (int i = 0; i < nsing; ++i)
                            color[i] = static_cast<int>(rng() % static_cast<unsigned>(k));
                        if (try_coloring()) return true;
                    }
                }
            }
            return false;
        }
        for (int i = start; i <= nns - want; ++i) {
            pick.push_back(i);
            if (scan(i + 1, want - 1)) return true;
            pick.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= std::min(kappa, nns); ++size) {
        pick.clear();
        if (scan(0, size)) return v;
    }
    v.kind = VerdictKind::Stable;
    return v;
}

}  // namespace hedonic
