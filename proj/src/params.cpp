#include "hedonic/params.hpp"

#include "hedonic/digraph.hpp"

#include <numeric>
#include <set>

namespace hedonic {

namespace {

std::vector<Arc> dedup(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

// Kahn peeling; returns true when the arc set restricted to `alive` is acyclic.
bool acyclic_impl(int n, const std::vector<Arc>& arcs, const std::vector<char>* removed_arc) {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (removed_arc && (*removed_arc)[k]) continue;
        out[arcs[k].from].push_back(arcs[k].to);
        ++indeg[arcs[k].to];
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

}  // namespace

bool is_acyclic(int n, const std::vector<Arc>& arcs) {
    return acyclic_impl(n, arcs, nullptr);
}

std::vector<Arc> relevant_arcs(const Instance& inst) {
    std::vector<Arc> arcs = inst.friend_arcs();
    if (inst.model() == Model::FEN) {
        auto en = inst.enemy_arcs();
        arcs.insert(arcs.end(), en.begin(), en.end());
    }
    return dedup(std::move(arcs));
}

int fas_upper_bound(int n, const std::vector<Arc>& arcs_in) {
    auto arcs = dedup(arcs_in);
    // Greedy vertex-ordering heuristic: repeatedly strip sinks (to the back)
    // and sources (to the front); otherwise move the vertex maximizing
    // out-degree minus in-degree to the front. Back-arcs of the resulting
    // order form a feedback arc set.
    std::vector<std::set<int>> out(n), in(n);
    for (const Arc& a : arcs) {
        out[a.from].insert(a.to);
        in[a.to].insert(a.from);
    }
    std::vector<char> alive(n, 1);
    std::vector<int> front, back;
    int remaining = n;
    auto drop = [&](int v) {
        alive[v] = 0;
        --remaining;
        for (int w : out[v]) in[w].erase(v);
        for (int w : in[v]) out[w].erase(v);
        out[v].clear();
        in[v].clear();
    };
    while (remaining > 0) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v = 0; v < n && remaining > 0; ++v) {
                if (!alive[v]) continue;
                if (out[v].empty()) {
                    back.push_back(v);
                    drop(v);
                    progress = true;
                } else if (in[v].empty()) {
                    front.push_back(v);
                    drop(v);
                    progress = true;
                }
            }
        }
        if (remaining == 0) break;
        int best = -1, best_score = INT32_MIN;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int score = static_cast<int>(out[v].size()) - static_cast<int>(in[v].size());
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        front.push_back(best);
        drop(best);
    }
    std::vector<int> pos(n);
    int p = 0;
    for (int v : front) pos[v] = p++;
    for (auto it = back.rbegin(); it != back.rend(); ++it) pos[*it] = p++;
    int fas = 0;
    for (const Arc& a : arcs)
        if (pos[a.from] > pos[a.to]) ++fas;
    return fas;
}

namespace {

// Arcs that can lie on a cycle: peel vertices with in- or out-degree zero,
// then keep only intra-component arcs of the remaining graph, grouped by
// strongly connected component.
std::vector<std::vector<Arc>> residual_cycle_arcs(int n, const std::vector<Arc>& arcs) {
    std::vector<std::set<int>> out(n), in(n);
    for (const Arc& a : arcs) {
        out[a.from].insert(a.to);
        in[a.to].insert(a.from);
    }
    std::vector<char> alive(n, 1);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (out[v].empty() || in[v].empty()) {
                alive[v] = 0;
                for (int w : out[v]) in[w].erase(v);
                for (int w : in[v]) out[w].erase(v);
                out[v].clear();
                in[v].clear();
                progress = true;
            }
        }
    }
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int w : out[v]) adj[v].push_back(w);
    SccResult scc = strongly_connected_components(adj, alive);
    std::vector<std::vector<Arc>> comp_arcs(scc.count);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int w : out[v])
            if (scc.comp[v] == scc.comp[w]) comp_arcs[scc.comp[v]].push_back({v, w});
    }
    std::erase_if(comp_arcs, [](const auto& c) { return c.empty(); });
    return comp_arcs;
}

}  // namespace

int fas_exact(int n, const std::vector<Arc>& arcs_in, int residual_arc_limit) {
    auto arcs = dedup(arcs_in);
    auto comp_arcs = residual_cycle_arcs(n, arcs);
    std::size_t residual_total = 0;
    for (const auto& c : comp_arcs) residual_total += c.size();
    if (residual_total > static_cast<std::size_t>(residual_arc_limit))
        throw SizeLimitError("fas_exact: residual graph has " + std::to_string(residual_total) +
                             " arcs, limit " + std::to_string(residual_arc_limit));

    int total = 0;
    for (auto& ca : comp_arcs) {
        std::sort(ca.begin(), ca.end());
        int m = static_cast<int>(ca.size());
        int ub = fas_upper_bound(n, ca);
        int found = ub;
        std::vector<char> removed(m, 0);
        // combinations of size r in lexicographic order
        for (int r = 0; r < ub && found == ub; ++r) {
            std::vector<int> pick(r);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::fill(removed.begin(), removed.end(), 0);
                for (int idx : pick) removed[idx] = 1;
                if (acyclic_impl(n, ca, &removed)) {
                    found = r;
                    break;
                }
                if (r == 0) break;
                int i = r - 1;
                while (i >= 0 && pick[i] == m - r + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        total += found;
    }
    return total;
}

std::optional<int> fas_if_at_most(int n, const std::vector<Arc>& arcs_in, int k) {
    auto arcs = dedup(arcs_in);
    auto comp_arcs = residual_cycle_arcs(n, arcs);
    std::vector<Arc> residual;
    for (const auto& c : comp_arcs) residual.insert(residual.end(), c.begin(), c.end());
    std::sort(residual.begin(), residual.end());
    const int m = static_cast<int>(residual.size());
    std::vector<char> removed(m, 0);
    for (int r = 0; r <= std::min(k, m); ++r) {
        std::vector<int> pick(r);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int idx : pick) removed[idx] = 1;
            if (acyclic_impl(n, residual, &removed)) return r;
            if (r == 0) break;
            int i = r - 1;
            while (i >= 0 && pick[i] == m - r + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

int max_degree(const Instance& inst) {
    std::vector<std::set<int>> nb(inst.n());
    for (const Arc& a : relevant_arcs(inst)) {
        nb[a.from].insert(a.to);
        nb[a.to].insert(a.from);
    }
    int delta = 0;
    for (const auto& s : nb) delta = std::max<int>(delta, static_cast<int>(s.size()));
    return delta;
}

Params compute_params(const Instance& inst, const Partition* pi, FasOptions fas_opts) {
    Params params;
    params.delta = max_degree(inst);
    if (pi) params.kappa = pi->max_coalition_size();
    auto arcs = relevant_arcs(inst);
    if (fas_opts.exact) {
        params.fas = {fas_exact(inst.n(), arcs, fas_opts.residual_arc_limit), true};
    } else {
        params.fas = {fas_upper_bound(inst.n(), arcs), false};
    }
    return params;
}

}  // namespace hedonic
