#include "hedonic/digraph.hpp"

#include <algorithm>
#include <queue>

namespace hedonic {

namespace {

bool in(const std::vector<char>& member, int v) {
    return member.empty() || member[v];
}

}  // namespace

SccResult strongly_connected_components(const std::vector<std::vector<int>>& out,
                                        const std::vector<char>& member) {
    const int n = static_cast<int>(out.size());
    SccResult res;
    res.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;
    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (!in(member, root) || index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < out[f.v].size()) {
                int w = out[f.v][f.child++];
                if (!in(member, w)) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        res.comp[w] = res.count;
                    } while (w != f.v);
                    ++res.count;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    return res;
}

SccResult weakly_connected_components(const std::vector<std::vector<int>>& out,
                                      const std::vector<char>& member) {
    const int n = static_cast<int>(out.size());
    std::vector<std::vector<int>> undirected(n);
    for (int v = 0; v < n; ++v) {
        if (!in(member, v)) continue;
        for (int w : out[v]) {
            if (!in(member, w)) continue;
            undirected[v].push_back(w);
            undirected[w].push_back(v);
        }
    }
    SccResult res;
    res.comp.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (!in(member, root) || res.comp[root] != -1) continue;
        std::vector<int> queue = {root};
        res.comp[root] = res.count;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : undirected[v]) {
                if (res.comp[w] == -1) {
                    res.comp[w] = res.count;
                    queue.push_back(w);
                }
            }
        }
        ++res.count;
    }
    return res;
}

std::vector<int> topological_order(const std::vector<std::vector<int>>& out) {
    const int n = static_cast<int>(out.size());
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : out[v]) ++indeg[w];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return {};
    return order;
}

std::vector<int> find_cycle(const std::vector<std::vector<int>>& out,
                            const std::vector<char>& member) {
    const int n = static_cast<int>(out.size());
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on path, 2 done
    std::vector<int> parent(n, -1);
    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (!in(member, root) || state[root] != 0) continue;
        std::vector<Frame> call{{root, 0}};
        state[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < out[f.v].size()) {
                int w = out[f.v][f.child++];
                if (!in(member, w)) continue;
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = f.v;
                    call.push_back({w, 0});
                } else if (state[w] == 1) {
                    std::vector<int> cycle{w};
                    for (int x = f.v; x != w; x = parent[x]) cycle.push_back(x);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
            } else {
                state[f.v] = 2;
                call.pop_back();
            }
        }
    }
    return {};
}

}  // namespace hedonic
