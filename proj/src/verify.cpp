#include "hedonic/verify.hpp"

#include "hedonic/digraph.hpp"
#include "bitmask.hpp"

#include <cassert>
#include <climits>
#include <thread>

namespace hedonic {

namespace {

constexpr long long kBinomCap = LLONG_MAX / 4;

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > kBinomCap / (n - k + i)) return kBinomCap;
        r = r * (n - k + i) / i;
    }
    return std::min(r, kBinomCap);
}

// Lexicographically smallest combination of size k with the given rank.
std::vector<int> unrank_combination(int n, int k, long long rank) {
    std::vector<int> comb(k);
    int v = 0;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            long long block = binom(n - 1 - v, k - 1 - pos);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        comb[pos] = v++;
    }
    return comb;
}

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

std::vector<AgentId> with_agent(const std::vector<AgentId>& coalition, AgentId extra) {
    std::vector<AgentId> s = coalition;
    s.insert(std::lower_bound(s.begin(), s.end(), extra), extra);
    return s;
}

BlockingCertificate deviation_certificate(const Instance& inst, const Partition& pi,
                                          AgentId agent, int target, BlockKind kind) {
    BlockingCertificate cert;
    cert.kind = kind;
    cert.agent = agent;
    cert.target_coalition = target;
    cert.coalition = target < 0 ? std::vector<AgentId>{agent}
                                : with_agent(pi.coalitions[target], agent);
    cert.per_agent = make_deltas(inst, pi, cert.coalition);
    return cert;
}

// Scans all size-k subsets with ranks in [first, first + count) and returns
// the first blocker, tagged with its rank.
template <int Words>
std::optional<std::pair<long long, std::vector<int>>> scan_range(
    const detail::BlockTables<Words>& tables, int n, int k, bool strict,
    long long first, long long count) {
    if (count <= 0) return std::nullopt;
    std::vector<int> comb = unrank_combination(n, k, first);
    detail::Mask<Words> mask;
    for (long long done = 0; done < count; ++done) {
        mask.clear();
        for (int v : comb) mask.set(v);
        if (tables.blocks(mask, comb.data(), k, strict))
            return std::make_pair(first + done, comb);
        if (!next_combination(comb, n)) break;
    }
    return std::nullopt;
}

template <int Words>
std::optional<std::vector<AgentId>> blocking_search(const Instance& inst, const Partition& pi,
                                                    bool strict, int cap,
                                                    const SearchBudget& budget, int jobs) {
    const int n = inst.n();
    detail::BlockTables<Words> tables(inst, pi);
    long long used = 0;
    for (int k = 1; k <= cap; ++k) {
        const long long total = binom(n, k);
        if (used + total > budget.max_subsets) {
            // partial sequential scan up to the budget, then give up
            auto hit = scan_range(tables, n, k, strict, 0, budget.max_subsets - used);
            if (hit) {
                std::vector<AgentId> coalition(hit->second.begin(), hit->second.end());
                return coalition;
            }
            throw SizeLimitError("blocking search exceeded subset budget");
        }
        std::optional<std::pair<long long, std::vector<int>>> best;
        if (jobs <= 1 || total < 4096) {
            best = scan_range(tables, n, k, strict, 0, total);
        } else {
            std::vector<std::optional<std::pair<long long, std::vector<int>>>> results(jobs);
            std::vector<std::thread> workers;
            const long long chunk = (total + jobs - 1) / jobs;
            for (int j = 0; j < jobs; ++j) {
                const long long first = j * chunk;
                const long long count = std::min(chunk, total - first);
                workers.emplace_back([&, j, first, count] {
                    results[j] = scan_range(tables, n, k, strict, first, count);
                });
            }
            for (auto& t : workers) t.join();
            for (auto& r : results)
                if (r && (!best || r->first < best->first)) best = r;
        }
        if (best) {
            std::vector<AgentId> coalition(best->second.begin(), best->second.end());
            return coalition;
        }
        used += total;
    }
    return std::nullopt;
}

}  // namespace

std::map<AgentId, AgentDelta> make_deltas(const Instance& inst, const Partition& pi,
                                          const std::vector<AgentId>& coalition) {
    std::map<AgentId, AgentDelta> deltas;
    for (AgentId a : coalition) {
        RelationCount in_block = count_relations(inst, a, coalition);
        RelationCount in_pi = count_relations(inst, a, pi.coalition_of(a));
        deltas[a] = {in_block.friends, in_block.enemies, in_pi.friends, in_pi.enemies};
    }
    return deltas;
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Stable: return "STABLE";
        case VerdictKind::Unstable: return "UNSTABLE";
        case VerdictKind::Exists: return "EXISTS";
        case VerdictKind::NotExists: return "NOT-EXISTS";
    }
    return "?";
}

const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Strict: return "strict";
        case BlockKind::Weak: return "weak";
        case BlockKind::Wonderful: return "wonderful";
        case BlockKind::NashDeviation: return "nash-deviation";
        case BlockKind::BlockingTuple: return "blocking-tuple";
    }
    return "?";
}

bool coalition_blocks(const Instance& inst, const Partition& pi,
                      const std::vector<AgentId>& coalition, BlockSearch mode) {
    if (coalition.empty()) return false;
    bool any_strict = false;
    for (AgentId a : coalition) {
        PreferenceOutcome o = compare_counts(count_relations(inst, a, coalition),
                                             count_relations(inst, a, pi.coalition_of(a)));
        if (o == PreferenceOutcome::Dispreferred) return false;
        if (o == PreferenceOutcome::Prefers) any_strict = true;
        else if (mode == BlockSearch::Strict) return false;
    }
    return mode == BlockSearch::Strict ? true : any_strict;
}

std::optional<BlockingCertificate> individual_rationality_violation(const Instance& inst,
                                                                    const Partition& pi) {
    for (AgentId i = 0; i < inst.n(); ++i) {
        RelationCount in_pi = count_relations(inst, i, pi.coalition_of(i));
        if (compare_counts({0, 0}, in_pi) == PreferenceOutcome::Prefers)
            return deviation_certificate(inst, pi, i, -1, BlockKind::NashDeviation);
    }
    return std::nullopt;
}

Verdict verify_nash(const Instance& inst, const Partition& pi) {
    Verdict v;
    v.algorithm = "verify-nash";
    if (auto ir = individual_rationality_violation(inst, pi)) {
        v.kind = VerdictKind::Unstable;
        v.certificate = std::move(ir);
        return v;
    }
    for (AgentId i = 0; i < inst.n(); ++i) {
        RelationCount own = count_relations(inst, i, pi.coalition_of(i));
        for (int c = 0; c < static_cast<int>(pi.coalitions.size()); ++c) {
            if (c == pi.owner[i]) continue;
            RelationCount joined = count_relations(inst, i, pi.coalitions[c]);
            if (compare_counts(joined, own) == PreferenceOutcome::Prefers) {
                v.kind = VerdictKind::Unstable;
                v.certificate = deviation_certificate(inst, pi, i, c, BlockKind::NashDeviation);
                return v;
            }
        }
    }
    v.kind = VerdictKind::Stable;
    return v;
}

Verdict verify_individual(const Instance& inst, const Partition& pi) {
    Verdict v;
    v.algorithm = "verify-individual";
    if (auto ir = individual_rationality_violation(inst, pi)) {
        v.kind = VerdictKind::Unstable;
        v.certificate = std::move(ir);
        return v;
    }
    for (AgentId i = 0; i < inst.n(); ++i) {
        RelationCount own = count_relations(inst, i, pi.coalition_of(i));
        for (int c = 0; c < static_cast<int>(pi.coalitions.size()); ++c) {
            if (c == pi.owner[i]) continue;
            const auto& target = pi.coalitions[c];
            RelationCount joined = count_relations(inst, i, target);
            if (compare_counts(joined, own) != PreferenceOutcome::Prefers) continue;
            // every member of the receiving coalition must weakly accept her
            std::vector<AgentId> merged = with_agent(target, i);
            bool accepted = true;
            for (AgentId j : target) {
                if (compare(inst, j, merged, target) == PreferenceOutcome::Dispreferred) {
                    accepted = false;
                    break;
                }
            }
            if (accepted) {
                v.kind = VerdictKind::Unstable;
                v.certificate = deviation_certificate(inst, pi, i, c, BlockKind::BlockingTuple);
                return v;
            }
        }
    }
    v.kind = VerdictKind::Stable;
    return v;
}

std::optional<BlockingCertificate> find_blocking_bruteforce(const Instance& inst,
                                                            const Partition& pi, BlockSearch mode,
                                                            std::optional<int> size_cap,
                                                            const SearchBudget& budget, int jobs) {
    const int n = inst.n();
    if (n == 0) return std::nullopt;
    if (!size_cap && n > 25)
        throw SizeLimitError("brute-force blocking search needs size_cap beyond 25 agents");
    const int cap = size_cap ? std::min(*size_cap, n) : n;
    if (cap <= 0) return std::nullopt;

    std::optional<std::vector<AgentId>> found;
    const bool strict = mode == BlockSearch::Strict;
    if (n <= 64)
        found = blocking_search<1>(inst, pi, strict, cap, budget, jobs);
    else if (n <= 128)
        found = blocking_search<2>(inst, pi, strict, cap, budget, jobs);
    else
        throw SizeLimitError("brute-force blocking search supports at most 128 agents");
    if (!found) return std::nullopt;

    assert(coalition_blocks(inst, pi, *found, mode));
    BlockingCertificate cert;
    cert.kind = strict ? BlockKind::Strict : BlockKind::Weak;
    cert.coalition = std::move(*found);
    cert.per_agent = make_deltas(inst, pi, cert.coalition);
    return cert;
}

WonderfulResult preprocess_wonderful(const Instance& inst, const Partition& pi) {
    if (inst.model() != Model::FE)
        throw ModelMismatchError("preprocess_wonderful requires an FE instance");
    const int n = inst.n();
    WonderfulResult res;
    res.kappa = pi.max_coalition_size();

    std::vector<int> need(n), outdeg(n);
    std::vector<char> alive(n, 1);
    std::vector<AgentId> pending;
    for (AgentId v = 0; v < n; ++v) {
        need[v] = count_relations(inst, v, pi.coalition_of(v)).friends + 1;
        outdeg[v] = static_cast<int>(inst.friends_out(v).size());
        if (outdeg[v] < need[v]) pending.push_back(v);
    }
    for (std::size_t head = 0; head < pending.size(); ++head) {
        AgentId v = pending[head];
        if (!alive[v]) continue;
        alive[v] = 0;
        for (AgentId u : inst.friends_in(v)) {
            if (!alive[u]) continue;
            if (--outdeg[u] < need[u]) pending.push_back(u);
        }
    }
    std::vector<AgentId> residual;
    for (AgentId v = 0; v < n; ++v)
        if (alive[v]) residual.push_back(v);
    if (residual.empty()) return res;

    BlockingCertificate cert;
    cert.kind = BlockKind::Wonderful;
    cert.coalition = std::move(residual);
    cert.per_agent = make_deltas(inst, pi, cert.coalition);
    res.wonderful = std::move(cert);
    return res;
}

Verdict verify_core_xp(const Instance& inst, const Partition& pi, CoreMode mode,
                       const SearchBudget& budget) {
    if (inst.model() != Model::FE)
        throw ModelMismatchError("verify_core_xp requires an FE instance");
    Verdict v;
    v.algorithm = mode == CoreMode::Core ? "core-xp" : "strict-core-xp";
    if (inst.n() == 0) {
        v.kind = VerdictKind::Stable;
        return v;
    }
    WonderfulResult pre = preprocess_wonderful(inst, pi);
    if (pre.wonderful) {
        assert(coalition_blocks(inst, pi, pre.wonderful->coalition, BlockSearch::Strict));
        v.kind = VerdictKind::Unstable;
        v.certificate = std::move(pre.wonderful);
        v.notes.emplace_back("phase", "wonderful");
        return v;
    }
    long long coalitions = 0;
    for (int k = 1; k <= pre.kappa; ++k) coalitions += binom(inst.n(), k);
    if (coalitions > budget.max_subsets)
        throw SizeLimitError("verify_core_xp: coalition count exceeds budget");
    auto cert = find_blocking_bruteforce(inst, pi, block_search_for(mode), pre.kappa, budget);
    if (cert) {
        v.kind = VerdictKind::Unstable;
        v.certificate = std::move(cert);
    } else {
        v.kind = VerdictKind::Stable;
    }
    v.notes.emplace_back("kappa", std::to_string(pre.kappa));
    return v;
}

std::optional<Verdict> verify_core_dag_shortcut(const Instance& inst, const Partition& pi,
                                                CoreMode mode) {
    const int n = inst.n();
    std::vector<std::vector<int>> out(n);
    for (AgentId i = 0; i < n; ++i)
        out[i].assign(inst.friends_out(i).begin(), inst.friends_out(i).end());
    if (n > 0 && topological_order(out).empty()) return std::nullopt;

    Verdict v;
    if (inst.model() == Model::FE) {
        v.algorithm = "core-dag-shortcut";
        // With an acyclic friendship graph the all-singleton structure is the
        // unique (strictly) core stable one.
        for (int c = 0; c < static_cast<int>(pi.coalitions.size()); ++c) {
            const auto& coalition = pi.coalitions[c];
            if (coalition.size() <= 1) continue;
            // some member has no friends inside (induced subgraph of a DAG)
            for (AgentId a : coalition) {
                if (count_relations(inst, a, coalition).friends == 0) {
                    BlockingCertificate cert;
                    cert.kind = mode == CoreMode::Core ? BlockKind::Strict : BlockKind::Weak;
                    cert.coalition = {a};
                    cert.per_agent = make_deltas(inst, pi, cert.coalition);
                    assert(coalition_blocks(inst, pi, cert.coalition, BlockSearch::Strict));
                    v.kind = VerdictKind::Unstable;
                    v.certificate = std::move(cert);
                    return v;
                }
            }
        }
        v.kind = VerdictKind::Stable;
        return v;
    }
    // FEN: core stability on an acyclic friendship graph is exactly
    // individual rationality. No shortcut for the strict core.
    if (mode == CoreMode::StrictCore) return std::nullopt;
    v.algorithm = "fen-core-dag-shortcut";
    if (auto ir = individual_rationality_violation(inst, pi)) {
        BlockingCertificate cert;
        cert.kind = BlockKind::Strict;
        cert.coalition = {ir->agent};
        cert.per_agent = make_deltas(inst, pi, cert.coalition);
        v.kind = VerdictKind::Unstable;
        v.certificate = std::move(cert);
        return v;
    }
    v.kind = VerdictKind::Stable;
    return v;
}

}  // namespace hedonic
