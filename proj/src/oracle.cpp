#include "hedonic/oracle.hpp"

#include "hedonic/verify.hpp"
#include "bitmask.hpp"

#include <bit>

namespace hedonic {

namespace {

// Single-word engine for the partition-space search; the oracle bounds keep
// n at 12 or below.
struct Engine {
    const Instance& inst;
    bool fe;
    int n;
    std::vector<std::uint64_t> fr, en;

    explicit Engine(const Instance& inst_) : inst(inst_) {
        fe = inst.model() == Model::FE;
        n = inst.n();
        fr.assign(n, 0);
        en.assign(n, 0);
        for (AgentId i = 0; i < n; ++i) {
            for (AgentId j : inst.friends_out(i)) fr[i] |= 1ull << j;
            if (!fe)
                for (AgentId j : inst.enemies_out(i)) en[i] |= 1ull << j;
        }
    }

    int friends_in(int i, std::uint64_t m) const { return std::popcount(fr[i] & m); }

    // enemies of i inside m, i assumed excluded from m
    int enemies_in(int i, std::uint64_t m) const {
        return fe ? std::popcount(m) - friends_in(i, m) : std::popcount(en[i] & m);
    }

    bool nash_stable(const std::vector<std::uint64_t>& blocks, const std::vector<int>& owner) const {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t own = blocks[owner[i]] & ~(1ull << i);
            const int f = friends_in(i, own);
            const int e = enemies_in(i, own);
            if (f == 0 && e > 0) return false;  // prefers being alone
            for (int c = 0; c < static_cast<int>(blocks.size()); ++c) {
                if (c == owner[i]) continue;
                const int fc = friends_in(i, blocks[c]);
                if (fc > f || (fc == f && enemies_in(i, blocks[c]) < e)) return false;
            }
        }
        return true;
    }

    bool individually_stable(const std::vector<std::uint64_t>& blocks,
                             const std::vector<int>& owner) const {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t own = blocks[owner[i]] & ~(1ull << i);
            const int f = friends_in(i, own);
            const int e = enemies_in(i, own);
            if (f == 0 && e > 0) return false;
            for (int c = 0; c < static_cast<int>(blocks.size()); ++c) {
                if (c == owner[i]) continue;
                const int fc = friends_in(i, blocks[c]);
                if (!(fc > f || (fc == f && enemies_in(i, blocks[c]) < e))) continue;
                // i envies c; does every member accept her?
                bool accepted = true;
                for (std::uint64_t rest = blocks[c]; rest; rest &= rest - 1) {
                    const int j = std::countr_zero(rest);
                    const bool gains_friend = (fr[j] >> i) & 1;
                    if (gains_friend) continue;  // strictly better for j
                    const bool gains_enemy = fe || ((en[j] >> i) & 1);
                    if (gains_enemy) {
                        accepted = false;
                        break;
                    }
                }
                if (accepted) return false;
            }
        }
        return true;
    }

    bool has_blocking(const std::vector<std::uint64_t>& blocks, const std::vector<int>& owner,
                      bool strict) const {
        std::vector<int> pif(n), pie(n);
        for (int i = 0; i < n; ++i) {
            const std::uint64_t own = blocks[owner[i]] & ~(1ull << i);
            pif[i] = friends_in(i, own);
            pie[i] = enemies_in(i, own);
        }
        const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
        for (std::uint64_t m = 1; m <= all; ++m) {
            bool ok = true;
            bool any_strict = false;
            for (std::uint64_t rest = m; rest; rest &= rest - 1) {
                const int i = std::countr_zero(rest);
                const std::uint64_t others = m & ~(1ull << i);
                const int f = friends_in(i, others);
                const int df = f - pif[i];
                if (df > 0) {
                    any_strict = true;
                    continue;
                }
                if (df < 0) {
                    ok = false;
                    break;
                }
                const int de = enemies_in(i, others) - pie[i];
                if (de > 0) {
                    ok = false;
                    break;
                }
                if (de < 0) any_strict = true;
                else if (strict) {
                    ok = false;
                    break;
                }
            }
            if (ok && (strict || any_strict)) return true;
        }
        return false;
    }
};

std::vector<std::uint64_t> blocks_from_partition(const Partition& pi) {
    std::vector<std::uint64_t> blocks(pi.coalitions.size(), 0);
    for (std::size_t c = 0; c < pi.coalitions.size(); ++c)
        for (AgentId a : pi.coalitions[c]) blocks[c] |= 1ull << a;
    return blocks;
}

}  // namespace

const char* to_string(StabilityNotion n) {
    switch (n) {
        case StabilityNotion::Nash: return "nash";
        case StabilityNotion::Individual: return "individual";
        case StabilityNotion::Core: return "core";
        case StabilityNotion::StrictCore: return "strict-core";
    }
    return "?";
}

PartitionIterator::PartitionIterator(int n) : n_(n) {
    rgs_.assign(std::max(n, 0), 0);
    prefix_max_.assign(std::max(n, 0), 0);
}

Partition PartitionIterator::current() const {
    if (done_) throw std::logic_error("PartitionIterator exhausted");
    int blocks = 0;
    for (int i = 0; i < n_; ++i) blocks = std::max(blocks, rgs_[i] + 1);
    std::vector<std::vector<AgentId>> coalitions(blocks);
    for (int i = 0; i < n_; ++i) coalitions[rgs_[i]].push_back(i);
    return Partition::of(n_, std::move(coalitions));
}

void PartitionIterator::advance() {
    if (done_) return;
    // rightmost position that can still grow
    for (int i = n_ - 1; i >= 1; --i) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
            for (int j = i + 1; j < n_; ++j) {
                rgs_[j] = 0;
                prefix_max_[j] = prefix_max_[j - 1];
            }
            return;
        }
    }
    done_ = true;
}

bool partition_stable(const Instance& inst, const Partition& pi, StabilityNotion notion) {
    const bool core_like = notion == StabilityNotion::Core || notion == StabilityNotion::StrictCore;
    if (inst.n() > 63 || (core_like && inst.n() > 25))
        throw SizeLimitError("partition_stable: instance too large for the exact check");
    Engine eng(inst);
    auto blocks = blocks_from_partition(pi);
    switch (notion) {
        case StabilityNotion::Nash: return eng.nash_stable(blocks, pi.owner);
        case StabilityNotion::Individual: return eng.individually_stable(blocks, pi.owner);
        case StabilityNotion::Core: return !eng.has_blocking(blocks, pi.owner, true);
        case StabilityNotion::StrictCore: return !eng.has_blocking(blocks, pi.owner, false);
    }
    return false;
}

Verdict exists_stable_partition(const Instance& inst, StabilityNotion notion,
                                const OracleLimits& limits) {
    const int n = inst.n();
    const bool core_like = notion == StabilityNotion::Core || notion == StabilityNotion::StrictCore;
    const int max_n = core_like ? limits.max_n_core : limits.max_n_nash;
    if (n > max_n)
        throw SizeLimitError("exists_stable_partition: " + std::to_string(n) +
                             " agents exceeds oracle bound " + std::to_string(max_n));
    Verdict v;
    v.algorithm = std::string("oracle-exists-") + to_string(notion);
    if (n == 0) {
        v.kind = VerdictKind::Exists;
        v.partition = Partition::of(0, {});
        return v;
    }
    Engine eng(inst);
    std::vector<std::uint64_t> blocks;
    std::vector<int> owner(n);
    long long visited = 0;
    for (PartitionIterator it(n); !it.done(); it.advance()) {
        const auto& rgs = it.rgs();
        int nblocks = 0;
        for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, rgs[i] + 1);
        blocks.assign(nblocks, 0);
        for (int i = 0; i < n; ++i) {
            blocks[rgs[i]] |= 1ull << i;
            owner[i] = rgs[i];
        }
        ++visited;
        bool stable = false;
        switch (notion) {
            case StabilityNotion::Nash: stable = eng.nash_stable(blocks, owner); break;
            case StabilityNotion::Individual: stable = eng.individually_stable(blocks, owner); break;
            case StabilityNotion::Core: stable = !eng.has_blocking(blocks, owner, true); break;
            case StabilityNotion::StrictCore: stable = !eng.has_blocking(blocks, owner, false); break;
        }
        if (stable) {
            v.kind = VerdictKind::Exists;
            v.partition = it.current();
            v.notes.emplace_back("partitions_visited", std::to_string(visited));
            return v;
        }
    }
    // FE always admits a strictly core stable partition and FEN a core
    // stable one (the SCC structure); reaching NOT-EXISTS there means the
    // search itself is broken.
    if ((inst.model() == Model::FE && core_like) ||
        (inst.model() == Model::FEN && notion == StabilityNotion::Core))
        throw std::logic_error("oracle contradicts guaranteed existence");
    v.kind = VerdictKind::NotExists;
    v.notes.emplace_back("partitions_visited", std::to_string(visited));
    return v;
}

bool certify(const Instance& inst, const Partition& pi, const BlockingCertificate& cert) {
    const int n = inst.n();
    auto check_agent = [&](AgentId a) {
        if (a < 0 || a >= n) throw std::invalid_argument("certificate: agent out of range");
    };
    if (cert.coalition.empty()) throw std::invalid_argument("certificate: empty coalition");
    for (AgentId a : cert.coalition) check_agent(a);
    for (std::size_t i = 1; i < cert.coalition.size(); ++i)
        if (cert.coalition[i - 1] >= cert.coalition[i])
            throw std::invalid_argument("certificate: coalition not sorted");

    // stored per-agent deltas must match recomputation (tamper detection)
    for (const auto& [a, delta] : cert.per_agent) {
        check_agent(a);
        RelationCount in_block = count_relations(inst, a, cert.coalition);
        RelationCount in_pi = count_relations(inst, a, pi.coalition_of(a));
        AgentDelta expect{in_block.friends, in_block.enemies, in_pi.friends, in_pi.enemies};
        if (!(delta == expect)) return false;
    }

    switch (cert.kind) {
        case BlockKind::Strict:
            return coalition_blocks(inst, pi, cert.coalition, BlockSearch::Strict);
        case BlockKind::Weak:
            return coalition_blocks(inst, pi, cert.coalition, BlockSearch::Weak);
        case BlockKind::Wonderful: {
            for (AgentId a : cert.coalition) {
                int in_block = count_relations(inst, a, cert.coalition).friends;
                int in_pi = count_relations(inst, a, pi.coalition_of(a)).friends;
                if (in_block <= in_pi) return false;
            }
            return true;
        }
        case BlockKind::NashDeviation: {
            check_agent(cert.agent);
            if (cert.target_coalition >= static_cast<int>(pi.coalitions.size()))
                throw std::invalid_argument("certificate: target coalition out of range");
            if (cert.target_coalition < 0)
                return compare_counts({0, 0},
                                      count_relations(inst, cert.agent,
                                                      pi.coalition_of(cert.agent))) ==
                       PreferenceOutcome::Prefers;
            if (pi.owner[cert.agent] == cert.target_coalition)
                throw std::invalid_argument("certificate: agent already in target coalition");
            const auto& target = pi.coalitions[cert.target_coalition];
            return compare_counts(count_relations(inst, cert.agent, target),
                                  count_relations(inst, cert.agent,
                                                  pi.coalition_of(cert.agent))) ==
                   PreferenceOutcome::Prefers;
        }
        case BlockKind::BlockingTuple: {
            check_agent(cert.agent);
            if (cert.target_coalition < 0 ||
                cert.target_coalition >= static_cast<int>(pi.coalitions.size()))
                throw std::invalid_argument("certificate: target coalition out of range");
            if (pi.owner[cert.agent] == cert.target_coalition)
                throw std::invalid_argument("certificate: agent already in target coalition");
            const auto& target = pi.coalitions[cert.target_coalition];
            if (compare_counts(count_relations(inst, cert.agent, target),
                               count_relations(inst, cert.agent, pi.coalition_of(cert.agent))) !=
                PreferenceOutcome::Prefers)
                return false;
            std::vector<AgentId> merged = target;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), cert.agent), cert.agent);
            for (AgentId j : target)
                if (compare(inst, j, merged, target) == PreferenceOutcome::Dispreferred)
                    return false;
            return true;
        }
    }
    return false;
}

}  // namespace hedonic
