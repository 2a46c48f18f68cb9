#pragma once

#include "hedonic/core.hpp"

#include <array>
#include <bit>
#include <cstdint>

namespace hedonic::detail {

// Fixed-width bitset over agent ids, sized for the enumeration-heavy code
// paths (subset brute force, partition oracle). Words = 2 covers every
// instance the exponential searches accept.
template <int Words>
struct Mask {
    std::array<std::uint64_t, Words> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void clear() { w.fill(0); }

    int and_popcount(const Mask& other) const {
        int c = 0;
        for (int k = 0; k < Words; ++k) c += std::popcount(w[k] & other.w[k]);
        return c;
    }
};

// Per-instance tables for fast blocking checks: adjacency masks plus the
// friend/enemy counts every agent has in her own pi-coalition.
template <int Words>
struct BlockTables {
    bool fe = true;
    std::vector<Mask<Words>> friends;
    std::vector<Mask<Words>> enemies;  // unused for FE
    std::vector<int> pi_friends, pi_enemies, pi_size;

    BlockTables(const Instance& inst, const Partition& pi) {
        fe = inst.model() == Model::FE;
        const int n = inst.n();
        friends.resize(n);
        if (!fe) enemies.resize(n);
        pi_friends.resize(n);
        pi_enemies.resize(n);
        pi_size.resize(n);
        for (AgentId i = 0; i < n; ++i) {
            for (AgentId j : inst.friends_out(i)) friends[i].set(j);
            if (!fe)
                for (AgentId j : inst.enemies_out(i)) enemies[i].set(j);
            RelationCount rc = count_relations(inst, i, pi.coalition_of(i));
            pi_friends[i] = rc.friends;
            pi_enemies[i] = rc.enemies;
            pi_size[i] = static_cast<int>(pi.coalition_of(i).size());
        }
    }

    // strict: every member strictly prefers; weak: every member weakly, one
    // strictly.
    bool blocks(const Mask<Words>& coalition, const int* members, int count, bool strict) const {
        bool any_strict = false;
        for (int k = 0; k < count; ++k) {
            const int a = members[k];
            const int f = friends[a].and_popcount(coalition);
            const int e = fe ? count - 1 - f : enemies[a].and_popcount(coalition);
            const int df = f - pi_friends[a];
            if (df > 0) {
                any_strict = true;
                continue;
            }
            if (df < 0) return false;
            const int de = e - pi_enemies[a];
            if (de > 0) return false;
            if (de < 0) any_strict = true;
            else if (strict) return false;  // indifferent member
        }
        return strict ? true : any_strict;
    }
};

}  // namespace hedonic::detail
