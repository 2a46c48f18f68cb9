#include "hedonic/verify.hpp"

#include "hedonic/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <bit>

using namespace hedonic;
using namespace hedonic::testing;

namespace {

// Direct check that no weakly blocking coalition larger than the cap exists;
// independent of the search code paths.
bool no_weak_blocker_above(const Instance& inst, const Partition& pi, int cap) {
    const int n = inst.n();
    REQUIRE(n <= 12);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) <= cap) continue;
        std::vector<AgentId> coalition;
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1) coalition.push_back(a);
        if (coalition_blocks(inst, pi, coalition, BlockSearch::Weak)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("individual rationality on the running example") {
    CHECK_FALSE(individual_rationality_violation(example1_fe(), example1_pi1()));
    CHECK_FALSE(individual_rationality_violation(example1_fe(), Partition::singletons(4)));

    // a one-way friendship pair: the follower would rather be alone
    Instance pair = Instance::fe(2, {{0, 1}});
    auto violation = individual_rationality_violation(pair, Partition::grand(2));
    REQUIRE(violation);
    CHECK(violation->agent == 1);
    CHECK(violation->target_coalition == -1);
    CHECK(certify(pair, Partition::grand(2), *violation));
}

TEST_CASE("nash verification on the running example") {
    Verdict left = verify_nash(example1_fe(), example1_pi1());
    REQUIRE(left.kind == VerdictKind::Unstable);
    REQUIRE(left.certificate);
    CHECK(left.certificate->kind == BlockKind::NashDeviation);
    CHECK(left.certificate->agent == 2);  // agent 3 wants to join {4}
    CHECK(example1_pi1().coalitions[left.certificate->target_coalition] ==
          std::vector<AgentId>{3});
    CHECK(certify(example1_fe(), example1_pi1(), *left.certificate));

    CHECK(verify_nash(example1_fen(), example1_pi2()).kind == VerdictKind::Stable);
}

TEST_CASE("grand coalition of mutual friends is Nash stable") {
    Instance inst = Instance::fe(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(verify_nash(inst, Partition::grand(3)).kind == VerdictKind::Stable);
}

TEST_CASE("individual stability verification") {
    // strictly core stable implies individually stable on both examples
    CHECK(verify_individual(example1_fe(), example1_pi1()).kind == VerdictKind::Stable);
    CHECK(verify_individual(example1_fen(), example1_pi2()).kind == VerdictKind::Stable);

    // nobody envies on an empty friendship graph
    Instance empty = Instance::fe(3, {});
    CHECK(verify_individual(empty, Partition::singletons(3)).kind == VerdictKind::Stable);

    // one-sided admiration forms a blocking tuple when the target is neutral
    Instance inst = Instance::fen(3, {{0, 1}, {1, 2}, {2, 1}}, {});
    Partition pi = Partition::of(3, {{0}, {1, 2}});
    Verdict v = verify_individual(inst, pi);
    REQUIRE(v.kind == VerdictKind::Unstable);
    CHECK(v.certificate->kind == BlockKind::BlockingTuple);
    CHECK(v.certificate->agent == 0);
    CHECK(certify(inst, pi, *v.certificate));
}

TEST_CASE("brute-force blocking search on the running example") {
    // strictly core stable: no weakly blocking coalition at all
    CHECK_FALSE(find_blocking_bruteforce(example1_fe(), example1_pi1(), BlockSearch::Strict));
    CHECK_FALSE(find_blocking_bruteforce(example1_fe(), example1_pi1(), BlockSearch::Weak));

    Instance pair = Instance::fe(2, {{0, 1}, {1, 0}});
    auto cert = find_blocking_bruteforce(pair, Partition::singletons(2), BlockSearch::Strict);
    REQUIRE(cert);
    CHECK(cert->coalition == std::vector<AgentId>{0, 1});
    CHECK(certify(pair, Partition::singletons(2), *cert));

    Instance empty = Instance::fe(0, {});
    CHECK_FALSE(find_blocking_bruteforce(empty, Partition::of(0, {}), BlockSearch::Strict));
}

TEST_CASE("brute-force search budget and size guards") {
    Instance inst = Instance::fe(30, {});
    CHECK_THROWS_AS(
        find_blocking_bruteforce(inst, Partition::singletons(30), BlockSearch::Strict),
        SizeLimitError);
    // with a cap it is fine
    CHECK_FALSE(find_blocking_bruteforce(inst, Partition::singletons(30), BlockSearch::Strict, 2));
    SearchBudget tiny{.max_subsets = 4};
    Instance sparse8 = Instance::fe(8, {});
    CHECK_THROWS_AS(find_blocking_bruteforce(sparse8, Partition::singletons(8),
                                             BlockSearch::Strict, std::nullopt, tiny),
                    SizeLimitError);
}

TEST_CASE("parallel brute-force search matches the sequential result") {
    Rng rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 4 + rand_below(rng, 6);
        Instance inst = random_fe(rng, n, 0.4);
        Partition pi = random_partition(rng, n, 4);
        for (BlockSearch mode : {BlockSearch::Strict, BlockSearch::Weak}) {
            auto seq = find_blocking_bruteforce(inst, pi, mode);
            auto par = find_blocking_bruteforce(inst, pi, mode, std::nullopt, {}, 4);
            REQUIRE(seq.has_value() == par.has_value());
            if (seq) CHECK(seq->coalition == par->coalition);
        }
    }
}

TEST_CASE("wonderful preprocessing") {
    Instance pair = Instance::fe(2, {{0, 1}, {1, 0}});
    WonderfulResult res = preprocess_wonderful(pair, Partition::singletons(2));
    REQUIRE(res.wonderful);
    CHECK(res.wonderful->coalition == std::vector<AgentId>{0, 1});
    CHECK(res.wonderful->kind == BlockKind::Wonderful);
    CHECK(certify(pair, Partition::singletons(2), *res.wonderful));

    // on the running example the deletion process empties out
    WonderfulResult ex = preprocess_wonderful(example1_fe(), example1_pi1());
    CHECK_FALSE(ex.wonderful);
    CHECK(ex.kappa == 2);

    Instance empty = Instance::fe(3, {});
    CHECK_FALSE(preprocess_wonderful(empty, Partition::singletons(3)).wonderful);

    CHECK_THROWS_AS(preprocess_wonderful(example1_fen(), example1_pi1()), ModelMismatchError);
}

TEST_CASE("wonderful preprocessing size bound") {
    Rng rng(37);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 2 + rand_below(rng, 8);
        Instance inst = random_fe(rng, n, 0.4);
        Partition pi = random_partition(rng, n, 4);
        WonderfulResult res = preprocess_wonderful(inst, pi);
        if (res.wonderful) {
            CHECK(certify(inst, pi, *res.wonderful));
        } else {
            CHECK(no_weak_blocker_above(inst, pi, res.kappa));
        }
    }
}

TEST_CASE("xp verifier on the running example") {
    CHECK(verify_core_xp(example1_fe(), example1_pi1(), CoreMode::StrictCore).kind ==
          VerdictKind::Stable);
    CHECK(verify_core_xp(example1_fe(), example1_pi1(), CoreMode::Core).kind ==
          VerdictKind::Stable);

    Instance pair = Instance::fe(2, {{0, 1}, {1, 0}});
    Verdict v = verify_core_xp(pair, Partition::singletons(2), CoreMode::Core);
    REQUIRE(v.kind == VerdictKind::Unstable);
    CHECK(v.notes.front() == std::pair<std::string, std::string>{"phase", "wonderful"});
    CHECK(certify(pair, Partition::singletons(2), *v.certificate));

    CHECK_THROWS_AS(verify_core_xp(example1_fen(), example1_pi2(), CoreMode::Core),
                    ModelMismatchError);
}

TEST_CASE("xp verifier agrees with brute force") {
    Rng rng(41);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 2 + rand_below(rng, 8);
        Instance inst = random_fe(rng, n, 0.35);
        Partition pi = random_partition(rng, n, 4);
        for (CoreMode mode : {CoreMode::Core, CoreMode::StrictCore}) {
            auto brute = find_blocking_bruteforce(inst, pi, block_search_for(mode));
            Verdict xp = verify_core_xp(inst, pi, mode);
            CHECK(xp.stable() == !brute.has_value());
            if (xp.certificate) CHECK(certify(inst, pi, *xp.certificate));
            // the acyclic shortcut, when it applies, must agree as well
            if (auto shortcut = verify_core_dag_shortcut(inst, pi, mode))
                CHECK(shortcut->stable() == !brute.has_value());
        }
    }
}

TEST_CASE("dag shortcut for FE instances") {
    Instance path = Instance::fe(3, {{0, 1}, {1, 2}});
    auto stable = verify_core_dag_shortcut(path, Partition::singletons(3), CoreMode::Core);
    REQUIRE(stable);
    CHECK(stable->kind == VerdictKind::Stable);
    CHECK(verify_core_dag_shortcut(path, Partition::singletons(3), CoreMode::StrictCore)->kind ==
          VerdictKind::Stable);

    Partition merged = Partition::of(3, {{0, 1}, {2}});
    auto unstable = verify_core_dag_shortcut(path, merged, CoreMode::Core);
    REQUIRE(unstable);
    REQUIRE(unstable->kind == VerdictKind::Unstable);
    CHECK(certify(path, merged, *unstable->certificate));

    // cyclic: not applicable
    CHECK_FALSE(
        verify_core_dag_shortcut(example1_fe(), example1_pi1(), CoreMode::Core).has_value());
}

TEST_CASE("dag shortcut for FEN instances: core equals individual rationality") {
    Rng rng(43);
    int applied = 0;
    for (int iter = 0; iter < 200 && applied < 60; ++iter) {
        const int n = 2 + rand_below(rng, 7);
        Instance inst = random_fen_friend_dag(rng, n, 0.35, 0.3);
        Partition pi = random_partition(rng, n, 3);
        auto shortcut = verify_core_dag_shortcut(inst, pi, CoreMode::Core);
        REQUIRE(shortcut);
        ++applied;
        auto brute = find_blocking_bruteforce(inst, pi, BlockSearch::Strict);
        CHECK(shortcut->stable() == !brute.has_value());
        // strict core has no shortcut with neutrals
        CHECK_FALSE(verify_core_dag_shortcut(inst, pi, CoreMode::StrictCore).has_value());
    }
    CHECK(applied >= 60);
}

TEST_CASE("degenerate instances are stable everywhere") {
    for (int n : {0, 1}) {
        Instance fe = Instance::fe(n, {});
        Partition pi = n == 0 ? Partition::of(0, {}) : Partition::singletons(n);
        CHECK(verify_nash(fe, pi).stable());
        CHECK(verify_individual(fe, pi).stable());
        for (CoreMode mode : {CoreMode::Core, CoreMode::StrictCore}) {
            CHECK(verify_core_xp(fe, pi, mode).stable());
            CHECK_FALSE(find_blocking_bruteforce(fe, pi, block_search_for(mode)).has_value());
            auto shortcut = verify_core_dag_shortcut(fe, pi, mode);
            REQUIRE(shortcut);
            CHECK(shortcut->stable());
        }
        Instance fen = Instance::fen(n, {}, {});
        CHECK(verify_nash(fen, pi).stable());
        CHECK(verify_individual(fen, pi).stable());
    }
}

TEST_CASE("stability notions nest on random instances") {
    Rng rng(47);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 2 + rand_below(rng, 6);
        Instance inst = rand_chance(rng, 0.5) ? random_fe(rng, n, 0.4)
                                              : random_fen(rng, n, 0.3, 0.3);
        Partition pi = random_partition(rng, n, n);
        const bool strict_core = partition_stable(inst, pi, StabilityNotion::StrictCore);
        const bool core = partition_stable(inst, pi, StabilityNotion::Core);
        const bool nash = verify_nash(inst, pi).stable();
        const bool individual = verify_individual(inst, pi).stable();
        if (strict_core) {
            CHECK(core);
            CHECK(individual);
        }
        if (nash) CHECK(individual);
    }
}
