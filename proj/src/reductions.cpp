#include "hedonic/reductions.hpp"

#include "hedonic/params.hpp"

#include <numeric>
#include <set>

namespace hedonic {

namespace {

// Agents are created through labels so the name_map bijection falls out of
// the construction itself.
struct Builder {
    std::vector<std::string> names;
    std::map<std::string, AgentId> ids;

    AgentId add(const std::string& label) {
        auto [it, fresh] = ids.emplace(label, static_cast<AgentId>(names.size()));
        if (!fresh) throw std::logic_error("duplicate agent label " + label);
        names.push_back(label);
        return it->second;
    }
    AgentId operator()(const std::string& label) const {
        auto it = ids.find(label);
        if (it == ids.end()) throw std::logic_error("unknown agent label " + label);
        return it->second;
    }
    int count() const { return static_cast<int>(names.size()); }
};

std::string lbl(const char* base, int i) { return base + std::to_string(i); }
std::string lbl(const char* base, int i, int z) {
    return base + std::to_string(i) + "^" + std::to_string(z);
}

std::vector<int> occurrences(const X3CInstance& seed) {
    std::vector<int> occ(seed.element_count() + 1, 0);
    for (const auto& s : seed.sets)
        for (int e : s) ++occ[e];
    return occ;
}

void require_occurrence_at_most(const X3CInstance& seed, int bound, const char* who) {
    auto occ = occurrences(seed);
    for (int e = 1; e <= seed.element_count(); ++e)
        if (occ[e] > bound)
            throw std::invalid_argument(std::string(who) + ": element " + std::to_string(e) +
                                        " appears in more than " + std::to_string(bound) + " sets");
}

void require_occurrence_exact(const X3CInstance& seed, int bound, const char* who) {
    auto occ = occurrences(seed);
    for (int e = 1; e <= seed.element_count(); ++e)
        if (occ[e] != bound)
            throw std::invalid_argument(std::string(who) + ": element " + std::to_string(e) +
                                        " must appear in exactly " + std::to_string(bound) +
                                        " sets");
}

bool is_exact_cover(const X3CInstance& seed, const std::vector<int>& cover) {
    std::vector<char> hit(seed.element_count() + 1, 0);
    for (int j : cover) {
        if (j < 0 || j >= static_cast<int>(seed.sets.size())) return false;
        for (int e : seed.sets[j]) {
            if (hit[e]) return false;
            hit[e] = 1;
        }
    }
    for (int e = 1; e <= seed.element_count(); ++e)
        if (!hit[e]) return false;
    return true;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("construction invariant failed: " + what);
}

int max_out_friends(const Instance& inst) {
    int m = 0;
    for (AgentId i = 0; i < inst.n(); ++i)
        m = std::max<int>(m, static_cast<int>(inst.friends_out(i).size()));
    return m;
}

std::vector<Arc> drop_arc(std::vector<Arc> arcs, Arc gone) {
    std::erase(arcs, gone);
    return arcs;
}

std::vector<Arc> union_arcs(const Instance& inst) {
    auto arcs = inst.friend_arcs();
    auto en = inst.enemy_arcs();
    arcs.insert(arcs.end(), en.begin(), en.end());
    return arcs;
}

GeneratedCase finish(Builder& b, Instance inst, std::optional<Partition> pi,
                     std::optional<bool> truth) {
    GeneratedCase gc;
    gc.instance = std::move(inst);
    gc.pi = std::move(pi);
    gc.ground_truth = truth;
    gc.name_map = std::move(b.names);
    gc.ids = std::move(b.ids);
    return gc;
}

}  // namespace

void X3CInstance::validate() const {
    if (n_hat < 1) throw std::invalid_argument("x3c: n_hat must be positive");
    for (const auto& s : sets) {
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw std::invalid_argument("x3c: set elements must be distinct");
        for (int e : s)
            if (e < 1 || e > element_count())
                throw std::invalid_argument("x3c: element " + std::to_string(e) +
                                            " outside [1," + std::to_string(element_count()) + "]");
    }
    if (side && side->size() != sets.size())
        throw std::invalid_argument("x3c: side mapping must cover every set");
    if (known_cover && !is_exact_cover(*this, *known_cover))
        throw std::invalid_argument("x3c: known_cover is not an exact cover");
}

void CliqueInstance::validate() const {
    if (vertices < 1) throw std::invalid_argument("clique: empty vertex set");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw std::invalid_argument("clique: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("clique: self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("clique: duplicate edge");
    }
    if (h < 2) throw std::invalid_argument("clique: target size must be at least 2");
    if (known_clique) {
        if (static_cast<int>(known_clique->size()) != h)
            throw std::invalid_argument("clique: known_clique has wrong size");
        for (int a : *known_clique)
            for (int b : *known_clique) {
                if (a == b) continue;
                if (!seen.count({std::min(a, b), std::max(a, b)}))
                    throw std::invalid_argument("clique: known_clique is not a clique");
            }
    }
}

AgentId GeneratedCase::id(const std::string& label) const {
    auto it = ids.find(label);
    if (it == ids.end()) throw std::invalid_argument("unknown agent label " + label);
    return it->second;
}

// --------------------------------------------------------------------------
// FE core verification, one feedback arc, at most three friends per agent

GeneratedCase gen_fe_core_f1(const X3CInstance& seed, CoreMode mode) {
    seed.validate();
    require_occurrence_at_most(seed, 3, "gen_fe_core_f1");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());
    const int n_hat = seed.n_hat;
    const int s_max = mode == CoreMode::Core ? 4 * n_hat + 2 : 4 * n_hat + 1;

    Builder b;
    for (int i = 1; i <= ne; ++i) b.add(lbl("a", i));
    for (int j = 1; j <= m; ++j) b.add(lbl("c", j));
    for (int z = 0; z <= s_max; ++z) b.add(lbl("s", z));
    for (int i = 1; i < ne; ++i) b.add(lbl("x", i));

    std::vector<Arc> fr;
    for (int j = 1; j <= m; ++j) fr.push_back({b(lbl("c", j)), b(lbl("s", 0))});
    for (int i = 1; i <= ne; ++i) fr.push_back({b(lbl("s", i)), b(lbl("a", i))});
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) fr.push_back({b(lbl("a", e)), b(lbl("c", j + 1))});
    for (int z = 0; z < s_max; ++z) fr.push_back({b(lbl("s", z)), b(lbl("s", z + 1))});
    fr.push_back({b(lbl("s", s_max)), b(lbl("s", 0))});
    for (int i = 1; i < ne; ++i) {
        fr.push_back({b(lbl("s", i)), b(lbl("x", i))});
        fr.push_back({b(lbl("x", i)), b(lbl("s", i + 1))});
        fr.push_back({b(lbl("x", i)), b(lbl("s", ne + 1))});
    }
    Instance inst = Instance::fe(b.count(), fr);

    std::vector<std::vector<AgentId>> coalitions;
    std::vector<AgentId> big;
    for (int z = 0; z <= s_max; ++z) big.push_back(b(lbl("s", z)));
    for (int i = 1; i < ne; ++i) big.push_back(b(lbl("x", i)));
    coalitions.push_back(big);
    for (int j = 1; j <= m; ++j) coalitions.push_back({b(lbl("c", j))});
    for (int i = 1; i <= ne; ++i) coalitions.push_back({b(lbl("a", i))});
    Partition pi = Partition::of(b.count(), std::move(coalitions));

    check(max_out_friends(inst) <= 3, "fe_core_f1: at most three friends per agent");
    auto arcs = inst.friend_arcs();
    check(!is_acyclic(inst.n(), arcs), "fe_core_f1: friendship graph must contain a cycle");
    check(is_acyclic(inst.n(), drop_arc(arcs, {b(lbl("s", 0)), b(lbl("s", 1))})),
          "fe_core_f1: (s0,s1) is the single feedback arc");

    return finish(b, std::move(inst), std::move(pi),
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

std::vector<AgentId> fe_core_f1_witness_coalition(const GeneratedCase& gc, const X3CInstance& seed,
                                                  const std::vector<int>& cover) {
    if (!is_exact_cover(seed, cover)) throw std::invalid_argument("witness requires an exact cover");
    std::vector<AgentId> block;
    for (int i = 1; i <= seed.element_count(); ++i) block.push_back(gc.id(lbl("a", i)));
    for (int j : cover) block.push_back(gc.id(lbl("c", j + 1)));
    for (int z = 0; z <= seed.element_count(); ++z) block.push_back(gc.id(lbl("s", z)));
    std::sort(block.begin(), block.end());
    return block;
}

// --------------------------------------------------------------------------
// FE core verification, planar-style gadget with max degree four

GeneratedCase gen_fe_core_planar4(const X3CInstance& seed, CoreMode) {
    seed.validate();
    if (!seed.side) throw std::invalid_argument("gen_fe_core_planar4: side mapping required");
    if (seed.sets.empty()) throw std::invalid_argument("gen_fe_core_planar4: empty set family");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());
    // condition (heart): at most two containing sets per element and side
    for (int e = 1; e <= ne; ++e) {
        int out = 0, in = 0;
        for (int j = 0; j < m; ++j) {
            if (std::find(seed.sets[j].begin(), seed.sets[j].end(), e) == seed.sets[j].end())
                continue;
            ((*seed.side)[j] == X3CInstance::Side::Out ? out : in) += 1;
        }
        if (out > 2 || in > 2)
            throw std::invalid_argument(
                "gen_fe_core_planar4: element " + std::to_string(e) +
                " has more than two containing sets on one side");
    }
    const int L = 27 * seed.n_hat - 1;

    Builder b;
    for (int i = 1; i <= ne; ++i) {
        b.add(lbl("x", i));
        b.add(lbl("s", i));
        b.add(lbl("t", i));
        for (int z = 0; z <= L; ++z) b.add(lbl("x", i, z));
        for (int z = 0; z <= 3; ++z) b.add(lbl("a", i, z));
        for (int z = 0; z <= 3; ++z) b.add(lbl("b", i, z));
    }
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) {
            b.add("c" + std::to_string(j + 1) + "_" + std::to_string(e));
            b.add("d" + std::to_string(j + 1) + "_" + std::to_string(e));
        }
    auto cjl = [](int j, int e) { return "c" + std::to_string(j + 1) + "_" + std::to_string(e); };
    auto djl = [](int j, int e) { return "d" + std::to_string(j + 1) + "_" + std::to_string(e); };

    std::vector<Arc> fr;
    auto wrap = [&](int i) { return i > ne ? 1 : i; };
    for (int i = 1; i <= ne; ++i) {
        fr.push_back({b(lbl("x", i)), b(lbl("x", i, 0))});
        fr.push_back({b(lbl("x", i, 0)), b(lbl("x", i))});
        for (int z = 0; z <= L; ++z)
            fr.push_back({b(lbl("x", i, z)), b(lbl("x", i, (z + 1) % (L + 1)))});
        fr.push_back({b(lbl("x", i)), b(lbl("s", i))});
        fr.push_back({b(lbl("s", i)), b(lbl("a", i, 0))});
        fr.push_back({b(lbl("s", i)), b(lbl("b", i, 0))});
        fr.push_back({b(lbl("a", i, 0)), b(lbl("t", i))});
        fr.push_back({b(lbl("b", i, 0)), b(lbl("t", i))});
        fr.push_back({b(lbl("t", i)), b(lbl("x", wrap(i + 1)))});
        for (char v : {'a', 'b'}) {
            const char* base = v == 'a' ? "a" : "b";
            for (int z = 0; z <= 2; ++z)
                fr.push_back({b(lbl(base, i, z)), b(lbl(base, i, (z + 1) % 3))});
            fr.push_back({b(lbl(base, i, 1)), b(lbl(base, i, 3))});
            fr.push_back({b(lbl(base, i, 2)), b(lbl(base, i, 3))});
        }
    }
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> elems = seed.sets[j];
        std::sort(elems.begin(), elems.end());
        for (int e : elems) {
            fr.push_back({b(cjl(j, e)), b(djl(j, e))});
            fr.push_back({b(djl(j, e)), b(cjl(j, e))});
        }
        fr.push_back({b(cjl(j, elems[0])), b(cjl(j, elems[1]))});
        fr.push_back({b(cjl(j, elems[1])), b(cjl(j, elems[2]))});
        fr.push_back({b(cjl(j, elems[2])), b(cjl(j, elems[0]))});
    }
    // element-to-set connections; the return arc of the first set on a side
    // targets z=1, of the second z=2
    for (int e = 1; e <= ne; ++e) {
        int seen_out = 0, seen_in = 0;
        for (int j = 0; j < m; ++j) {
            if (std::find(seed.sets[j].begin(), seed.sets[j].end(), e) == seed.sets[j].end())
                continue;
            const bool outside = (*seed.side)[j] == X3CInstance::Side::Out;
            const char* base = outside ? "a" : "b";
            const int z = (outside ? ++seen_out : ++seen_in);
            fr.push_back({b(lbl(base, e, 3)), b(djl(j, e))});
            fr.push_back({b(djl(j, e)), b(lbl(base, e, z))});
        }
    }
    Instance inst = Instance::fe(b.count(), fr);

    std::vector<std::vector<AgentId>> coalitions;
    for (int i = 1; i <= ne; ++i) {
        std::vector<AgentId> friendship{b(lbl("x", i))};
        for (int z = 0; z <= L; ++z) friendship.push_back(b(lbl("x", i, z)));
        coalitions.push_back(std::move(friendship));
        coalitions.push_back({b(lbl("s", i))});
        coalitions.push_back({b(lbl("t", i))});
        for (const char* base : {"a", "b"}) {
            coalitions.push_back({b(lbl(base, i, 0)), b(lbl(base, i, 1)), b(lbl(base, i, 2))});
            coalitions.push_back({b(lbl(base, i, 3))});
        }
    }
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) coalitions.push_back({b(cjl(j, e)), b(djl(j, e))});
    Partition pi = Partition::of(b.count(), std::move(coalitions));

    check(max_degree(inst) <= 4, "fe_core_planar4: max degree four");

    return finish(b, std::move(inst), std::move(pi),
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

std::vector<AgentId> planar4_witness_coalition(const GeneratedCase& gc, const X3CInstance& seed,
                                               const std::vector<int>& cover) {
    if (!is_exact_cover(seed, cover)) throw std::invalid_argument("witness requires an exact cover");
    std::vector<AgentId> block;
    std::vector<int> covering_set(seed.element_count() + 1, -1);
    for (int j : cover)
        for (int e : seed.sets[j]) covering_set[e] = j;
    for (int i = 1; i <= seed.element_count(); ++i) {
        block.push_back(gc.id(lbl("x", i)));
        block.push_back(gc.id(lbl("s", i)));
        block.push_back(gc.id(lbl("t", i)));
        const int j = covering_set[i];
        block.push_back(gc.id("c" + std::to_string(j + 1) + "_" + std::to_string(i)));
        block.push_back(gc.id("d" + std::to_string(j + 1) + "_" + std::to_string(i)));
        const char* base = (*seed.side)[j] == X3CInstance::Side::Out ? "a" : "b";
        for (int z = 0; z <= 3; ++z) block.push_back(gc.id(lbl(base, i, z)));
    }
    std::sort(block.begin(), block.end());
    return block;
}

// --------------------------------------------------------------------------
// FE core verification from Clique, symmetric preferences

GeneratedCase gen_fe_core_clique(const CliqueInstance& seed, CoreMode mode) {
    seed.validate();
    if (seed.h < 3) throw std::invalid_argument("gen_fe_core_clique: requires h >= 3");
    const int h = seed.h;
    const int edge_privates = h + h * (h - 1) / 2 - (mode == CoreMode::StrictCore ? 1 : 0);

    Builder b;
    for (int i = 0; i < seed.vertices; ++i) {
        b.add(lbl("u", i));
        for (int j = 1; j <= h - 2; ++j) b.add(lbl("a", i, j));
    }
    auto fel = [](int u, int v) {
        return "f" + std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v));
    };
    auto bel = [&](int u, int v, int j) { return fel(u, v) + "^" + std::to_string(j); };
    for (auto [u, v] : seed.edges) {
        b.add(fel(u, v));
        for (int j = 1; j <= edge_privates; ++j) b.add(bel(u, v, j));
    }

    std::vector<Arc> fr;
    auto both = [&fr](AgentId x, AgentId y) {
        fr.push_back({x, y});
        fr.push_back({y, x});
    };
    for (int i = 0; i < seed.vertices; ++i) {
        for (int j = 1; j <= h - 2; ++j) {
            both(b(lbl("a", i, j)), b(lbl("u", i)));
            for (int j2 = j + 1; j2 <= h - 2; ++j2) both(b(lbl("a", i, j)), b(lbl("a", i, j2)));
        }
    }
    for (auto [u, v] : seed.edges) {
        const AgentId fe = b(fel(u, v));
        both(b(lbl("u", u)), fe);
        both(b(lbl("u", v)), fe);
        both(fe, b(bel(u, v, 1)));
        both(fe, b(bel(u, v, 2)));
        for (int j = 1; j <= edge_privates; ++j)
            for (int j2 = j + 1; j2 <= edge_privates; ++j2) both(b(bel(u, v, j)), b(bel(u, v, j2)));
    }
    Instance inst = Instance::fe(b.count(), fr);

    std::vector<std::vector<AgentId>> coalitions;
    for (int i = 0; i < seed.vertices; ++i) {
        std::vector<AgentId> c{b(lbl("u", i))};
        for (int j = 1; j <= h - 2; ++j) c.push_back(b(lbl("a", i, j)));
        coalitions.push_back(std::move(c));
    }
    for (auto [u, v] : seed.edges) {
        std::vector<AgentId> c{b(fel(u, v))};
        for (int j = 1; j <= edge_privates; ++j) c.push_back(b(bel(u, v, j)));
        coalitions.push_back(std::move(c));
    }
    Partition pi = Partition::of(b.count(), std::move(coalitions));

    for (AgentId i = 0; i < inst.n(); ++i)
        for (AgentId j : inst.friends_out(i))
            check(inst.is_friend(j, i), "fe_core_clique: symmetric friendships");
    check(pi.max_coalition_size() <= h + h * (h - 1) / 2 + 1, "fe_core_clique: kappa bound");

    std::optional<bool> truth;
    if (seed.known_clique) truth = true;
    return finish(b, std::move(inst), std::move(pi), truth);
}

// --------------------------------------------------------------------------
// FEN core verification, one feedback arc, degree 12, coalitions of size 3

GeneratedCase gen_fen_core_f1(const X3CInstance& seed) {
    seed.validate();
    require_occurrence_at_most(seed, 3, "gen_fen_core_f1");
    if (seed.sets.empty()) throw std::invalid_argument("gen_fen_core_f1: empty set family");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());

    Builder b;
    for (int i = 1; i <= ne; ++i) b.add(lbl("a", i));
    for (int j = 1; j <= m; ++j) {
        b.add(lbl("c", j));
        b.add(lbl("d", j, 1));
        b.add(lbl("d", j, 2));
        b.add(lbl("x", j));
    }
    for (int l = 1; l <= ne; ++l) b.add(lbl("s", l));
    for (int l = 1; l < ne; ++l) b.add(lbl("t", l));

    std::vector<Arc> fr, en;
    for (int l = 1; l < ne; ++l) {
        fr.push_back({b(lbl("s", l)), b(lbl("s", l + 1))});
        fr.push_back({b(lbl("s", l)), b(lbl("t", l))});
        fr.push_back({b(lbl("s", l)), b(lbl("a", l))});
    }
    fr.push_back({b(lbl("s", ne)), b(lbl("a", ne))});
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) fr.push_back({b(lbl("a", e)), b(lbl("c", j + 1))});
    for (int j = 1; j <= m; ++j) {
        fr.push_back({b(lbl("c", j)), b(lbl("d", j, 1))});
        fr.push_back({b(lbl("d", j, 1)), b(lbl("d", j, 2))});
        fr.push_back({b(lbl("c", j)), b(lbl("x", j))});
    }
    for (int j = 1; j < m; ++j) fr.push_back({b(lbl("x", j)), b(lbl("x", j + 1))});
    fr.push_back({b(lbl("x", m)), b(lbl("s", 1))});
    for (int j = 1; j <= m; ++j) en.push_back({b(lbl("c", j)), b(lbl("d", j, 2))});
    for (int j = 0; j < m; ++j)
        for (int z = j + 1; z < m; ++z) {
            bool intersect = false;
            for (int e : seed.sets[j])
                if (std::find(seed.sets[z].begin(), seed.sets[z].end(), e) != seed.sets[z].end())
                    intersect = true;
            if (intersect) en.push_back({b(lbl("c", j + 1)), b(lbl("c", z + 1))});
        }
    Instance inst = Instance::fen(b.count(), fr, en);

    std::vector<std::vector<AgentId>> coalitions;
    for (int l = 1; l < ne; ++l) coalitions.push_back({b(lbl("s", l)), b(lbl("t", l))});
    coalitions.push_back({b(lbl("s", ne))});
    for (int i = 1; i <= ne; ++i) coalitions.push_back({b(lbl("a", i))});
    for (int j = 1; j <= m; ++j)
        coalitions.push_back({b(lbl("c", j)), b(lbl("d", j, 1)), b(lbl("d", j, 2))});
    for (int j = 1; j <= m; ++j) coalitions.push_back({b(lbl("x", j))});
    Partition pi = Partition::of(b.count(), std::move(coalitions));

    check(max_degree(inst) <= 12, "fen_core_f1: max degree 12");
    check(pi.max_coalition_size() <= 3, "fen_core_f1: kappa 3");
    auto arcs = union_arcs(inst);
    check(!is_acyclic(inst.n(), arcs), "fen_core_f1: union graph must contain a cycle");
    check(is_acyclic(inst.n(), drop_arc(arcs, {b(lbl("x", m)), b(lbl("s", 1))})),
          "fen_core_f1: (x_m,s_1) is the single feedback arc");

    return finish(b, std::move(inst), std::move(pi),
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

std::vector<AgentId> fen_core_f1_witness_coalition(const GeneratedCase& gc,
                                                   const X3CInstance& seed,
                                                   const std::vector<int>& cover) {
    if (!is_exact_cover(seed, cover)) throw std::invalid_argument("witness requires an exact cover");
    std::vector<AgentId> block;
    for (int i = 1; i <= seed.element_count(); ++i) {
        block.push_back(gc.id(lbl("s", i)));
        block.push_back(gc.id(lbl("a", i)));
    }
    for (int j : cover) block.push_back(gc.id(lbl("c", j + 1)));
    for (int l = 1; l <= static_cast<int>(seed.sets.size()); ++l)
        block.push_back(gc.id(lbl("x", l)));
    std::sort(block.begin(), block.end());
    return block;
}

// --------------------------------------------------------------------------
// FEN strict core verification on an acyclic relation graph

GeneratedCase gen_fen_strictcore_dag(const X3CInstance& seed) {
    seed.validate();
    require_occurrence_exact(seed, 3, "gen_fen_strictcore_dag");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());

    Builder b;
    b.add("g");
    b.add("g^1");
    b.add("g^2");
    for (int i = 1; i <= ne; ++i) {
        b.add(lbl("a", i));
        b.add(lbl("b", i));
    }
    for (int j = 1; j <= m; ++j) b.add(lbl("c", j));
    for (int l = 1; l < ne; ++l) {
        b.add(lbl("s", l));
        b.add(lbl("t", l, 1));
        b.add(lbl("t", l, 2));
    }
    b.add(lbl("s", ne));
    b.add(lbl("t", ne));

    std::vector<Arc> fr, en;
    for (int l = 1; l < ne; ++l) {
        fr.push_back({b(lbl("s", l)), b(lbl("s", l + 1))});
        fr.push_back({b(lbl("s", l)), b(lbl("t", l, 1))});
        fr.push_back({b(lbl("s", l)), b(lbl("t", l, 2))});
        fr.push_back({b(lbl("s", l)), b(lbl("a", l))});
    }
    fr.push_back({b(lbl("s", ne)), b(lbl("t", ne))});
    fr.push_back({b(lbl("s", ne)), b(lbl("a", ne))});
    for (int i = 1; i <= ne; ++i) fr.push_back({b(lbl("a", i)), b(lbl("b", i))});
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) fr.push_back({b(lbl("a", e)), b(lbl("c", j + 1))});
    fr.push_back({b("g"), b(lbl("s", 1))});
    fr.push_back({b("g"), b("g^1")});
    fr.push_back({b("g^1"), b("g^2")});

    for (int l = 1; l < ne; ++l) {
        // enemies towards the next special agent's privates (a single private
        // guards the last position)
        if (l + 1 < ne) {
            en.push_back({b(lbl("s", l)), b(lbl("t", l + 1, 1))});
            en.push_back({b(lbl("s", l)), b(lbl("t", l + 1, 2))});
        } else {
            en.push_back({b(lbl("s", l)), b(lbl("t", ne))});
        }
        en.push_back({b(lbl("t", l, 1)), b(lbl("s", l + 1))});
        en.push_back({b(lbl("t", l, 2)), b(lbl("s", l + 1))});
        en.push_back({b(lbl("t", l, 1)), b(lbl("a", l))});
        en.push_back({b(lbl("t", l, 2)), b(lbl("a", l))});
        en.push_back({b(lbl("s", l)), b(lbl("b", l))});
    }
    en.push_back({b(lbl("s", ne)), b(lbl("b", ne))});
    en.push_back({b(lbl("t", ne)), b(lbl("a", ne))});
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) en.push_back({b(lbl("b", e)), b(lbl("c", j + 1))});
    for (int j = 0; j < m; ++j)
        for (int z = j + 1; z < m; ++z) {
            bool intersect = false;
            for (int e : seed.sets[j])
                if (std::find(seed.sets[z].begin(), seed.sets[z].end(), e) != seed.sets[z].end())
                    intersect = true;
            if (intersect) en.push_back({b(lbl("c", j + 1)), b(lbl("c", z + 1))});
        }
    en.push_back({b("g"), b("g^2")});
    en.push_back({b("g^1"), b(lbl("s", 1))});
    en.push_back({b("g"), b(lbl("t", 1, 1))});
    en.push_back({b("g"), b(lbl("t", 1, 2))});
    Instance inst = Instance::fen(b.count(), fr, en);

    std::vector<std::vector<AgentId>> coalitions;
    for (int l = 1; l < ne; ++l)
        coalitions.push_back({b(lbl("s", l)), b(lbl("t", l, 1)), b(lbl("t", l, 2))});
    coalitions.push_back({b(lbl("s", ne)), b(lbl("t", ne))});
    for (int i = 1; i <= ne; ++i) coalitions.push_back({b(lbl("a", i)), b(lbl("b", i))});
    for (int j = 1; j <= m; ++j) coalitions.push_back({b(lbl("c", j))});
    coalitions.push_back({b("g"), b("g^1"), b("g^2")});
    Partition pi = Partition::of(b.count(), std::move(coalitions));

    check(max_degree(inst) <= 12, "fen_strictcore_dag: max degree 12");
    check(pi.max_coalition_size() <= 3, "fen_strictcore_dag: kappa 3");
    check(is_acyclic(inst.n(), union_arcs(inst)), "fen_strictcore_dag: acyclic relation graph");

    return finish(b, std::move(inst), std::move(pi),
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

// --------------------------------------------------------------------------
// FE Nash existence gadget

GeneratedCase gen_fe_nashex(const X3CInstance& seed) {
    seed.validate();
    require_occurrence_at_most(seed, 3, "gen_fe_nashex");
    auto occ = occurrences(seed);
    for (int e = 1; e <= seed.element_count(); ++e)
        if (occ[e] < 1)
            throw std::invalid_argument("gen_fe_nashex: element " + std::to_string(e) +
                                        " is contained in no set");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());

    Builder b;
    for (int i = 1; i <= ne; ++i) b.add(lbl("x", i));
    for (int j = 1; j <= m; ++j) {
        b.add(lbl("s", j));
        for (int z = 0; z <= 2; ++z) b.add(lbl("s", j, z));
        for (int z = 0; z <= 5; ++z) b.add(lbl("t", j, z));
    }

    std::vector<Arc> fr;
    for (int j = 0; j < m; ++j) {
        const int sj = b(lbl("s", j + 1));
        for (int e : seed.sets[j]) {
            fr.push_back({b(lbl("x", e)), sj});
            fr.push_back({sj, b(lbl("x", e))});
        }
        for (int z = 0; z <= 2; ++z) {
            fr.push_back({sj, b(lbl("s", j + 1, z))});
            fr.push_back({b(lbl("s", j + 1, z)), b(lbl("s", j + 1, (z + 1) % 3))});
            fr.push_back({b(lbl("t", j + 1, z)), b(lbl("t", j + 1, (z + 1) % 3))});
        }
        fr.push_back({b(lbl("s", j + 1, 0)), b(lbl("t", j + 1, 0))});
        fr.push_back({b(lbl("t", j + 1, 2)), b(lbl("t", j + 1, 3))});
        fr.push_back({b(lbl("t", j + 1, 3)), b(lbl("t", j + 1, 4))});
        fr.push_back({b(lbl("t", j + 1, 4)), b(lbl("t", j + 1, 3))});
        fr.push_back({b(lbl("t", j + 1, 4)), b(lbl("t", j + 1, 5))});
    }
    Instance inst = Instance::fe(b.count(), fr);

    check(max_degree(inst) <= 9, "fe_nashex: max degree 9");

    return finish(b, std::move(inst), std::nullopt,
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

Partition nashex_witness_partition(const GeneratedCase& gc, const X3CInstance& seed,
                                   const std::vector<int>& cover) {
    if (!is_exact_cover(seed, cover)) throw std::invalid_argument("witness requires an exact cover");
    std::vector<char> in_cover(seed.sets.size(), 0);
    for (int j : cover) in_cover[j] = 1;
    std::vector<std::vector<AgentId>> coalitions;
    for (int j = 0; j < static_cast<int>(seed.sets.size()); ++j) {
        std::vector<AgentId> enf{gc.id(lbl("s", j + 1, 0)), gc.id(lbl("s", j + 1, 1)),
                                 gc.id(lbl("s", j + 1, 2))};
        if (in_cover[j]) {
            std::vector<AgentId> covered{gc.id(lbl("s", j + 1))};
            for (int e : seed.sets[j]) covered.push_back(gc.id(lbl("x", e)));
            coalitions.push_back(std::move(covered));
            coalitions.push_back(std::move(enf));
        } else {
            enf.insert(enf.begin(), gc.id(lbl("s", j + 1)));
            coalitions.push_back(std::move(enf));
        }
        coalitions.push_back({gc.id(lbl("t", j + 1, 0)), gc.id(lbl("t", j + 1, 1)),
                              gc.id(lbl("t", j + 1, 2))});
        coalitions.push_back({gc.id(lbl("t", j + 1, 3)), gc.id(lbl("t", j + 1, 4))});
        coalitions.push_back({gc.id(lbl("t", j + 1, 5))});
    }
    return Partition::of(gc.instance.n(), std::move(coalitions));
}

// --------------------------------------------------------------------------
// FEN individual stability existence gadget

GeneratedCase gen_fen_individex(const X3CInstance& seed) {
    seed.validate();
    if (seed.n_hat % 2 == 0)
        throw std::invalid_argument("gen_fen_individex: n_hat must be odd");
    require_occurrence_exact(seed, 3, "gen_fen_individex");
    const int ne = seed.element_count();
    const int m = static_cast<int>(seed.sets.size());

    Builder b;
    for (int i = 1; i <= ne; ++i) {
        b.add(lbl("a", i));
        b.add(lbl("u", i));
        b.add(lbl("u", i, 1));
        b.add(lbl("u", i, 2));
    }
    for (int j = 1; j <= m; ++j) b.add(lbl("c", j));

    auto nxt = [&](int i) { return i % ne + 1; };
    std::vector<Arc> fr, en;
    for (int i = 1; i <= ne; ++i) {
        fr.push_back({b(lbl("u", i, 1)), b(lbl("u", i))});
        fr.push_back({b(lbl("u", i, 2)), b(lbl("u", i))});
        fr.push_back({b(lbl("a", i)), b(lbl("a", nxt(i)))});
        fr.push_back({b(lbl("a", i)), b(lbl("u", i, 1))});
        fr.push_back({b(lbl("a", i)), b(lbl("u", i, 2))});
        fr.push_back({b(lbl("a", i)), b(lbl("u", nxt(i), 1))});
        fr.push_back({b(lbl("a", i)), b(lbl("u", nxt(i), 2))});
        en.push_back({b(lbl("a", i)), b(lbl("u", nxt(i)))});
    }
    for (int i = 1; i < ne; ++i) en.push_back({b(lbl("u", i)), b(lbl("u", i + 1))});
    en.push_back({b(lbl("u", 1)), b(lbl("u", ne))});
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) {
            fr.push_back({b(lbl("a", e)), b(lbl("c", j + 1))});
            en.push_back({b(lbl("u", e)), b(lbl("c", j + 1))});
            en.push_back({b(lbl("u", nxt(e))), b(lbl("c", j + 1))});
            en.push_back({b(lbl("u", nxt(nxt(e)))), b(lbl("c", j + 1))});
        }
    for (int j = 0; j < m; ++j)
        for (int t = j + 1; t < m; ++t) {
            bool intersect = false;
            for (int e : seed.sets[j])
                if (std::find(seed.sets[t].begin(), seed.sets[t].end(), e) != seed.sets[t].end())
                    intersect = true;
            if (intersect) en.push_back({b(lbl("c", j + 1)), b(lbl("c", t + 1))});
        }
    Instance inst = Instance::fen(b.count(), fr, en);

    check(max_degree(inst) <= 18, "fen_individex: max degree 18");
    auto friends = inst.friend_arcs();
    check(!is_acyclic(inst.n(), friends), "fen_individex: friendship graph must contain a cycle");
    const Arc feedback{b(lbl("a", ne)), b(lbl("a", 1))};
    check(is_acyclic(inst.n(), drop_arc(friends, feedback)),
          "fen_individex: single friendship feedback arc");
    check(is_acyclic(inst.n(), inst.enemy_arcs()), "fen_individex: acyclic enemy graph");
    check(is_acyclic(inst.n(), drop_arc(union_arcs(inst), feedback)),
          "fen_individex: single union feedback arc");

    return finish(b, std::move(inst), std::nullopt,
                  seed.known_cover ? std::optional<bool>(true) : std::nullopt);
}

Partition individex_witness_partition(const GeneratedCase& gc, const X3CInstance& seed,
                                      const std::vector<int>& cover) {
    if (!is_exact_cover(seed, cover)) throw std::invalid_argument("witness requires an exact cover");
    std::vector<char> in_cover(seed.sets.size(), 0);
    for (int j : cover) in_cover[j] = 1;
    std::vector<std::vector<AgentId>> coalitions;
    std::vector<AgentId> big;
    for (int i = 1; i <= seed.element_count(); ++i) {
        coalitions.push_back({gc.id(lbl("u", i)), gc.id(lbl("u", i, 1)), gc.id(lbl("u", i, 2))});
        big.push_back(gc.id(lbl("a", i)));
    }
    for (int j = 0; j < static_cast<int>(seed.sets.size()); ++j) {
        if (in_cover[j]) big.push_back(gc.id(lbl("c", j + 1)));
        else coalitions.push_back({gc.id(lbl("c", j + 1))});
    }
    coalitions.push_back(std::move(big));
    return Partition::of(gc.instance.n(), std::move(coalitions));
}

// --------------------------------------------------------------------------
// Seed ground truth

std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& seed, int max_sets) {
    seed.validate();
    const int m = static_cast<int>(seed.sets.size());
    if (m > max_sets)
        throw SizeLimitError("x3c_bruteforce: " + std::to_string(m) + " sets exceeds limit");
    if (seed.element_count() > 63)
        throw SizeLimitError("x3c_bruteforce: too many elements");
    const std::uint64_t full = (1ull << seed.element_count()) - 1;
    std::vector<std::uint64_t> set_mask(m, 0);
    for (int j = 0; j < m; ++j)
        for (int e : seed.sets[j]) set_mask[j] |= 1ull << (e - 1);

    const int want = seed.n_hat;
    if (want > m) return std::nullopt;
    std::vector<int> pick(want);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t acc = 0;
        bool disjoint = true;
        for (int j : pick) {
            if (acc & set_mask[j]) {
                disjoint = false;
                break;
            }
            acc |= set_mask[j];
        }
        if (disjoint && acc == full) return pick;
        int i = want - 1;
        while (i >= 0 && pick[i] == m - want + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::optional<std::vector<int>> clique_bruteforce(const CliqueInstance& seed) {
    seed.validate();
    if (seed.vertices > 32) throw SizeLimitError("clique_bruteforce: too many vertices");
    std::vector<std::uint32_t> adj(seed.vertices, 0);
    for (auto [u, v] : seed.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const int h = seed.h;
    if (h > seed.vertices) return std::nullopt;
    std::vector<int> pick(h);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < h && ok; ++a)
            for (int b2 = a + 1; b2 < h; ++b2)
                if (!((adj[pick[a]] >> pick[b2]) & 1)) {
                    ok = false;
                    break;
                }
        if (ok) return pick;
        int i = h - 1;
        while (i >= 0 && pick[i] == seed.vertices - h + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace hedonic
