#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/design.hpp"
#include "ta/geometry.hpp"

using namespace ta;

namespace {

BlockDesign fano() {
    return {7, {{0, 1, 2}, {0, 4, 5}, {0, 3, 6}, {2, 3, 4}, {1, 3, 5}, {1, 4, 6}, {2, 5, 6}}};
}

UnorderedTripleArray uta_3x4() {
    UnorderedTripleArray u;
    u.v = 6;
    u.row_sets = {{2, 3, 4, 5}, {0, 1, 2, 5}, {0, 1, 3, 4}};
    u.col_sets = {{1, 2, 3}, {0, 2, 4}, {0, 3, 5}, {1, 4, 5}};
    return u;
}

TripleArray grid_4x9() {
    TripleArray t;
    t.r = 4;
    t.c = 9;
    t.v = 12;
    for (int x : {5, 7, 6, 8, 11, 9, 4, 12, 10,
                  3, 8, 7, 5, 2, 1, 12, 6, 11,
                  4, 3, 10, 2, 7, 5, 1, 9, 12,
                  6, 9, 1, 10, 4, 11, 8, 2, 3})
        t.cells.push_back(x - 1);
    return t;
}

BlockDesign relabel(const BlockDesign& d, const Perm& p) {
    BlockDesign out;
    out.v = d.v;
    for (const auto& blk : d.blocks) {
        std::vector<int> nb;
        for (int x : blk) nb.push_back(p[x]);
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    std::shuffle(out.blocks.begin(), out.blocks.end(), std::mt19937(p[0] * 131 + p[1]));
    return out;
}

// Point permutations preserving the block multiset, times the block
// multiplicities (identical blocks may be exchanged freely).
unsigned long long brute_design_aut(const BlockDesign& d) {
    std::vector<std::vector<int>> sorted_blocks = d.blocks;
    std::sort(sorted_blocks.begin(), sorted_blocks.end());
    Perm p(d.v);
    std::iota(p.begin(), p.end(), 0);
    unsigned long long n = 0;
    do {
        std::vector<std::vector<int>> mapped;
        for (const auto& blk : d.blocks) {
            std::vector<int> nb;
            for (int x : blk) nb.push_back(p[x]);
            std::sort(nb.begin(), nb.end());
            mapped.push_back(std::move(nb));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == sorted_blocks) ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    unsigned long long mult = 1;
    for (size_t i = 0; i < sorted_blocks.size();) {
        size_t j = i;
        while (j < sorted_blocks.size() && sorted_blocks[j] == sorted_blocks[i]) ++j;
        for (size_t m = 2; m <= j - i; ++m) mult *= m;
        i = j;
    }
    return n * mult;
}

// Symbol permutations preserving both set collections.
unsigned long long brute_uta_aut(const UnorderedTripleArray& u) {
    auto rows = u.row_sets;
    auto cols = u.col_sets;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    Perm p(u.v);
    std::iota(p.begin(), p.end(), 0);
    unsigned long long n = 0;
    do {
        auto map_sets = [&](const std::vector<std::vector<int>>& sets) {
            std::vector<std::vector<int>> out;
            for (const auto& s : sets) {
                std::vector<int> ns;
                for (int x : s) ns.push_back(p[x]);
                std::sort(ns.begin(), ns.end());
                out.push_back(std::move(ns));
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        if (map_sets(u.row_sets) == rows && map_sets(u.col_sets) == cols) ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    return n;
}

} // namespace

TEST_CASE("encodings have the expected vertex counts") {
    CHECK(encode(fano()).n == 14);
    CHECK(encode(uta_3x4()).n == 13);
    TripleArray latin{3, 3, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}};
    CHECK(encode(latin).n == 18);
}

TEST_CASE("Fano automorphism group has order 168") {
    CHECK(brute_design_aut(fano()) == 168);
    CHECK(aut_order(fano()) == 168);
}

TEST_CASE("aut orders match brute force on small designs") {
    CHECK(aut_order(BlockDesign{4, {{0, 1}, {2, 3}}}) == brute_design_aut({4, {{0, 1}, {2, 3}}}));
    CHECK(aut_order(multiple(fano(), 2)) == 168ull * 128);
    BlockDesign pairs = ag_design(2, 1, 2).design; // all six pairs on four points
    CHECK(aut_order(pairs) == brute_design_aut(pairs));
    CHECK(aut_order(pairs) == 24);
    BlockDesign path{3, {{0, 1}, {1, 2}}};
    CHECK(aut_order(path) == brute_design_aut(path));
}

TEST_CASE("the unique (3x4, 6) unordered array has 24 automorphisms") {
    CHECK(brute_uta_aut(uta_3x4()) == 24);
    CHECK(aut_order(uta_3x4()) == 24);
}

TEST_CASE("triple array autotopism groups") {
    SUBCASE("published 4x9 array has autotopism order 3") {
        CHECK(aut_order(grid_4x9()) == 3);
    }
    SUBCASE("cyclic latin square of order 3: brute force over all isotopisms") {
        TripleArray latin{3, 3, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}};
        unsigned long long brute = 0;
        Perm pr(3), pc(3), ps(3);
        std::iota(pr.begin(), pr.end(), 0);
        do {
            std::iota(pc.begin(), pc.end(), 0);
            do {
                std::iota(ps.begin(), ps.end(), 0);
                do {
                    bool ok = true;
                    for (int i = 0; i < 3 && ok; ++i)
                        for (int j = 0; j < 3 && ok; ++j)
                            ok = latin.at(pr[i], pc[j]) == ps[latin.at(i, j)];
                    brute += ok;
                } while (std::next_permutation(ps.begin(), ps.end()));
            } while (std::next_permutation(pc.begin(), pc.end()));
        } while (std::next_permutation(pr.begin(), pr.end()));
        CHECK(aut_order(latin) == brute);
    }
}

TEST_CASE("canonical keys are invariant under relabeling") {
    std::mt19937 rng(20250808);
    SUBCASE("designs") {
        std::string key = canonical_key(fano());
        for (int trial = 0; trial < 100; ++trial) {
            Perm p(7);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            CHECK(canonical_key(relabel(fano(), p)) == key);
        }
    }
    SUBCASE("triple arrays under row/column/symbol relabeling") {
        TripleArray t = grid_4x9();
        std::string key = canonical_key(t);
        for (int trial = 0; trial < 100; ++trial) {
            Perm pr(4), pc(9), ps(12);
            std::iota(pr.begin(), pr.end(), 0);
            std::iota(pc.begin(), pc.end(), 0);
            std::iota(ps.begin(), ps.end(), 0);
            std::shuffle(pr.begin(), pr.end(), rng);
            std::shuffle(pc.begin(), pc.end(), rng);
            std::shuffle(ps.begin(), ps.end(), rng);
            TripleArray t2 = t;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 9; ++j) t2.at(pr[i], pc[j]) = ps[t.at(i, j)];
            CHECK(canonical_key(t2) == key);
            CHECK(are_isomorphic(t, t2));
        }
    }
    SUBCASE("a different design has a different key") {
        BlockDesign d = fano();
        d.blocks[6] = {2, 4, 6};
        CHECK(canonical_key(d) != canonical_key(fano()));
    }
}

TEST_CASE("graph-level canonical keys agree with object keys on partitions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        // random colored graph on <= 7 vertices
        int n = 3 + static_cast<int>(rng() % 5);
        ColoredGraph g;
        g.n = n;
        g.color.resize(n);
        g.adj.assign(n, {});
        for (int v = 0; v < n; ++v) g.color[v] = static_cast<int>(rng() % 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        GraphCanon base = canonicalize(g);

        // brute-force automorphism count
        Perm p(n);
        std::iota(p.begin(), p.end(), 0);
        unsigned long long brute = 0;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[u]) adj[u][v] = 1;
        do {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) ok = g.color[p[v]] == g.color[v];
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v) ok = adj[u][v] == adj[p[u]][p[v]];
            brute += ok;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(base.aut_order == brute);

        // key invariance under a random color-preserving relabeling
        std::vector<int> by_color[2];
        for (int v = 0; v < n; ++v) by_color[g.color[v]].push_back(v);
        Perm relab(n);
        for (auto& cls : by_color) {
            auto shuffled = cls;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (size_t i = 0; i < cls.size(); ++i) relab[cls[i]] = shuffled[i];
        }
        ColoredGraph g2;
        g2.n = n;
        g2.color.resize(n);
        g2.adj.assign(n, {});
        for (int v = 0; v < n; ++v) g2.color[relab[v]] = g.color[v];
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[u])
                if (u < v) g2.add_edge(relab[u], relab[v]);
        CHECK(canonicalize(g2).key == base.key);
    }
}

TEST_CASE("resolution automorphisms restrict to design automorphisms") {
    GeometryDesign g = ag_design(2, 1, 3);
    Resolution res = hyperplane_resolution(g);
    CanonicalForm rf = canonical_form(res);
    unsigned long long da = aut_order(g.design);
    CHECK(da % rf.aut_order == 0);
    // AG(2,3): every design automorphism preserves parallelism
    CHECK(rf.aut_order == da);
    CHECK(rf.aut_order == 432); // |AGL(2,3)|

    // every generator, restricted to point vertices, fixes the block design
    std::string dkey = canonical_key(g.design);
    for (const Perm& gen : rf.generators) {
        BlockDesign mapped;
        mapped.v = g.design.v;
        for (const auto& blk : g.design.blocks) {
            std::vector<int> nb;
            for (int x : blk) nb.push_back(gen[x]);
            std::sort(nb.begin(), nb.end());
            mapped.blocks.push_back(std::move(nb));
        }
        CHECK(canonical_key(mapped) == dkey);
    }
}

TEST_CASE("aut(T) divides aut(U_T)") {
    TripleArray t = grid_4x9();
    CHECK(aut_order(underlying(t)) % aut_order(t) == 0);
    CHECK(aut_order(underlying(t)) == 432);
}
