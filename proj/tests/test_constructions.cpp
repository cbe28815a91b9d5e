#include "doctest.h"

#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/constructions.hpp"
#include "ta/design.hpp"
#include "ta/geometry.hpp"
#include "ta/gf.hpp"

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

// The symmetric 2-(q, (q-1)/2, (q-3)/4) design from the nonzero squares
// of GF(q), q ≡ 3 (mod 4): blocks Q + i.
BlockDesign paley_design(int q) {
    FiniteField F(q);
    BlockDesign d;
    d.v = q;
    for (int i = 0; i < q; ++i) {
        std::vector<int> blk;
        for (int s : F.squares()) blk.push_back(F.add(s, i));
        std::sort(blk.begin(), blk.end());
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

} // namespace

TEST_CASE("agrawal on the Fano plane with sigma = 0") {
    UnorderedTripleArray u = agrawal(fano(), 0);
    CHECK(verify_uta(u));
    CHECK(u.row_sets[0] == std::vector<int>{2, 3, 4, 5}); // {3,4,5,6} in 1-based symbols
    CHECK(u.col_sets[0] == std::vector<int>{1, 2, 3});    // {2,3,4}
    CHECK(u.row_sets == uta_3x4().row_sets);
    CHECK(u.col_sets == uta_3x4().col_sets);
    CHECK(canonical_key(u) == canonical_key(uta_3x4()));

    CHECK_THROWS(agrawal(fano(), 9));
    CHECK_THROWS(agrawal(multiple(fano(), 2), 0)); // not symmetric
}

TEST_CASE("agrawal on the complement of Fano transposes the shape") {
    UnorderedTripleArray u = agrawal(complement(fano()), 0);
    CHECK(u.r() == 4);
    CHECK(u.c() == 3);
    CHECK(verify_uta(u));
    CHECK(canonical_key(transpose(u)) == canonical_key(uta_3x4()));
}

TEST_CASE("agrawal on the 2-(11,5,2) biplane gives a (5x6,10) array") {
    BlockDesign biplane = paley_design(11);
    auto p = verify_two_design(biplane);
    REQUIRE(p.has_value());
    CHECK(*p == TwoDesignParams{11, 11, 5, 5, 2});
    UnorderedTripleArray u = agrawal(biplane, 0);
    CHECK(u.r() == 5);
    CHECK(u.c() == 6);
    CHECK(u.v == 10);
    CHECK(verify_uta(u));
}

TEST_CASE("agrawal_reverse") {
    SUBCASE("the 3x4 array reverses to the Fano plane") {
        BlockDesign d = agrawal_reverse(uta_3x4());
        CHECK(is_symmetric(d));
        CHECK(canonical_key(d) == canonical_key(fano()));
    }
    SUBCASE("round trip through sigma = v") {
        UnorderedTripleArray u = agrawal(fano(), 3);
        BlockDesign d = agrawal_reverse(u);
        UnorderedTripleArray u2 = agrawal(d, d.v - 1);
        CHECK(u2.row_sets == u.row_sets);
        CHECK(u2.col_sets == u.col_sets);
    }
    SUBCASE("non-extremal input is rejected") {
        // trivial 2x2 array on 4 symbols: v = 4 != 2+2-1
        UnorderedTripleArray u;
        u.v = 4;
        u.row_sets = {{0, 1}, {2, 3}};
        u.col_sets = {{0, 2}, {1, 3}};
        REQUIRE(verify_uta(u));
        CHECK_THROWS(agrawal_reverse(u));
    }
}

TEST_CASE("the resolution construction") {
    SUBCASE("trivial 2-(3,2,1) with the matchings of K4 gives the 3x4 array") {
        BlockDesign s = trivial_symmetric_design(2);
        auto p = verify_two_design(s);
        REQUIRE(p.has_value());
        CHECK(*p == TwoDesignParams{3, 3, 2, 2, 1});
        Resolution res = hyperplane_resolution(ag_design(2, 1, 2));
        UnorderedTripleArray u = ruta(s, res, {0, 1, 2});
        CHECK(verify_uta(u));
        CHECK(canonical_key(u) == canonical_key(uta_3x4()));
        auto w = detect_resolution(u);
        REQUIRE(w.has_value());
    }
    SUBCASE("trivial 2-(4,3,2) with AG_1(2,3) gives the 4x9 array") {
        BlockDesign s = trivial_symmetric_design(3);
        Resolution res = hyperplane_resolution(ag_design(2, 1, 3));
        UnorderedTripleArray u = ruta(s, res, {0, 1, 2, 3});
        CHECK(verify_uta(u));
        CHECK(u.r() == 4);
        CHECK(u.c() == 9);
        CHECK(u.v == 12);
        auto w = detect_resolution(u);
        REQUIRE(w.has_value());
        // the intersection identities computed in the construction's proof
        ArrayParams ap = params_for(4, 9, 12);
        CHECK(ap.lambda_rrc.as_int() * ap.k.as_int() == ap.lambda_rr.as_int());
    }
    SUBCASE("groups of the witness are the parallel classes") {
        BlockDesign s = trivial_symmetric_design(2);
        Resolution res = hyperplane_resolution(ag_design(2, 1, 2));
        UnorderedTripleArray u = ruta(s, res, {2, 0, 1});
        auto w = detect_resolution(u);
        REQUIRE(w.has_value());
        // symbols x*k+y: group x = {2x, 2x+1}
        for (const auto& g : w->groups) {
            REQUIRE(g.size() == 2);
            CHECK(g[1] == g[0] + 1);
            CHECK(g[0] % 2 == 0);
        }
    }
    SUBCASE("parameter mismatches are rejected") {
        BlockDesign s = trivial_symmetric_design(3); // blocks of size 3
        Resolution res = hyperplane_resolution(ag_design(2, 1, 2));
        CHECK_THROWS(ruta(s, res, {0, 1, 2, 3}));
    }
}

TEST_CASE("family_ag") {
    struct Row {
        int q, n, r, c, v;
    };
    for (Row row : {Row{2, 2, 3, 4, 6}, Row{3, 2, 4, 9, 12}, Row{2, 3, 7, 8, 14}}) {
        CAPTURE(row.q);
        CAPTURE(row.n);
        UnorderedTripleArray u = family_ag(row.q, row.n);
        CHECK(u.r() == row.r);
        CHECK(u.c() == row.c);
        CHECK(u.v == row.v);
        CHECK(verify_uta(u));
        CHECK(detect_resolution(u).has_value());
        CHECK(is_quad(u));
    }
}

TEST_CASE("family_hadamard") {
    UnorderedTripleArray u = family_hadamard(fano()); // m = 2
    CHECK(u.r() == 7);
    CHECK(u.c() == 8);
    CHECK(u.v == 14);
    CHECK(verify_uta(u));
    CHECK(detect_resolution(u).has_value());

    UnorderedTripleArray u3 = family_hadamard(paley_design(11)); // m = 3
    CHECK(u3.r() == 11);
    CHECK(u3.c() == 12);
    CHECK(u3.v == 22);
    CHECK(verify_uta(u3));
    CHECK(detect_resolution(u3).has_value());

    CHECK_THROWS(family_hadamard(trivial_symmetric_design(3)));
}

TEST_CASE("paley triple arrays") {
    SUBCASE("q=7, a=2, b=1 is a resolvable (7x8, 14) array") {
        CHECK(paley_resolvable_conditions(7, 2, 1));
        TripleArray t = paley({7, 2, 1});
        CHECK(t.r == 7);
        CHECK(t.c == 8);
        CHECK(t.v == 14);
        CHECK(verify_ta(t));
        auto w = detect_resolution(underlying(t));
        REQUIRE(w.has_value());
        // groups pair each element with its primed copy
        for (const auto& g : w->groups) {
            REQUIRE(g.size() == 2);
            CHECK(g[1] == g[0] + 7);
        }
    }
    SUBCASE("a = 1 violates the square conditions") {
        CHECK(!paley_resolvable_conditions(7, 1, 1));
        CHECK_THROWS(paley({7, 1, 1}));
    }
    SUBCASE("q = 11 arrays are resolvable for all valid pairs") {
        int tested = 0;
        for (int a = 1; a < 11; ++a)
            for (int b = 1; b < 11; ++b) {
                if (!paley_resolvable_conditions(11, a, b)) continue;
                TripleArray t = paley({11, a, b});
                CHECK(verify_ta(t));
                CHECK(detect_resolution(underlying(t)).has_value());
                ++tested;
            }
        CHECK(tested > 0);
    }
    SUBCASE("invalid q") {
        CHECK_THROWS(paley({5, 2, 1}));  // q ≡ 1 (mod 4)
        CHECK_THROWS(paley({3, 2, 1}));  // too small
        CHECK_THROWS(paley({15, 2, 1})); // not a prime power
    }
}

TEST_CASE("the difference-set family is never resolvable") {
    // u = 1 collapses to the trivial 1x3 shape, outside the family proper
    for (long long u = 2; u <= 10; ++u) {
        ArrayParams p = params_for(2 * u * u - u, 2 * u * u + u, 4 * u * u - 1);
        CHECK(p.e == Rational(u * u));
        CHECK(!p.k.integral());
        CHECK(!p.resolvable_admissible);
    }
}
