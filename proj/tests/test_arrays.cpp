#include "doctest.h"

#include <set>
#include <tuple>
#include <sstream>

#include "ta/arrays.hpp"
#include "ta/geometry.hpp"
#include "ta/canonical.hpp"
#include "ta/io.hpp"

using namespace ta;

namespace {

// The published (4 x 9, 12) array, 1-based symbols shifted on construction.
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

// The (3 x 4, 6) unordered triple array that admits no ordering.
UnorderedTripleArray uta_3x4() {
    UnorderedTripleArray u;
    u.v = 6;
    u.row_sets = {{2, 3, 4, 5}, {0, 1, 2, 5}, {0, 1, 3, 4}};
    u.col_sets = {{1, 2, 3}, {0, 2, 4}, {0, 3, 5}, {1, 4, 5}};
    return u;
}

} // namespace

TEST_CASE("params_for derives the intersection numbers exactly") {
    SUBCASE("(3x4, 6)") {
        ArrayParams p = params_for(3, 4, 6);
        CHECK(p.e == Rational(2));
        CHECK(p.lambda_rc == Rational(2));
        CHECK(p.lambda_rr == Rational(2));
        CHECK(p.lambda_cc == Rational(1));
        CHECK(p.lambda_rrc == Rational(1));
        CHECK(p.k == Rational(2));
        CHECK(p.ta_admissible);
        CHECK(p.quad_admissible);
        CHECK(p.resolvable_admissible);
        CHECK(p.extremal());
    }
    SUBCASE("(7x15, 35)") {
        ArrayParams p = params_for(7, 15, 35);
        CHECK(p.e == Rational(3));
        CHECK(p.lambda_rr == Rational(5));
        CHECK(p.lambda_cc == Rational(1));
        CHECK(p.lambda_rrc == Rational(1));
        CHECK(p.k == Rational(5));
        CHECK(p.resolvable_admissible);
        CHECK(!p.extremal());
    }
    SUBCASE("(16x21, 56) is quad- but not resolvable-admissible") {
        ArrayParams p = params_for(16, 21, 56);
        CHECK(p.lambda_rrc == Rational(2));
        CHECK(p.k == Rational(7, 2));
        CHECK(p.quad_admissible);
        CHECK(!p.resolvable_admissible);
    }
    SUBCASE("extremal identities lambda_cc = r - e, lambda_rr = c - e") {
        for (auto [r, c] : std::vector<std::pair<long long, long long>>{
                 {3, 4}, {4, 9}, {5, 6}, {5, 16}, {6, 10}, {7, 8}, {9, 10}, {11, 12}}) {
            ArrayParams p = params_for(r, c, r + c - 1);
            REQUIRE(p.ta_admissible);
            CHECK(p.lambda_cc == Rational(r - p.e.as_int()));
            CHECK(p.lambda_rr == Rational(c - p.e.as_int()));
        }
    }
    SUBCASE("admissible parameter sets may lack arrays entirely") {
        CHECK(params_for(7, 15, 21).ta_admissible);
        CHECK(params_for(15, 28, 42).ta_admissible);
    }
}

TEST_CASE("verify_ta on the published 4x9 array") {
    TripleArray t = grid_4x9();
    CHECK(verify_ta(t));

    SUBCASE("swapping two cells in one row breaks the column conditions") {
        TripleArray bad = t;
        std::swap(bad.at(0, 0), bad.at(0, 1));
        CHECK(!verify_ta(bad));
    }
    SUBCASE("transpose is a triple array with (r, c) swapped") {
        TripleArray tr = transpose(t);
        CHECK(tr.r == 9);
        CHECK(tr.c == 4);
        CHECK(verify_ta(tr));
    }
}

TEST_CASE("underlying") {
    TripleArray t = grid_4x9();
    UnorderedTripleArray u = underlying(t);
    CHECK(verify_uta(u));
    // symbol 1 (0-based 0) sits in rows 2,3,4 and columns 3,6,7 of the figure
    CHECK(u.row_sets[1][0] == 0);
    CHECK(u.row_sets[2][0] == 0);
    CHECK(u.row_sets[3][0] == 0);
    std::set<int> cols_with_0;
    for (int j = 0; j < 9; ++j)
        for (int a : u.col_sets[j])
            if (a == 0) cols_with_0.insert(j);
    CHECK(cols_with_0 == std::set<int>{2, 5, 6});

    TripleArray one{1, 1, 1, {0}};
    UnorderedTripleArray u1 = underlying(one);
    CHECK(u1.row_sets == std::vector<std::vector<int>>{{0}});
    CHECK(u1.col_sets == std::vector<std::vector<int>>{{0}});
    CHECK(verify_uta(u1));

    TripleArray notbinary{2, 2, 2, {0, 1, 0, 1}};
    CHECK_THROWS(underlying(notbinary));
}

TEST_CASE("verify_uta on the 3x4 example") {
    UnorderedTripleArray u = uta_3x4();
    CHECK(verify_uta(u));
    UnorderedTripleArray bad = u;
    std::swap(bad.row_sets[0], bad.row_sets[1]);
    CHECK(verify_uta(bad)); // row order is immaterial
    bad = u;
    bad.row_sets[0] = {0, 3, 4, 5};
    CHECK(!verify_uta(bad));
}

TEST_CASE("component designs") {
    UnorderedTripleArray u = underlying(grid_4x9());
    auto [rd, cd] = component_designs(u);
    auto rp = verify_two_design(rd);
    REQUIRE(rp.has_value());
    CHECK(*rp == TwoDesignParams{4, 12, 9, 3, 6});
    auto cp = verify_two_design(cd);
    REQUIRE(cp.has_value());
    CHECK(*cp == TwoDesignParams{9, 12, 4, 3, 1});
    // the column design is an affine plane of order 3
    CHECK(are_isomorphic(cd, ag_design(2, 1, 3).design));
}

TEST_CASE("detect_resolution and is_quad") {
    SUBCASE("the 3x4 and 4x9 arrays are resolvable") {
        auto w1 = detect_resolution(uta_3x4());
        REQUIRE(w1.has_value());
        CHECK(w1->groups.size() == 3);
        for (const auto& g : w1->groups) CHECK(g.size() == 2);

        auto w2 = detect_resolution(underlying(grid_4x9()));
        REQUIRE(w2.has_value());
        CHECK(w2->groups.size() == 4);
        for (const auto& g : w2->groups) CHECK(g.size() == 3);
    }
    SUBCASE("resolvable implies quad") {
        CHECK(is_quad(uta_3x4()));
        CHECK(is_quad(underlying(grid_4x9())));
    }
    SUBCASE("non-resolvable parameters give no witness") {
        // (5x6, 10): lambda_rrc = 3/2, so not even quad-admissible
        ArrayParams p = params_for(5, 6, 10);
        CHECK(!p.quad_admissible);
    }
}

TEST_CASE("uta and ta text formats round-trip") {
    UnorderedTripleArray u = uta_3x4();
    std::string text = write_uta(u);
    std::istringstream in(text);
    UnorderedTripleArray back = read_uta(in);
    CHECK(back.row_sets == u.row_sets);
    CHECK(back.col_sets == u.col_sets);
    CHECK(write_uta(back) == text);

    TripleArray t = grid_4x9();
    std::string tt = write_ta(t);
    std::istringstream tin(tt);
    TripleArray tback = read_ta(tin);
    CHECK(tback.cells == t.cells);
    CHECK(write_ta(tback) == tt);
}

TEST_CASE("quad-orientation scans") {
    SUBCASE("brute-force oracle agreement for small e") {
        // direct triple loop over the divisibility conditions
        std::set<std::tuple<long long, long long, long long>> brute;
        for (long long e = 2; e <= 8; ++e)
            for (long long r = e + 1; r <= e * (e - 1) + 1; ++r)
                for (long long c = e + 1; c <= r * (e - 1) + 1; ++c) {
                    if ((r * c) % e != 0) continue;
                    if ((c * (e - 1)) % (r - 1) != 0) continue;
                    if ((r * (e - 1)) % (c - 1) != 0) continue;
                    if ((e * (e - 1)) % (r - 1) != 0) continue;
                    brute.insert({r, c, r * c / e});
                }
        std::set<std::tuple<long long, long long, long long>> fast;
        for (const auto& p : scan_quad_admissible(8)) fast.insert({p.r, p.c, p.v});
        CHECK(fast == brute);
    }
    SUBCASE("one-orientation scan emits (7x8, 14)") {
        bool found = false;
        for (const auto& p : scan_quad_admissible(10))
            if (p.r == 7 && p.c == 8 && p.v == 14) found = true;
        CHECK(found);
    }
    SUBCASE("no parameter set is quad-admissible in both orientations") {
        CHECK(scan_quad_transpose(1).empty());
        CHECK(scan_quad_transpose(100).empty());
    }
    SUBCASE("resolvable-admissible only in one orientation") {
        int checked = 0;
        for (const auto& p : scan_quad_admissible(20)) {
            if (!p.resolvable_admissible) continue;
            ArrayParams q = params_for(p.c, p.r, p.v);
            CHECK(!q.resolvable_admissible);
            ++checked;
        }
        CHECK(checked > 10);
    }
}
