#include "doctest.h"

#include <set>

#include "ta/affine.hpp"
#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/ordering.hpp"

using namespace ta;

TEST_CASE("derangement counts") {
    CHECK(derangements(3).size() == 2);
    CHECK(derangements(4).size() == 9);
    CHECK(derangements(5).size() == 44);
    CHECK(derangements(6).size() == 265);
}

TEST_CASE("collapse_params forces the affine shape") {
    CHECK(collapse_params(3, 4, 6) == std::pair<long long, long long>{4, 6});
    CHECK(collapse_params(4, 9, 12) == std::pair<long long, long long>{9, 12});
    CHECK(collapse_params(5, 16, 20) == std::pair<long long, long long>{16, 20});
    CHECK(params_for(3, 4, 6).lambda_cc == Rational(1));
    CHECK_THROWS(collapse_params(7, 8, 14)); // e = 4, r != e+1
}

TEST_CASE("affine context") {
    AffinePlaneContext ctx = affine_context(3);
    CHECK(ctx.q == 3);
    CHECK(ctx.classes.size() == 4);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j < 9; ++j) {
            int l = ctx.line_of[i][j];
            REQUIRE(l >= 0);
            CHECK(ctx.class_of[l] == i);
        }
    CHECK_THROWS(affine_context(BlockDesign{4, {{0, 1}, {2, 3}}}));
}

TEST_CASE("the affine UTA is the unique one and is resolvable") {
    AffinePlaneContext ctx = affine_context(3);
    UnorderedTripleArray u = uta_from_affine_plane(ctx);
    CHECK(verify_uta(u));
    CHECK(u.r() == 4);
    CHECK(u.c() == 9);
    CHECK(u.v == 12);
    ResolutionWitness w = uta_is_resolvable_affine(u);
    CHECK(w.groups.size() == 4);
    for (const auto& g : w.groups) CHECK(g.size() == 3);
    // agrees with the generic detector
    CHECK(detect_resolution(u).has_value());
    // each group misses exactly its recorded row
    for (size_t g = 0; g < w.groups.size(); ++g)
        for (int a : w.groups[g])
            for (int i = 0; i < u.r(); ++i) {
                bool in_row = std::binary_search(u.row_sets[i].begin(), u.row_sets[i].end(), a);
                CHECK(in_row == (i != w.missing_row[g]));
            }
}

TEST_CASE("q = 2: no solution, explained by the two derangements of S3") {
    AffinePlaneContext ctx = affine_context(2);
    CHECK(!solve_derangements(ctx).has_value());
    CHECK(count_derangement_solutions(ctx) == 0);
    // 4 points would need pairwise distinct derangements, but only 2 exist
    CHECK(derangements(3).size() == 2);
    CHECK(ctx.plane.v == 4);
}

TEST_CASE("q = 3: solvable, using all nine derangements of S4") {
    AffinePlaneContext ctx = affine_context(3);
    auto d = solve_derangements(ctx);
    REQUIRE(d.has_value());
    CHECK(check_derangement_assignment(ctx, *d));
    std::set<std::vector<int>> used(d->sigma.begin(), d->sigma.end());
    CHECK(used.size() == 9); // all points hold pairwise distinct derangements

    TripleArray t = derangements_to_ta(ctx, *d);
    CHECK(verify_ta(t));
    CHECK(canonical_key(underlying(t)) == canonical_key(uta_from_affine_plane(ctx)));

    SUBCASE("the assignment round-trips through the array") {
        DerangementAssignment back = ta_to_derangements(ctx, t);
        CHECK(back.sigma == d->sigma);
        CHECK(check_derangement_assignment(ctx, back));
    }
    SUBCASE("solution count equals the labeled ordering count") {
        // solutions correspond bijectively to labeled orderings of the UTA
        OrderingInstance inst = build_ordering_instance(uta_from_affine_plane(ctx));
        ExactCoverSolver solver(inst.ec);
        long long orderings = static_cast<long long>(solver.count_all().solutions);
        CHECK(count_derangement_solutions(ctx) == orderings);
    }
}

TEST_CASE("q = 4 and q = 5 admit solutions") {
    for (int q : {4, 5}) {
        CAPTURE(q);
        AffinePlaneContext ctx = affine_context(q);
        auto d = solve_derangements(ctx);
        REQUIRE(d.has_value());
        CHECK(check_derangement_assignment(ctx, *d));
        TripleArray t = derangements_to_ta(ctx, *d);
        CHECK(verify_ta(t));
    }
}

TEST_CASE("rejected assignments") {
    AffinePlaneContext ctx = affine_context(2);
    DerangementAssignment bad;
    bad.sigma.assign(4, {1, 2, 0}); // identical permutations collide on every line
    CHECK(!check_derangement_assignment(ctx, bad));
    CHECK_THROWS(derangements_to_ta(ctx, bad));
}

TEST_CASE("partiteness instance") {
    AffinePlaneContext ctx = affine_context(3);
    PartitenessInstance inst = build_partiteness_instance(ctx);
    SUBCASE("vertex and edge counts") {
        CHECK(inst.n_vertices == 40); // (q+1)q^2 + (q+1)
        CHECK(inst.edges.size() == 22); // q^2 + (q^2+q) + 1
        for (const auto& e : inst.edges) CHECK(e.size() == 4);
    }
    SUBCASE("the hypergraph is linear") {
        for (size_t a = 0; a < inst.edges.size(); ++a)
            for (size_t b = a + 1; b < inst.edges.size(); ++b) {
                int common = 0;
                for (int x : inst.edges[a])
                    for (int y : inst.edges[b]) common += x == y;
                CHECK(common <= 1);
            }
    }
    SUBCASE("solvable at q = 3, consistent with the derangement solver") {
        auto part = solve_partiteness(ctx, inst);
        REQUIRE(part.has_value());
        CHECK(check_partition(inst, *part));
    }
}

TEST_CASE("the equivalence triangle at small q") {
    for (int q : {2, 3, 4}) {
        CAPTURE(q);
        AffinePlaneContext ctx = affine_context(q);
        PartitenessInstance inst = build_partiteness_instance(ctx);
        bool derang = solve_derangements(ctx).has_value();
        bool partite = solve_partiteness(ctx, inst).has_value();
        bool ordered = order_uta(uta_from_affine_plane(ctx)).has_value();
        CHECK(derang == partite);
        CHECK(derang == ordered);
    }
}
