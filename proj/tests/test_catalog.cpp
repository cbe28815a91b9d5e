#include "doctest.h"

#include <set>
#include <sstream>

#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/catalog.hpp"
#include "ta/geometry.hpp"
#include "ta/ordering.hpp"

using namespace ta;

TEST_CASE("every fixture loads and passes its declared verdicts") {
    auto fixtures = list_fixtures();
    REQUIRE(!fixtures.empty());
    for (const Fixture& f : fixtures) {
        CAPTURE(f.id);
        AnyObject obj = load_fixture(f.id); // throws if the verifier fails

        auto uta_of = [&](const AnyObject& o) -> UnorderedTripleArray {
            if (std::holds_alternative<TripleArray>(o)) return underlying(std::get<TripleArray>(o));
            return std::get<UnorderedTripleArray>(o);
        };

        for (const auto& [k, val] : f.expect) {
            CAPTURE(k);
            if (k == "resolvable") {
                CHECK(detect_resolution(uta_of(obj)).has_value() == (val == "yes"));
            } else if (k == "quad") {
                CHECK(is_quad(uta_of(obj)) == (val == "yes"));
            } else if (k == "aut") {
                unsigned long long a = std::holds_alternative<TripleArray>(obj)
                                           ? aut_order(std::get<TripleArray>(obj))
                                           : aut_order(std::get<UnorderedTripleArray>(obj));
                CHECK(a == std::stoull(val));
            } else if (k == "aut_underlying") {
                CHECK(aut_order(uta_of(obj)) == std::stoull(val));
            } else if (k == "orderable") {
                CHECK(order_uta(uta_of(obj)).has_value() == (val == "yes"));
            } else if (k == "isotopic" || k == "not_isotopic") {
                TripleArray other = load_fixture_ta(val);
                bool iso = canonical_key(std::get<TripleArray>(obj)) == canonical_key(other);
                CHECK(iso == (k == "isotopic"));
            } else if (k == "same_underlying") {
                TripleArray other = load_fixture_ta(val);
                CHECK(canonical_key(uta_of(obj)) == canonical_key(underlying(other)));
            } else {
                FAIL("unknown expectation key ", k);
            }
        }
    }
}

TEST_CASE("bundled kirkman parades") {
    auto parades = load_parades();
    REQUIRE(parades.size() == 7);
    std::set<std::string> keys;
    std::set<std::string> design_keys;
    for (const auto& [label, res] : parades) {
        CAPTURE(label);
        auto p = verify_two_design(res.design);
        REQUIRE(p.has_value());
        CHECK(*p == TwoDesignParams{15, 35, 7, 3, 1});
        CHECK(verify_resolution(res));
        CHECK(res.classes.size() == 7);
        keys.insert(canonical_key(res));
        design_keys.insert(canonical_key(res.design));
    }
    CHECK(keys.size() == 7);        // pairwise non-isomorphic parades
    CHECK(design_keys.size() == 4); // from four designs

    SUBCASE("1a and 1b are the two resolutions of PG(3,2)") {
        std::string pg = canonical_key(pg_design(3, 1, 2).design);
        CHECK(canonical_key(parades[0].second.design) == pg);
        CHECK(canonical_key(parades[1].second.design) == pg);
        CHECK(canonical_key(parades[0].second) != canonical_key(parades[1].second));
    }
    SUBCASE("parade automorphism orders") {
        std::vector<unsigned long long> expect{168, 168, 24, 24, 12, 12, 21};
        for (size_t i = 0; i < parades.size(); ++i)
            CHECK(aut_order(parades[i].second) == expect[i]);
    }
    SUBCASE("moving a block between classes breaks the resolution") {
        Resolution bad = parades[0].second;
        std::swap(bad.classes[0][0], bad.classes[1][0]);
        CHECK(!verify_resolution(bad));
    }
}

TEST_CASE("bundled symmetric design lists") {
    std::vector<std::string> notes;
    SUBCASE("five 2-(15,7,3) designs") {
        auto designs =
            ingest_designs(data_path("designs/symmetric_15_7_3.txt"),
                           TwoDesignParams{15, 15, 7, 7, 3}, &notes);
        CHECK(designs.size() == 5);
        CHECK(notes.empty());
        std::set<std::string> keys;
        for (const auto& d : designs) keys.insert(canonical_key(d));
        CHECK(keys.size() == 5);
    }
    SUBCASE("three 2-(16,6,2) designs") {
        auto designs =
            ingest_designs(data_path("designs/symmetric_16_6_2.txt"),
                           TwoDesignParams{16, 16, 6, 6, 2}, &notes);
        CHECK(designs.size() == 3);
        std::set<std::string> keys;
        for (const auto& d : designs) keys.insert(canonical_key(d));
        CHECK(keys.size() == 3);
    }
    SUBCASE("corrupted records abort with diagnostics") {
        CHECK_THROWS(ingest_designs(data_path("designs/symmetric_15_7_3.txt"),
                                    TwoDesignParams{15, 15, 7, 7, 4}));
    }
}

TEST_CASE("bundled resolvable 2-(15,5,6) designs") {
    Resolution r = read_resolution_file(data_path("resolutions/resolvable_15_5_6.txt"));
    auto p = verify_two_design(r.design);
    REQUIRE(p.has_value());
    CHECK(*p == TwoDesignParams{15, 63, 21, 5, 6});
    CHECK(verify_resolution(r));
    CHECK(r.classes.size() == 21);
}
