#include "doctest.h"

#include <random>

#include "knotpoly/braid.hpp"
#include "knotpoly/gauss.hpp"
#include "knotpoly/oracle.hpp"
#include "knotpoly/pd.hpp"
#include "knotpoly/skein.hpp"

using namespace knotpoly;

TEST_CASE("gauss parsing and emission") {
    const Diagram trefoil = parse_gauss("U1+ O2+ U3+ O1+ U2+ O3+");
    CHECK(trefoil.crossing_count() == 3);
    CHECK(trefoil.component_count() == 1);
    for (const auto& [id, s] : trefoil.signs) {
        (void)id;
        CHECK(s == 1);
    }
    CHECK(emit_gauss(trefoil) == "U1+ O2+ U3+ O1+ U2+ O3+");

    const Diagram kink = parse_gauss("O1+ U1+");
    CHECK(kink.crossing_count() == 1);
    CHECK(kink.component_count() == 1);

    SUBCASE("round trip is the identity on canonical text") {
        std::mt19937_64 rng(404);
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<int> wd(2, 4), ld(1, 9);
            const int w = wd(rng);
            const Diagram d = braid_closure(random_braid_word(w, ld(rng) + w, rng()), w);
            const std::string text = emit_gauss(d);
            CHECK(emit_gauss(parse_gauss(text)) == text);
        }
    }

    SUBCASE("malformed inputs") {
        CHECK_THROWS_AS(parse_gauss("O1+ U2+"), parse_error);        // labels appear once
        CHECK_THROWS_AS(parse_gauss("O1+ O1+"), parse_error);        // same role twice
        CHECK_THROWS_AS(parse_gauss("O1+ U1-"), parse_error);        // inconsistent signs
        CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+ U1+"), parse_error);
        CHECK_THROWS_AS(parse_gauss("Q1+ U1+"), parse_error);
        CHECK_THROWS_AS(parse_gauss("O1* U1+"), parse_error);
    }

    SUBCASE("zero-passage components") {
        const Diagram d = parse_gauss("* ; O1+ U1+ ; *");
        CHECK(d.component_count() == 3);
        CHECK(d.crossing_count() == 1);
        CHECK(emit_gauss(d) == "* ; O1+ U1+ ; *");
    }
}

TEST_CASE("braid text format") {
    const BraidWord b = parse_braid("3; 1 -2 1");
    CHECK(b.width == 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1});
    CHECK(emit_braid(b) == "3; 1 -2 1");

    const BraidWord empty = parse_braid("3;");
    CHECK(empty.letters.empty());
    CHECK(braid_closure(empty.letters, empty.width).component_count() == 3);

    CHECK_THROWS_AS(parse_braid("1 2 3"), parse_error);    // missing width separator
    CHECK_THROWS_AS(parse_braid("2; 2"), parse_error);     // letter out of range
    CHECK_THROWS_AS(parse_braid("2; 0"), parse_error);
    CHECK_THROWS_AS(parse_braid("x; 1"), parse_error);
}

TEST_CASE("pd parsing") {
    SUBCASE("standard trefoil code is a relabeled gauss trefoil") {
        const Diagram pd = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        CHECK(pd.component_count() == 1);
        CHECK(pd.crossing_count() == 3);
        for (const auto& [id, s] : pd.signs) {
            (void)id;
            CHECK(s == 1);
        }
        CHECK(canonical_key(pd) == canonical_key(parse_gauss("U1+ O2+ U3+ O1+ U2+ O3+")));
    }

    SUBCASE("single kink") {
        const Diagram pd = parse_pd("X[1,2,2,1]");
        CHECK(pd.component_count() == 1);
        CHECK(pd.crossing_count() == 1);
    }

    SUBCASE("figure-eight table code matches its braid closure") {
        const Diagram pd = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
        const Diagram braid = braid_closure({1, -2, 1, -2}, 3);
        CHECK(pd.component_count() == 1);
        CHECK(pd.crossing_count() == 4);
        CHECK(homflypt_oracle(pd) == homflypt_oracle(braid));
        CHECK(kauffman_oracle(pd) == kauffman_oracle(braid));
    }

    SUBCASE("malformed inputs") {
        CHECK_THROWS_AS(parse_pd("X[1,4,2,5]"), parse_error);  // labels 3..6 missing
        CHECK_THROWS_AS(parse_pd(""), parse_error);
        CHECK_THROWS_AS(parse_pd("X[1,2,3]"), parse_error);
        CHECK_THROWS_AS(parse_pd("Y[1,2,2,1]"), parse_error);
    }

    SUBCASE("round trip through gauss is stable") {
        std::mt19937_64 rng(405);
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<int> wd(2, 4), ld(2, 9);
            const int w = wd(rng);
            const Diagram d = braid_closure(random_braid_word(w, ld(rng) + w, rng()), w);
            bool has_empty = false;
            bool all_anchored = true;  // orientation of a fully-over circle is
                                       // not representable in PD slot data
            for (const auto& comp : d.components) {
                has_empty |= comp.empty();
                bool under = false;
                for (const auto& p : comp) under |= p.role == Role::Under;
                all_anchored &= under;
            }
            if (has_empty) continue;
            const Diagram back = parse_pd(emit_pd(d));
            if (all_anchored) CHECK(canonical_key(back) == canonical_key(d));
            CHECK(canonical_key(parse_pd(emit_pd(back))) == canonical_key(back));
            const std::string text = emit_gauss(back);
            CHECK(emit_gauss(parse_gauss(text)) == text);
        }
    }
}
