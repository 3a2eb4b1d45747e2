#include "doctest.h"

#include <random>

#include "knotpoly/braid.hpp"
#include "knotpoly/gauss.hpp"
#include "knotpoly/oracle.hpp"
#include "knotpoly/skein.hpp"

using namespace knotpoly;

namespace {

const char* kTrefoil = "U1+ O2+ U3+ O1+ U2+ O3+";

LaurentPolyA trefoil_p0() {
    LaurentPolyA p;
    p.add_term(-2, -2);
    p.add_term(-4, -1);
    return p;
}

CoeffVector oracle_vector(const Diagram& d, int R) {
    return extract_coefficients(homflypt_oracle(d), d.component_count(), InvariantMode::Homflypt, R);
}

Diagram random_closure(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> wd(2, 4);
    const int w = wd(rng);
    std::uniform_int_distribution<int> ld(1, max_n);
    return braid_closure(random_braid_word(w, ld(rng), rng()), w);
}

}  // namespace

TEST_CASE("canonical keys") {
    const Diagram trefoil = parse_gauss(kTrefoil);
    for (int s = 1; s < 6; ++s)
        CHECK(canonical_key(rotate_basepoint(trefoil, s)) == canonical_key(trefoil));

    // Crossing relabeling does not matter.
    const Diagram relabeled = parse_gauss("U7+ O2+ U5+ O7+ U2+ O5+");
    CHECK(canonical_key(relabeled) == canonical_key(trefoil));

    CHECK(canonical_key(trefoil) != canonical_key(trivial_link(1)));
    CHECK(canonical_key(trefoil) != canonical_key(mirror(trefoil)));

    // Component permutation does not matter.
    Diagram two = braid_closure({1, 1}, 2);
    Diagram swapped = two;
    std::swap(swapped.components[0], swapped.components[1]);
    CHECK(canonical_key(swapped) == canonical_key(two));
    CHECK(canonical_key(trivial_link(3)) == canonical_key(trivial_link(3)));
    CHECK(canonical_key(trivial_link(3)) != canonical_key(trivial_link(2)));
}

TEST_CASE("split union coefficients") {
    CoeffVector unknot;
    unknot.mode = InvariantMode::Homflypt;
    unknot.com = 1;
    unknot.entries = {LaurentPolyA::one(), LaurentPolyA::zero()};

    const CoeffVector two = split_union_coeffs({unknot, unknot}, 1);
    CHECK(two.at(0) == LaurentPolyA::a_plus_ainv());
    CHECK(two.at(1).is_zero());

    CoeffVector trefoil;
    trefoil.mode = InvariantMode::Homflypt;
    trefoil.com = 1;
    trefoil.entries = {trefoil_p0(), LaurentPolyA::monomial(-2, 1)};
    const CoeffVector mix = split_union_coeffs({trefoil, unknot}, 1);
    CHECK(mix.at(1) == LaurentPolyA::a_plus_ainv() * LaurentPolyA::monomial(-2, 1));

    CHECK_THROWS_AS(split_union_coeffs({}, 1), usage_error);
}

TEST_CASE("unlayering the positive hopf link") {
    const Diagram hopf = braid_closure({1, 1}, 2);
    const LayerPlan plan = layer_plan(hopf);
    REQUIRE(plan.switch_crossings.size() == 1);  // one crossing has the later component on top

    const UnlayerChain chain = unlayer_chain(hopf, plan);
    CHECK(chain.final_factor == LaurentPolyA::monomial(-2, -1));  // -a^-2
    REQUIRE(chain.corrections.size() == 1);
    CHECK(chain.corrections[0].factor == LaurentPolyA::monomial(-1, 1));  // a^-eps
    CHECK(chain.corrections[0].diagram.component_count() == 1);
    CHECK(chain.corrections[0].diagram.crossing_count() == 1);  // kink unknot

    // Layered result has the first component entirely on top.
    const auto& layered = chain.layered;
    for (const auto& [id, s] : layered.signs) {
        (void)s;
        auto site = layered.locate(id);
        if (site.over_comp != site.under_comp) CHECK(site.over_comp == 0);
    }

    // r = 0: single switch, continuation factor only.
    const CoeffVector v = p_coeffs(hopf, 1);
    LaurentPolyA p0;
    p0.add_term(-1, -1);
    p0.add_term(-3, -1);
    CHECK(v.at(0) == p0);  // -a^-2 (a + a^-1)
    CHECK(v.at(1) == LaurentPolyA::monomial(-1, 1));
}

TEST_CASE("already layered diagrams go straight to the split union") {
    const Diagram hopf = braid_closure({1, 1}, 2);
    const Diagram layered = switch_crossing(hopf, layer_plan(hopf).switch_crossings[0]);
    CHECK(layer_plan(layered).switch_crossings.empty());
    const CoeffVector v = p_coeffs(layered, 1);
    CHECK(v.at(0) == LaurentPolyA::a_plus_ainv());
    CHECK(v.at(1).is_zero());
}

TEST_CASE("p_coeffs on pinned inputs") {
    const CoeffVector t3 = p_coeffs(trivial_link(3), 2);
    CHECK(t3.at(0) == LaurentPolyA::a_plus_ainv() * LaurentPolyA::a_plus_ainv());
    CHECK(t3.at(1).is_zero());
    CHECK(t3.at(2).is_zero());

    const CoeffVector trefoil = p_coeffs(parse_gauss(kTrefoil), 1);
    CHECK(trefoil.at(0) == trefoil_p0());
    CHECK(trefoil.at(1) == LaurentPolyA::monomial(-2, 1));

    for (int n = 1; n <= 6; ++n) {
        const LaurentPolyA expect = LaurentPolyA::a_plus_ainv().pow(static_cast<unsigned>(n - 1));
        CHECK(p_coeffs(trivial_link(n), 0).at(0) == expect);
    }
}

TEST_CASE("p_coeffs equals the oracle extraction on a random corpus") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 25) {
        const Diagram d = random_closure(rng, 8);
        const PolyAZ p = homflypt_oracle(d);
        const int R =
            static_cast<int>(p.max_z_degree() + d.component_count() - 1) / 2;
        const CoeffVector expect =
            extract_coefficients(p, d.component_count(), InvariantMode::Homflypt, std::max(R, 0));
        const CoeffVector got = p_coeffs(d, std::max(R, 0));
        CHECK(got.entries == expect.entries);
        ++done;
    }
}

TEST_CASE("formula for the first coefficient of two-component links") {
    std::mt19937_64 rng(616);
    int done = 0;
    while (done < 15) {
        const Diagram d = random_closure(rng, 8);
        if (d.component_count() != 2) continue;
        const LaurentPolyA lhs = p_coeffs(d, 0).at(0);
        const int lk = writhe_and_linking(d).linking;
        const LaurentPolyA rhs = LaurentPolyA::neg_a2_pow(lk) * LaurentPolyA::a_plus_ainv() *
                                 p0_knot(component_extract(d, 0)) *
                                 p0_knot(component_extract(d, 1));
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("switch product equals the linking factor") {
    std::mt19937_64 rng(818);
    int done = 0;
    while (done < 20) {
        const Diagram d = random_closure(rng, 8);
        if (d.component_count() < 2) continue;
        const UnlayerChain chain = unlayer_chain(d, layer_plan(d));
        const int lk = writhe_and_linking(d).linking;
        CHECK(chain.final_factor == LaurentPolyA::neg_a2_pow(lk));
        ++done;
    }
}

TEST_CASE("component order does not change the result") {
    std::mt19937_64 rng(919);
    int done = 0;
    while (done < 8) {
        const Diagram d = random_closure(rng, 7);
        if (d.component_count() < 2) continue;
        ReduceOptions reversed;
        reversed.reverse_component_order = true;
        CHECK(p_coeffs(d, 1).entries == p_coeffs(d, 1, reversed).entries);
        ++done;
    }
}

TEST_CASE("memo cache is transparent") {
    std::mt19937_64 rng(1020);
    for (int trial = 0; trial < 8; ++trial) {
        const Diagram d = random_closure(rng, 7);
        ReduceOptions no_cache;
        no_cache.use_cache = false;
        CHECK(p_coeffs(d, 1).entries == p_coeffs(d, 1, no_cache).entries);
    }
}

TEST_CASE("markov moves preserve the coefficients") {
    std::mt19937_64 rng(2121);
    int done = 0;
    while (done < 10) {
        std::uniform_int_distribution<int> wd(2, 3), ld(1, 6);
        const int w = wd(rng);
        const auto word = random_braid_word(w, ld(rng), rng());
        const CoeffVector reference = p_coeffs(braid_closure(word, w), 1);

        // Conjugation: g w g^-1.
        std::uniform_int_distribution<int> gd(1, w - 1);
        const int g = gd(rng) * (rng() % 2 ? 1 : -1);
        std::vector<int> conj{g};
        conj.insert(conj.end(), word.begin(), word.end());
        conj.push_back(-g);
        CHECK(p_coeffs(braid_closure(conj, w), 1).entries == reference.entries);

        // Stabilization: append +-w on width w+1.
        std::vector<int> stab = word;
        stab.push_back(rng() % 2 ? w : -w);
        CHECK(p_coeffs(braid_closure(stab, w + 1), 1).entries == reference.entries);
        ++done;
    }
}

TEST_CASE("fast first kauffman coefficient") {
    CHECK(f0_fast(trivial_link(1)) == LaurentPolyA::one());
    CHECK(f0_fast(parse_gauss(kTrefoil)) == trefoil_p0());
    CHECK(f0_fast(trivial_link(2)) == LaurentPolyA::a_plus_ainv());

    std::mt19937_64 rng(2222);
    for (int trial = 0; trial < 8; ++trial) {
        const Diagram d = random_closure(rng, 6);
        const CoeffVector kf = extract_coefficients(kauffman_oracle(d), d.component_count(),
                                                    InvariantMode::Kauffman, 0);
        CHECK(f0_fast(d) == kf.at(0));
    }
}
