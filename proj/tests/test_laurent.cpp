#include "doctest.h"

#include <random>

#include "knotpoly/laurent.hpp"

using namespace knotpoly;

namespace {

LaurentPolyA random_poly_a(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-6, 6), coeffd(-9, 9);
    LaurentPolyA p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expd(rng), coeffd(rng));
    return p;
}

PolyAZ random_poly_az(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-5, 5), coeffd(-9, 9);
    PolyAZ p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expd(rng), expd(rng), coeffd(rng));
    return p;
}

}  // namespace

TEST_CASE("one-variable arithmetic basics") {
    const LaurentPolyA s = LaurentPolyA::a_plus_ainv();
    LaurentPolyA sq = s * s;
    LaurentPolyA expect;
    expect.add_term(2, 1);
    expect.add_term(0, 2);
    expect.add_term(-2, 1);
    CHECK(sq == expect);  // (a + a^-1)^2 = a^2 + 2 + a^-2

    CHECK((s * LaurentPolyA::zero()).is_zero());
    CHECK(LaurentPolyA::zero().is_zero());

    // (-a^-2)^3 applied to 1
    LaurentPolyA one = LaurentPolyA::one();
    one *= LaurentPolyA::neg_a2_pow(3);
    CHECK(one == LaurentPolyA::monomial(-6, -1));
    CHECK(LaurentPolyA::neg_a2_pow(-2) == LaurentPolyA::monomial(4, 1));
}

TEST_CASE("canonical form never stores zeros") {
    LaurentPolyA p;
    p.add_term(3, 5);
    p.add_term(3, -5);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());

    PolyAZ q;
    q.add_term(1, -1, 2);
    q.add_term(1, -1, -2);
    CHECK(q.is_zero());
}

TEST_CASE("ring laws hold on random triples") {
    std::mt19937_64 rng(20260808);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPolyA a = random_poly_a(rng), b = random_poly_a(rng), c = random_poly_a(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());

        const PolyAZ x = random_poly_az(rng), y = random_poly_az(rng), z = random_poly_az(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("coefficient extraction in the normalized series") {
    SUBCASE("unknot normalization") {
        const CoeffVector v = extract_coefficients(PolyAZ::one(), 1, InvariantMode::Homflypt, 2);
        CHECK(v.entries.size() == 3);
        CHECK(v.at(0) == LaurentPolyA::one());
        CHECK(v.at(1).is_zero());
        CHECK(v.at(2).is_zero());
    }

    SUBCASE("positive Hopf link vector") {
        // a^-1 z - (a^-1 + a^-3) z^-1, two components
        PolyAZ p;
        p.add_term(-1, 1, 1);
        p.add_term(-1, -1, -1);
        p.add_term(-3, -1, -1);
        const CoeffVector v = extract_coefficients(p, 2, InvariantMode::Homflypt, 1);
        LaurentPolyA p0;
        p0.add_term(-1, -1);
        p0.add_term(-3, -1);
        CHECK(v.at(0) == p0);
        CHECK(v.at(1) == LaurentPolyA::monomial(-1, 1));
    }

    SUBCASE("right trefoil vector") {
        // a^-2 z^2 - 2 a^-2 - a^-4, one component
        PolyAZ p;
        p.add_term(-2, 2, 1);
        p.add_term(-2, 0, -2);
        p.add_term(-4, 0, -1);
        const CoeffVector v = extract_coefficients(p, 1, InvariantMode::Homflypt, 1);
        LaurentPolyA p0;
        p0.add_term(-2, -2);
        p0.add_term(-4, -1);
        CHECK(v.at(0) == p0);
        CHECK(v.at(1) == LaurentPolyA::monomial(-2, 1));
    }

    SUBCASE("malformed invariants are rejected") {
        PolyAZ odd = PolyAZ::monomial(0, 1, 1);  // z after z^0 scaling: odd power
        CHECK_THROWS_AS(extract_coefficients(odd, 1, InvariantMode::Homflypt, 1), invariant_error);
        PolyAZ neg = PolyAZ::monomial(0, -2, 1);
        CHECK_THROWS_AS(extract_coefficients(neg, 2, InvariantMode::Homflypt, 1), invariant_error);
        CHECK_THROWS_AS(extract_coefficients(neg, 1, InvariantMode::Kauffman, 1), invariant_error);
        CHECK_THROWS_AS(extract_coefficients(PolyAZ::one(), 0, InvariantMode::Homflypt, 1),
                        usage_error);
    }
}

TEST_CASE("extraction and reassembly are inverse on valid inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> comd(1, 4), expd(-5, 5), coeffd(-9, 9), rd(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int com = comd(rng);
        const int R = rd(rng);
        // Random valid normalized series: powers z^(2r - (com-1)), r <= R.
        PolyAZ p;
        for (int r = 0; r <= R; ++r) {
            const int terms = rd(rng);
            for (int t = 0; t < terms; ++t) p.add_term(expd(rng), 2 * r - (com - 1), coeffd(rng));
        }
        const CoeffVector v = extract_coefficients(p, com, InvariantMode::Homflypt, R);
        CHECK(reassemble_coefficients(v) == p);
    }
}
