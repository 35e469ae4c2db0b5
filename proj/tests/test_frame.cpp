#include "doctest.h"

#include "dickson/errors.hpp"
#include "dickson/frame.hpp"
#include "oracles.hpp"

using namespace dickson;

TEST_CASE("one variable frames") {
    PrimeField f2(2);
    auto fr2 = DicksonFrame::build(f2, 1);
    CHECK(fr2->Q(0) == Poly::variable(f2, 1, 0));
    CHECK(fr2->weight(0) == 1);

    PrimeField f3(3);
    auto fr3 = DicksonFrame::build(f3, 1);
    CHECK(fr3->Q(0) == Poly::variable(f3, 1, 0).pow(2));
    CHECK(fr3->weight(0) == 2);
}

TEST_CASE("frozen generators at p=2 n=2") {
    PrimeField f2(2);
    auto fr = DicksonFrame::build(f2, 2);
    CHECK(fr->Q(0) == Poly::parse_term_form(f2, 2, "1:2,1 + 1:1,2"));
    CHECK(fr->Q(1) == Poly::parse_term_form(f2, 2, "1:2,0 + 1:1,1 + 1:0,2"));
    CHECK(fr->weight(0) == 3);
    CHECK(fr->weight(1) == 2);
    CHECK(fr->L() == Poly::parse_term_form(f2, 2, "1:1,2 + 1:2,1"));
}

TEST_CASE("structural relations hold on a parameter grid") {
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        size_t maxn = p == 2 ? 4 : (p == 3 ? 3 : 2);
        for (size_t n = 1; n <= maxn; ++n) {
            auto fr = DicksonFrame::build(f, n);
            CHECK(fr->Q(0) == fr->L().pow(p - 1));
            for (size_t s = 0; s < n; ++s) {
                CHECK(fr->Q(s) * fr->L() == fr->L_hat(s));
                CHECK(fr->Q(s).is_homogeneous());
                CHECK(fr->Q(s).degree() == fr->weight(s));
            }
        }
    }
}

TEST_CASE("expand and express round trip") {
    Rng rng = derive_rng(21, {0}, "frame-roundtrip");
    for (uint32_t p : {2u, 3u}) {
        PrimeField f(p);
        for (size_t n : {1u, 2u, 3u}) {
            auto fr = DicksonFrame::build(f, n);
            for (int rep = 0; rep < 8; ++rep) {
                DicksonPoly g = fr->from_rep(oracle::random_poly(rng, f, n, 4, 2));
                auto back = fr->express(fr->expand(g));
                REQUIRE(back.has_value());
                CHECK(*back == g);
            }
        }
    }
}

TEST_CASE("express rejects non invariants") {
    PrimeField f2(2);
    auto fr = DicksonFrame::build(f2, 2);
    CHECK_FALSE(fr->express(Poly::variable(f2, 2, 0)).has_value());
    // right degree (2 = weight of Q1), wrong polynomial
    CHECK_FALSE(fr->express(Poly::parse_term_form(f2, 2, "1:2,0")).has_value());
    // mixed: one expressible component, one not
    Poly mixed = fr->Q(1) + Poly::variable(f2, 2, 0);
    CHECK_FALSE(fr->express(mixed).has_value());
    CHECK(fr->express(Poly::zero(f2, 2))->is_zero());
    CHECK(fr->express(Poly::one(f2, 2))->rep() == Poly::one(f2, 2));
}

TEST_CASE("express handles inhomogeneous invariants") {
    PrimeField f3(3);
    auto fr = DicksonFrame::build(f3, 2);
    Poly g = fr->Q(0) * fr->Q(1) + fr->Q(1).pow(2) + fr->Q(0).scaled(2) + Poly::one(f3, 2);
    auto d = fr->express(g);
    REQUIRE(d.has_value());
    Poly expect(f3, 2);
    expect.add_term(Monomial({1, 1}), 1);
    expect.add_term(Monomial({0, 2}), 1);
    expect.add_term(Monomial({1, 0}), 2);
    expect.add_term(Monomial({0, 0}), 1);
    CHECK(d->rep() == expect);
    CHECK(d->str() == "Q0*Q1 + Q1^2 + 2*Q0 + 1");
}

TEST_CASE("budget stops oversized frames") {
    PrimeField f2(2);
    Budget b;
    try {
        DicksonFrame::build(f2, 5, b);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.estimated() == 52360);
        CHECK(e.limit() == 10000);
    }
    Budget loose;
    loose.max_dense_terms = 100000;
    CHECK(DicksonFrame::build(f2, 5, loose)->n() == 5);
}

TEST_CASE("frames do not mix") {
    PrimeField f2(2);
    PrimeField f3(3);
    auto fr2 = DicksonFrame::build(f2, 2);
    auto fr3 = DicksonFrame::build(f3, 2);
    CHECK_THROWS_AS(fr2->generator(0) + fr3->generator(0), std::invalid_argument);
    CHECK_THROWS_AS(fr3->expand(fr2->one()), std::invalid_argument);
    // same parameters, distinct builds: values are interchangeable
    auto fr2b = DicksonFrame::build(f2, 2);
    CHECK(fr2->generator(1) == fr2b->generator(1));
}

TEST_CASE("weighted degree tracks expansion") {
    PrimeField f3(3);
    auto fr = DicksonFrame::build(f3, 2);
    DicksonPoly g = fr->generator(0).pow(2) * fr->generator(1);
    CHECK(g.weighted_degree() == 2 * 8 + 6);
    CHECK(fr->expand(g).degree() == g.weighted_degree());
}
