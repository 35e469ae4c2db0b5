#include <doctest.h>

#include "dickson/qexpr.hpp"

using namespace dickson;

TEST_CASE("generator expressions evaluate") {
    PrimeField f(3);
    auto frame = DicksonFrame::build(f, 2);
    auto Q0 = frame->generator(0);
    auto Q1 = frame->generator(1);

    CHECK(parse_q_expression(frame, "Q0^2*Q1 + 2*Q1^3 + 1") ==
          Q0 * Q0 * Q1 + (Q1 * Q1 * Q1).scaled(2) + frame->one());
    CHECK(parse_q_expression(frame, "(Q0+1)*(Q0+2)") ==
          Q0 * Q0 + Q0.scaled(3) + frame->constant(2));
    CHECK(parse_q_expression(frame, "-Q1^2") == -(Q1 * Q1));
    CHECK(parse_q_expression(frame, "2-3") == frame->constant(f.reduce_signed(-1)));
    CHECK(parse_q_expression(frame, "  Q0 * Q1\t+ Q0 ") == Q0 * Q1 + Q0);
    CHECK(parse_q_expression(frame, "Q0^0") == frame->one());
    CHECK(parse_q_expression(frame, "0") == frame->zero());
    CHECK(parse_q_expression(frame, "--Q0") == Q0);
}

TEST_CASE("printed form reparses") {
    PrimeField f(5);
    auto frame = DicksonFrame::build(f, 2);
    auto Q0 = frame->generator(0);
    auto Q1 = frame->generator(1);
    DicksonPoly g = (Q0 + Q1.scaled(2)).pow(3) + Q0.scaled(4) + frame->constant(3);
    CHECK(parse_q_expression(frame, g.str()) == g);

    CHECK(parse_q_expression(frame, frame->zero().str()) == frame->zero());
    CHECK(parse_q_expression(frame, frame->constant(4).str()) == frame->constant(4));
}

TEST_CASE("rejections carry the offset") {
    PrimeField f(2);
    auto frame = DicksonFrame::build(f, 2);

    try {
        parse_q_expression(frame, "Q0^3 +");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
        CHECK(std::string(e.what()) == "expected a term at offset 6");
    }

    try {
        parse_q_expression(frame, "Q7");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }

    CHECK_THROWS_AS(parse_q_expression(frame, ""), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, ")"), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, "(Q0+1"), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, "Q0^"), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, "Q0^999999"), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, "Q0 Q1"), ParseError);
    CHECK_THROWS_AS(parse_q_expression(frame, "2 + x"), ParseError);
}
