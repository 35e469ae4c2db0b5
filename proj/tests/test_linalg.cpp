#include "doctest.h"

#include "dickson/linalg.hpp"

using namespace dickson;

namespace {

MatFp make(size_t r, size_t c, std::initializer_list<uint32_t> vals) {
    MatFp m(r, c);
    size_t k = 0;
    for (uint32_t v : vals)
        m.a[k++] = v;
    return m;
}

}  // namespace

TEST_CASE("rank over small fields") {
    PrimeField f2(2);
    CHECK(rank_mod_p(f2, make(2, 2, {1, 0, 0, 1})) == 2);
    CHECK(rank_mod_p(f2, make(2, 2, {1, 1, 1, 1})) == 1);
    CHECK(rank_mod_p(f2, make(2, 2, {0, 0, 0, 0})) == 0);

    PrimeField f5(5);
    // second row = 2 * first row mod 5
    CHECK(rank_mod_p(f5, make(2, 3, {1, 2, 3, 2, 4, 1})) == 1);
    CHECK(rank_mod_p(f5, make(3, 2, {1, 0, 0, 1, 4, 4})) == 2);
}

TEST_CASE("solve consistent systems") {
    PrimeField f5(5);
    auto out = solve_mod_p(f5, make(2, 2, {1, 1, 1, 2}), {3, 4});
    REQUIRE(out.consistent);
    CHECK(out.x == std::vector<uint32_t>{2, 1});

    // underdetermined: free variable pinned to zero
    auto under = solve_mod_p(f5, make(1, 2, {1, 1}), {3});
    REQUIRE(under.consistent);
    CHECK(f5.add(under.x[0], under.x[1]) == 3);
    CHECK(under.x[1] == 0);
}

TEST_CASE("solve detects inconsistency") {
    PrimeField f3(3);
    auto out = solve_mod_p(f3, make(2, 1, {1, 2}), {1, 1});
    CHECK_FALSE(out.consistent);

    auto zero_row = solve_mod_p(f3, make(2, 2, {1, 1, 2, 2}), {1, 1});
    CHECK_FALSE(zero_row.consistent);
}

TEST_CASE("solve validates shapes") {
    PrimeField f3(3);
    CHECK_THROWS_AS(solve_mod_p(f3, MatFp(2, 2), {1}), std::invalid_argument);
}
