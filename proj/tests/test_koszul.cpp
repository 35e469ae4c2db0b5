#include <doctest.h>

#include <string>
#include <vector>

#include "dickson/koszul.hpp"
#include "oracles.hpp"

using namespace dickson;

namespace {

// Monomial count of F_p[y_1..y_n, V] / (y_s^e) in total degree d: every
// y-exponent below e, the V-exponent free.
uint64_t tuan_quotient_dim(size_t n, uint64_t e, uint64_t d) {
    std::vector<uint64_t> counts(d + 1, 0);
    counts[0] = 1;
    for (size_t s = 0; s < n; ++s) {
        std::vector<uint64_t> next(d + 1, 0);
        for (uint64_t base = 0; base <= d; ++base)
            for (uint64_t a = 0; a < e && base + a <= d; ++a)
                next[base + a] += counts[base];
        counts = std::move(next);
    }
    uint64_t total = 0;
    for (uint64_t base = 0; base <= d; ++base)
        total += counts[base];  // remaining degree goes to V
    return total;
}

}  // namespace

TEST_CASE("differential squares to zero") {
    Rng rng(20240814);
    std::vector<KoszulInstance> instances;
    instances.push_back(tuan_instance(PrimeField(2), 2, 1));
    instances.push_back(tuan_instance(PrimeField(3), 2, 1));
    instances.push_back(tuan_instance(PrimeField(5), 1, 2));
    {
        PrimeField f(3);
        AbstractRing ring(f, {"u", "v"}, {1, 2});
        std::vector<Poly> c = {Poly::variable(f, 2, 0).pow(2), Poly::variable(f, 2, 1)};
        instances.emplace_back(ring, c);
    }

    int checked = 0;
    for (const auto& inst : instances) {
        for (int trial = 0; trial < 30; ++trial) {
            ChainElement x(inst.ring);
            for (int part = 0; part < 3; ++part) {
                uint32_t mask = static_cast<uint32_t>(rng.below(uint32_t{1} << inst.m()));
                x.add(mask, oracle::random_poly(rng, inst.ring.f, inst.ring.k, 4, 3));
            }
            ChainElement dd = koszul_d(inst, koszul_d(inst, x));
            CHECK(dd.is_zero());
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("differential signs follow the position count") {
    PrimeField f(3);
    AbstractRing ring(f, {"y1", "y2"}, {1, 1});
    Poly y1 = Poly::variable(f, 2, 0);
    Poly y2 = Poly::variable(f, 2, 1);
    KoszulInstance inst(ring, {y1, y2});

    ChainElement top(ring);
    top.add(0b11, Poly::one(f, 2));
    ChainElement d1 = koszul_d(inst, top);

    ChainElement expected(ring);
    expected.add(0b10, y1);
    expected.add(0b01, -y2);
    CHECK(d1 == expected);
    CHECK(koszul_d(inst, d1).is_zero());
    CHECK(d1.str() == "xi{1}(2*y2) + xi{2}(y1)");
}

TEST_CASE("chain element arithmetic") {
    PrimeField f(5);
    AbstractRing ring(f, {"u"}, {1});
    Poly u = Poly::variable(f, 1, 0);

    ChainElement a(ring);
    a.add(0, u);
    a.add(1, Poly::one(f, 1));
    ChainElement b(ring);
    b.add(0, u.scaled(4));

    CHECK((a + b).parts().size() == 1);  // the mask-0 parts cancel
    CHECK((a - a).is_zero());
    CHECK(ChainElement(ring).str() == "0");
    CHECK_THROWS_AS(a.add(0, Poly::one(PrimeField(7), 1)), std::invalid_argument);
}

TEST_CASE("hilbert oracle for quotient rings") {
    auto inst = tuan_instance(PrimeField(2), 2, 1);
    auto series = expected_quotient_hilbert(inst, 6);
    CHECK(series == std::vector<int64_t>{1, 3, 4, 4, 4, 4, 4});
    for (uint64_t d = 0; d <= 6; ++d)
        CHECK(series[d] == static_cast<int64_t>(tuan_quotient_dim(2, 2, d)));

    // a zero coefficient collapses the numerator
    PrimeField f(2);
    AbstractRing ring(f, {"u"}, {1});
    KoszulInstance degenerate(ring, {Poly::zero(f, 1)});
    CHECK(expected_quotient_hilbert(degenerate, 3) == std::vector<int64_t>{0, 0, 0, 0});
}

TEST_CASE("graded homology of a regular instance") {
    auto inst = tuan_instance(PrimeField(2), 2, 1);
    auto report = homology_dims(inst, 6);
    CHECK(report.h0_matches_expected);
    CHECK(report.h_positive_vanishes);
    for (uint64_t d = 0; d <= 6; ++d) {
        CHECK(report.h(0, d) == tuan_quotient_dim(2, 2, d));
        for (uint32_t q = 1; q <= 2; ++q)
            CHECK(report.h(q, d) == 0);
    }
    CHECK(report.instance.find("y1") != std::string::npos);

    auto cubed = tuan_instance(PrimeField(3), 1, 1);
    auto r3 = homology_dims(cubed, 4);
    CHECK(r3.h0_matches_expected);
    CHECK(r3.h_positive_vanishes);
    CHECK(r3.h(0, 0) == 1);
    CHECK(r3.h(0, 1) == 2);
    CHECK(r3.h(0, 2) == 3);
    CHECK(r3.h(0, 3) == 3);
}

TEST_CASE("non-regular instances show positive homology") {
    PrimeField f(2);
    AbstractRing ring(f, {"y1", "y2"}, {1, 1});
    Poly sq = Poly::variable(f, 2, 0).pow(2);

    // repeated coefficient: the syzygy xi_1 - xi_2 survives
    KoszulInstance repeated(ring, {sq, sq});
    auto rep = homology_dims(repeated, 4);
    CHECK(!rep.h_positive_vanishes);
    CHECK(rep.h(1, 2) == 1);

    // zero coefficient: xi_1 itself is a cycle
    KoszulInstance with_zero(ring, {Poly::zero(f, 2)});
    auto rz = homology_dims(with_zero, 2);
    CHECK(rz.h(1, 0) == 1);
    CHECK(rz.h(1, 1) == 2);
    CHECK(!rz.h_positive_vanishes);
    CHECK(!rz.h0_matches_expected);
}

TEST_CASE("jacobian determinant") {
    PrimeField f(3);
    AbstractRing ring(f, {"u", "v"}, {1, 1});
    Poly u = Poly::variable(f, 2, 0);
    Poly v = Poly::variable(f, 2, 1);

    KoszulInstance identity_like(ring, {u, v});
    CHECK(jacobian_det(identity_like) == Poly::one(f, 2));

    KoszulInstance swapped(ring, {v, u});
    CHECK(jacobian_det(swapped) == Poly::constant(f, 2, 2));

    KoszulInstance powers(ring, {u.pow(3), v});
    CHECK(jacobian_det(powers).is_zero());  // d(u^3) = 0 in characteristic 3

    KoszulInstance wide(ring, {u + v});
    CHECK(jacobian_det(wide) == Poly::one(f, 2));  // product of the two 1x1 minors
}

TEST_CASE("boundary matrix dump") {
    auto inst = tuan_instance(PrimeField(2), 1, 1);
    std::string dump = dump_boundary_matrix(inst, 1, 2);
    CHECK(dump == "1 2 3 1\n2 0 1\n");
    CHECK_THROWS_AS(dump_boundary_matrix(inst, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(dump_boundary_matrix(inst, 5, 2), std::invalid_argument);
}

TEST_CASE("instance validation") {
    PrimeField f(2);
    AbstractRing ring(f, {"u", "v"}, {1, 2});
    CHECK_THROWS_AS(AbstractRing(f, {"u"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(AbstractRing(f, {"u"}, {0}), std::invalid_argument);

    Poly mixed = Poly::variable(f, 2, 0) + Poly::variable(f, 2, 1);  // degrees 1 and 2
    CHECK_THROWS_AS(KoszulInstance(ring, {mixed}), std::invalid_argument);
    CHECK_THROWS_AS(KoszulInstance(ring, {Poly::one(PrimeField(3), 2)}), std::invalid_argument);

    KoszulInstance ok(ring, {Poly::variable(f, 2, 1)});
    CHECK(ok.c_degrees == std::vector<uint64_t>{2});
    CHECK_THROWS_AS(KoszulInstance(ring, {Poly::variable(f, 2, 1)},
                                   std::vector<uint64_t>{3}),
                    std::invalid_argument);
    KoszulInstance zero_deg(ring, {Poly::zero(f, 2)}, std::vector<uint64_t>{7});
    CHECK(zero_deg.c_degrees == std::vector<uint64_t>{7});
}

TEST_CASE("budget limits the graded slices") {
    auto inst = tuan_instance(PrimeField(2), 2, 1);
    Budget tiny{8};
    CHECK_THROWS_AS(homology_dims(inst, 6, tiny), BudgetError);
}

TEST_CASE("ratio-variable encoding") {
    PrimeField f(2);
    auto frame = DicksonFrame::build(f, 2);
    auto Q0 = frame->generator(0);
    auto Q1 = frame->generator(1);

    auto enc = encode_in_ratio_variables(Q0 * Q0 + Q0 * Q1);
    REQUIRE(enc.has_value());
    CHECK(*enc == Poly::variable(f, 2, 0).pow(2) +
                      Poly::variable(f, 2, 0) * Poly::variable(f, 2, 1));

    CHECK(!encode_in_ratio_variables(Q0 * Q0 + Q1 * Q1 * Q1).has_value());
    CHECK(encode_in_ratio_variables(frame->zero()).has_value());
    CHECK(encode_in_ratio_variables(frame->one()).has_value());
}

TEST_CASE("margolis check at small cells") {
    Budget budget{200000};

    SUBCASE("p=2 n=2 i=1: unit coefficient hides the witness in a subcomplex") {
        auto sc = SumCoefficients::extract(DicksonFrame::build(PrimeField(2), 2), 1);
        auto rep = dickson_margolis_check(sc, 4, budget);
        CHECK(rep.pose == MargolisPose::zero_coefficient);
        REQUIRE(rep.full.has_value());
        CHECK(rep.full->h_positive_vanishes);  // A = (0, 1): the unit collapses everything
        REQUIRE(rep.zero_witness.has_value());
        CHECK(rep.zero_witness->h(1, 0) == 1);
        bool flagged = false;
        for (const auto& note : rep.notes)
            if (note == "regularity fails: zero coefficient")
                flagged = true;
        CHECK(flagged);
        CHECK(rep.substitute.h0_matches_expected);
        CHECK(rep.substitute.h(0, 1) == 2);  // (1 + t)^2
        CHECK(rep.substitute_jacobian == "1");
        REQUIRE(rep.jacobian.has_value());
        CHECK(*rep.jacobian == "0");
    }

    SUBCASE("p=2 n=2 i=2: both coefficients vanish") {
        auto sc = SumCoefficients::extract(DicksonFrame::build(PrimeField(2), 2), 2);
        auto rep = dickson_margolis_check(sc, 3, budget);
        CHECK(rep.pose == MargolisPose::zero_coefficient);
        REQUIRE(rep.full.has_value());
        CHECK(rep.full->h(1, 0) == 2);
        bool on_full = false;
        for (const auto& note : rep.notes)
            if (note.find("full instance") != std::string::npos)
                on_full = true;
        CHECK(on_full);
        CHECK(!rep.zero_witness.has_value());
    }

    SUBCASE("p=3 n=1 i=1: the substitute instance shows the mechanism") {
        auto sc = SumCoefficients::extract(DicksonFrame::build(PrimeField(3), 1), 1);
        auto rep = dickson_margolis_check(sc, 3, budget);
        CHECK(rep.pose == MargolisPose::zero_coefficient);
        CHECK(rep.substitute.h0_matches_expected);
        CHECK(rep.substitute.h_positive_vanishes);
        CHECK(rep.substitute.h(0, 2) == 1);  // 1 + t + t^2
        CHECK(rep.substitute.h(0, 3) == 0);
        CHECK(rep.substitute_jacobian == "1");
    }

    SUBCASE("json shape") {
        auto sc = SumCoefficients::extract(DicksonFrame::build(PrimeField(2), 2), 1);
        auto rep = dickson_margolis_check(sc, 3, budget);
        auto j = rep.to_json();
        CHECK(j["pose"] == "zero-coefficient");
        CHECK(j.contains("full"));
        CHECK(j.contains("substitute"));
        CHECK(j["coefficients"].size() == 2);
        CHECK(j["substitute"]["h0_matches_expected"] == true);
    }
}
