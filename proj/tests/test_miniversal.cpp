#include "doctest.h"
#include "mvdef/miniversal.hpp"
#include "mvdef/verify.hpp"

using namespace mvdef;

namespace {
Exponents e3(int a, int b, int c) { return {a, b, c}; }
} // namespace

TEST_CASE("reduced comultiplication lists every nontrivial splitting once") {
    // x^2: only x (x) x
    auto d = comultiply({2, 0, 0});
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::make_pair(e3(1, 0, 0), e3(1, 0, 0)));
    // x*y: x (x) y and y (x) x
    CHECK(comultiply({1, 1, 0}).size() == 2);
    // x^2*y: (x, xy), (y, x^2), (x^2, y), (xy, x)
    CHECK(comultiply({2, 1, 0}).size() == 4);
    // generators split trivially only
    CHECK(comultiply({1, 0, 0}).empty());
    CHECK(comultiply({0, 0, 0}).empty());
}

TEST_CASE("comultiplication satisfies the coalgebra laws") {
    PolyRing R{{"x", "y", "z"}, {2, 3, 4}};
    for (int w = 0; w <= 11; ++w)
        for (const auto& m : monomials_of_weight(R, w)) {
            CHECK(coalgebra_cocommutative(m));
            CHECK(coalgebra_coassociative(m));
        }
}

TEST_CASE("explicit 2-cocycles are non-coboundary representatives") {
    GradedLieAlgebra L = l1_truncated(26);
    for (int k = 2; k <= 4; ++k) {
        Cochain rep = l1_dmu(L, k, 18);
        CHECK(rep.degree == k);
        Cochain cut = truncate_cochain(L, rep, 12);
        CHECK(apply_differential(L, cut, 12).is_zero());
        CHECK(class_nonzero(L, cut, 12));
    }
}

TEST_CASE("bracket and triple product classes do not vanish") {
    GradedLieAlgebra L = l1_truncated(30);
    Cochain b = l1_dmu(L, 3, 22), c = l1_dmu(L, 4, 22);
    CHECK(class_nonzero(L, cochain_bracket(L, b, c, 14), 14));
    CHECK(class_nonzero(L, cochain_bracket(L, c, c, 14), 14));
    CHECK(class_nonzero(L, triple_massey(L, b, 18, 14), 14));
    // [a,a] has weight 4 where H^3 vanishes
    Cochain a = l1_dmu(L, 2, 22);
    CHECK_FALSE(class_nonzero(L, cochain_bracket(L, a, a, 14), 14));
}

TEST_CASE("non-cocycles are rejected by the class test") {
    GradedLieAlgebra L = l1_truncated(10);
    Cochain junk;
    junk.arity = 2;
    junk.degree = 2;
    junk.add_term({0, 1}, 0, 1);
    CHECK_THROWS(class_nonzero(L, junk, 8));
}

TEST_CASE("base construction capped at weight 7 yields the first relation only") {
    L1Miniversal mv = l1_miniversal_setup(7);
    MiniversalResult res = mv.run();
    REQUIRE(res.generators.size() == 1);
    CHECK(res.generators[0] == Polynomial::monomial(e3(0, 1, 1)));
    // the single gauge move: the value at x^2 absorbs a multiple of the
    // third representative while treating x^2*y
    REQUIRE(res.gauges.size() == 1);
    CHECK(res.gauges[0].step == 2);
    CHECK(res.gauges[0].rep == 2);
    CHECK(res.gauges[0].primitive == Polynomial::monomial(e3(2, 0, 0)));
    CHECK(res.gauges[0].candidate == Polynomial::monomial(e3(2, 1, 0)));
    CHECK(res.gauges[0].amount == rat(-238, 845));
    // the y*z obstruction class is 1/2 at every step it is recorded
    bool seen = false;
    for (const auto& o : res.log)
        if (o.candidate == Polynomial::monomial(e3(0, 1, 1))) {
            REQUIRE(o.cls.size() == 1);
            CHECK(o.cls[0] == rat(1, 2));
            seen = true;
        }
    CHECK(seen);
    CHECK(res.obstruction_scale == rat(1, 2));
}

TEST_CASE("weight-9 cap already reproduces the exact constants") {
    // frozen from an independent run of the inductive construction; agrees
    // with the weight-11 acceptance values
    L1Miniversal mv = l1_miniversal_setup(9);
    MiniversalResult res = mv.run();
    CHECK(res.generators == expected_l1_generators(res.ring));
    REQUIRE(res.snapshots.size() == 3);
    CHECK(res.snapshots[1] == expected_l1_step2_generators(res.ring));
}

TEST_CASE("zero-locus decomposition check accepts and rejects correctly") {
    PolyRing R{{"x", "y", "z"}, {2, 3, 4}};
    std::vector<Polynomial> good = expected_l1_generators(R);
    CHECK(variety_decomposition_ok(R, good));
    // tamper: make A^2 = 4C by rescaling the quartic term
    std::vector<Polynomial> bad = good;
    Rational A = coeff_of(bad[1], {2, 0, 1});
    bad[1].add_term({4, 0, 0}, -coeff_of(bad[1], {4, 0, 0}));
    bad[1].add_term({4, 0, 0}, A * A / 4);
    std::string why;
    CHECK_FALSE(variety_decomposition_ok(R, bad, &why));
    CHECK(!why.empty());
    // dropping a generator fails the count check
    CHECK_FALSE(variety_decomposition_ok(R, {good[0], good[1]}));
}

TEST_CASE("setup validation") {
    MiniversalSetup s;
    CHECK_THROWS(run_miniversal(s)); // no algebra
}
