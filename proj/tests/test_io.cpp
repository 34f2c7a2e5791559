#include "doctest.h"
#include "mvdef/io.hpp"
#include "mvdef/verify.hpp"

using namespace mvdef;

TEST_CASE("graded Lie algebra round trip") {
    GradedLieAlgebra L = l1_truncated(6);
    Json j = algebra_to_json(L);
    GradedLieAlgebra M = algebra_from_json(j);
    CHECK(M.name == L.name);
    CHECK(M.labels == L.labels);
    CHECK(M.degrees == L.degrees);
    CHECK(M.table == L.table);
    CHECK(algebra_to_json(M) == j);
}

TEST_CASE("serialization is byte-stable under reparsing") {
    Json j = algebra_to_json(l1_truncated(5));
    std::string s = dump_json(j);
    CHECK(dump_json(Json::parse(s)) == s);
    Json p = presentation_to_json(fat_point_presentation());
    std::string ps = dump_json(p);
    CHECK(dump_json(Json::parse(ps)) == ps);
}

TEST_CASE("presentation round trip") {
    AlgebraPresentation P = fat_point_presentation();
    Json j = presentation_to_json(P);
    AlgebraPresentation Q = presentation_from_json(j);
    CHECK(Q.name == P.name);
    CHECK(Q.ring.vars == P.ring.vars);
    CHECK(Q.ring.weights == P.ring.weights);
    CHECK(Q.truncation == P.truncation);
    REQUIRE(Q.gens.size() == P.gens.size());
    for (size_t i = 0; i < P.gens.size(); ++i) CHECK(Q.gens[i] == P.gens[i]);
    CHECK(input_kind(j) == InputKind::Presentation);
}

TEST_CASE("local algebra round trip") {
    LocalAlgebra A = algebra_of(truncated_polynomial_presentation(4));
    Json j = local_algebra_to_json(A);
    LocalAlgebra B = local_algebra_from_json(j);
    CHECK(B.labels == A.labels);
    CHECK(B.unit == A.unit);
    CHECK(B.table == A.table);
    CHECK(input_kind(j) == InputKind::LocalAlgebra);
}

TEST_CASE("rationals serialize exactly") {
    CHECK(rat_to_string(rat(-814, 845)) == "-814/845");
    CHECK(rat_to_string(rat(3)) == "3");
    auto r = rat_parse("-814/845");
    REQUIRE(r.has_value());
    CHECK(*r == rat(-814, 845));
    CHECK_FALSE(rat_parse("1.5").has_value());
    CHECK_FALSE(rat_parse("").has_value());
}

TEST_CASE("malformed documents are rejected") {
    Json j = algebra_to_json(l1_truncated(4));
    j["brackets"][0]["left"] = "nope";
    CHECK_THROWS(algebra_from_json(j));
    Json k;
    k["kind"] = "mystery";
    CHECK_THROWS(input_kind(k));
    CHECK_THROWS(load_json_file("/does/not/exist.json"));
}

TEST_CASE("shipped sample files parse to the expected objects") {
    // paths are relative to the build tree's parent when run via ctest;
    // fall back to the source-tree layout
    std::string base = "../data/";
    Json j;
    try {
        j = load_json_file(base + "t_cubed.json");
    } catch (...) {
        base = "data/";
        j = load_json_file(base + "t_cubed.json");
    }
    AlgebraPresentation P = presentation_from_json(j);
    CHECK(P.name == "K[t]/(t^3)");
    CHECK(presentation_h2(P).dimension == 1);
    GradedLieAlgebra L =
        algebra_from_json(load_json_file(base + "l1_trunc8.json"));
    CHECK(L.dim() == 8);
    CHECK(check_jacobi(L).empty());
    LocalAlgebra A = local_algebra_from_json(load_json_file(base + "dual_numbers.json"));
    CHECK(check_local_algebra(A).empty());
}
