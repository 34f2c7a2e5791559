#include "doctest.h"
#include "mvdef/gla.hpp"

using namespace mvdef;

TEST_CASE("vector-field truncation structure constants") {
    GradedLieAlgebra L = l1_truncated(8);
    CHECK(L.dim() == 8);
    CHECK(L.degrees[0] == 1);
    CHECK(L.degrees[7] == 8);
    // [e_2, e_3] = e_5 (index 4), coefficient 3-2 = 1
    CHECK(L.bracket(1, 2) == SparseVec{{4, 1}});
    // [e_1, e_4] = 3 e_5
    CHECK(L.bracket(0, 3) == SparseVec{{4, 3}});
    // products past the truncation vanish
    CHECK(L.bracket(5, 7).empty());
    CHECK(check_jacobi(L).empty());
    CHECK(check_degree_additive(L).empty());
}

TEST_CASE("bracket extends bilinearly and antisymmetrically") {
    GradedLieAlgebra L = l1_truncated(6);
    SparseVec a{{0, 1}, {1, 2}}; // e_1 + 2 e_2
    SparseVec b{{2, 1}};         // e_3
    // [e_1 + 2e_2, e_3] = 2 e_4 + 2 e_5
    CHECK(L.bracket(a, b) == SparseVec{{3, 2}, {4, 2}});
    CHECK(L.bracket(b, a) == sv_scale(L.bracket(a, b), -1));
    CHECK(L.bracket(b, b).empty());
}

TEST_CASE("module action satisfies the compatibility identity inside the window") {
    GradedLieAlgebra L = l1_truncated(10);
    GradedModule W = w_module_truncated(10, -3);
    CHECK(check_module(L, W, 10).empty());
    // e_i(e_j) = (j-i) e_{i+j}: e_2 acting on e_{-1} gives -3 e_1
    int m = -1;
    int mi = -1;
    for (int i = 0; i < W.dim(); ++i)
        if (W.degrees[i] == m) mi = i;
    REQUIRE(mi >= 0);
    SparseVec v = W.act(1, mi);
    REQUIRE(v.size() == 1);
    CHECK(W.degrees[v[0].first] == 1);
    CHECK(v[0].second == -3);
}

TEST_CASE("deformation families are Lie algebras for sample parameters") {
    for (int id = 1; id <= 3; ++id)
        for (int N : {8, 16})
            for (const Rational& t : {rat(0), rat(1), rat(-2), rat(5, 3)}) {
                GradedLieAlgebra Lt = deformation_family(id, t, N);
                CHECK(check_jacobi(Lt).empty());
            }
}

TEST_CASE("family at t=0 is the undeformed algebra") {
    for (int id = 1; id <= 3; ++id) {
        GradedLieAlgebra L0 = deformation_family(id, 0, 8);
        GradedLieAlgebra L = l1_truncated(8);
        CHECK(L0.table == L.table);
    }
}

TEST_CASE("linear parts of the families have the expected internal degrees") {
    // the order-t corrections lower the grading by 1, 1 and 2 respectively
    int expected[] = {1, 1, 2};
    for (int id = 1; id <= 3; ++id) {
        auto parts = l1_formal_family(id, 12).linear_parts();
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].degree == expected[id - 1]);
    }
}
