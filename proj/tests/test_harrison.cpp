#include "doctest.h"
#include "mvdef/harrison.hpp"
#include "mvdef/verify.hpp"

using namespace mvdef;

TEST_CASE("quotient algebra construction from a presentation") {
    LocalAlgebra A = algebra_of(truncated_polynomial_presentation(3));
    CHECK(A.dim() == 3); // 1, t, t^2
    CHECK(check_local_algebra(A).empty());
    // t * t = t^2, t * t^2 = 0
    CHECK(A.product(1, 1) == SparseVec{{2, 1}});
    CHECK(A.product(1, 2).empty());
    CHECK(A.aug(0) == 1);
    CHECK(A.aug(1) == 0);
}

TEST_CASE("symmetric complex composes to zero") {
    for (const auto& P : {truncated_polynomial_presentation(3), fat_point_presentation(),
                          truncated_polynomial_presentation(4)}) {
        LocalAlgebra A = algebra_of(P);
        CHECK(harrison_d2_matrix(A).multiply(harrison_d1_matrix(A)).is_zero());
    }
}

TEST_CASE("first cohomology counts derivations to the ground field") {
    CHECK(harrison_h1_dim(algebra_of(truncated_polynomial_presentation(3))) == 1);
    CHECK(harrison_h1_dim(algebra_of(fat_point_presentation())) == 2);
    // the ground field itself has no derivations
    AlgebraPresentation K;
    K.name = "K";
    K.ring = PolyRing{{"t"}, {1}};
    K.gens = {Polynomial::monomial({1})};
    K.truncation = 1;
    LocalAlgebra k = algebra_of(K);
    CHECK(k.dim() == 1);
    CHECK(harrison_h1_dim(k) == 0);
    CHECK(harrison_h2(k).dimension == 0);
}

TEST_CASE("both second-cohomology routes agree on the sample algebras") {
    struct Case {
        AlgebraPresentation P;
        int h2;
    };
    for (const auto& [P, h2] : {Case{truncated_polynomial_presentation(3), 1},
                                Case{fat_point_presentation(), 3},
                                Case{truncated_polynomial_presentation(4), 1}}) {
        CHECK(presentation_h2(P).dimension == h2);
        CHECK(harrison_h2(algebra_of(P)).dimension == h2);
    }
}

TEST_CASE("second-cohomology representatives are cocycles and independent") {
    LocalAlgebra A = algebra_of(fat_point_presentation());
    HarrisonH2 H = harrison_h2(A);
    REQUIRE(H.dimension == 3);
    Matrix d2 = harrison_d2_matrix(A);
    auto pairs = sym_pair_basis(A.dim());
    for (const auto& rep : H.reps) {
        SparseVec coords;
        for (int i = 0; i < (int)pairs.size(); ++i) {
            auto it = rep.find(pairs[i]);
            if (it != rep.end() && it->second != 0) coords.emplace_back(i, it->second);
        }
        CHECK(d2.apply(coords).empty());
    }
}

TEST_CASE("square-zero extension of the dual numbers is the order-3 truncation") {
    LocalAlgebra A = algebra_of(truncated_polynomial_presentation(2));
    SymFunctional phi;
    phi[{1, 1}] = 1;
    LocalAlgebra B = extension_from_cocycle(A, phi);
    CHECK(B.dim() == 3);
    CHECK(check_local_algebra(B).empty());
    LocalAlgebra C = algebra_of(truncated_polynomial_presentation(3));
    CHECK(tables_match(B, C, {0, 1, 2}));
    // the zero cocycle yields the split extension, which is not K[t]/(t^3)
    LocalAlgebra S = extension_from_cocycle(A, {});
    CHECK(check_local_algebra(S).empty());
    CHECK_FALSE(tables_match(S, C, {0, 1, 2}));
}

TEST_CASE("presentation validation rejects bad input") {
    AlgebraPresentation P = truncated_polynomial_presentation(3);
    CHECK(check_presentation(P).empty());
    // inhomogeneous generator
    AlgebraPresentation bad = P;
    Polynomial g = Polynomial::monomial({3});
    g.add_term({2}, 1);
    bad.gens = {g};
    CHECK_FALSE(check_presentation(bad).empty()); // t^3 + t^2 is weight-inhomogeneous
}
