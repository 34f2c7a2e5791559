#include <random>

#include "doctest.h"
#include "mvdef/cochain.hpp"

using namespace mvdef;

namespace {

Cochain random_cochain(std::mt19937& rng, const ComponentBasis& basis) {
    std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
    Cochain c;
    c.arity = basis.arity;
    c.degree = basis.degree;
    for (const auto& e : basis.elems) {
        if (coin(rng) == 0) continue;
        int v = val(rng);
        if (v != 0) c.coeff[e] = v;
    }
    return c;
}

bool is_zero_diff(Cochain a, const Cochain& b) {
    a.axpy(-1, b);
    return a.is_zero();
}

Rational sgn(int k) { return ((k % 2) + 2) % 2 ? Rational(-1) : Rational(1); }

} // namespace

TEST_CASE("differential of a 1-cochain matches the defining formula") {
    // c(e_1) = e_2, all other values 0, degree -1; then
    // (delta c)(e_i, e_j) = [e_i, c(e_j)] - [e_j, c(e_i)] - c([e_i, e_j]).
    GradedLieAlgebra L = l1_truncated(6);
    Cochain c;
    c.arity = 1;
    c.degree = -1;
    c.add_term({0}, 1, 1); // e_1 -> e_2
    Cochain dc = apply_differential(L, c);
    // (delta c)(e_1, e_2) = [e_1, 0] - [e_2, e_2] - c(e_3) = 0
    CHECK(dc.coeff.count({{0, 1}, 3}) == 0);
    // (delta c)(e_1, e_3) = -[e_3, e_2] - 2 c(e_4) = e_5
    auto it = dc.coeff.find({{0, 2}, 4});
    REQUIRE(it != dc.coeff.end());
    CHECK(it->second == 1);
}

TEST_CASE("delta squared vanishes, with and without a window") {
    GradedLieAlgebra L = l1_truncated(12);
    for (int q : {1, 2})
        for (int g = 0; g <= 5; ++g) {
            CHECK(differential_matrix(L, q + 1, g).multiply(differential_matrix(L, q, g))
                      .is_zero());
            CHECK(differential_matrix(L, q + 1, g, 7)
                      .multiply(differential_matrix(L, q, g, 7))
                      .is_zero());
        }
}

TEST_CASE("window components are genuine quotients") {
    GradedLieAlgebra L = l1_truncated(12);
    ComponentBasis full = cochain_basis(L, 2, 3);
    ComponentBasis cut = cochain_basis(L, 2, 3, 6);
    CHECK(cut.dim() < full.dim());
    for (const auto& [t, m] : cut.elems) CHECK(L.degrees[m] <= 6);
    std::mt19937 rng(3);
    Cochain c = random_cochain(rng, full);
    // projecting then differentiating equals differentiating then projecting
    Cochain a = apply_differential(L, c, 6);
    Cochain proj = c;
    for (auto it = proj.coeff.begin(); it != proj.coeff.end();)
        it = L.degrees[it->first.second] > 6 ? proj.coeff.erase(it) : ++it;
    Cochain b = apply_differential(L, proj, 6);
    CHECK(is_zero_diff(a, b));
}

TEST_CASE("bracket identities on random cochains") {
    GradedLieAlgebra L = l1_truncated(8);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> arity(1, 3), deg(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Cochain a = random_cochain(rng, cochain_basis(L, arity(rng), deg(rng)));
        Cochain b = random_cochain(rng, cochain_basis(L, arity(rng), deg(rng)));
        Cochain c = random_cochain(rng, cochain_basis(L, arity(rng), deg(rng)));
        int pa = a.arity - 1, pb = b.arity - 1, pc = c.arity - 1;
        Cochain anti = cochain_bracket(L, a, b);
        anti.axpy(sgn(pa * pb), cochain_bracket(L, b, a));
        CHECK(anti.is_zero());
        Cochain leib = apply_differential(L, cochain_bracket(L, a, b));
        leib.axpy(-1, cochain_bracket(L, apply_differential(L, a), b));
        leib.axpy(-sgn(pa), cochain_bracket(L, a, apply_differential(L, b)));
        CHECK(leib.is_zero());
        Cochain jac = cochain_bracket(L, cochain_bracket(L, a, b), c);
        jac.axpy(sgn(pa * (pb + pc)), cochain_bracket(L, cochain_bracket(L, b, c), a));
        jac.axpy(sgn(pc * (pa + pb)), cochain_bracket(L, cochain_bracket(L, c, a), b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("bracket of 1-cochains is the commutator of operators") {
    GradedLieAlgebra L = l1_truncated(8);
    Cochain f, g;
    f.arity = g.arity = 1;
    f.degree = -1;
    g.degree = -2;
    f.add_term({1}, 2, 1); // e_2 -> e_3
    g.add_term({2}, 4, 1); // e_3 -> e_5
    Cochain fg = cochain_bracket(L, f, g);
    // [f,g](e_2) = f(g(e_2)) - g(f(e_2)) = 0 - g(e_3) = -e_5
    auto it = fg.coeff.find({{1}, 4});
    REQUIRE(it != fg.coeff.end());
    CHECK(it->second == -1);
}

TEST_CASE("mu_k values match the closed formula") {
    GradedLieAlgebra L = l1_truncated(10);
    GradedModule W = w_module_truncated(10, -3);
    for (int k = 2; k <= 4; ++k) {
        Cochain mu = mu_cochain(k, L, W);
        CHECK(mu.arity == 1);
        CHECK(mu.degree == k);
        for (int i = 2; i <= k + 1; ++i) {
            // value (-1)^{i+1} binom(k-1, i-2) on e_i, target e_{i-k}
            int target = -1;
            for (int m = 0; m < W.dim(); ++m)
                if (W.degrees[m] == i - k) target = m;
            REQUIRE(target >= 0);
            auto it = mu.coeff.find({{i - 1}, target});
            Rational expect = sgn(i + 1) * Rational(binomial(k - 1, i - 2));
            if (expect == 0) {
                CHECK(it == mu.coeff.end());
            } else {
                REQUIRE(it != mu.coeff.end());
                CHECK(it->second == expect);
            }
        }
        // no support outside 2 <= i <= k+1
        for (const auto& [key, v] : mu.coeff) {
            CHECK(key.first[0] + 1 >= 2);
            CHECK(key.first[0] + 1 <= k + 1);
        }
    }
}

TEST_CASE("module differential of mu_k lands in the adjoint module") {
    GradedLieAlgebra L = l1_truncated(16);
    GradedModule W = w_module_truncated(17, -5);
    for (int k = 2; k <= 4; ++k) {
        Cochain mu = mu_cochain(k, L, W);
        Cochain dmu = apply_differential(L, W, mu, 10);
        Cochain adj = module_to_adjoint(L, W, dmu); // throws if any value escapes
        CHECK(adj.arity == 2);
        CHECK(adj.degree == k);
        CHECK_FALSE(adj.is_zero());
    }
}
