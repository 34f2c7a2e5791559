#include <random>

#include "doctest.h"
#include "mvdef/matrix.hpp"

using namespace mvdef;

namespace {

Matrix dense(const std::vector<std::vector<int>>& rows) {
    int nc = rows.empty() ? 0 : (int)rows[0].size();
    Matrix m((int)rows.size(), nc);
    for (int r = 0; r < (int)rows.size(); ++r)
        for (int c = 0; c < nc; ++c)
            if (rows[r][c]) m.set(r, c, rows[r][c]);
    return m;
}

SparseVec vec(const std::vector<int>& v) {
    SparseVec s;
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i]) s.emplace_back(i, v[i]);
    return s;
}

} // namespace

TEST_CASE("sparse vector arithmetic") {
    SparseVec a = vec({1, 0, 2}), b = vec({0, 3, -2});
    CHECK(sv_axpy(a, 1, b) == vec({1, 3, 0}));
    CHECK(sv_axpy(a, -2, b) == vec({1, -6, 6}));
    CHECK(sv_dot(a, b) == -4);
    CHECK(sv_get(a, 2) == 2);
    CHECK(sv_get(a, 1) == 0);
    CHECK(sv_scale(a, 0).empty());
}

TEST_CASE("rref and rank on a known matrix") {
    Matrix m = dense({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    RrefResult r = rref(m);
    CHECK(r.pivots == std::vector<int>{0, 1});
    CHECK(rank(m) == 2);
    // reduced rows: (1,0,-1), (0,1,2)
    CHECK(r.reduced.at(0, 2) == -1);
    CHECK(r.reduced.at(1, 2) == 2);
}

TEST_CASE("kernel basis has unit free coordinates") {
    Matrix m = dense({{1, 2, 3}, {0, 0, 1}});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(sv_get(ker[0], 1) == 1); // free column
    CHECK(m.apply(ker[0]).empty());
}

TEST_CASE("solve returns the canonical solution") {
    Matrix m = dense({{1, 1, 0}, {0, 0, 1}});
    auto x = solve(m, vec({3, 5}));
    REQUIRE(x.has_value());
    // free column 1 must carry coordinate zero
    CHECK(sv_get(*x, 0) == 3);
    CHECK(sv_get(*x, 1) == 0);
    CHECK(sv_get(*x, 2) == 5);
    CHECK_FALSE(solve(dense({{1, 0}, {1, 0}}), vec({1, 2})).has_value());
}

TEST_CASE("image membership") {
    Matrix m = dense({{1, 0}, {0, 1}, {0, 0}});
    CHECK(image_membership(m, vec({2, 3, 0})).first);
    CHECK_FALSE(image_membership(m, vec({0, 0, 1})).first);
}

TEST_CASE("randomized kernel/solve consistency") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), val(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        int nr = dim(rng), nc = dim(rng);
        Matrix m(nr, nc);
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c) {
                int v = val(rng);
                if (v) m.set(r, c, v);
            }
        int rk = rank(m);
        auto ker = kernel_basis(m);
        CHECK(rk + (int)ker.size() == nc);
        for (const auto& k : ker) CHECK(m.apply(k).empty());
        // any column is in the image; solving must reproduce it
        for (int c = 0; c < nc; ++c) {
            auto x = solve(m, m.column(c));
            REQUIRE(x.has_value());
            CHECK(m.apply(*x) == m.column(c));
        }
        // rank via rref agrees with the elimination-order rank
        CHECK((int)rref(m).pivots.size() == rk);
    }
}

TEST_CASE("transpose and multiply") {
    Matrix a = dense({{1, 2}, {3, 4}});
    Matrix b = dense({{0, 1}, {1, 0}});
    CHECK(a.multiply(b) == dense({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == dense({{1, 3}, {2, 4}}));
    CHECK(Matrix::identity(3).multiply(Matrix::identity(3)) == Matrix::identity(3));
}
