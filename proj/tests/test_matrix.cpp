#include "clm/matrix.hpp"

#include <doctest.h>

using namespace clm;

TEST_CASE("smith normal form diagonals") {
    IMat m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    std::vector<Int> d = snf_diagonal(m);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);
    CHECK(d[2] == 12);
    SnfResult s = snf_with_transforms(m);
    IMat lhs = imat_mul(imat_mul(s.u, m), s.v);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(lhs[i][j] == (i == j ? d[i] : Int(0)));
    CHECK(abs(bareiss_det(s.u)) == 1);
    CHECK(abs(bareiss_det(s.v)) == 1);
}

TEST_CASE("integer kernel and solve") {
    IMat m = {{1, 2, 3}, {2, 4, 6}};
    IMat k = int_kernel(m);
    CHECK(k.size() == 2);
    for (const IVec& v : k) {
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    }
    auto x = int_solve({{2, 0}, {0, 3}}, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!int_solve({{2}}, {3}).has_value());
}

TEST_CASE("rank and determinant") {
    CHECK(imat_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(bareiss_det({{1, 2}, {3, 4}}) == -2);
    CHECK(q_det({{Rat(1, 2), Rat(0)}, {Rat(0), Rat(2, 3)}}) == Rat(1, 3));
    QMat ns = q_nullspace({{Rat(1), Rat(1), Rat(0)}});
    CHECK(ns.size() == 2);
}

TEST_CASE("rational solving") {
    auto x = q_solve({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK(!q_solve({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(0), Rat(1)})
               .has_value());
}

TEST_CASE("hermite row basis") {
    IMat h = hnf_row_basis({{4, 0}, {6, 0}, {0, 5}});
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] == 2);
    CHECK(h[1][1] == 5);
}
