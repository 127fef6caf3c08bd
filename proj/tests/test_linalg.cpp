#include <doctest.h>
#include <residua/linalg.hpp>
#include <residua/linform.hpp>

using namespace residua;

TEST_CASE("rref, rank, null space") {
    QMat m{{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}, {rat(1), rat(0), rat(1)}};
    CHECK(rank_of(m) == 2);
    auto ns = null_space(m);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) CHECK(dot(row, ns[0]) == rat(0));

    QMat id{{rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK(null_space(id).empty());
    CHECK(rank_of(QMat{{rat(0), rat(0)}}) == 0);
}

TEST_CASE("solve and inverse") {
    QMat a{{rat(2), rat(1)}, {rat(1), rat(-1)}};
    auto x = solve_square(a, QVec{rat(4), rat(-1)});
    REQUIRE(x.has_value());
    CHECK(*x == QVec{rat(1), rat(2)});

    QMat sing{{rat(1), rat(2)}, {rat(2), rat(4)}};
    CHECK(!solve_square(sing, QVec{rat(1), rat(1)}).has_value());
    CHECK(determinant(sing) == rat(0));
    CHECK(determinant(a) == rat(-3));
    CHECK_THROWS_AS(inverse(sing), std::domain_error);

    QMat ainv = inverse(a);
    CHECK(mat_apply(ainv, QVec{rat(4), rat(-1)}) == QVec{rat(1), rat(2)});
}

TEST_CASE("solve with form-valued right-hand side") {
    // x + y = k1, x - y = k2  =>  x = (k1+k2)/2, y = (k1-k2)/2
    QMat a{{rat(1), rat(1)}, {rat(1), rat(-1)}};
    std::vector<LinForm> b{LinForm::unit(2, 0), LinForm::unit(2, 1)};
    auto x = solve_square(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == (LinForm::unit(2, 0) + LinForm::unit(2, 1)) * rat(1, 2));
    CHECK((*x)[1] == (LinForm::unit(2, 0) - LinForm::unit(2, 1)) * rat(1, 2));
}
