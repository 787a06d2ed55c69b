#include <doctest.h>

#include <random>

#include "typea/matrix.hpp"

using namespace typea;

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rank on the stock examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix::zero(2, 2)) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    CHECK(kernel_basis(Matrix::zero(3, 3)).size() == 3);
    auto kb = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == -kb[0][1]);
}

TEST_CASE("solve") {
    Vec b{Rational(2), Rational(-1)};
    auto x = solve(Matrix::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK(!solve(Matrix::zero(2, 2), b));

    auto y = solve(from_rows({{2}}), Vec{Rational(1)});
    REQUIRE(y);
    CHECK((*y)[0] == Rational(1, 2));

    CHECK_THROWS_AS(solve(Matrix::identity(2), Vec{Rational(1)}), std::invalid_argument);
}

TEST_CASE("rank-nullity, kernel exactness and solve reproduction hold on random input") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        Matrix m = random_matrix(rng, rows, cols);

        auto kb = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(kb.size()) == cols);
        for (const Vec& v : kb) {
            Vec img = m.apply(v);
            for (const Rational& e : img) CHECK(e == Rational(0));
        }

        Vec x(cols);
        for (int j = 0; j < cols; ++j) x[j] = Rational(static_cast<int>(rng() % 7) - 3);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("determinant and cokernel") {
    CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == Rational(1));
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == Rational(0));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        Matrix m = random_matrix(rng, rows, cols);
        CokernelData ck = cokernel(m);
        CHECK(ck.projection.rows() == rows - rank(m));
        CHECK((ck.projection * m).is_zero());
        CHECK(ck.projection * ck.section == Matrix::identity(ck.projection.rows()));
    }
}
