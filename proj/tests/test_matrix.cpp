#include <doctest.h>

#include <random>

#include "homcat/matrix.hpp"

using namespace homcat;

namespace {

Matrix random_matrix(int r, int c, std::uint32_t p, std::mt19937_64& rng) {
    Matrix m(r, c, p);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on zero and identity") {
    Matrix z = Matrix::zero(2, 2, 5);
    auto rz = rref(z);
    CHECK(rz.reduced.is_zero());
    CHECK(rz.pivots.empty());

    Matrix i3 = Matrix::identity(3, 5);
    auto ri = rref(i3);
    CHECK(ri.reduced == i3);
    CHECK(ri.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref of a rank-1 matrix over F5") {
    // [[1,2],[2,4]] row-reduces to [[1,2],[0,0]]
    Matrix m(2, 2, 5, {1, 2, 2, 4});
    auto r = rref(m);
    CHECK(r.pivots == std::vector<int>{0});
    CHECK(rank(m) == 1);
    CHECK(r.reduced.at(0, 0) == 1);
    CHECK(r.reduced.at(0, 1) == 2);
    CHECK(r.reduced.at(1, 0) == 0);
    CHECK(r.reduced.at(1, 1) == 0);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(2, 7)).cols() == 0);
    CHECK(kernel_basis(Matrix::zero(2, 2, 7)).cols() == 2);

    // x + y = 0 over F3: one kernel vector, a multiple of (1, 2)
    Matrix m(1, 2, 3, {1, 1});
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(k.at(0, 0) != 0);
    CHECK((k.at(0, 0) + k.at(1, 0)) % 3 == 0);
}

TEST_CASE("image bases") {
    CHECK(image_basis(Matrix::zero(3, 2, 5)).cols() == 0);
    CHECK(image_basis(Matrix::identity(2, 5)).cols() == 2);
}

TEST_CASE("solve") {
    Matrix b(2, 1, 7, {3, 4});
    auto x = solve(Matrix::identity(2, 7), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK_FALSE(solve(Matrix::zero(2, 2, 7), b).has_value());

    // consistent rank-1 system over F5
    Matrix a(2, 2, 5, {1, 2, 2, 4});
    Matrix rhs(2, 1, 5, {1, 2});
    auto s = solve(a, rhs);
    REQUIRE(s.has_value());
    CHECK(a * *s == rhs);
}

TEST_CASE("rank-nullity, solve consistency and rref idempotence on random matrices") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
        for (int t = 0; t < 25; ++t) {
            int r = 1 + static_cast<int>(rng() % 6);
            int c = 1 + static_cast<int>(rng() % 6);
            Matrix m = random_matrix(r, c, p, rng);
            CHECK(rank(m) + kernel_basis(m).cols() == c);
            CHECK((m * kernel_basis(m)).is_zero());

            Matrix r1 = rref(m).reduced;
            CHECK(rref(r1).reduced == r1);

            Matrix b = random_matrix(r, 1, p, rng);
            auto x = solve(m, b);
            if (x) {
                CHECK(m * *x == b);
            } else {
                CHECK(rank(Matrix::hstack(m, b)) > rank(m));
            }
        }
    }
}

TEST_CASE("inverse") {
    Matrix m(2, 2, 101, {2, 1, 1, 1});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK_FALSE(inverse(Matrix(2, 2, 101, {1, 2, 2, 4})).has_value());
}
