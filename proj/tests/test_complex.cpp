#include <doctest.h>

#include "homcat/builtins.hpp"
#include "homcat/chainmap.hpp"

using namespace homcat;

TEST_CASE("P, I, PI fixtures are valid and have the expected homology") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    Complex i = complex_I(dual);
    Complex pi = complex_PI(dual);

    CHECK(homology_dim(p, 0) == 1);
    for (int n = -4; n < 0; ++n) CHECK(homology_dim(p, n) == 0);
    CHECK(homology_dim(i, 0) == 1);
    for (int n = 1; n <= 4; ++n) CHECK(homology_dim(i, n) == 0);
    for (int n = -4; n <= 4; ++n) CHECK(homology_dim(pi, n) == 0);

    CHECK(homology_profile(p).left_bounded());
    CHECK(homology_profile(pi).exact());
}

TEST_CASE("a zero-differential tail has full homology in every degree") {
    auto dual = dual_numbers();
    Module a = regular_module(dual);
    Matrix z(2, 2, dual->prime());
    Tail left{1, {a}, {z}, z};
    Complex x(dual, 0, {a}, {}, left, std::nullopt);
    for (int n = -5; n <= 0; ++n) CHECK(homology_dim(x, n) == 2);
    CHECK_FALSE(homology_profile(x).left_bounded());
}

TEST_CASE("shift reindexes and is invertible") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    CHECK(shift(p, 0).same_presentation(p));
    CHECK(shift(shift(p, 1), -1).same_presentation(p));
    CHECK(homology_dim(shift(p, 1), -1) == 1);
    CHECK(homology_dim(shift(p, 1), 0) == 0);
    // homology(shift(X,k), n) = homology(X, n+k)
    for (int k : {-2, 1, 3})
        for (int n = -3; n <= 3; ++n) CHECK(homology_dim(shift(p, k), n) == homology_dim(p, n + k));
}

TEST_CASE("d squared is rechecked across seams") {
    auto dual = dual_numbers();
    Module a = regular_module(dual);
    Matrix x = a.action(1);
    Matrix bad = Matrix::identity(2, dual->prime());
    Tail left{1, {a}, {x}, bad};  // seam = id breaks d^2 against the wrap x
    CHECK_THROWS_AS(Complex(dual, 0, {a}, {}, left, std::nullopt), ValidationError);
}

TEST_CASE("brutal truncations") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);

    SUBCASE("no-op beyond the window") {
        CHECK(brutal_le(p, 0).same_presentation(p));
        CHECK(brutal_le(p, 5).same_presentation(p));
    }
    SUBCASE("cutting into the tail unrolls it") {
        Complex t = brutal_ge(p, -2);
        CHECK_FALSE(t.has_left_tail());
        CHECK(t.lo() == -2);
        CHECK(t.hi() == 0);
        CHECK(t.term_dim(-2) == 2);
        // left-bounded piece of an exact-to-the-left complex is exact except at the cut
        CHECK(homology_dim(t, -2) == 1);
        CHECK(homology_dim(t, -1) == 0);
    }
    SUBCASE("bounded pieces of I") {
        Complex i = complex_I(dual);
        Complex t = brutal_le(i, 2);
        CHECK_FALSE(t.has_right_tail());
        CHECK(t.lo() == 0);
        CHECK(t.hi() == 2);
        CHECK(homology_dim(t, 0) == 1);
        CHECK(homology_dim(t, 2) == 1);  // cokernel appears at the cut
    }
}

TEST_CASE("intelligent truncations use the image as the new end term") {
    auto dual = dual_numbers();
    Complex pi = complex_PI(dual);

    SUBCASE("le on PI gives the resolution half with a 1-dimensional top") {
        Complex s = intelligent_le(pi, 0);
        CHECK(s.has_left_tail());
        CHECK_FALSE(s.has_right_tail());
        CHECK(s.hi() == 1);
        CHECK(s.term_dim(1) == 1);  // Im(x) = soc(A), isomorphic to K
        CHECK(s.term_dim(0) == 2);
        CHECK(homology_profile(s).exact());
    }
    SUBCASE("ge on PI starts with the image") {
        Complex s = intelligent_ge(pi, 1);
        CHECK(s.lo() == 0);
        CHECK(s.term_dim(0) == 1);
        CHECK(s.term_dim(1) == 2);
        CHECK(homology_profile(s).exact());
    }
    SUBCASE("homology is preserved below the cut and vanishes above") {
        Complex i = complex_I(dual);
        for (int n = 0; n <= 3; ++n) {
            Complex s = intelligent_le(i, n);
            for (int k = -1; k < n; ++k) CHECK(homology_dim(s, k) == homology_dim(i, k));
            for (int k = n + 1; k <= n + 3; ++k) CHECK(homology_dim(s, k) == 0);
        }
    }
}

TEST_CASE("unrolling preserves the complex") {
    auto dual = dual_numbers();
    Complex pi = complex_PI(dual);
    Complex u = pi.unrolled_left(-3).unrolled_right(3);
    CHECK(u.lo() == -3);
    CHECK(u.hi() == 3);
    for (int n = -6; n <= 6; ++n) {
        CHECK(u.term_dim(n) == pi.term_dim(n));
        CHECK(u.diff(n) == pi.diff(n));
    }
    CHECK(homology_profile(u).exact());
}

TEST_CASE("direct sums and stalks") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    Complex k = Complex::stalk(trivial_module(dual), 0);
    Complex s = direct_sum(p, k);
    CHECK(s.term_dim(0) == 3);
    CHECK(homology_dim(s, 0) == 2);
    CHECK(homology_dim(s, -1) == 0);
}

TEST_CASE("op transport flips sides") {
    auto dual = dual_numbers();
    auto op = dual->opposite();
    Complex p = complex_P(dual);
    Complex d = op_transport(p, op);
    CHECK_FALSE(d.has_left_tail());
    CHECK(d.has_right_tail());
    CHECK(homology_dim(d, 0) == 1);
    for (int n = 1; n <= 4; ++n) CHECK(homology_dim(d, n) == 0);
}

TEST_CASE("trimming produces the canonical zero object") {
    auto dual = dual_numbers();
    Module z = Module::zero(dual);
    Complex c(dual, 3, {z, z, z}, {Matrix(0, 0, dual->prime()), Matrix(0, 0, dual->prime())});
    CHECK(c.trimmed().is_zero_object());
    CHECK(Complex::zero(dual).is_zero_object());
}
