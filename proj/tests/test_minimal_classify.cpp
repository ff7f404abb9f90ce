#include <doctest.h>

#include "homcat/builtins.hpp"
#include "homcat/gen.hpp"
#include "homcat/witness.hpp"

using namespace homcat;

TEST_CASE("minimal model of a contractible complex is zero") {
    auto dual = dual_numbers();
    Complex idc = cone(ChainMap::identity(Complex::stalk(regular_module(dual), 0)));
    MinimalModel mm = minimal_model(idc);
    CHECK(mm.model.is_zero_object());
}

TEST_CASE("minimal model peels contractible summands") {
    auto dual = dual_numbers();
    gen::Rng rng(71);
    Complex p = complex_P(dual);
    Complex pad = cone(ChainMap::identity(Complex::stalk(regular_module(dual), -1)));
    Complex noisy = gen::twisted(direct_sum(p, pad).unrolled_left(-4), rng);
    MinimalModel mm = minimal_model(noisy);
    // the model is P again: one copy of A per degree <= 0
    CHECK(mm.model.has_left_tail());
    CHECK_FALSE(mm.model.has_right_tail());
    for (int n = -6; n <= 0; ++n) CHECK(mm.model.term_dim(n) == 2);
    for (int n = 1; n <= 3; ++n) CHECK(mm.model.term_dim(n) == 0);
    CHECK(is_minimal(mm.model));
}

TEST_CASE("minimal model of a left-bounded exact complex of projectives vanishes") {
    auto dual = dual_numbers();
    gen::Rng rng(73);
    for (int t = 0; t < 3; ++t) {
        Complex x = gen::random_left_bounded_exact_projectives(dual, rng, t == 2);
        CHECK(minimal_model(x).model.is_zero_object());
    }
}

TEST_CASE("semisimple minimal models are the homology with zero differential") {
    auto ss = semisimple_algebra(2);
    gen::Rng rng(77);
    Complex x = gen::random_bounded_complex(ss, rng, 3, 4, true);
    MinimalModel mm = minimal_model(x);
    CHECK(is_minimal(mm.model));
    for (int n = mm.model.lo() - 1; n <= mm.model.hi() + 1; ++n) {
        CHECK(mm.model.diff(n).is_zero());
        CHECK(mm.model.term_dim(n) == homology_dim(x, n));
    }
}

TEST_CASE("PI is already minimal") {
    auto dual = dual_numbers();
    Complex pi = complex_PI(dual);
    CHECK(is_minimal(pi));
    MinimalModel mm = minimal_model(pi);
    CHECK(mm.model.has_left_tail());
    CHECK(mm.model.has_right_tail());
    for (int n = -3; n <= 3; ++n) CHECK(mm.model.term_dim(n) == 2);
}

TEST_CASE("hasse order sanity") {
    using L = HasseLabel;
    CHECK(label_leq(L::BoundedExact, L::Bounded));
    CHECK(label_leq(L::BoundedExact, L::PlusExact));
    CHECK(label_leq(L::Bounded, L::MinusBounded));
    CHECK(label_leq(L::MinusBounded, L::InfBounded));
    CHECK(label_leq(L::InfExact, L::InfBounded));
    CHECK(label_leq(L::Plus, L::InfPlus));
    CHECK_FALSE(label_leq(L::InfExact, L::MinusBounded));
    CHECK_FALSE(label_leq(L::Plus, L::Minus));
    CHECK(label_join(L::Plus, L::PlusBounded) == L::Plus);
    CHECK(label_join(L::Plus, L::Minus) == L::Full);
    CHECK(label_join(L::PlusExact, L::MinusExact) == L::InfExact);
    CHECK(label_join(L::Bounded, L::InfExact) == L::InfBounded);
}

TEST_CASE("classification of the dual-numbers fixtures") {
    using L = HasseLabel;
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    Complex i = complex_I(dual);
    Complex pi = complex_PI(dual);

    Classification cp = classify(p, Ambient::Projectives);
    CHECK(cp.in(L::MinusBounded));
    CHECK(cp.in(L::Minus));
    CHECK(cp.in(L::InfBounded));
    CHECK(cp.in(L::InfPlus));
    CHECK_FALSE(cp.in(L::Plus));
    CHECK_FALSE(cp.in(L::Bounded));
    CHECK_FALSE(cp.in(L::InfExact));
    // exactly the upward closure of K^{-,b}
    for (HasseLabel l : all_labels()) CHECK(cp.in(l) == label_leq(L::MinusBounded, l));

    Classification ci = classify(i, Ambient::Projectives);
    for (HasseLabel l : all_labels()) CHECK(ci.in(l) == label_leq(L::PlusBounded, l));

    Classification cpi = classify(pi, Ambient::Projectives);
    for (HasseLabel l : all_labels()) CHECK(cpi.in(l) == label_leq(L::InfExact, l));
}

TEST_CASE("bounded exact complexes of projectives receive every label") {
    auto dual = dual_numbers();
    gen::Rng rng(79);
    Complex x = gen::random_exact_bounded(dual, rng, 2, true);
    Classification c = classify(x, Ambient::Projectives);
    for (HasseLabel l : all_labels()) CHECK(c.in(l));
    CHECK(is_contractible(x));
}

TEST_CASE("classification sees through contractible padding in the module ambient") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    // pad P with a contractible right tail: still in K^- up to equivalence
    Module a = regular_module(dual);
    Matrix id = Matrix::identity(2, dual->prime());
    Matrix z(2, 2, dual->prime());
    Tail right{2, {a, a}, {z, id}, id};
    Complex pad(dual, 0, {a}, {}, std::nullopt, right, true);
    REQUIRE(is_contractible(pad));
    Complex x = direct_sum(p, pad);
    Classification c = classify(x, Ambient::Modules);
    CHECK(c.in(HasseLabel::Minus));
    CHECK(c.in(HasseLabel::MinusBounded));
    CHECK_FALSE(c.in(HasseLabel::Plus));
}

TEST_CASE("classification respects the hasse order on random labeled complexes") {
    auto dual = dual_numbers();
    gen::Rng rng(83);
    for (HasseLabel l : all_labels()) {
        Complex x = gen::random_with_ambient(dual, l, true, rng);
        Classification c = classify(x, Ambient::Projectives);
        CHECK(c.in(l));
        for (HasseLabel a : all_labels())
            if (c.in(a))
                for (HasseLabel b : all_labels())
                    if (label_leq(a, b)) CHECK(c.in(b));
    }
}

TEST_CASE("injective-ambient classification mirrors the projective one") {
    auto dual = dual_numbers();
    Complex p = complex_P(dual);
    Classification c = classify(p, Ambient::Injectives);
    // P is right bounded; under duality it plays the left-bounded role
    CHECK(c.in(HasseLabel::MinusBounded));
    CHECK_FALSE(c.in(HasseLabel::Plus));
}
