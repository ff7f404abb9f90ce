#include <doctest.h>

#include "homcat/builtins.hpp"
#include "homcat/module.hpp"

using namespace homcat;

TEST_CASE("builtin algebras validate") {
    auto dual = dual_numbers();
    CHECK(dual->dim() == 2);
    CHECK(dual->radical().cols() == 1);

    auto ss = semisimple_algebra(2);
    CHECK(ss->radical().cols() == 0);
    CHECK(ss->idempotents().size() == 2);

    auto str = string_algebra();
    CHECK(str->dim() == 3);
    CHECK(str->radical().cols() == 2);
}

TEST_CASE("non-associative constants are rejected with a witness triple") {
    // perturb dual numbers: make x*x = 1
    std::vector<std::uint32_t> sc(8, 0);
    auto idx = [](int i, int j, int k) { return (i * 2 + j) * 2 + k; };
    sc[idx(0, 0, 0)] = 1;
    sc[idx(0, 1, 1)] = 1;
    sc[idx(1, 0, 1)] = 1;
    sc[idx(1, 1, 0)] = 1;  // x^2 = 1 keeps associativity (group algebra of Z/2) -- so break the unit too
    // x^2 = x breaks associativity: (xx)x = x^2 = x vs x(xx) = x^2 = x ... still fine; use x*x = 1, 1*x = 0
    sc[idx(0, 1, 1)] = 0;
    CHECK_THROWS_AS(
        Algebra::create("bad", 2, {"1", "x"}, sc, {1, 0}, {{0, 1}}, {{1, 0}}, 101),
        ValidationError);
}

TEST_CASE("regular modules") {
    auto field = semisimple_algebra(1);
    Module k1 = regular_module(field);
    CHECK(k1.dim() == 1);
    CHECK(k1.action(0).is_identity());

    auto dual = dual_numbers();
    Module a = regular_module(dual);
    CHECK(a.dim() == 2);
    CHECK(rank(a.action(1)) == 1);
    CHECK((a.action(1) * a.action(1)).is_zero());

    auto str = string_algebra();
    Module s = regular_module(str);
    CHECK(s.dim() == 3);
    CHECK(rank(s.action(1)) == 1);
    CHECK(rank(s.action(2)) == 1);
    CHECK((s.action(1) * s.action(2)).is_zero());
}

TEST_CASE("module radicals") {
    auto dual = dual_numbers();
    CHECK(radical_of_module(regular_module(dual)).source.dim() == 1);
    CHECK(radical_of_module(regular_module(semisimple_algebra(2))).source.dim() == 0);
    Module srad = radical_of_module(regular_module(string_algebra())).source;
    CHECK(srad.dim() == 2);
    CHECK(is_semisimple_module(srad));
}

TEST_CASE("projective covers") {
    auto dual = dual_numbers();
    Module a = regular_module(dual);
    auto pc = projective_cover(a);
    CHECK(pc.map.source.dim() == 2);
    CHECK(kernel_basis(pc.map.matrix).cols() == 0);
    CHECK(pc.map.is_intertwiner());

    Module k = trivial_module(dual);
    auto pk = projective_cover(k);
    CHECK(pk.map.source.dim() == 2);  // A ->> K
    CHECK(rank(pk.map.matrix) == 1);
    Module omega = syzygy(k, 1);
    CHECK(omega.dim() == 1);  // kernel is K again

    // two simples over the 2-idempotent semisimple algebra
    auto ss = semisimple_algebra(2);
    Module m = direct_sum(simple_module(ss, 0), simple_module(ss, 1));
    auto pm = projective_cover(m);
    CHECK(pm.map.source.dim() == 2);
    CHECK(pm.summand_indices.size() == 2);
}

TEST_CASE("cover kernels sit inside the radical of the cover") {
    auto str = string_algebra();
    Module k = trivial_module(str);
    auto pc = projective_cover(k);
    Matrix ker = kernel_basis(pc.map.matrix);
    Matrix rad = radical_of_module(pc.map.source).matrix;
    CHECK(solve(rad, ker).has_value());
}

TEST_CASE("syzygies over the dual numbers are periodic") {
    auto dual = dual_numbers();
    Module k = trivial_module(dual);
    Module cur = k;
    for (int n = 1; n <= 6; ++n) {
        Module direct = syzygy(k, n);
        cur = syzygy(cur, 1);
        CHECK(direct.dim() == 1);
        CHECK(modules_isomorphic(direct, cur));
        CHECK(modules_isomorphic(direct, k));
    }
    CHECK(syzygy(regular_module(dual), 3).dim() == 0);
}

TEST_CASE("string algebra: first syzygy of a non-projective is semisimple") {
    auto str = string_algebra();
    Module k = trivial_module(str);
    Module o1 = syzygy(k, 1);
    CHECK(o1.dim() == 2);
    CHECK(is_semisimple_module(o1));
}

TEST_CASE("hom spaces") {
    auto dual = dual_numbers();
    Module k = trivial_module(dual);
    Module a = regular_module(dual);
    CHECK(hom_space(k, k).size() == 1);
    CHECK(hom_space(a, a).size() == 2);
    CHECK(hom_space(a, Module::zero(dual)).empty());
    for (const auto& f : hom_space(a, a)) {
        ModuleMorphism m{a, a, f};
        CHECK(m.is_intertwiner());
    }
}

TEST_CASE("stable hom") {
    auto dual = dual_numbers();
    Module k = trivial_module(dual);
    Module a = regular_module(dual);

    auto s = stable_hom(k, k);
    CHECK(s.dim == 1);
    REQUIRE(s.basis.size() == 1);
    CHECK(s.basis[0].at(0, 0) != 0);  // scalar multiples of the identity

    CHECK(stable_hom(a, k).dim == 0);
    CHECK(stable_hom(a, a).dim == 0);

    auto ss = semisimple_algebra(2);
    Module m = direct_sum(simple_module(ss, 0), regular_module(ss));
    CHECK(stable_hom(m, m).dim == 0);
}

TEST_CASE("syzygy composition law on random string-algebra modules") {
    auto str = string_algebra();
    Module k = trivial_module(str);
    // Omega^{n+1} = Omega(Omega^n) for a module with mixed socle structure
    Module m = direct_sum(k, radical_of_module(regular_module(str)).source);
    for (int n = 0; n <= 3; ++n) {
        Module a = syzygy(m, n + 1);
        Module b = syzygy(syzygy(m, n), 1);
        CHECK(a.dim() == b.dim());
        CHECK(modules_isomorphic(a, b));
    }
}

TEST_CASE("opposite algebra and duality") {
    auto dual = dual_numbers();
    auto op = dual->opposite();
    CHECK(op->dim() == 2);
    Module a = regular_module(dual);
    Module da = op_dual(a, op);
    CHECK(da.dim() == 2);
    CHECK(rank(da.action(1)) == 1);
}
