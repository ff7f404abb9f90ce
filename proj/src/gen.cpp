#include "homcat/gen.hpp"

#include "homcat/builtins.hpp"

namespace homcat::gen {

namespace {

std::uint32_t pick(Rng& rng, std::uint32_t p) {
    return static_cast<std::uint32_t>(rng() % p);
}

int pick_range(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

Module free_module(const AlgebraPtr& alg, int r) {
    Module a = regular_module(alg);
    Module m = a;
    for (int i = 1; i < r; ++i) m = direct_sum(m, a);
    return m;
}

}  // namespace

Matrix random_invertible(int n, std::uint32_t p, Rng& rng) {
    for (;;) {
        Matrix m(n, n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, pick(rng, p));
        if (inverse(m)) return m;
    }
}

Module random_projective(const AlgebraPtr& alg, Rng& rng, int max_units) {
    const int nproj = static_cast<int>(alg->idempotents().size());
    int count = pick_range(rng, 1, max_units);
    Module m = Module::zero(alg);
    bool first = true;
    for (int i = 0; i < count; ++i) {
        Module p = indecomposable_projective(alg, pick_range(rng, 0, nproj - 1)).source;
        m = first ? p : direct_sum(m, p);
        first = false;
    }
    return m;
}

Module random_module(const AlgebraPtr& alg, Rng& rng, int max_units) {
    switch (rng() % 3) {
        case 0: return random_projective(alg, rng, max_units);
        case 1: {
            int n = static_cast<int>(alg->idempotents().size());
            Module m = simple_module(alg, pick_range(rng, 0, n - 1));
            if (rng() % 2) m = direct_sum(m, simple_module(alg, pick_range(rng, 0, n - 1)));
            return m;
        }
        default: {
            int r = pick_range(rng, 1, max_units);
            Module f = free_module(alg, r);
            const Matrix& J = alg->radical();
            if (J.cols() == 0) return f;
            // quotient by the submodule generated by a few random radical vectors
            Matrix gens(f.dim(), 0, alg->prime());
            int count = pick_range(rng, 0, r);
            for (int c = 0; c < count; ++c) {
                Matrix v(f.dim(), 1, alg->prime());
                for (int b = 0; b < r; ++b) {
                    Matrix coeff(alg->dim(), 1, alg->prime());
                    for (int k = 0; k < J.cols(); ++k) {
                        Matrix jv = J.select_columns({k}).scaled(pick(rng, alg->prime()));
                        coeff = coeff + jv;
                    }
                    for (int d = 0; d < alg->dim(); ++d)
                        v.set(b * alg->dim() + d, 0, (v.at(b * alg->dim() + d, 0) + coeff.at(d, 0)) %
                                                         alg->prime());
                }
                gens = Matrix::hstack(gens, v);
            }
            if (gens.cols() == 0) return f;
            Matrix span(f.dim(), 0, alg->prime());
            for (int i = 0; i < alg->dim(); ++i) {
                Matrix e(alg->dim(), 1, alg->prime());
                e.set(i, 0, 1);
                span = Matrix::hstack(span, f.act(e) * gens);
            }
            Matrix basis = image_basis(span);
            if (basis.cols() == 0 || basis.cols() == f.dim()) return f;
            return quotient_module(f, basis).target;
        }
    }
}

Matrix random_automorphism(const Module& m, Rng& rng) {
    if (m.dim() == 0) return Matrix(0, 0, m.prime());
    auto homs = hom_space(m, m);
    for (int trial = 0; trial < 64; ++trial) {
        Matrix f(m.dim(), m.dim(), m.prime());
        for (const auto& h : homs) f = f + h.scaled(pick(rng, m.prime()));
        if (inverse(f)) return f;
    }
    return Matrix::identity(m.dim(), m.prime());
}

Complex resolution_segment(const Module& m, int len, int top, Rng* rng) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<Module> covers;
    std::vector<Matrix> maps;  // d : P_{i+1} -> P_i
    Module cur = m;
    Matrix prev_kernel_incl;
    for (int i = 0; i < len; ++i) {
        ProjectiveCover pc = projective_cover(cur);
        if (i > 0) maps.push_back(prev_kernel_incl * pc.map.matrix);
        covers.push_back(pc.map.source);
        Matrix ker = kernel_basis(pc.map.matrix);
        ModuleMorphism sub = submodule(pc.map.source, ker);
        prev_kernel_incl = sub.matrix;
        cur = sub.source;
    }
    // ascending degrees: P_{len-1} at top-len+1, ..., P_0 at top
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int i = len - 1; i >= 0; --i) {
        terms.push_back(covers[i]);
        if (i > 0) diffs.push_back(maps[i - 1]);
    }
    Complex c(alg, top - len + 1, std::move(terms), std::move(diffs));
    if (rng) return twisted(c, *rng);
    return c;
}

namespace {

Complex twisted_with_autos(const Complex& x, Rng& rng, std::vector<Matrix>* autos_out) {
    if (x.hi() - x.lo() < 2) {
        if (autos_out)
            for (int n = x.lo(); n <= x.hi(); ++n)
                autos_out->push_back(Matrix::identity(x.term_dim(n), x.prime()));
        return x;
    }
    std::vector<Matrix> autos;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        if (n == x.lo() || n == x.hi())
            autos.push_back(Matrix::identity(x.term_dim(n), x.prime()));
        else
            autos.push_back(random_automorphism(x.term(n), rng));
    }
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        terms.push_back(x.term(n));
        if (n < x.hi()) {
            Matrix g = autos[n - x.lo()];
            Matrix ginv = *inverse(g);
            diffs.push_back(autos[n + 1 - x.lo()] * x.diff(n) * ginv);
        }
    }
    if (autos_out) *autos_out = autos;
    return Complex(x.algebra(), x.lo(), std::move(terms), std::move(diffs), x.left_tail(),
                   x.right_tail(), true);
}

}  // namespace

Complex twisted(const Complex& x, Rng& rng) { return twisted_with_autos(x, rng, nullptr); }

Complex random_bounded_complex(const AlgebraPtr& alg, Rng& rng, int min_terms, int max_terms,
                               bool projective_terms) {
    int len = pick_range(rng, min_terms, max_terms);
    int top = pick_range(rng, -1, 2);
    Module seed = projective_terms ? random_projective(alg, rng) : random_module(alg, rng);
    Complex c = projective_terms ? resolution_segment(seed, len, top)
                                 : [&] {
                                       // stalk glued with a resolution piece keeps terms general
                                       Complex res = resolution_segment(random_module(alg, rng),
                                                                        std::max(1, len - 1), top);
                                       return direct_sum(res, Complex::stalk(seed, top - len / 2));
                                   }();
    if (rng() % 2) {
        Module pad = projective_terms ? random_projective(alg, rng, 1) : random_module(alg, rng, 1);
        Complex idc = cone(ChainMap::identity(Complex::stalk(pad, pick_range(rng, top - len, top))));
        c = direct_sum(c, idc);
    }
    return twisted(c.trimmed(), rng);
}

Complex random_exact_bounded(const AlgebraPtr& alg, Rng& rng, int max_blocks, bool projective_terms) {
    int blocks = pick_range(rng, 1, max_blocks);
    Complex c = Complex::zero(alg);
    for (int b = 0; b < blocks; ++b) {
        Module m = projective_terms ? random_projective(alg, rng, 1) : random_module(alg, rng, 1);
        if (m.dim() == 0) continue;
        Complex idc = cone(ChainMap::identity(Complex::stalk(m, pick_range(rng, -2, 2))));
        c = direct_sum(c, idc);
    }
    if (c.is_zero_object())
        c = cone(ChainMap::identity(Complex::stalk(regular_module(alg), 0)));
    return twisted(c.trimmed(), rng);
}

namespace {

/// doubly-infinite exact complex: periodic blocks M (+) M with differential [[0,1],[0,0]]
Complex periodic_exact(const AlgebraPtr& alg, const Module& m, Rng& rng) {
    const std::uint32_t p = alg->prime();
    Module mm = direct_sum(m, m);
    Matrix d(mm.dim(), mm.dim(), p);
    for (int i = 0; i < m.dim(); ++i) d.set(i, m.dim() + i, 1);
    Matrix g = random_automorphism(mm, rng);
    d = g * d * *inverse(g);
    Tail tl{1, {mm}, {d}, d};
    Tail tr{1, {mm}, {d}, d};
    return Complex(alg, 0, {mm}, {}, tl, tr, true);
}

/// over the dual numbers the complete resolution is another exact two-sided complex
Complex periodic_exact_projectives(const AlgebraPtr& alg, Rng& rng) {
    if (alg->name() == "dual_numbers" && rng() % 2) return complex_PI(alg);
    return periodic_exact(alg, random_projective(alg, rng, 1), rng);
}

Complex idc_stalk(const Module& m) {
    return cone(ChainMap::identity(Complex::stalk(m, 0)));
}

Complex nonexact_tail_piece(const AlgebraPtr& alg, Rng& rng, bool left, bool projective_terms) {
    Module m = projective_terms ? random_projective(alg, rng, 1) : random_module(alg, rng, 1);
    if (m.dim() == 0) m = regular_module(alg);
    Matrix z(m.dim(), m.dim(), alg->prime());
    Tail t{1, {m}, {z}, z};
    if (left) return Complex(alg, 0, {m}, {}, t, std::nullopt, true);
    return Complex(alg, 0, {m}, {}, std::nullopt, t, true);
}

/// contractible one-sided piece: ... -> M -1-> M -0-> M -1-> M (alternating), split cones
Complex contractible_tail_piece(const Module& m, bool left) {
    const std::uint32_t p = m.prime();
    Matrix id = Matrix::identity(m.dim(), p);
    Matrix z(m.dim(), m.dim(), p);
    if (!left) {
        // M -id-> M -0-> M -id-> ... to the right
        Tail t{2, {m, m}, {z, id}, id};
        return Complex(m.algebra(), 0, {m}, {}, std::nullopt, t, true);
    }
    // ... -id-> M -0-> M -id-> M ending at degree 0
    Tail t{2, {m, m}, {z, id}, id};
    return Complex(m.algebra(), 0, {m}, {}, t, std::nullopt, true);
}

}  // namespace

Complex random_with_ambient(const AlgebraPtr& alg, HasseLabel ambient, bool projective_terms,
                            Rng& rng) {
    using L = HasseLabel;
    auto bounded = [&] { return random_bounded_complex(alg, rng, 2, 4, projective_terms); };
    auto exact_bounded = [&] { return random_exact_bounded(alg, rng, 2, projective_terms); };
    auto seed_module = [&] {
        return projective_terms ? random_projective(alg, rng, 1) : random_module(alg, rng, 1);
    };
    // exact tail on one side, homology allowed at the cut (brutal cut of an exact complex)
    auto exact_left_tail = [&] {
        Complex per = projective_terms ? periodic_exact_projectives(alg, rng)
                                       : periodic_exact(alg, random_module(alg, rng, 1), rng);
        return brutal_le(per, pick_range(rng, -1, 1));
    };
    auto exact_right_tail = [&] {
        Complex per = projective_terms ? periodic_exact_projectives(alg, rng)
                                       : periodic_exact(alg, random_module(alg, rng, 1), rng);
        return brutal_ge(per, pick_range(rng, -1, 1));
    };
    // exact everywhere, support unbounded on one side. With projective terms such
    // pieces are split by necessity; the subtle cut of an exact complex works for
    // the module ambient.
    auto fully_exact_left = [&] {
        if (projective_terms) {
            Module m = seed_module();
            if (m.dim() == 0) m = regular_module(alg);
            return contractible_tail_piece(m, true);
        }
        return intelligent_le(periodic_exact(alg, random_module(alg, rng, 1), rng),
                              pick_range(rng, -1, 1));
    };
    auto fully_exact_right = [&] {
        if (projective_terms) {
            Module m = seed_module();
            if (m.dim() == 0) m = regular_module(alg);
            return contractible_tail_piece(m, false);
        }
        return intelligent_ge(periodic_exact(alg, random_module(alg, rng, 1), rng),
                              pick_range(rng, -1, 1));
    };
    auto nonexact_left = [&] { return nonexact_tail_piece(alg, rng, true, projective_terms); };
    auto nonexact_right = [&] { return nonexact_tail_piece(alg, rng, false, projective_terms); };

    switch (ambient) {
        case L::Full: {
            Complex c = direct_sum(bounded(), nonexact_left());
            return direct_sum(c, nonexact_right());
        }
        case L::InfPlus: {
            Complex c = direct_sum(bounded(), exact_left_tail());
            if (rng() % 2) c = direct_sum(c, nonexact_right());
            return c;
        }
        case L::InfMinus: {
            Complex c = direct_sum(bounded(), exact_right_tail());
            if (rng() % 2) c = direct_sum(c, nonexact_left());
            return c;
        }
        case L::InfBounded: {
            Complex c = direct_sum(bounded(), exact_left_tail());
            return direct_sum(c, exact_right_tail());
        }
        case L::InfExact: {
            Complex per = projective_terms ? periodic_exact_projectives(alg, rng)
                                           : periodic_exact(alg, random_module(alg, rng, 1), rng);
            return direct_sum(per, exact_bounded());
        }
        case L::Plus: {
            Complex c = bounded();
            if (rng() % 2) c = direct_sum(c, nonexact_right());
            else c = direct_sum(c, exact_right_tail());
            return c;
        }
        case L::Minus: {
            Complex c = bounded();
            if (rng() % 2) c = direct_sum(c, nonexact_left());
            else c = direct_sum(c, exact_left_tail());
            return c;
        }
        case L::PlusBounded: {
            Complex c = bounded();
            if (rng() % 2) c = direct_sum(c, fully_exact_right());
            return c;
        }
        case L::MinusBounded: {
            Complex c = bounded();
            if (rng() % 2) c = direct_sum(c, fully_exact_left());
            return c;
        }
        case L::PlusExact: return direct_sum(fully_exact_right(), exact_bounded());
        case L::MinusExact: return direct_sum(fully_exact_left(), exact_bounded());
        case L::Bounded: return bounded();
        case L::BoundedExact: return exact_bounded();
    }
    return bounded();
}

Complex random_left_bounded_exact_projectives(const AlgebraPtr& alg, Rng& rng, bool right_tail) {
    Complex c = random_exact_bounded(alg, rng, 2, true);
    if (right_tail) {
        Module m = random_projective(alg, rng, 1);
        c = direct_sum(c, contractible_tail_piece(m, false));
    }
    return c.trimmed();
}

Complex random_right_bounded_exact_projectives(const AlgebraPtr& alg, Rng& rng, bool left_tail) {
    Complex c = random_exact_bounded(alg, rng, 2, true);
    if (left_tail) {
        Module m = random_projective(alg, rng, 1);
        c = direct_sum(c, contractible_tail_piece(m, true));
    }
    return c.trimmed();
}

ChainMap random_chain_map(const Complex& x, const Complex& y, Rng& rng, const SessionConfig& cfg) {
    auto basis = chain_map_basis(x, y, cfg);
    ChainMap f = ChainMap::zero(x, y);
    for (const auto& b : basis) {
        std::uint32_t c = pick(rng, x.prime());
        if (c == 0) continue;
        f = f + ChainMap::from_formula(x, y, [&](int n) { return b.component(n).scaled(c); });
    }
    return f;
}

ChainMap random_quasi_iso_onto(const Complex& x, Rng& rng) {
    Module pad = random_module(x.algebra(), rng, 1);
    if (pad.dim() == 0) pad = regular_module(x.algebra());
    Complex plain = direct_sum(x, idc_stalk(pad)).trimmed();
    std::vector<Matrix> autos;
    Complex z = twisted_with_autos(plain, rng, &autos);
    // untwist, then project onto the x summand
    return ChainMap::from_formula(z, x, [&](int n) {
        Matrix proj(x.term_dim(n), plain.term_dim(n), x.prime());
        for (int i = 0; i < x.term_dim(n); ++i) proj.set(i, i, 1);
        if (n < z.lo() || n > z.hi()) return proj;
        Matrix ginv = *inverse(autos[n - z.lo()]);
        return proj * ginv;
    });
}

}  // namespace homcat::gen
