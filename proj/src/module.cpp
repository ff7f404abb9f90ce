#include "homcat/module.hpp"

#include <random>

namespace homcat {

Module::Module(AlgebraPtr alg, std::vector<Matrix> action, bool trusted)
    : alg_(std::move(alg)), action_(std::move(action)) {
    if (action_.size() != static_cast<std::size_t>(alg_->dim()))
        throw ValidationError("module needs one action matrix per algebra basis element");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& a : action_)
        if (a.rows() != dim_ || a.cols() != dim_) throw ValidationError("action matrices must be square of equal size");
    if (trusted) return;

    if (!act(alg_->unit()).is_identity() && dim_ > 0)
        throw ValidationError("unit does not act as identity on module");
    const int d = alg_->dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix lhs = action_[i] * action_[j];
            Matrix rhs(dim_, dim_, prime());
            for (int k = 0; k < d; ++k) {
                std::uint32_t c = alg_->sc(i, j, k);
                if (c) rhs = rhs + action_[k].scaled(c);
            }
            if (!(lhs == rhs)) throw ValidationError("module action does not respect the structure constants");
        }
}

Module Module::zero(AlgebraPtr alg) {
    std::vector<Matrix> act(alg->dim(), Matrix(0, 0, alg->prime()));
    return Module(std::move(alg), std::move(act), true);
}

Matrix Module::act(const Matrix& coeffs) const {
    Matrix r(dim_, dim_, prime());
    for (int i = 0; i < alg_->dim(); ++i) {
        std::uint32_t c = coeffs.at(i, 0);
        if (c) r = r + action_[i].scaled(c);
    }
    return r;
}

bool Module::same_presentation(const Module& o) const {
    return dim_ == o.dim_ && action_ == o.action_;
}

bool ModuleMorphism::is_intertwiner() const {
    for (int i = 0; i < source.algebra()->dim(); ++i)
        if (!(matrix * source.action(i) == target.action(i) * matrix)) return false;
    return true;
}

Module regular_module(const AlgebraPtr& alg) {
    std::vector<Matrix> act;
    act.reserve(alg->dim());
    for (int i = 0; i < alg->dim(); ++i) {
        Matrix e(alg->dim(), 1, alg->prime());
        e.set(i, 0, 1);
        act.push_back(alg->left_mult(e));
    }
    return Module(alg, std::move(act), true);
}

ModuleMorphism submodule(const Module& m, const Matrix& basis) {
    Matrix b = image_basis(basis);
    std::vector<Matrix> act;
    act.reserve(m.algebra()->dim());
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        auto sol = solve(b, m.action(i) * b);
        if (!sol) throw ValidationError("basis does not span an action-stable subspace");
        act.push_back(*sol);
    }
    Module sub(m.algebra(), std::move(act), true);
    return {sub, m, b};
}

ModuleMorphism quotient_module(const Module& m, const Matrix& basis) {
    Matrix b = image_basis(basis);
    const std::uint32_t p = m.prime();
    // complete b to a basis of M by unit vectors chosen by pivots
    auto piv = rref(Matrix::hstack(b, Matrix::identity(m.dim(), p))).pivots;
    std::vector<int> comp;
    for (int c : piv)
        if (c >= b.cols()) comp.push_back(c - b.cols());
    Matrix compl_basis(m.dim(), static_cast<int>(comp.size()), p);
    for (std::size_t j = 0; j < comp.size(); ++j) compl_basis.set(comp[j], static_cast<int>(j), 1);
    Matrix full = Matrix::hstack(b, compl_basis);
    Matrix fi = *inverse(full);
    // projection in quotient coordinates: last rows of fi
    std::vector<int> rows;
    for (int r = b.cols(); r < m.dim(); ++r) rows.push_back(r);
    Matrix proj = fi.select_rows(rows);
    std::vector<Matrix> act;
    for (int i = 0; i < m.algebra()->dim(); ++i) act.push_back(proj * m.action(i) * compl_basis);
    Module q(m.algebra(), std::move(act), true);
    return {m, q, proj};
}

ModuleMorphism radical_of_module(const Module& m) {
    const Matrix& J = m.algebra()->radical();
    Matrix gens(m.dim(), 0, m.prime());
    for (int c = 0; c < J.cols(); ++c) gens = Matrix::hstack(gens, m.act(J.select_columns({c})));
    return submodule(m, image_basis(gens));
}

Module direct_sum(const Module& a, const Module& b) {
    std::vector<Matrix> act;
    const std::uint32_t p = a.prime();
    for (int i = 0; i < a.algebra()->dim(); ++i)
        act.push_back(Matrix::block2x2(a.action(i), Matrix(a.dim(), b.dim(), p),
                                       Matrix(b.dim(), a.dim(), p), b.action(i)));
    return Module(a.algebra(), std::move(act), true);
}

Module op_dual(const Module& m, const AlgebraPtr& op_alg) {
    std::vector<Matrix> act;
    for (int i = 0; i < m.algebra()->dim(); ++i) act.push_back(m.action(i).transpose());
    return Module(op_alg, std::move(act), true);
}

ModuleMorphism indecomposable_projective(const AlgebraPtr& alg, int idx) {
    if (!alg->has_idempotents()) throw UnsupportedError("algebra carries no declared idempotents");
    Module reg = regular_module(alg);
    // A e_i = image of right multiplication by e_i
    Matrix img = image_basis(alg->right_mult(alg->idempotents()[idx]));
    return submodule(reg, img);
}

Module simple_module(const AlgebraPtr& alg, int idx) {
    ModuleMorphism inc = indecomposable_projective(alg, idx);
    ModuleMorphism rad = radical_of_module(inc.source);
    return quotient_module(inc.source, rad.matrix).target;
}

Module trivial_module(const AlgebraPtr& alg) {
    if (alg->idempotents().size() != 1)
        throw UnsupportedError("trivial_module expects a local algebra");
    return simple_module(alg, 0);
}

ProjectiveCover projective_cover(const Module& m) {
    const AlgebraPtr& alg = m.algebra();
    if (!alg->has_idempotents())
        throw UnsupportedError("projective cover requires declared primitive idempotents");
    const std::uint32_t p = m.prime();
    const int nproj = static_cast<int>(alg->idempotents().size());

    std::vector<ModuleMorphism> projs;
    for (int i = 0; i < nproj; ++i) projs.push_back(indecomposable_projective(alg, i));

    Matrix radM = radical_of_module(m).matrix;  // columns span J*M
    // covered = J*M + images added so far; grow until it is all of M
    Matrix covered = radM;
    Module cover_mod = Module::zero(alg);
    Matrix cover_map(m.dim(), 0, p);
    std::vector<int> used;

    for (int i = 0; i < nproj; ++i) {
        // Hom(A e_i, M) corresponds to e_i * M: phi_v(a e_i) = a e_i v
        Matrix ei_m = image_basis(m.act(alg->idempotents()[i]));
        for (int c = 0; c < ei_m.cols(); ++c) {
            Matrix v = ei_m.select_columns({c});
            // candidate hom image: A e_i v = span of rho(b_j) v restricted to the summand basis
            const Module& Pi = projs[i].source;
            const Matrix& incl = projs[i].matrix;  // dim(A) x dim(Pi)
            // phi: Pi -> M on the chosen basis of Pi: basis vector p (coeff col in A) acts on v
            Matrix phi(m.dim(), Pi.dim(), p);
            for (int j = 0; j < Pi.dim(); ++j) {
                Matrix pj = incl.select_columns({j});  // element of A
                Matrix img = m.act(pj) * v;
                for (int r = 0; r < m.dim(); ++r) phi.set(r, j, img.at(r, 0));
            }
            // does phi add anything modulo J*M + current?
            Matrix test = Matrix::hstack(covered, phi);
            if (rank(test) == rank(covered)) continue;
            covered = image_basis(test);
            cover_mod = used.empty() ? Pi : direct_sum(cover_mod, Pi);
            cover_map = Matrix::hstack(cover_map, phi);
            used.push_back(i);
            if (rank(covered) == m.dim()) break;
        }
        if (!used.empty() && rank(covered) == m.dim()) break;
    }

    if (m.dim() > 0 && rank(covered) != m.dim())
        throw ValidationError("projective cover construction failed to reach the top");
    ModuleMorphism f{cover_mod, m, cover_map};
    return {f, used};
}

Module syzygy(const Module& m, int n) {
    if (n < 0) throw ValidationError("syzygy index must be nonnegative");
    Module cur = m;
    for (int k = 0; k < n; ++k) {
        ProjectiveCover pc = projective_cover(cur);
        Matrix ker = kernel_basis(pc.map.matrix);
        cur = submodule(pc.map.source, ker).source;
    }
    return cur;
}

std::vector<Matrix> hom_space(const Module& m, const Module& n) {
    const std::uint32_t p = m.prime();
    const int rm = m.dim(), rn = n.dim();
    if (rm == 0 || rn == 0) return {};
    const int d = m.algebra()->dim();
    // unknown F (rn x rm), equations F rho_M(b_i) - rho_N(b_i) F = 0, row-major vec
    Matrix sys(d * rn * rm, rn * rm, p);
    int eq = 0;
    for (int i = 0; i < d; ++i) {
        const Matrix& am = m.action(i);
        const Matrix& an = n.action(i);
        for (int r = 0; r < rn; ++r)
            for (int c = 0; c < rm; ++c) {
                // coefficient of F[r][k] is am[k][c]; of F[l][c] is -an[r][l]
                for (int k = 0; k < rm; ++k)
                    sys.set_int(eq, r * rm + k,
                                sys.at(eq, r * rm + k) + am.at(k, c));
                for (int l = 0; l < rn; ++l)
                    sys.set_int(eq, l * rm + c,
                                static_cast<long long>(sys.at(eq, l * rm + c)) - an.at(r, l));
                ++eq;
            }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<Matrix> basis;
    for (int c = 0; c < ker.cols(); ++c) {
        Matrix f(rn, rm, p);
        for (int r = 0; r < rn; ++r)
            for (int k = 0; k < rm; ++k) f.set(r, k, ker.at(r * rm + k, c));
        basis.push_back(f);
    }
    return basis;
}

StableHom stable_hom(const Module& m, const Module& n) {
    auto homs = hom_space(m, n);
    const std::uint32_t p = m.prime();
    const int hom_dim = static_cast<int>(homs.size());
    if (hom_dim == 0) return {0, {}, 0};

    // maps factoring through a projective = image of Hom(M, P(N)) -> Hom(M, N)
    ProjectiveCover pc = projective_cover(n);
    auto lifts = hom_space(m, pc.map.source);
    const int vec_len = n.dim() * m.dim();
    auto flatten = [&](const Matrix& f) {
        Matrix v(vec_len, 1, p);
        for (int r = 0; r < n.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c) v.set(r * m.dim() + c, 0, f.at(r, c));
        return v;
    };
    Matrix fact(vec_len, 0, p);
    for (const auto& g : lifts) fact = Matrix::hstack(fact, flatten(pc.map.matrix * g));
    fact = image_basis(fact);

    // pivot-based complement inside Hom(M, N)
    Matrix homvecs(vec_len, 0, p);
    for (const auto& f : homs) homvecs = Matrix::hstack(homvecs, flatten(f));
    Matrix ext = Matrix::hstack(fact, homvecs);
    auto piv = rref(ext).pivots;
    std::vector<Matrix> reps;
    for (int c : piv)
        if (c >= fact.cols()) reps.push_back(homs[c - fact.cols()]);
    return {static_cast<int>(reps.size()), reps, hom_dim};
}

bool is_projective(const Module& m) {
    if (m.dim() == 0) return true;
    ProjectiveCover pc = projective_cover(m);
    return pc.map.source.dim() == m.dim();
}

bool is_semisimple_module(const Module& m) { return radical_of_module(m).source.dim() == 0; }

bool modules_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
    if (a.dim() != b.dim()) return false;
    if (a.dim() == 0) return true;
    auto homs = hom_space(a, b);
    if (homs.empty()) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, a.prime() - 1);
    for (int trial = 0; trial < 24; ++trial) {
        Matrix f(b.dim(), a.dim(), a.prime());
        for (const auto& h : homs) f = f + h.scaled(dist(rng));
        if (inverse(f)) return true;
    }
    return false;
}

}  // namespace homcat
