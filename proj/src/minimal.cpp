#include "homcat/minimal.hpp"

#include <numeric>

namespace homcat {

namespace {

Matrix radical_inclusion(const Module& m) { return radical_of_module(m).matrix; }

bool image_in_radical(const Matrix& d, const Module& target) {
    if (d.rows() == 0 || d.cols() == 0 || d.is_zero()) return true;
    return solve(radical_inclusion(target), d).has_value();
}

/// decomposition of a projective module into indecomposable projectives:
/// iso : (+) P_{idx} -> M with block column ranges
struct Decomp {
    Module sum;
    Matrix iso;
    Matrix iso_inv;
    std::vector<int> idx;    // idempotent type per summand
    std::vector<int> start;  // column offset per summand, with a sentinel at the end
};

Decomp decompose_projective(const Module& m) {
    ProjectiveCover pc = projective_cover(m);
    if (pc.map.source.dim() != m.dim())
        throw UnsupportedError("term is not projective; minimal models need complexes of projectives");
    Decomp d;
    d.sum = pc.map.source;
    d.iso = pc.map.matrix;
    auto inv = inverse(d.iso);
    if (!inv) throw ValidationError("projective decomposition is not invertible");
    d.iso_inv = *inv;
    d.idx = pc.summand_indices;
    int off = 0;
    d.start.push_back(0);
    for (std::size_t k = 0; k < d.idx.size(); ++k) {
        off += indecomposable_projective(m.algebra(), d.idx[k]).source.dim();
        d.start.push_back(off);
    }
    return d;
}

struct BlockPick {
    int s, t;
    std::vector<int> src_s, src_r, tgt_t, tgt_r;
    Matrix a, b, c, e, ainv;
};

/// an invertible component P_i -> P_i of D, in decomposed coordinates
std::optional<BlockPick> find_invertible_block(const Matrix& D, const Decomp& src, const Decomp& tgt) {
    for (std::size_t s = 0; s < src.idx.size(); ++s)
        for (std::size_t t = 0; t < tgt.idx.size(); ++t) {
            if (src.idx[s] != tgt.idx[t]) continue;
            std::vector<int> sc, tr;
            for (int c = src.start[s]; c < src.start[s + 1]; ++c) sc.push_back(c);
            for (int r = tgt.start[t]; r < tgt.start[t + 1]; ++r) tr.push_back(r);
            Matrix blk = D.select_rows(tr).select_columns(sc);
            auto inv = inverse(blk);
            if (!inv) continue;
            BlockPick p;
            p.s = static_cast<int>(s);
            p.t = static_cast<int>(t);
            p.src_s = sc;
            p.tgt_t = tr;
            for (int c = 0; c < D.cols(); ++c)
                if (c < src.start[s] || c >= src.start[s + 1]) p.src_r.push_back(c);
            for (int r = 0; r < D.rows(); ++r)
                if (r < tgt.start[t] || r >= tgt.start[t + 1]) p.tgt_r.push_back(r);
            p.a = blk;
            p.ainv = *inv;
            p.b = D.select_rows(tr).select_columns(p.src_r);
            p.c = D.select_rows(p.tgt_r).select_columns(sc);
            p.e = D.select_rows(p.tgt_r).select_columns(p.src_r);
            return p;
        }
    return std::nullopt;
}

Module remaining_module(const AlgebraPtr& alg, const Decomp& d, int removed) {
    Module m = Module::zero(alg);
    bool first = true;
    for (std::size_t k = 0; k < d.idx.size(); ++k) {
        if (static_cast<int>(k) == removed) continue;
        Module p = indecomposable_projective(alg, d.idx[k]).source;
        m = first ? p : direct_sum(m, p);
        first = false;
    }
    return m;
}

Matrix row_projection(const std::vector<int>& rows, int from_dim, std::uint32_t p) {
    Matrix m(static_cast<int>(rows.size()), from_dim, p);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set(static_cast<int>(i), rows[i], 1);
    return m;
}

Matrix col_inclusion(const std::vector<int>& cols, int into_dim, std::uint32_t p) {
    return row_projection(cols, into_dim, p).transpose();
}

struct StepMaps {
    ChainMap fwd;  // old -> new
    ChainMap bwd;  // new -> old
};

struct WindowState {
    AlgebraPtr alg;
    int lo = 0;
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    std::optional<Tail> left, right;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    Complex to_complex() const { return Complex(alg, lo, terms, diffs, left, right, true); }
};

std::optional<StepMaps> cancel_window_pair(WindowState& st, int n) {
    const std::uint32_t p = st.alg->prime();
    const int k = n - st.lo;
    Decomp src = decompose_projective(st.terms[k]);
    Decomp tgt = decompose_projective(st.terms[k + 1]);
    Matrix D = tgt.iso_inv * st.diffs[k] * src.iso;
    auto pick = find_invertible_block(D, src, tgt);
    if (!pick) return std::nullopt;

    Complex before = st.to_complex();

    Matrix pi_r = row_projection(pick->src_r, D.cols(), p);
    Matrix pi_u = row_projection(pick->tgt_r, D.rows(), p);
    Matrix pi_t = row_projection(pick->tgt_t, D.rows(), p);
    Matrix iota_r = col_inclusion(pick->src_r, D.cols(), p);
    Matrix iota_u = col_inclusion(pick->tgt_r, D.rows(), p);
    Matrix iota_s = col_inclusion(pick->src_s, D.cols(), p);

    Matrix f_n = pi_r * src.iso_inv;
    Matrix f_n1 = (pi_u - pick->c * (pick->ainv * pi_t)) * tgt.iso_inv;
    Matrix g_n = src.iso * (iota_r - iota_s * (pick->ainv * pick->b));
    Matrix g_n1 = tgt.iso * iota_u;

    if (k > 0)
        st.diffs[k - 1] = f_n * st.diffs[k - 1];
    else if (st.left)
        st.left->seam = f_n * st.left->seam;
    if (k + 1 < static_cast<int>(st.diffs.size()))
        st.diffs[k + 1] = st.diffs[k + 1] * g_n1;
    else if (st.right)
        st.right->seam = st.right->seam * g_n1;
    st.diffs[k] = pick->e - pick->c * (pick->ainv * pick->b);
    st.terms[k] = remaining_module(st.alg, src, pick->s);
    st.terms[k + 1] = remaining_module(st.alg, tgt, pick->t);

    Complex after = st.to_complex();
    auto fwd_fn = [=](int d) -> Matrix {
        if (d == n) return f_n;
        if (d == n + 1) return f_n1;
        return Matrix::identity(before.term_dim(d), p);
    };
    auto bwd_fn = [=](int d) -> Matrix {
        if (d == n) return g_n;
        if (d == n + 1) return g_n1;
        return Matrix::identity(before.term_dim(d), p);
    };
    return StepMaps{ChainMap::from_formula(before, after, fwd_fn),
                    ChainMap::from_formula(after, before, bwd_fn)};
}

/// periodic cancellation at a pair (j, j+1) strictly inside a tail block;
/// the pair at position (q-1, 0) is reached by rotating the window first
std::optional<StepMaps> cancel_tail_pair(WindowState& st, bool left_side) {
    Tail& tail = left_side ? *st.left : *st.right;
    const int q = tail.period;
    const std::uint32_t p = st.alg->prime();

    std::vector<Decomp> dec;
    dec.reserve(q);
    for (int j = 0; j < q; ++j) dec.push_back(decompose_projective(tail.mods[j]));

    for (int j = 0; j + 1 < q; ++j) {
        Matrix D = dec[j + 1].iso_inv * tail.diffs[j] * dec[j].iso;
        auto pick = find_invertible_block(D, dec[j], dec[j + 1]);
        if (!pick) continue;

        Complex before = st.to_complex();
        Matrix pi_r = row_projection(pick->src_r, D.cols(), p);
        Matrix pi_u = row_projection(pick->tgt_r, D.rows(), p);
        Matrix pi_t = row_projection(pick->tgt_t, D.rows(), p);
        Matrix iota_r = col_inclusion(pick->src_r, D.cols(), p);
        Matrix iota_u = col_inclusion(pick->tgt_r, D.rows(), p);
        Matrix iota_s = col_inclusion(pick->src_s, D.cols(), p);

        Matrix f_j = pi_r * dec[j].iso_inv;
        Matrix f_j1 = (pi_u - pick->c * (pick->ainv * pi_t)) * dec[j + 1].iso_inv;
        Matrix g_j = dec[j].iso * (iota_r - iota_s * (pick->ainv * pick->b));
        Matrix g_j1 = dec[j + 1].iso * iota_u;

        Tail nt = tail;
        nt.mods[j] = remaining_module(st.alg, dec[j], pick->s);
        nt.mods[j + 1] = remaining_module(st.alg, dec[j + 1], pick->t);
        nt.diffs[j] = pick->e - pick->c * (pick->ainv * pick->b);
        const int prev = (j - 1 + q) % q;
        const int next = j + 1;
        if (prev == next) {
            nt.diffs[prev] = f_j * (tail.diffs[prev] * g_j1);  // period 2: both roles at once
        } else {
            nt.diffs[prev] = f_j * tail.diffs[prev];
            nt.diffs[next] = tail.diffs[next] * g_j1;
        }
        // a left seam leaves mods[q-1]; a right seam lands in mods[0]
        if (left_side && next == q - 1) nt.seam = tail.seam * g_j1;
        if (!left_side && j == 0) nt.seam = f_j * tail.seam;
        tail = nt;

        Complex after = st.to_complex();
        const int lo = st.lo;
        const int hi = st.hi();
        auto fwd_fn = [=](int d) -> Matrix {
            bool in_tail = left_side ? (d < lo) : (d > hi);
            if (in_tail) {
                int pos = left_side ? (((d - lo) % q) + q) % q : (((d - hi - 1) % q) + q) % q;
                if (pos == j) return f_j;
                if (pos == j + 1) return f_j1;
            }
            return Matrix::identity(before.term_dim(d), p);
        };
        auto bwd_fn = [=](int d) -> Matrix {
            bool in_tail = left_side ? (d < lo) : (d > hi);
            if (in_tail) {
                int pos = left_side ? (((d - lo) % q) + q) % q : (((d - hi - 1) % q) + q) % q;
                if (pos == j) return g_j;
                if (pos == j + 1) return g_j1;
            }
            return Matrix::identity(before.term_dim(d), p);
        };
        return StepMaps{ChainMap::from_formula(before, after, fwd_fn),
                        ChainMap::from_formula(after, before, bwd_fn)};
    }
    return std::nullopt;
}

Tail doubled(const Tail& t) {
    if (t.period >= 2) return t;
    Tail d;
    d.period = 2;
    d.mods = {t.mods[0], t.mods[0]};
    d.diffs = {t.diffs[0], t.diffs[0]};
    d.seam = t.seam;
    return d;
}

bool tail_has_invertible(const WindowState& st, bool left_side) {
    const Tail& tail = left_side ? *st.left : *st.right;
    for (int j = 0; j < tail.period; ++j) {
        int next = (j + 1) % tail.period;
        if (!image_in_radical(tail.diffs[j], tail.mods[next])) return true;
    }
    return false;
}

WindowState make_state(const Complex& x) {
    WindowState st;
    st.alg = x.algebra();
    st.lo = x.lo();
    for (int n = x.lo(); n <= x.hi(); ++n) {
        st.terms.push_back(x.term(n));
        if (n < x.hi()) st.diffs.push_back(x.diff(n));
    }
    st.left = x.left_tail();
    st.right = x.right_tail();
    if (st.left) st.left = doubled(*st.left);
    if (st.right) st.right = doubled(*st.right);
    return st;
}

}  // namespace

bool all_terms_projective(const Complex& x) {
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (!is_projective(x.term(n))) return false;
    if (x.left_tail())
        for (const auto& m : x.left_tail()->mods)
            if (!is_projective(m)) return false;
    if (x.right_tail())
        for (const auto& m : x.right_tail()->mods)
            if (!is_projective(m)) return false;
    return true;
}

bool is_minimal(const Complex& x) {
    for (int n = x.lo() - 2 * x.left_period() - 1; n <= x.hi() + 2 * x.right_period(); ++n)
        if (!image_in_radical(x.diff(n), x.term(n + 1))) return false;
    return true;
}

MinimalModel minimal_model(const Complex& input, const SessionConfig& cfg) {
    Complex x = input.trimmed();
    if (!all_terms_projective(x))
        throw UnsupportedError("minimal models are only computed for complexes of projectives");
    WindowState st = make_state(x);
    Complex start = st.to_complex();

    ChainMap fwd = ChainMap::from_formula(x, start, [&](int n) {
        return Matrix::identity(x.term_dim(n), x.prime());
    });
    ChainMap bwd = ChainMap::from_formula(start, x, [&](int n) {
        return Matrix::identity(x.term_dim(n), x.prime());
    });
    auto apply = [&](StepMaps&& sm) {
        fwd = compose(sm.fwd, fwd);
        bwd = compose(bwd, sm.bwd);
    };

    // tails first; rotate one degree into the window whenever the offending pair
    // straddles the block boundary
    for (bool left : {true, false}) {
        int guard = 0;
        while ((left ? st.left.has_value() : st.right.has_value()) && tail_has_invertible(st, left)) {
            if (auto sm = cancel_tail_pair(st, left)) {
                apply(std::move(*sm));
                continue;
            }
            if (++guard > 64) throw UnsupportedError("tail minimization did not terminate");
            Complex cur = st.to_complex();
            st = make_state(left ? cur.unrolled_left(st.lo - 1) : cur.unrolled_right(st.hi() + 1));
        }
    }

    // window and seam cancellation
    int unrolls = 0;
    for (;;) {
        Complex cur = st.to_complex();
        int bad = 0;
        bool found = false;
        for (int n = st.lo - 1; n <= st.hi(); ++n) {
            if (!image_in_radical(cur.diff(n), cur.term(n + 1))) {
                bad = n;
                found = true;
                break;
            }
        }
        if (!found) break;
        if (bad == st.lo - 1) {
            if (++unrolls > 16) throw UnsupportedError("seam cancellation did not settle");
            st = make_state(cur.unrolled_left(st.lo - st.left->period));
            continue;
        }
        if (bad == st.hi()) {
            if (++unrolls > 16) throw UnsupportedError("seam cancellation did not settle");
            st = make_state(cur.unrolled_right(st.hi() + st.right->period));
            continue;
        }
        auto sm = cancel_window_pair(st, bad);
        if (!sm) throw ValidationError("non-radical differential without an invertible component");
        apply(std::move(*sm));
    }

    Complex model = st.to_complex().trimmed();
    ChainMap to_model = ChainMap::from_formula(x, model, [&](int n) { return fwd.component(n); });
    ChainMap from_model = ChainMap::from_formula(model, x, [&](int n) { return bwd.component(n); });

    if (!is_chain_map(to_model) || !is_chain_map(from_model))
        throw ValidationError("minimal model maps fail the chain condition");
    ChainMap round = compose(to_model, from_model) - ChainMap::identity(model);
    if (!null_homotopy(round, cfg))
        throw ValidationError("minimal model certificate failed on the model side");
    ChainMap back = compose(from_model, to_model) - ChainMap::identity(x);
    if (!null_homotopy(back, cfg))
        throw ValidationError("minimal model certificate failed on the source side");
    if (!is_minimal(model)) throw ValidationError("minimization left a non-radical differential");
    return {model, to_model, from_model};
}

}  // namespace homcat
