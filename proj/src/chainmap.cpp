#include "homcat/chainmap.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace homcat {

namespace {

struct Span {
    int u_lo, u_hi;  // unknown component range
    int ll, lr;      // periods used for lifting on each side
    bool left_periodic, right_periodic;
};

Span combined_span(const Complex& x, const Complex& y, int margin) {
    Span s;
    s.left_periodic = x.has_left_tail() || y.has_left_tail();
    s.right_periodic = x.has_right_tail() || y.has_right_tail();
    s.ll = std::lcm(x.left_period(), y.left_period());
    s.lr = std::lcm(x.right_period(), y.right_period());
    s.u_lo = std::min(x.lo(), y.lo()) - (s.left_periodic ? (margin + 1) * s.ll : 1);
    s.u_hi = std::max(x.hi(), y.hi()) + (s.right_periodic ? (margin + 1) * s.lr : 1);
    return s;
}

int lift_into(int n, int lo, int hi, int ll, int lr) {
    if (n < lo) {
        int k = (lo - n + ll - 1) / ll;
        return n + k * ll;
    }
    if (n > hi) {
        int k = (n - hi + lr - 1) / lr;
        return n - k * lr;
    }
    return n;
}

/// Linear systems whose unknowns are module maps expressed in hom-space bases
/// (one scalar per basis element) and whose equations are matrix identities
/// sum_t A_t f_t B_t = C. Keeping the unknowns inside Hom_A from the start makes
/// every solution degreewise A-linear and keeps the systems small.
class BlockSystem {
public:
    explicit BlockSystem(std::uint32_t p) : p_(p) {}

    int add_var(std::vector<Matrix> basis, int rows, int cols) {
        var_basis_.push_back(std::move(basis));
        var_shape_.emplace_back(rows, cols);
        var_off_.push_back(ncols_);
        ncols_ += static_cast<int>(var_basis_.back().size());
        return static_cast<int>(var_basis_.size()) - 1;
    }

    int add_eq(int rows, int cols) {
        eq_shape_.emplace_back(rows, cols);
        eq_off_.push_back(nrows_);
        nrows_ += rows * cols;
        return static_cast<int>(eq_shape_.size()) - 1;
    }

    void finalize() {
        g_ = Matrix(nrows_, ncols_, p_);
        rhs_ = Matrix(nrows_, 1, p_);
    }

    // contribute sign * A * f_var * B to the equation block
    void add_term(int eq, int var, const Matrix& a, const Matrix& b, bool negate) {
        auto [er, ec] = eq_shape_[eq];
        auto [vr, vc] = var_shape_[var];
        if (a.cols() != vr || b.rows() != vc || a.rows() != er || b.cols() != ec)
            throw ValidationError("block system term has inconsistent shapes");
        const int eo = eq_off_[eq], vo = var_off_[var];
        for (std::size_t k = 0; k < var_basis_[var].size(); ++k) {
            Matrix m = a * var_basis_[var][k] * b;
            for (int i = 0; i < er; ++i)
                for (int j = 0; j < ec; ++j) {
                    if (m.at(i, j) == 0) continue;
                    long long cur = g_.at(eo + i * ec + j, vo + static_cast<int>(k));
                    g_.set_int(eo + i * ec + j, vo + static_cast<int>(k),
                               negate ? cur - m.at(i, j) : cur + m.at(i, j));
                }
        }
    }

    void add_rhs(int eq, const Matrix& c) {
        auto [er, ec] = eq_shape_[eq];
        if (c.rows() != er || c.cols() != ec) throw ValidationError("block system rhs shape mismatch");
        const int eo = eq_off_[eq];
        for (int i = 0; i < er; ++i)
            for (int j = 0; j < ec; ++j)
                rhs_.set_int(eo + i * ec + j, 0, static_cast<long long>(rhs_.at(eo + i * ec + j, 0)) + c.at(i, j));
    }

    int unknown_count() const { return ncols_; }

    Matrix kernel() const { return kernel_basis(g_); }

    std::optional<Matrix> particular() const { return solve(g_, rhs_); }

    Matrix extract(const Matrix& flat, int var, int col = 0) const {
        auto [vr, vc] = var_shape_[var];
        Matrix m(vr, vc, p_);
        const int vo = var_off_[var];
        for (std::size_t k = 0; k < var_basis_[var].size(); ++k) {
            std::uint32_t c = flat.at(vo + static_cast<int>(k), col);
            if (c) m = m + var_basis_[var][k].scaled(c);
        }
        return m;
    }

private:
    std::uint32_t p_;
    int nrows_ = 0, ncols_ = 0;
    std::vector<std::vector<Matrix>> var_basis_;
    std::vector<std::pair<int, int>> var_shape_, eq_shape_;
    std::vector<int> var_off_, eq_off_;
    Matrix g_, rhs_;
};

}  // namespace

ChainMap::ChainMap(Complex source, Complex target, int lo, std::vector<Matrix> comps, int lp, int rp)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), comps_(std::move(comps)), lp_(lp),
      rp_(rp) {
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        int n = lo_ + static_cast<int>(i);
        if (comps_[i].rows() != target_.term_dim(n) || comps_[i].cols() != source_.term_dim(n)) {
            std::ostringstream os;
            os << "chain map component at degree " << n << " has wrong shape";
            throw ValidationError(os.str());
        }
    }
}

ChainMap ChainMap::zero(const Complex& source, const Complex& target) {
    return from_formula(source, target, [&](int n) {
        return Matrix(target.term_dim(n), source.term_dim(n), source.prime());
    });
}

ChainMap ChainMap::identity(const Complex& x) {
    return from_formula(x, x, [&](int n) { return Matrix::identity(x.term_dim(n), x.prime()); });
}

ChainMap ChainMap::from_formula(const Complex& source, const Complex& target,
                                const std::function<Matrix(int)>& fn) {
    Span s = combined_span(source, target, default_config().settling_margin + 1);
    std::vector<Matrix> comps;
    for (int n = s.u_lo; n <= s.u_hi; ++n) comps.push_back(fn(n));
    return ChainMap(source, target, s.u_lo, std::move(comps), s.ll, s.lr);
}

namespace {

/// evaluate over the union of two maps' cores so no non-periodic content is lost
template <typename F>
ChainMap map_on_union_core(const Complex& source, const Complex& target, int lo1, int hi1, int lo2,
                           int hi2, int ll, int lr, F&& fn) {
    int lo = std::min(lo1, lo2), hi = std::max(hi1, hi2);
    std::vector<Matrix> comps;
    for (int n = lo; n <= hi; ++n) comps.push_back(fn(n));
    return ChainMap(source, target, lo, std::move(comps), ll, lr);
}

}  // namespace

Matrix ChainMap::component(int n) const {
    const int tr = target_.term_dim(n), sc = source_.term_dim(n);
    if (n >= lo_ && n <= hi()) return comps_[n - lo_];
    if (tr == 0 || sc == 0) return Matrix(tr, sc, source_.prime());
    int m = lift_into(n, lo_, hi(), lp_, rp_);
    const Matrix& c = comps_[m - lo_];
    if (c.rows() != tr || c.cols() != sc)
        throw ValidationError("chain map component requested outside its periodic zone");
    return c;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    return map_on_union_core(source_, target_, lo_, hi(), o.lo(), o.hi(), std::lcm(lp_, o.lp_),
                             std::lcm(rp_, o.rp_),
                             [&](int n) { return component(n) + o.component(n); });
}

ChainMap ChainMap::operator-(const ChainMap& o) const {
    return map_on_union_core(source_, target_, lo_, hi(), o.lo(), o.hi(), std::lcm(lp_, o.lp_),
                             std::lcm(rp_, o.rp_),
                             [&](int n) { return component(n) - o.component(n); });
}

ChainMap ChainMap::negated() const {
    return map_on_union_core(source_, target_, lo_, hi(), lo_, hi(), lp_, rp_,
                             [&](int n) { return component(n).negated(); });
}

Homotopy::Homotopy(Complex source, Complex target, int lo, std::vector<Matrix> comps, int lp, int rp)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), comps_(std::move(comps)), lp_(lp),
      rp_(rp) {}

Matrix Homotopy::component(int n) const {
    const int tr = target_.term_dim(n - 1), sc = source_.term_dim(n);
    if (n >= lo_ && n <= hi()) return comps_[n - lo_];
    if (tr == 0 || sc == 0) return Matrix(tr, sc, source_.prime());
    int m = lift_into(n, lo_, hi(), lp_, rp_);
    const Matrix& c = comps_[m - lo_];
    if (c.rows() != tr || c.cols() != sc)
        throw ValidationError("homotopy component requested outside its periodic zone");
    return c;
}

ChainMap Homotopy::boundary() const {
    return map_on_union_core(source_, target_, lo_, hi(), lo_, hi(), lp_, rp_, [&](int n) {
        return target_.diff(n - 1) * component(n) + component(n + 1) * source_.diff(n);
    });
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    return map_on_union_core(f.source(), g.target(), f.lo(), f.hi(), g.lo(), g.hi(),
                             std::lcm(f.left_period(), g.left_period()),
                             std::lcm(f.right_period(), g.right_period()),
                             [&](int n) { return g.component(n) * f.component(n); });
}

std::optional<int> chain_map_defect(const ChainMap& f) {
    Span s = combined_span(f.source(), f.target(), 1);
    s.u_lo = std::min(s.u_lo, f.lo());
    s.u_hi = std::max(s.u_hi, f.hi());
    for (int n = s.u_lo - s.ll; n <= s.u_hi + s.lr; ++n) {
        Matrix lhs = f.target().diff(n) * f.component(n);
        Matrix rhs = f.component(n + 1) * f.source().diff(n);
        if (!(lhs == rhs)) return n;
    }
    return std::nullopt;
}

bool is_chain_map(const ChainMap& f) { return !chain_map_defect(f).has_value(); }

namespace {

struct ChainMapSystem {
    Span span;
    BlockSystem sys;
    std::vector<int> vars;  // var id per degree in [span.u_lo, span.u_hi]

    ChainMapSystem(const Complex& x, const Complex& y, int margin) : span(combined_span(x, y, margin)), sys(x.prime()) {
        for (int n = span.u_lo; n <= span.u_hi; ++n)
            vars.push_back(sys.add_var(hom_space(x.term(n), y.term(n)), y.term_dim(n), x.term_dim(n)));
    }

    int var_at(int n) const {
        return vars[lift_into(n, span.u_lo, span.u_hi, span.ll, span.lr) - span.u_lo];
    }
};

/// equations d_Y f - f d_X = rhs over the sufficient degree range
void add_chain_equations(ChainMapSystem& cs, const Complex& x, const Complex& y,
                         const std::function<Matrix(int)>* rhs) {
    std::vector<std::pair<int, int>> eqs;
    for (int n = cs.span.u_lo - cs.span.ll; n <= cs.span.u_hi + cs.span.lr; ++n) {
        int e = cs.sys.add_eq(y.term_dim(n + 1), x.term_dim(n));
        eqs.emplace_back(n, e);
    }
    cs.sys.finalize();
    for (auto [n, e] : eqs) {
        if (y.term_dim(n + 1) == 0 || x.term_dim(n) == 0) continue;
        cs.sys.add_term(e, cs.var_at(n), y.diff(n), Matrix::identity(x.term_dim(n), x.prime()), false);
        cs.sys.add_term(e, cs.var_at(n + 1), Matrix::identity(y.term_dim(n + 1), y.prime()), x.diff(n), true);
        if (rhs) cs.sys.add_rhs(e, (*rhs)(n));
    }
}

ChainMap chain_map_from_flat(const ChainMapSystem& cs, const Complex& x, const Complex& y,
                             const Matrix& flat, int col) {
    std::vector<Matrix> comps;
    for (int n = cs.span.u_lo; n <= cs.span.u_hi; ++n)
        comps.push_back(cs.sys.extract(flat, cs.vars[n - cs.span.u_lo], col));
    return ChainMap(x, y, cs.span.u_lo, std::move(comps), cs.span.ll, cs.span.lr);
}

struct HomotopySystem {
    Span span;
    BlockSystem sys;
    std::vector<int> vars;

    HomotopySystem(const Complex& x, const Complex& y, int margin) : span(combined_span(x, y, margin)), sys(x.prime()) {
        for (int n = span.u_lo; n <= span.u_hi; ++n)
            vars.push_back(
                sys.add_var(hom_space(x.term(n), y.term(n - 1)), y.term_dim(n - 1), x.term_dim(n)));
    }

    int var_at(int n) const {
        return vars[lift_into(n, span.u_lo, span.u_hi, span.ll, span.lr) - span.u_lo];
    }
};

/// equations d_Y h + h d_X = rhs
void add_homotopy_equations(HomotopySystem& hs, const Complex& x, const Complex& y,
                            const std::function<Matrix(int)>& rhs) {
    std::vector<std::pair<int, int>> eqs;
    for (int n = hs.span.u_lo - hs.span.ll; n <= hs.span.u_hi + hs.span.lr; ++n) {
        int e = hs.sys.add_eq(y.term_dim(n), x.term_dim(n));
        eqs.emplace_back(n, e);
    }
    hs.sys.finalize();
    for (auto [n, e] : eqs) {
        if (y.term_dim(n) == 0 || x.term_dim(n) == 0) continue;
        hs.sys.add_term(e, hs.var_at(n), y.diff(n - 1), Matrix::identity(x.term_dim(n), x.prime()), false);
        hs.sys.add_term(e, hs.var_at(n + 1), Matrix::identity(y.term_dim(n), y.prime()), x.diff(n), false);
        hs.sys.add_rhs(e, rhs(n));
    }
}

Homotopy homotopy_from_flat(const HomotopySystem& hs, const Complex& x, const Complex& y,
                            const Matrix& flat, int col) {
    std::vector<Matrix> comps;
    for (int n = hs.span.u_lo; n <= hs.span.u_hi; ++n)
        comps.push_back(hs.sys.extract(flat, hs.vars[n - hs.span.u_lo], col));
    return Homotopy(x, y, hs.span.u_lo, std::move(comps), hs.span.ll, hs.span.lr);
}

/// tail homology blocks agree up to period expansion; all-zero counts as absent
bool blocks_match(const std::vector<int>& a, const std::vector<int>& b) {
    auto nonzero = [](const std::vector<int>& v) {
        for (int d : v)
            if (d) return true;
        return false;
    };
    bool na = nonzero(a), nb = nonzero(b);
    if (na != nb) return false;
    if (!na) return true;
    int len = std::lcm(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < len; ++i)
        if (a[i % a.size()] != b[i % b.size()]) return false;
    return true;
}

int hom_dim_at_margin(const Complex& x, const Complex& y, int margin) {
    ChainMapSystem cs(x, y, margin);
    add_chain_equations(cs, x, y, nullptr);
    int z = cs.sys.kernel().cols();

    HomotopySystem hs(x, y, margin);
    std::function<Matrix(int)> zero_rhs = [&](int n) {
        return Matrix(y.term_dim(n), x.term_dim(n), x.prime());
    };
    add_homotopy_equations(hs, x, y, zero_rhs);
    int hker = hs.sys.kernel().cols();
    int b = hs.sys.unknown_count() - hker;
    return z - b;
}

}  // namespace

int chain_map_space_dim(const Complex& x, const Complex& y, const SessionConfig& cfg) {
    ChainMapSystem cs(x, y, cfg.settling_margin);
    add_chain_equations(cs, x, y, nullptr);
    return cs.sys.kernel().cols();
}

std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y, const SessionConfig& cfg) {
    ChainMapSystem cs(x, y, cfg.settling_margin);
    add_chain_equations(cs, x, y, nullptr);
    Matrix ker = cs.sys.kernel();
    std::vector<ChainMap> basis;
    for (int c = 0; c < ker.cols(); ++c) basis.push_back(chain_map_from_flat(cs, x, y, ker, c));
    return basis;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f, const SessionConfig& cfg) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    HomotopySystem hs(x, y, cfg.settling_margin);
    std::function<Matrix(int)> rhs = [&](int n) { return f.component(n); };
    add_homotopy_equations(hs, x, y, rhs);
    auto part = hs.sys.particular();
    if (!part) return std::nullopt;
    return homotopy_from_flat(hs, x, y, *part, 0);
}

bool homotopic(const ChainMap& f, const ChainMap& g, const SessionConfig& cfg) {
    return null_homotopy(f - g, cfg).has_value();
}

std::optional<Homotopy> contraction(const Complex& x, const SessionConfig& cfg) {
    return null_homotopy(ChainMap::identity(x), cfg);
}

bool is_contractible(const Complex& x, const SessionConfig& cfg) {
    return contraction(x, cfg).has_value();
}

HomDim homotopy_hom_dim(const Complex& x, const Complex& y, const SessionConfig& cfg) {
    int d0 = hom_dim_at_margin(x, y, cfg.settling_margin);
    bool stable = true;
    if (x.has_left_tail() || x.has_right_tail() || y.has_left_tail() || y.has_right_tail())
        stable = (hom_dim_at_margin(x, y, cfg.settling_margin + 2) == d0);
    return {d0, stable};
}

Complex cone(const ChainMap& f) {
    if (auto d = chain_map_defect(f)) {
        std::ostringstream os;
        os << "cone of a non-chain-map (square fails at degree " << *d << ")";
        throw ValidationError(os.str());
    }
    const Complex& x = f.source();
    const Complex& y = f.target();
    const std::uint32_t p = x.prime();
    auto term_fn = [&](int n) { return direct_sum(x.term(n + 1), y.term(n)); };
    auto diff_fn = [&](int n) {
        return Matrix::block2x2(x.diff(n + 1).negated(), Matrix(x.term_dim(n + 2), y.term_dim(n), p),
                                f.component(n + 1), y.diff(n));
    };
    std::optional<int> lp, rp;
    if (x.has_left_tail() || y.has_left_tail()) lp = std::lcm(x.left_period(), y.left_period());
    if (x.has_right_tail() || y.has_right_tail()) rp = std::lcm(x.right_period(), y.right_period());
    int w_lo = std::min(x.lo() - 1, y.lo());
    int w_hi = std::max(x.hi() - 1, y.hi());
    if (lp) w_lo = std::min(w_lo, f.lo() - 1) - 2 * *lp;
    if (rp) w_hi = std::max(w_hi, f.hi() + 1) + 2 * *rp;
    return build_complex(x.algebra(), w_lo, w_hi, term_fn, diff_fn, lp, rp).trimmed();
}

ChainMap cone_inclusion(const ChainMap& f) {
    Complex c = cone(f);
    const Complex& x = f.source();
    const Complex& y = f.target();
    const std::uint32_t p = x.prime();
    return ChainMap::from_formula(y, c, [&](int n) {
        Matrix m(c.term_dim(n), y.term_dim(n), p);
        // y sits below the x[1]-part
        int off = x.term_dim(n + 1);
        for (int j = 0; j < y.term_dim(n); ++j) m.set(off + j, j, 1);
        return m;
    });
}

ChainMap cone_projection(const ChainMap& f) {
    Complex c = cone(f);
    Complex x1 = shift(f.source(), 1);
    const std::uint32_t p = c.prime();
    return ChainMap::from_formula(c, x1, [&](int n) {
        Matrix m(x1.term_dim(n), c.term_dim(n), p);
        for (int i = 0; i < x1.term_dim(n); ++i) m.set(i, i, 1);
        return m;
    });
}

std::optional<HomotopyEquivalence> homotopy_inverse(const ChainMap& phi, const SessionConfig& cfg) {
    const Complex& c = phi.source();
    const Complex& v = phi.target();
    const std::uint32_t p = c.prime();
    const int margin = cfg.settling_margin;

    // unknowns: psi : V -> C (chain map), H_v : homotopy on V, H_c : homotopy on C
    // equations: chain(psi) = 0; phi psi - dH_v - H_v d = id_V; psi phi - dH_c - H_c d = id_C
    Span sp = combined_span(c, v, margin);
    BlockSystem sys(p);
    std::vector<int> psi_vars, hv_vars, hc_vars;
    for (int n = sp.u_lo; n <= sp.u_hi; ++n) {
        psi_vars.push_back(sys.add_var(hom_space(v.term(n), c.term(n)), c.term_dim(n), v.term_dim(n)));
        hv_vars.push_back(
            sys.add_var(hom_space(v.term(n), v.term(n - 1)), v.term_dim(n - 1), v.term_dim(n)));
        hc_vars.push_back(
            sys.add_var(hom_space(c.term(n), c.term(n - 1)), c.term_dim(n - 1), c.term_dim(n)));
    }
    auto at = [&](const std::vector<int>& vars, int n) {
        return vars[lift_into(n, sp.u_lo, sp.u_hi, sp.ll, sp.lr) - sp.u_lo];
    };

    struct EqRec {
        int kind;  // 0 chain, 1 on V, 2 on C
        int n, id;
    };
    std::vector<EqRec> eqs;
    for (int n = sp.u_lo - sp.ll; n <= sp.u_hi + sp.lr; ++n) {
        eqs.push_back({0, n, sys.add_eq(c.term_dim(n + 1), v.term_dim(n))});
        eqs.push_back({1, n, sys.add_eq(v.term_dim(n), v.term_dim(n))});
        eqs.push_back({2, n, sys.add_eq(c.term_dim(n), c.term_dim(n))});
    }
    sys.finalize();
    for (const auto& e : eqs) {
        int n = e.n;
        if (e.kind == 0) {
            if (c.term_dim(n + 1) == 0 || v.term_dim(n) == 0) continue;
            sys.add_term(e.id, at(psi_vars, n), c.diff(n), Matrix::identity(v.term_dim(n), p), false);
            sys.add_term(e.id, at(psi_vars, n + 1), Matrix::identity(c.term_dim(n + 1), p), v.diff(n), true);
        } else if (e.kind == 1) {
            // phi psi + dH + Hd = id, so the homotopy witnesses id - phi psi
            if (v.term_dim(n) == 0) continue;
            sys.add_term(e.id, at(psi_vars, n), phi.component(n), Matrix::identity(v.term_dim(n), p), false);
            sys.add_term(e.id, at(hv_vars, n), v.diff(n - 1), Matrix::identity(v.term_dim(n), p), false);
            sys.add_term(e.id, at(hv_vars, n + 1), Matrix::identity(v.term_dim(n), p), v.diff(n), false);
            sys.add_rhs(e.id, Matrix::identity(v.term_dim(n), p));
        } else {
            if (c.term_dim(n) == 0) continue;
            sys.add_term(e.id, at(psi_vars, n), Matrix::identity(c.term_dim(n), p), phi.component(n), false);
            sys.add_term(e.id, at(hc_vars, n), c.diff(n - 1), Matrix::identity(c.term_dim(n), p), false);
            sys.add_term(e.id, at(hc_vars, n + 1), Matrix::identity(c.term_dim(n), p), c.diff(n), false);
            sys.add_rhs(e.id, Matrix::identity(c.term_dim(n), p));
        }
    }
    auto part = sys.particular();
    if (!part) return std::nullopt;
    std::vector<Matrix> psi_comps, hv_comps, hc_comps;
    for (int n = sp.u_lo; n <= sp.u_hi; ++n) {
        psi_comps.push_back(sys.extract(*part, psi_vars[n - sp.u_lo]));
        hv_comps.push_back(sys.extract(*part, hv_vars[n - sp.u_lo]));
        hc_comps.push_back(sys.extract(*part, hc_vars[n - sp.u_lo]));
    }
    HomotopyEquivalence eq{
        phi,
        ChainMap(v, c, sp.u_lo, std::move(psi_comps), sp.ll, sp.lr),
        Homotopy(c, c, sp.u_lo, std::move(hc_comps), sp.ll, sp.lr),
        Homotopy(v, v, sp.u_lo, std::move(hv_comps), sp.ll, sp.lr),
    };
    return eq;
}

EquivalenceSearch homotopy_equivalent(const Complex& x, const Complex& y, const SessionConfig& cfg) {
    EquivalenceSearch out;
    // quick obstruction: homology must match degreewise over a shared range
    HomologyProfile px = homology_profile(x), py = homology_profile(y);
    int lo = std::min(px.lo, py.lo), hi = std::max(px.hi, py.hi);
    bool same_h = blocks_match(px.left_block, py.left_block) &&
                  blocks_match(px.right_block, py.right_block);
    if (same_h)
        for (int n = lo; n <= hi && same_h; ++n) same_h = (homology_dim(x, n) == homology_dim(y, n));
    if (!same_h) {
        out.definitive_no = true;
        return out;
    }
    auto basis = chain_map_basis(x, y, cfg);
    if (basis.empty()) {
        if (!x.is_zero_object() || !y.is_zero_object()) return out;
        out.equivalence = homotopy_inverse(ChainMap::zero(x, y), cfg);
        return out;
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, x.prime() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        ChainMap f = ChainMap::zero(x, y);
        for (const auto& b : basis) {
            std::uint32_t c = dist(rng);
            if (c == 0) continue;
            f = f + ChainMap::from_formula(x, y, [&](int n) { return b.component(n).scaled(c); });
        }
        if (auto eq = homotopy_inverse(f, cfg)) {
            out.equivalence = std::move(eq);
            return out;
        }
    }
    return out;
}

Matrix homology_induced_map(const ChainMap& f, int n) {
    HomologyData hx = homology(f.source(), n);
    HomologyData hy = homology(f.target(), n);
    const std::uint32_t p = f.source().prime();
    if (hx.dim == 0 || hy.dim == 0) return Matrix(hy.dim, hx.dim, p);
    Matrix images = f.component(n) * hx.cycle_basis;
    // express in terms of (boundaries | homology reps)
    Matrix basis = Matrix::hstack(hy.boundary_basis, hy.cycle_basis);
    auto sol = solve(basis, images);
    if (!sol) throw ValidationError("induced map does not preserve cycles (not a chain map?)");
    std::vector<int> rows;
    for (int r = hy.boundary_basis.cols(); r < basis.cols(); ++r) rows.push_back(r);
    return sol->select_rows(rows);
}

ChainMap sigma_le(const ChainMap& f, int n) {
    IntelligentLe sx = intelligent_le_with_maps(f.source(), n);
    IntelligentLe sy = intelligent_le_with_maps(f.target(), n);
    const std::uint32_t p = f.source().prime();
    return ChainMap::from_formula(sx.cx, sy.cx, [&](int d) -> Matrix {
        if (d < n + 1) return f.component(d);
        if (d == n + 1) {
            if (sy.top_inclusion.cols() == 0 || sx.top_inclusion.cols() == 0)
                return Matrix(sy.cx.term_dim(d), sx.cx.term_dim(d), p);
            // f maps im(d_X^n) into im(d_Y^n)
            auto sol = solve(sy.top_inclusion, f.component(n + 1) * sx.top_inclusion);
            if (!sol) throw ValidationError("truncating a map that is not a chain map");
            return *sol;
        }
        return Matrix(sy.cx.term_dim(d), sx.cx.term_dim(d), p);
    });
}

ChainMap sigma_ge(const ChainMap& f, int n) {
    Complex sx = intelligent_ge(f.source(), n);
    Complex sy = intelligent_ge(f.target(), n);
    const std::uint32_t p = f.source().prime();
    return ChainMap::from_formula(sx, sy, [&](int d) -> Matrix {
        if (d > n - 1) return f.component(d);
        if (d == n - 1) {
            Matrix bx = sx.diff(n - 1);  // inclusion Im -> X^n
            Matrix by = sy.diff(n - 1);
            if (bx.cols() == 0 || by.cols() == 0) return Matrix(sy.term_dim(d), sx.term_dim(d), p);
            auto sol = solve(by, f.component(n) * bx);
            if (!sol) throw ValidationError("truncating a map that is not a chain map");
            return *sol;
        }
        return Matrix(sy.term_dim(d), sx.term_dim(d), p);
    });
}

ChainMap sigma_cone_comparison(const ChainMap& f, int n) {
    const std::uint32_t p = f.source().prime();
    ChainMap sf = sigma_le(f, n);
    Complex csf = cone(sf);  // cone(sigma f)
    Complex cf = cone(f);
    IntelligentLe sc = intelligent_le_with_maps(cf, n);
    const Complex& target = sc.cx;  // sigma_{<=n} cone(f)
    IntelligentLe sx = intelligent_le_with_maps(f.source(), n);
    IntelligentLe sy = intelligent_le_with_maps(f.target(), n);
    return ChainMap::from_formula(csf, target, [&](int d) -> Matrix {
        if (d < n) {
            // both sides are cone(f) there
            return Matrix::identity(target.term_dim(d), p);
        }
        if (d == n) {
            // Im(d_X^n) (+) Y^n -> X^{n+1} (+) Y^n
            Matrix m(target.term_dim(n), csf.term_dim(n), p);
            const Matrix& bx = sx.top_inclusion;
            for (int i = 0; i < bx.rows(); ++i)
                for (int j = 0; j < bx.cols(); ++j) m.set(i, j, bx.at(i, j));
            int roff = f.source().term_dim(n + 1);
            int coff = bx.cols();
            for (int i = 0; i < f.target().term_dim(n); ++i) m.set(roff + i, coff + i, 1);
            return m;
        }
        if (d == n + 1) {
            // Im(d_Y^n) -> Im(d_cone^n), as y -> (0, y)
            if (sy.top_inclusion.cols() == 0 || sc.top_inclusion.cols() == 0)
                return Matrix(target.term_dim(d), csf.term_dim(d), p);
            Matrix stacked(cf.term_dim(n + 1), sy.top_inclusion.cols(), p);
            int roff = f.source().term_dim(n + 2);
            for (int i = 0; i < sy.top_inclusion.rows(); ++i)
                for (int j = 0; j < sy.top_inclusion.cols(); ++j)
                    stacked.set(roff + i, j, sy.top_inclusion.at(i, j));
            auto sol = solve(sc.top_inclusion, stacked);
            if (!sol) throw ValidationError("comparison target does not contain the boundary image");
            return *sol;
        }
        return Matrix(target.term_dim(d), csf.term_dim(d), p);
    });
}

bool induces_homology_isos(const ChainMap& f) {
    HomologyProfile ps = homology_profile(f.source());
    HomologyProfile pt = homology_profile(f.target());
    if (!blocks_match(ps.left_block, pt.left_block) || !blocks_match(ps.right_block, pt.right_block))
        return false;
    int lo = std::min(ps.lo, pt.lo), hi = std::max(ps.hi, pt.hi);
    for (int n = lo; n <= hi; ++n) {
        int dx = homology_dim(f.source(), n);
        int dy = homology_dim(f.target(), n);
        if (dx != dy) return false;
        if (dx == 0) continue;
        Matrix m = homology_induced_map(f, n);
        if (rank(m) != dx) return false;
    }
    return true;
}

}  // namespace homcat
