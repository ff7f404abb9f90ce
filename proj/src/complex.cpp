#include "homcat/complex.hpp"

#include <numeric>
#include <sstream>

namespace homcat {

namespace {

int mod_floor(int a, int q) {
    int r = a % q;
    return r < 0 ? r + q : r;
}

}  // namespace

Complex::Complex(AlgebraPtr alg, int lo, std::vector<Module> terms, std::vector<Matrix> diffs,
                 std::optional<Tail> left, std::optional<Tail> right, bool trusted)
    : alg_(std::move(alg)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)),
      left_(std::move(left)), right_(std::move(right)) {
    if (terms_.empty()) throw ValidationError("complex window must contain at least one term");
    if (diffs_.size() + 1 != terms_.size()) throw ValidationError("complex needs one differential per adjacent pair");
    zero_ = Module::zero(alg_);
    for (auto* t : {&left_, &right_}) {
        if (!t->has_value()) continue;
        Tail& tail = t->value();
        if (tail.period < 1 || tail.mods.size() != static_cast<std::size_t>(tail.period) ||
            tail.diffs.size() != static_cast<std::size_t>(tail.period))
            throw ValidationError("tail block is malformed");
    }
    if (!trusted) check_d_squared();
}

Complex Complex::zero(AlgebraPtr alg) {
    Module z = Module::zero(alg);
    return Complex(std::move(alg), 0, {z}, {}, std::nullopt, std::nullopt, true);
}

Complex Complex::stalk(const Module& m, int degree) {
    return Complex(m.algebra(), degree, {m}, {}, std::nullopt, std::nullopt, true);
}

const Module& Complex::term(int n) const {
    if (n >= lo_ && n <= hi()) return terms_[n - lo_];
    if (n < lo_) {
        if (!left_) return zero_;
        return left_->mods[mod_floor(n - lo_, left_->period)];
    }
    if (!right_) return zero_;
    return right_->mods[mod_floor(n - hi() - 1, right_->period)];
}

Matrix Complex::diff(int n) const {
    const std::uint32_t p = prime();
    if (n >= lo_ && n < hi()) return diffs_[n - lo_];
    if (n == hi()) {
        if (right_) return right_->seam;
        return Matrix(0, term(n).dim(), p);
    }
    if (n > hi()) {
        if (!right_) return Matrix(0, 0, p);
        return right_->diffs[mod_floor(n - hi() - 1, right_->period)];
    }
    // n < lo
    if (n == lo_ - 1) {
        if (left_) return left_->seam;
        return Matrix(term(lo_).dim(), 0, p);
    }
    if (!left_) return Matrix(0, 0, p);
    return left_->diffs[mod_floor(n - lo_, left_->period)];
}

bool Complex::is_zero_object() const {
    for (int n = lo_; n <= hi(); ++n)
        if (term(n).dim() != 0) return false;
    if (left_)
        for (const auto& m : left_->mods)
            if (m.dim() != 0) return false;
    if (right_)
        for (const auto& m : right_->mods)
            if (m.dim() != 0) return false;
    return true;
}

bool Complex::same_presentation(const Complex& o) const {
    if (lo_ != o.lo_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!terms_[i].same_presentation(o.terms_[i])) return false;
    for (std::size_t i = 0; i < diffs_.size(); ++i)
        if (!(diffs_[i] == o.diffs_[i])) return false;
    auto tails_equal = [](const std::optional<Tail>& a, const std::optional<Tail>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        if (a->period != b->period || !(a->seam == b->seam)) return false;
        for (int j = 0; j < a->period; ++j)
            if (!a->mods[j].same_presentation(b->mods[j]) || !(a->diffs[j] == b->diffs[j])) return false;
        return true;
    };
    return tails_equal(left_, o.left_) && tails_equal(right_, o.right_);
}

void Complex::check_d_squared() const {
    const int ql = left_period(), qr = right_period();
    const int from = lo_ - 2 * ql - 2;
    const int to = hi() + 2 * qr + 2;
    for (int n = from; n <= to; ++n) {
        Matrix a = diff(n);
        Matrix b = diff(n + 1);
        if (a.cols() != term(n).dim() || a.rows() != term(n + 1).dim()) {
            std::ostringstream os;
            os << "differential at degree " << n << " has shape " << a.rows() << "x" << a.cols()
               << ", expected " << term(n + 1).dim() << "x" << term(n).dim();
            throw ValidationError(os.str());
        }
        if (!(b * a).is_zero()) {
            std::ostringstream os;
            os << "d^2 != 0 at degree " << n;
            throw ValidationError(os.str());
        }
    }
}

Complex Complex::unrolled_left(int m) const {
    if (m >= lo_) return *this;
    if (!left_) {
        // pad with zero modules
        std::vector<Module> terms;
        std::vector<Matrix> diffs;
        for (int n = m; n < lo_; ++n) {
            terms.push_back(zero_);
            diffs.push_back(Matrix(term(n + 1).dim(), 0, prime()));
        }
        terms.insert(terms.end(), terms_.begin(), terms_.end());
        diffs.insert(diffs.end(), diffs_.begin(), diffs_.end());
        return Complex(alg_, m, std::move(terms), std::move(diffs), std::nullopt, right_, true);
    }
    const int q = left_->period;
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = m; n < lo_; ++n) {
        terms.push_back(term(n));
        diffs.push_back(diff(n));
    }
    terms.insert(terms.end(), terms_.begin(), terms_.end());
    diffs.insert(diffs.end(), diffs_.begin(), diffs_.end());
    Tail rot;
    rot.period = q;
    rot.mods.resize(q);
    rot.diffs.resize(q);
    for (int j = 0; j < q; ++j) {
        rot.mods[j] = left_->mods[mod_floor(j + m - lo_, q)];
        rot.diffs[j] = left_->diffs[mod_floor(j + m - lo_, q)];
    }
    rot.seam = diff(m - 1);
    return Complex(alg_, m, std::move(terms), std::move(diffs), rot, right_, true);
}

Complex Complex::unrolled_right(int m) const {
    if (m <= hi()) return *this;
    if (!right_) {
        std::vector<Module> terms = terms_;
        std::vector<Matrix> diffs = diffs_;
        for (int n = hi(); n < m; ++n) {
            diffs.push_back(Matrix(0, term(n).dim(), prime()));
            terms.push_back(zero_);
        }
        return Complex(alg_, lo_, std::move(terms), std::move(diffs), left_, std::nullopt, true);
    }
    const int q = right_->period;
    std::vector<Module> terms = terms_;
    std::vector<Matrix> diffs = diffs_;
    for (int n = hi(); n < m; ++n) {
        diffs.push_back(diff(n));
        terms.push_back(term(n + 1));
    }
    Tail rot;
    rot.period = q;
    rot.mods.resize(q);
    rot.diffs.resize(q);
    for (int j = 0; j < q; ++j) {
        rot.mods[j] = right_->mods[mod_floor(j + m - hi(), q)];
        rot.diffs[j] = right_->diffs[mod_floor(j + m - hi(), q)];
    }
    rot.seam = diff(m);
    return Complex(alg_, lo_, std::move(terms), std::move(diffs), left_, rot, true);
}

Complex Complex::trimmed() const {
    auto tail_zero = [](const std::optional<Tail>& t) {
        if (!t) return true;
        for (const auto& m : t->mods)
            if (m.dim() != 0) return false;
        return true;
    };
    std::optional<Tail> lt = tail_zero(left_) ? std::nullopt : left_;
    std::optional<Tail> rt = tail_zero(right_) ? std::nullopt : right_;
    int a = lo_, b = hi();
    if (!lt)
        while (a < b && term(a).dim() == 0) ++a;
    if (!rt)
        while (b > a && term(b).dim() == 0) --b;
    if (a == b && term(a).dim() == 0 && !lt && !rt) return Complex::zero(alg_);
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = a; n <= b; ++n) {
        terms.push_back(term(n));
        if (n < b) diffs.push_back(diff(n));
    }
    if (lt) {
        // seam must match new window start
        Tail t = *lt;
        t.seam = diff(a - 1);
        lt = t;
    }
    if (rt) {
        Tail t = *rt;
        t.seam = diff(b);
        rt = t;
    }
    return Complex(alg_, a, std::move(terms), std::move(diffs), lt, rt, true);
}

Complex build_complex(const AlgebraPtr& alg, int w_lo, int w_hi,
                      const std::function<Module(int)>& term_fn,
                      const std::function<Matrix(int)>& diff_fn,
                      std::optional<int> left_period, std::optional<int> right_period) {
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = w_lo; n <= w_hi; ++n) {
        terms.push_back(term_fn(n));
        if (n < w_hi) diffs.push_back(diff_fn(n));
    }
    std::optional<Tail> lt, rt;
    if (left_period) {
        Tail t;
        t.period = *left_period;
        t.mods.resize(t.period);
        t.diffs.resize(t.period);
        for (int j = 0; j < t.period; ++j) {
            int deg = w_lo - t.period + j;
            t.mods[j] = term_fn(deg);
            t.diffs[j] = diff_fn(deg - (j == t.period - 1 ? t.period : 0));
            // wrap map sampled one period lower so it targets mods[0]
        }
        t.seam = diff_fn(w_lo - 1);
        lt = std::move(t);
    }
    if (right_period) {
        Tail t;
        t.period = *right_period;
        t.mods.resize(t.period);
        t.diffs.resize(t.period);
        for (int j = 0; j < t.period; ++j) {
            int deg = w_hi + 1 + j;
            t.mods[j] = term_fn(deg);
            t.diffs[j] = diff_fn(deg);
            // for j == period-1 this is the wrap into the next block copy
        }
        t.seam = diff_fn(w_hi);
        rt = std::move(t);
    }
    return Complex(alg, w_lo, std::move(terms), std::move(diffs), std::move(lt), std::move(rt));
}

Complex shift(const Complex& x, int k) {
    if (k == 0) return x;
    const bool neg = (k % 2) != 0;
    auto adjust = [&](Matrix m) { return neg ? m.negated() : m; };
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        terms.push_back(x.term(n));
        if (n < x.hi()) diffs.push_back(adjust(x.diff(n)));
    }
    auto move_tail = [&](const std::optional<Tail>& t) -> std::optional<Tail> {
        if (!t) return std::nullopt;
        Tail r = *t;
        for (auto& d : r.diffs) d = adjust(d);
        r.seam = adjust(r.seam);
        return r;
    };
    return Complex(x.algebra(), x.lo() - k, std::move(terms), std::move(diffs), move_tail(x.left_tail()),
                   move_tail(x.right_tail()), true);
}

Complex direct_sum(const Complex& a, const Complex& b) {
    const std::uint32_t p = a.prime();
    auto term_fn = [&](int n) { return direct_sum(a.term(n), b.term(n)); };
    auto diff_fn = [&](int n) {
        return Matrix::block2x2(a.diff(n), Matrix(a.term_dim(n + 1), b.term_dim(n), p),
                                Matrix(b.term_dim(n + 1), a.term_dim(n), p), b.diff(n));
    };
    std::optional<int> lp, rp;
    if (a.has_left_tail() || b.has_left_tail()) lp = std::lcm(a.left_period(), b.left_period());
    if (a.has_right_tail() || b.has_right_tail()) rp = std::lcm(a.right_period(), b.right_period());
    int w_lo = std::min(a.lo(), b.lo());
    int w_hi = std::max(a.hi(), b.hi());
    if (lp) w_lo -= 2 * *lp;
    if (rp) w_hi += 2 * *rp;
    return build_complex(a.algebra(), w_lo, w_hi, term_fn, diff_fn, lp, rp).trimmed();
}

Complex brutal_le(const Complex& x, int n) {
    if (n >= x.hi() && !x.has_right_tail()) return x;
    Complex u = x.unrolled_left(std::min(n, x.lo())).unrolled_right(std::max(n, x.hi()));
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int d = u.lo(); d <= n; ++d) {
        terms.push_back(u.term(d));
        if (d < n) diffs.push_back(u.diff(d));
    }
    return Complex(x.algebra(), u.lo(), std::move(terms), std::move(diffs), u.left_tail(), std::nullopt, true)
        .trimmed();
}

Complex brutal_ge(const Complex& x, int n) {
    if (n <= x.lo() && !x.has_left_tail()) return x;
    Complex u = x.unrolled_right(std::max(n, x.hi())).unrolled_left(std::min(n, x.lo()));
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int d = n; d <= u.hi(); ++d) {
        terms.push_back(u.term(d));
        if (d < u.hi()) diffs.push_back(u.diff(d));
    }
    return Complex(x.algebra(), n, std::move(terms), std::move(diffs), std::nullopt, u.right_tail(), true)
        .trimmed();
}

IntelligentLe intelligent_le_with_maps(const Complex& x, int n) {
    Complex u = x;
    if (n + 1 > x.hi()) u = x.unrolled_right(n + 1);
    if (n < u.lo()) u = u.unrolled_left(n);
    Matrix d = u.diff(n);
    Matrix b = image_basis(d);
    Module img = b.cols() == 0 ? Module::zero(x.algebra()) : submodule(u.term(n + 1), b).source;
    Matrix cor = b.cols() == 0 ? Matrix(0, u.term_dim(n), x.prime()) : *solve(b, d);

    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int k = u.lo(); k <= n; ++k) {
        terms.push_back(u.term(k));
        if (k < n) diffs.push_back(u.diff(k));
    }
    diffs.push_back(cor);
    terms.push_back(img);
    Complex cx(x.algebra(), u.lo(), std::move(terms), std::move(diffs), u.left_tail(), std::nullopt, true);
    return {cx.trimmed(), b, cor};
}

Complex intelligent_le(const Complex& x, int n) { return intelligent_le_with_maps(x, n).cx; }

Complex intelligent_ge(const Complex& x, int n) {
    Complex u = x;
    if (n - 1 < x.lo()) u = x.unrolled_left(n - 1);
    if (n > u.hi()) u = u.unrolled_right(n);
    Matrix d = u.diff(n - 1);
    Matrix b = image_basis(d);
    Module img = b.cols() == 0 ? Module::zero(x.algebra()) : submodule(u.term(n), b).source;

    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    terms.push_back(img);
    diffs.push_back(b);  // inclusion Im(d^{n-1}) -> X^n
    for (int k = n; k <= u.hi(); ++k) {
        terms.push_back(u.term(k));
        if (k < u.hi()) diffs.push_back(u.diff(k));
    }
    return Complex(x.algebra(), n - 1, std::move(terms), std::move(diffs), std::nullopt, u.right_tail(), true)
        .trimmed();
}

HomologyData homology(const Complex& x, int n) {
    Matrix dn = x.diff(n);
    Matrix dprev = x.diff(n - 1);
    Matrix cycles = kernel_basis(dn);
    Matrix bdries = image_basis(dprev);
    // complement of boundaries inside cycles, picked by pivots
    Matrix ext = Matrix::hstack(bdries, cycles);
    auto piv = rref(ext).pivots;
    std::vector<int> chosen;
    for (int c : piv)
        if (c >= bdries.cols()) chosen.push_back(c - bdries.cols());
    Matrix reps = cycles.select_columns(chosen);
    return {static_cast<int>(chosen.size()), reps, bdries};
}

int homology_dim(const Complex& x, int n) {
    Matrix dn = x.diff(n);
    int cyc = x.term_dim(n) - rank(dn);
    return cyc - rank(x.diff(n - 1));
}

HomologyProfile homology_profile(const Complex& x) {
    const int ql = x.left_period(), qr = x.right_period();
    HomologyProfile pr;
    pr.lo = x.lo() - (x.has_left_tail() ? 2 * ql + 1 : 1);
    pr.hi = x.hi() + (x.has_right_tail() ? 2 * qr + 1 : 1);
    for (int n = pr.lo; n <= pr.hi; ++n) pr.dims.push_back(homology_dim(x, n));
    if (x.has_left_tail()) {
        // sample one period deep enough that both adjacent differentials are tail-internal
        int base = x.lo() - 3 * ql - 2;
        for (int j = 0; j < ql; ++j) pr.left_block.push_back(homology_dim(x, base + j));
    }
    if (x.has_right_tail()) {
        int base = x.hi() + 2 * qr + 2;
        for (int j = 0; j < qr; ++j) pr.right_block.push_back(homology_dim(x, base + j));
    }
    return pr;
}

bool HomologyProfile::exact() const {
    for (int d : dims)
        if (d) return false;
    for (int d : left_block)
        if (d) return false;
    for (int d : right_block)
        if (d) return false;
    return true;
}

bool HomologyProfile::left_bounded() const {
    for (int d : left_block)
        if (d) return false;
    return true;
}

bool HomologyProfile::right_bounded() const {
    for (int d : right_block)
        if (d) return false;
    return true;
}

std::optional<int> HomologyProfile::min_support() const {
    if (!left_bounded()) return std::nullopt;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i]) return lo + static_cast<int>(i);
    return std::nullopt;  // exact
}

std::optional<int> HomologyProfile::max_support() const {
    if (!right_bounded()) return std::nullopt;
    for (std::size_t i = dims.size(); i-- > 0;)
        if (dims[i]) return lo + static_cast<int>(i);
    return std::nullopt;
}

Complex op_transport(const Complex& x, const AlgebraPtr& op_alg) {
    auto term_fn = [&](int n) { return op_dual(x.term(-n), op_alg); };
    auto diff_fn = [&](int n) { return x.diff(-n - 1).transpose(); };
    std::optional<int> lp, rp;
    if (x.has_right_tail()) lp = x.right_period();
    if (x.has_left_tail()) rp = x.left_period();
    int w_lo = -x.hi(), w_hi = -x.lo();
    if (lp) w_lo -= 2 * *lp;
    if (rp) w_hi += 2 * *rp;
    return build_complex(op_alg, w_lo, w_hi, term_fn, diff_fn, lp, rp).trimmed();
}

}  // namespace homcat
