#include "homcat/algebra.hpp"

#include <sstream>

namespace homcat {

namespace {

/// columns of `a` and `b` concatenated, reduced to an independent spanning set
Matrix column_span(const Matrix& m) { return image_basis(m); }

bool contained_in_span(const Matrix& vectors, const Matrix& span) {
    if (vectors.cols() == 0) return true;
    return solve(span, vectors).has_value();
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::create(std::string name, int dim,
                                               std::vector<std::string> basis_labels,
                                               std::vector<std::uint32_t> sc,
                                               std::vector<std::uint32_t> unit,
                                               std::vector<std::vector<std::uint32_t>> radical_basis,
                                               std::vector<std::vector<std::uint32_t>> idempotents,
                                               std::uint32_t p) {
    if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    if (dim <= 0) throw ValidationError("algebra dimension must be positive");
    if (sc.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw ValidationError("structure constant table has wrong size");
    if (unit.size() != static_cast<std::size_t>(dim)) throw ValidationError("unit vector has wrong size");
    if (basis_labels.empty()) {
        for (int i = 0; i < dim; ++i) basis_labels.push_back("b" + std::to_string(i));
    }
    if (basis_labels.size() != static_cast<std::size_t>(dim))
        throw ValidationError("basis label count does not match dimension");

    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->name_ = std::move(name);
    a->dim_ = dim;
    a->p_ = p;
    a->labels_ = std::move(basis_labels);
    a->sc_ = std::move(sc);
    for (auto& v : a->sc_) v %= p;
    a->unit_ = Matrix(dim, 1, p);
    for (int i = 0; i < dim; ++i) a->unit_.set(i, 0, unit[i]);

    Matrix rad(dim, static_cast<int>(radical_basis.size()), p);
    for (std::size_t j = 0; j < radical_basis.size(); ++j) {
        if (radical_basis[j].size() != static_cast<std::size_t>(dim))
            throw ValidationError("radical basis vector has wrong size");
        for (int i = 0; i < dim; ++i) rad.set(i, static_cast<int>(j), radical_basis[j][i]);
    }
    a->radical_ = rad;

    for (auto& e : idempotents) {
        if (e.size() != static_cast<std::size_t>(dim))
            throw ValidationError("idempotent vector has wrong size");
        Matrix v(dim, 1, p);
        for (int i = 0; i < dim; ++i) v.set(i, 0, e[i]);
        a->idempotents_.push_back(v);
    }

    a->validate();
    return a;
}

Matrix Algebra::left_mult(const Matrix& v) const {
    // column k of the result: v * b_k
    Matrix m(dim_, dim_, p_);
    for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < dim_; ++j) acc += static_cast<std::uint64_t>(v.at(j, 0)) * sc(j, k, i);
            m.set(i, k, static_cast<std::uint32_t>(acc % p_));
        }
    return m;
}

Matrix Algebra::right_mult(const Matrix& v) const {
    Matrix m(dim_, dim_, p_);
    for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < dim_; ++j) acc += static_cast<std::uint64_t>(v.at(j, 0)) * sc(k, j, i);
            m.set(i, k, static_cast<std::uint32_t>(acc % p_));
        }
    return m;
}

void Algebra::validate() const {
    // associativity via left-multiplication matrices: L_{b_i b_j} = L_{b_i} L_{b_j}
    std::vector<Matrix> lm;
    lm.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Matrix e(dim_, 1, p_);
        e.set(i, 0, 1);
        lm.push_back(left_mult(e));
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Matrix prod(dim_, 1, p_);
            for (int k = 0; k < dim_; ++k) prod.set(k, 0, sc(i, j, k));
            if (!(left_mult(prod) == lm[i] * lm[j])) {
                std::ostringstream os;
                os << "structure constants are not associative at basis pair (" << i << "," << j << ")";
                throw ValidationError(os.str());
            }
        }

    if (!left_mult(unit_).is_identity() || !right_mult(unit_).is_identity())
        throw ValidationError("declared unit is not a two-sided identity");

    // radical: two-sided ideal, nilpotent, with semisimple quotient
    const Matrix& J = radical_;
    if (J.cols() > 0) {
        for (int i = 0; i < dim_; ++i) {
            Matrix e(dim_, 1, p_);
            e.set(i, 0, 1);
            if (!contained_in_span(left_mult(e) * J, J) || !contained_in_span(right_mult(e) * J, J))
                throw ValidationError("radical basis does not span a two-sided ideal");
        }
    }
    Matrix power = J;
    for (int n = 1; n <= dim_ && power.cols() > 0; ++n) {
        if (power.is_zero()) {
            power = Matrix(dim_, 0, p_);
            break;
        }
        // J^{n+1} = span of j * w for j in J-basis, w in power-basis
        Matrix next(dim_, 0, p_);
        for (int jc = 0; jc < J.cols(); ++jc) {
            Matrix jv = J.select_columns({jc});
            next = Matrix::hstack(next, left_mult(jv) * power);
        }
        power = column_span(next);
    }
    if (power.cols() > 0) throw ValidationError("declared radical is not nilpotent");

    // semisimplicity of A/J by the trace-form criterion, valid for p > dim(A/J)
    int qdim = dim_ - J.cols();
    if (qdim > 0) {
        if (p_ <= static_cast<std::uint32_t>(qdim))
            throw UnsupportedError(
                "cannot certify semisimple quotient: prime must exceed dim(A/J) for the trace-form check");
        // quotient basis: complement of J picked by pivots of [J | I]
        Matrix ext = Matrix::hstack(J, Matrix::identity(dim_, p_));
        auto piv = rref(ext).pivots;
        std::vector<int> comp;
        for (int c : piv)
            if (c >= J.cols()) comp.push_back(c - J.cols());
        Matrix basis(dim_, qdim, p_);
        for (int j = 0; j < qdim; ++j) basis.set(comp[j], j, 1);
        Matrix full = Matrix::hstack(J, basis);
        auto full_inv = inverse(full);
        if (!full_inv) throw ValidationError("internal: radical complement is degenerate");
        // left multiplication on A/J in the chosen basis
        auto quot_mult = [&](int j) {
            Matrix v = basis.select_columns({j});
            Matrix big = *full_inv * (left_mult(v) * full);  // express in (J | comp) coordinates
            Matrix q(qdim, qdim, p_);
            for (int r = 0; r < qdim; ++r)
                for (int c = 0; c < qdim; ++c) q.set(r, c, big.at(J.cols() + r, J.cols() + c));
            return q;
        };
        std::vector<Matrix> qlm;
        for (int j = 0; j < qdim; ++j) qlm.push_back(quot_mult(j));
        Matrix gram(qdim, qdim, p_);
        for (int i = 0; i < qdim; ++i)
            for (int j = 0; j < qdim; ++j) {
                Matrix prod = qlm[i] * qlm[j];
                std::uint64_t tr = 0;
                for (int k = 0; k < qdim; ++k) tr += prod.at(k, k);
                gram.set(i, j, static_cast<std::uint32_t>(tr % p_));
            }
        if (rank(gram) != qdim)
            throw ValidationError("quotient by the declared radical is not semisimple");
    }

    // idempotents: orthogonal, idempotent, complete
    if (!idempotents_.empty()) {
        Matrix sum(dim_, 1, p_);
        for (std::size_t i = 0; i < idempotents_.size(); ++i) {
            const Matrix& e = idempotents_[i];
            if (!(left_mult(e) * e == e)) throw ValidationError("declared idempotent is not idempotent");
            for (std::size_t j = 0; j < idempotents_.size(); ++j) {
                if (i == j) continue;
                if (!(left_mult(e) * idempotents_[j]).is_zero())
                    throw ValidationError("declared idempotents are not orthogonal");
            }
            sum = sum + e;
        }
        if (!(sum == unit_)) throw ValidationError("declared idempotents do not sum to the unit");
    }
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    std::vector<std::uint32_t> osc(sc_.size());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                osc[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = sc(j, i, k);
    std::vector<std::uint32_t> u(dim_);
    for (int i = 0; i < dim_; ++i) u[i] = unit_.at(i, 0);
    std::vector<std::vector<std::uint32_t>> rad;
    for (int c = 0; c < radical_.cols(); ++c) {
        std::vector<std::uint32_t> v(dim_);
        for (int i = 0; i < dim_; ++i) v[i] = radical_.at(i, c);
        rad.push_back(std::move(v));
    }
    std::vector<std::vector<std::uint32_t>> idem;
    for (const auto& e : idempotents_) {
        std::vector<std::uint32_t> v(dim_);
        for (int i = 0; i < dim_; ++i) v[i] = e.at(i, 0);
        idem.push_back(std::move(v));
    }
    return create(name_ + "^op", dim_, labels_, std::move(osc), std::move(u), std::move(rad),
                  std::move(idem), p_);
}

bool Algebra::same_presentation(const Algebra& o) const {
    return dim_ == o.dim_ && p_ == o.p_ && sc_ == o.sc_;
}

}  // namespace homcat
