#pragma once

// Brute-force reference for Hom in the homotopy category of *bounded* complexes.
// Unknowns are full matrices per degree; module-linearity and the chain condition
// are imposed as explicit equations and the dimensions come from direct nullspace
// computations over the whole support, with no periodicity bookkeeping. Kept
// independent of the library's solver on purpose.

#include "homcat/complex.hpp"

namespace homcat::oracle {

namespace detail {

struct Layout {
    std::vector<int> offset;
    int total;
};

inline Layout layout(const Complex& x, const Complex& y, int lo, int hi, int off) {
    Layout l;
    l.total = 0;
    for (int n = lo; n <= hi; ++n) {
        l.offset.push_back(l.total);
        l.total += y.term_dim(n + off) * x.term_dim(n);
    }
    return l;
}

/// rows expressing "g are module maps X^n -> Y^{n+off} for every degree"
inline Matrix intertwiner_rows(const Complex& x, const Complex& y, int lo, int hi, int off,
                               const Layout& l) {
    const std::uint32_t p = x.prime();
    const int d = x.algebra()->dim();
    int rows = 0;
    for (int n = lo; n <= hi; ++n) rows += d * y.term_dim(n + off) * x.term_dim(n);
    Matrix sys(rows, l.total, p);
    int row = 0;
    for (int n = lo; n <= hi; ++n) {
        const int rn = y.term_dim(n + off), cn = x.term_dim(n);
        for (int i = 0; i < d; ++i) {
            const Matrix& ay = y.term(n + off).action(i);
            const Matrix& ax = x.term(n).action(i);
            for (int r = 0; r < rn; ++r)
                for (int c = 0; c < cn; ++c) {
                    // (ay g - g ax)[r][c] = 0
                    for (int k = 0; k < rn; ++k)
                        sys.set_int(row, l.offset[n - lo] + k * cn + c,
                                    sys.at(row, l.offset[n - lo] + k * cn + c) + ay.at(r, k));
                    for (int k = 0; k < cn; ++k)
                        sys.set_int(row, l.offset[n - lo] + r * cn + k,
                                    static_cast<long long>(sys.at(row, l.offset[n - lo] + r * cn + k)) -
                                        ax.at(k, c));
                    ++row;
                }
        }
    }
    return sys;
}

}  // namespace detail

inline int brute_force_hom_dim(const Complex& x, const Complex& y) {
    if (x.has_left_tail() || x.has_right_tail() || y.has_left_tail() || y.has_right_tail())
        throw std::invalid_argument("oracle handles bounded complexes only");
    const std::uint32_t p = x.prime();
    const int lo = std::min(x.lo(), y.lo()) - 1;
    const int hi = std::max(x.hi(), y.hi()) + 1;

    // chain maps: intertwining rows plus d_Y f - f d_X = 0
    detail::Layout lf = detail::layout(x, y, lo, hi, 0);
    int eq_rows = 0;
    for (int n = lo - 1; n <= hi; ++n) eq_rows += y.term_dim(n + 1) * x.term_dim(n);
    Matrix chain(eq_rows, lf.total, p);
    int row = 0;
    for (int n = lo - 1; n <= hi; ++n) {
        Matrix dy = y.diff(n);
        Matrix dx = x.diff(n);
        for (int i = 0; i < y.term_dim(n + 1); ++i)
            for (int j = 0; j < x.term_dim(n); ++j) {
                if (n >= lo)
                    for (int k = 0; k < y.term_dim(n); ++k)
                        chain.set_int(row, lf.offset[n - lo] + k * x.term_dim(n) + j,
                                      chain.at(row, lf.offset[n - lo] + k * x.term_dim(n) + j) +
                                          dy.at(i, k));
                if (n + 1 <= hi)
                    for (int l = 0; l < x.term_dim(n + 1); ++l)
                        chain.set_int(
                            row, lf.offset[n + 1 - lo] + i * x.term_dim(n + 1) + l,
                            static_cast<long long>(
                                chain.at(row, lf.offset[n + 1 - lo] + i * x.term_dim(n + 1) + l)) -
                                dx.at(l, j));
                ++row;
            }
    }
    Matrix zsys = Matrix::vstack(chain, detail::intertwiner_rows(x, y, lo, hi, 0, lf));
    int z_dim = kernel_basis(zsys).cols();

    // boundaries: image of h -> d_Y h + h d_X over module-map families h
    detail::Layout lh = detail::layout(x, y, lo, hi, -1);
    Matrix hmod = kernel_basis(detail::intertwiner_rows(x, y, lo, hi, -1, lh));
    // operator matrix from h-coordinates to f-coordinates
    Matrix op(lf.total, lh.total, p);
    for (int n = lo; n <= hi; ++n) {
        Matrix dy = y.diff(n - 1);
        Matrix dx = x.diff(n);
        const int rn = y.term_dim(n), cn = x.term_dim(n);
        for (int i = 0; i < rn; ++i)
            for (int j = 0; j < cn; ++j) {
                int frow = lf.offset[n - lo] + i * cn + j;
                for (int k = 0; k < y.term_dim(n - 1); ++k)
                    op.set_int(frow, lh.offset[n - lo] + k * cn + j,
                               op.at(frow, lh.offset[n - lo] + k * cn + j) + dy.at(i, k));
                if (n + 1 <= hi)
                    for (int l = 0; l < x.term_dim(n + 1); ++l)
                        op.set_int(frow, lh.offset[n + 1 - lo] + i * x.term_dim(n + 1) + l,
                                   op.at(frow, lh.offset[n + 1 - lo] + i * x.term_dim(n + 1) + l) +
                                       dx.at(l, j));
            }
    }
    int b_dim = rank(op * hmod);
    return z_dim - b_dim;
}

}  // namespace homcat::oracle
