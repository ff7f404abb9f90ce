#include "homcat/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace homcat {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("matrix operands live over different primes");
}

}  // namespace

Matrix::Matrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(int rows, int cols, std::uint32_t p, std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match matrix shape");
    for (auto& v : data_) v %= p_;
}

Matrix Matrix::identity(int n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::zero(int rows, int cols, std::uint32_t p) { return Matrix(rows, cols, p); }

void Matrix::set(int i, int j, std::uint32_t v) {
    data_[static_cast<std::size_t>(i) * cols_ + j] = v % p_;
}

void Matrix::set_int(int i, int j, long long v) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    data_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::uint32_t>(r);
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    Matrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = (data_[k] + o.data_[k]) % p_;
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    Matrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = (data_[k] + p_ - o.data_[k]) % p_;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    Matrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                std::uint64_t acc = r.data_[static_cast<std::size_t>(i) * o.cols_ + j];
                acc += aik * o.at(k, j);
                r.data_[static_cast<std::size_t>(i) * o.cols_ + j] = static_cast<std::uint32_t>(acc % p_);
            }
        }
    }
    return r;
}

Matrix Matrix::negated() const {
    Matrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] == 0 ? 0 : p_ - data_[k];
    return r;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    c %= p_;
    Matrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(data_[k]) * c) % p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()), p_);
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.set(i, static_cast<int>(j), at(i, idx[j]));
    return r;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix r(static_cast<int>(idx.size()), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) r.set(static_cast<int>(i), j, at(idx[i], j));
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

Matrix Matrix::block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("fp_inverse of non-unit");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const std::uint32_t p = m.prime();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols(); ++j) {
                auto tmp = r.at(row, j);
                r.set(row, j, r.at(piv, j));
                r.set(piv, j, tmp);
            }
        std::uint32_t inv = fp_inverse(r.at(row, col), p);
        for (int j = 0; j < r.cols(); ++j)
            r.set(row, j, static_cast<std::uint32_t>((static_cast<std::uint64_t>(r.at(row, j)) * inv) % p));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            std::uint32_t f = r.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < r.cols(); ++j) {
                std::uint64_t sub = (static_cast<std::uint64_t>(f) * r.at(row, j)) % p;
                r.set(i, j, (r.at(i, j) + p - static_cast<std::uint32_t>(sub)) % p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    const std::uint32_t p = m.prime();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.cols(), static_cast<int>(free_cols.size()), p);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.set(fc, static_cast<int>(j), 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint32_t v = r.at(static_cast<int>(i), fc);
            if (v != 0) k.set(pivots[i], static_cast<int>(j), p - v);
        }
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    auto pivots = rref(m).pivots;
    return m.select_columns(pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    auto [r, pivots] = rref(Matrix::hstack(a, b));
    // inconsistent iff a pivot falls in the b-part
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.prime());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j) x.set(pivots[i], j, r.at(static_cast<int>(i), a.cols() + j));
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, Matrix::identity(m.rows(), m.prime()));
    if (!x) return std::nullopt;
    // solve gives a right inverse; for square matrices of full rank it is two-sided
    if (rank(m) != m.rows()) return std::nullopt;
    return x;
}

}  // namespace homcat
