#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcat {

/// Dense matrix over the prime field F_p, row-major, entries normalized to [0, p).
/// Values are immutable in practice: operations return fresh matrices.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, std::uint32_t p);
    Matrix(int rows, int cols, std::uint32_t p, std::vector<std::uint32_t> entries);

    static Matrix identity(int n, std::uint32_t p);
    static Matrix zero(int rows, int cols, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, std::uint32_t v);
    /// set from a possibly-negative integer, reduced mod p
    void set_int(int i, int j, long long v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix negated() const;
    Matrix scaled(std::uint32_t c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_identity() const;

    /// columns listed in `idx`, in that order
    Matrix select_columns(const std::vector<int>& idx) const;
    Matrix select_rows(const std::vector<int>& idx) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    /// 2x2 block assembly; any block may be empty as long as shapes are consistent
    static Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;  // pivot column indices, increasing
};

/// Reduced row-echelon form with deterministic leftmost-nonzero pivoting.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Columns form a basis of ker(m); count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Columns form a basis of the column space: the pivot columns of m, left to right.
Matrix image_basis(const Matrix& m);

/// Solve A X = B; returns X or nullopt when B is not in the column space of A.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// mod-p inverse of a scalar (p prime)
std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint32_t n);

}  // namespace homcat
