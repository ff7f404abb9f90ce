#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/matrix.hpp"

namespace homcat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// recoverable input problems (bad files, malformed matrices)
class ParseError : public Error {
public:
    using Error::Error;
};

/// data that parses but violates a structural invariant (d^2 != 0, non-associative, ...)
class ValidationError : public Error {
public:
    using Error::Error;
};

/// operations the presentation cannot support (missing idempotents, p too small, ...)
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Finite-dimensional associative unital algebra over F_p, presented by structure
/// constants b_i b_j = sum_k c[i][j][k] b_k, with a declared radical basis and a
/// declared complete list of orthogonal primitive idempotents.
class Algebra {
public:
    /// `sc` is indexed (i*dim + j)*dim + k. Validates associativity, the unit,
    /// the radical (two-sided nilpotent ideal, semisimple quotient) and the
    /// idempotents; throws ValidationError / UnsupportedError on failure.
    static std::shared_ptr<const Algebra> create(std::string name, int dim,
                                                 std::vector<std::string> basis_labels,
                                                 std::vector<std::uint32_t> sc,
                                                 std::vector<std::uint32_t> unit,
                                                 std::vector<std::vector<std::uint32_t>> radical_basis,
                                                 std::vector<std::vector<std::uint32_t>> idempotents,
                                                 std::uint32_t p);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    std::uint32_t prime() const { return p_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    std::uint32_t sc(int i, int j, int k) const {
        return sc_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    const std::vector<std::uint32_t>& structure_constants() const { return sc_; }

    /// unit as a coefficient column (dim x 1)
    const Matrix& unit() const { return unit_; }
    /// matrix of left multiplication by the element with coefficient column v
    Matrix left_mult(const Matrix& v) const;
    /// matrix of right multiplication by the element with coefficient column v
    Matrix right_mult(const Matrix& v) const;

    /// columns span the radical J
    const Matrix& radical() const { return radical_; }
    /// declared orthogonal primitive idempotents, as coefficient columns
    const std::vector<Matrix>& idempotents() const { return idempotents_; }
    bool has_idempotents() const { return !idempotents_.empty(); }

    /// structure constants of the opposite algebra (same basis, reversed products)
    std::shared_ptr<const Algebra> opposite() const;

    bool same_presentation(const Algebra& o) const;

private:
    Algebra() = default;
    void validate() const;

    std::string name_;
    int dim_ = 0;
    std::uint32_t p_ = 101;
    std::vector<std::string> labels_;
    std::vector<std::uint32_t> sc_;
    Matrix unit_;
    Matrix radical_;
    std::vector<Matrix> idempotents_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace homcat
