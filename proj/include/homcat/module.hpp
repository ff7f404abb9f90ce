#pragma once

#include <optional>
#include <vector>

#include "homcat/algebra.hpp"

namespace homcat {

/// Finite-dimensional left module, given by one action matrix per algebra basis element.
class Module {
public:
    Module() = default;
    /// validates the representation equations unless `trusted`
    Module(AlgebraPtr alg, std::vector<Matrix> action, bool trusted = false);

    static Module zero(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return dim_; }
    std::uint32_t prime() const { return alg_->prime(); }
    const Matrix& action(int basis_index) const { return action_[basis_index]; }
    const std::vector<Matrix>& actions() const { return action_; }

    /// action of a general element given by a coefficient column
    Matrix act(const Matrix& coeffs) const;

    bool same_presentation(const Module& o) const;

private:
    AlgebraPtr alg_;
    int dim_ = 0;
    std::vector<Matrix> action_;
};

struct ModuleMorphism {
    Module source;
    Module target;
    Matrix matrix;  // target.dim x source.dim

    bool is_intertwiner() const;
};

Module regular_module(const AlgebraPtr& alg);

/// simple module top(A e_i) for the i-th declared idempotent
Module simple_module(const AlgebraPtr& alg, int idempotent_index);

/// the module K = A/J for local algebras (single idempotent); convenience used by fixtures
Module trivial_module(const AlgebraPtr& alg);

/// submodule spanned by the columns of `basis` (must be action-stable); returns
/// the abstract module plus the inclusion
ModuleMorphism submodule(const Module& m, const Matrix& basis);

/// quotient of m by the submodule spanned by `basis`; returns the projection
ModuleMorphism quotient_module(const Module& m, const Matrix& basis);

/// J*M with its inclusion into M
ModuleMorphism radical_of_module(const Module& m);

Module direct_sum(const Module& a, const Module& b);

/// transport to the opposite algebra by K-duality (transposed actions)
Module op_dual(const Module& m, const AlgebraPtr& op_alg);

struct ProjectiveCover {
    ModuleMorphism map;                 // P(M) ->> M
    std::vector<int> summand_indices;   // which A e_i make up P(M), in order
};

/// indecomposable projective A e_i with its inclusion into the regular module
ModuleMorphism indecomposable_projective(const AlgebraPtr& alg, int idempotent_index);

ProjectiveCover projective_cover(const Module& m);

/// n-th syzygy: kernel of a projective cover, iterated
Module syzygy(const Module& m, int n);

/// basis of Hom_A(M, N) as matrices
std::vector<Matrix> hom_space(const Module& m, const Module& n);

struct StableHom {
    int dim;                      // dim of Hom modulo maps factoring through projectives
    std::vector<Matrix> basis;    // coset representatives in a pivot-based complement
    int hom_dim;                  // dim Hom(M, N)
};

StableHom stable_hom(const Module& m, const Module& n);

bool is_projective(const Module& m);

/// true if J*M = 0
bool is_semisimple_module(const Module& m);

/// iso test for modules (mutually inverse intertwiners); randomized search with certificate
bool modules_isomorphic(const Module& a, const Module& b, std::uint64_t seed = 1);

}  // namespace homcat
