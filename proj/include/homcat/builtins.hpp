#pragma once

#include "homcat/complex.hpp"

namespace homcat {

/// K[X]/(X^2), basis (1, x)
AlgebraPtr dual_numbers(std::uint32_t p = 101);

/// K x ... x K with n orthogonal idempotents
AlgebraPtr semisimple_algebra(int n, std::uint32_t p = 101);

/// K[x,y]/(x^2, y^2, xy), basis (1, x, y)
AlgebraPtr string_algebra(std::uint32_t p = 101);

AlgebraPtr builtin_algebra(const std::string& name, std::uint32_t p = 101);

/// named modules: "A" (regular), "K" (simple top for local algebras), "S0", "S1", ... (simples)
Module builtin_module(const AlgebraPtr& alg, const std::string& name);

/// minimal projective resolution shape of K over the dual numbers: (... -x-> A -x-> A -> 0),
/// nonzero in degrees <= 0
Complex complex_P(const AlgebraPtr& dual);
/// (0 -> A -x-> A -x-> ...), nonzero in degrees >= 0
Complex complex_I(const AlgebraPtr& dual);
/// two-sided version, exact everywhere
Complex complex_PI(const AlgebraPtr& dual);

Complex builtin_complex(const AlgebraPtr& alg, const std::string& name);

}  // namespace homcat
