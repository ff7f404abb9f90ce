#pragma once

#include <random>

#include "homcat/chainmap.hpp"
#include "homcat/classify.hpp"

namespace homcat::gen {

using Rng = std::mt19937_64;

Matrix random_invertible(int n, std::uint32_t p, Rng& rng);

/// random finite-dimensional module: a quotient of a free module by a random
/// radical submodule, or a sum of simples/projectives
Module random_module(const AlgebraPtr& alg, Rng& rng, int max_units = 2);
Module random_projective(const AlgebraPtr& alg, Rng& rng, int max_units = 2);

/// random module automorphism (used to twist differentials)
Matrix random_automorphism(const Module& m, Rng& rng);

/// minimal projective resolution segment of m: covers in degrees [top-len+1, top]
Complex resolution_segment(const Module& m, int len, int top, Rng* rng = nullptr);

/// conjugate the window interior by random module automorphisms; tails untouched
Complex twisted(const Complex& x, Rng& rng);

Complex random_bounded_complex(const AlgebraPtr& alg, Rng& rng, int min_terms, int max_terms,
                               bool projective_terms);
Complex random_exact_bounded(const AlgebraPtr& alg, Rng& rng, int max_blocks, bool projective_terms);

/// complexes carrying a prescribed ambient label (used by the witness suites)
Complex random_with_ambient(const AlgebraPtr& alg, HasseLabel ambient, bool projective_terms,
                            Rng& rng);

/// left-bounded exact complex of projectives (these split; the twist hides it)
Complex random_left_bounded_exact_projectives(const AlgebraPtr& alg, Rng& rng, bool right_tail);
Complex random_right_bounded_exact_projectives(const AlgebraPtr& alg, Rng& rng, bool left_tail);

/// random chain map picked from the chain-map space between two random complexes
ChainMap random_chain_map(const Complex& x, const Complex& y, Rng& rng,
                          const SessionConfig& cfg = default_config());

/// a quasi-isomorphism X (+) contractible -> X, dressed up by automorphisms
ChainMap random_quasi_iso_onto(const Complex& x, Rng& rng);

}  // namespace homcat::gen
