#pragma once

#include "homcat/chainmap.hpp"

namespace homcat {

struct MinimalModel {
    Complex model;
    ChainMap to_model;    // X -> model
    ChainMap from_model;  // model -> X
};

/// Homotopy-equivalent complex with differentials in the radical. Requires every
/// term (window and tails) to be projective. The returned maps are verified to be
/// mutually inverse up to homotopy.
MinimalModel minimal_model(const Complex& x, const SessionConfig& cfg = default_config());

/// d(X) contained in rad(X) in every degree, tails included
bool is_minimal(const Complex& x);

/// every term is a projective module
bool all_terms_projective(const Complex& x);

}  // namespace homcat
