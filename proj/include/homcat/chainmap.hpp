#pragma once

#include <functional>
#include <optional>

#include "homcat/complex.hpp"
#include "homcat/config.hpp"

namespace homcat {

/// Degreewise maps f^n : X^n -> Y^n over a finite core range; outside the core the
/// components repeat with the combined tail period (zero maps where a side has no tail).
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(Complex source, Complex target, int lo, std::vector<Matrix> comps, int left_period,
             int right_period);

    static ChainMap zero(const Complex& source, const Complex& target);
    static ChainMap identity(const Complex& x);
    /// evaluate a degreewise formula over the canonical core range
    static ChainMap from_formula(const Complex& source, const Complex& target,
                                 const std::function<Matrix(int)>& fn);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(comps_.size()) - 1; }
    int left_period() const { return lp_; }
    int right_period() const { return rp_; }

    Matrix component(int n) const;

    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap negated() const;

private:
    Complex source_, target_;
    int lo_ = 0;
    std::vector<Matrix> comps_;
    int lp_ = 1, rp_ = 1;
};

/// Degree -1 family h^n : X^n -> Y^{n-1}, same periodicity rules as ChainMap.
class Homotopy {
public:
    Homotopy() = default;
    Homotopy(Complex source, Complex target, int lo, std::vector<Matrix> comps, int left_period,
             int right_period);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(comps_.size()) - 1; }

    Matrix component(int n) const;

    /// h d + d h as a chain map X -> Y
    ChainMap boundary() const;

private:
    Complex source_, target_;
    int lo_ = 0;
    std::vector<Matrix> comps_;
    int lp_ = 1, rp_ = 1;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

/// nullopt when every square commutes; otherwise the first failing degree
std::optional<int> chain_map_defect(const ChainMap& f);
bool is_chain_map(const ChainMap& f);

/// dimension of the space of eventually-periodic chain maps X -> Y
int chain_map_space_dim(const Complex& x, const Complex& y,
                        const SessionConfig& cfg = default_config());

/// basis of that space
std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y,
                                      const SessionConfig& cfg = default_config());

/// h with f = h d + d h, sought within the periodic ansatz
std::optional<Homotopy> null_homotopy(const ChainMap& f, const SessionConfig& cfg = default_config());

bool homotopic(const ChainMap& f, const ChainMap& g, const SessionConfig& cfg = default_config());

/// contraction certificate: a null homotopy of the identity
std::optional<Homotopy> contraction(const Complex& x, const SessionConfig& cfg = default_config());
bool is_contractible(const Complex& x, const SessionConfig& cfg = default_config());

struct HomDim {
    int dim;                 // dim Hom_K(X, Y) within the ansatz
    bool margin_stable;      // value agreed when recomputed with a larger settling margin
};

/// Hom in the homotopy category: chain maps modulo null-homotopic ones
HomDim homotopy_hom_dim(const Complex& x, const Complex& y,
                        const SessionConfig& cfg = default_config());

/// standard cone with differential [[-d_X, 0], [f, d_Y]]
Complex cone(const ChainMap& f);
/// canonical Y -> cone(f)
ChainMap cone_inclusion(const ChainMap& f);
/// canonical cone(f) -> X[1]
ChainMap cone_projection(const ChainMap& f);

struct HomotopyEquivalence {
    ChainMap fwd;    // X -> Y
    ChainMap bwd;    // Y -> X
    Homotopy on_source;  // bwd fwd - id = dh + hd
    Homotopy on_target;
};

/// given a chain map phi, look for an inverse up to homotopy (one joint linear solve)
std::optional<HomotopyEquivalence> homotopy_inverse(const ChainMap& phi,
                                                    const SessionConfig& cfg = default_config());

struct EquivalenceSearch {
    std::optional<HomotopyEquivalence> equivalence;
    bool definitive_no = false;  // homology obstruction found
};

/// semi-decision: tries randomized candidates; "no" only with an obstruction
EquivalenceSearch homotopy_equivalent(const Complex& x, const Complex& y,
                                      const SessionConfig& cfg = default_config());

/// induced map on H^n; columns express images of x-homology reps in the y-homology basis
Matrix homology_induced_map(const ChainMap& f, int n);
bool induces_homology_isos(const ChainMap& f);

/// subtle truncation of a chain map: restriction to the image term at the cut
ChainMap sigma_le(const ChainMap& f, int n);
ChainMap sigma_ge(const ChainMap& f, int n);

/// the canonical comparison cone(sigma_{<=n} f) -> sigma_{<=n} cone(f); a
/// degreewise inclusion that induces isomorphisms on homology
ChainMap sigma_cone_comparison(const ChainMap& f, int n);

}  // namespace homcat
