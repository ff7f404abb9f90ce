#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "homcat/module.hpp"

namespace homcat {

/// One repeating tail block. For a left tail the block occupies all degrees n < lo
/// with term(n) = mods[mod(n - lo, q)]; diffs[j] maps mods[j] -> mods[(j+1)%q] and is
/// the differential everywhere inside the tail, while `seam` is d^{lo-1} into the
/// window. Right tails mirror this: term(hi + 1 + j) = mods[j mod q], seam = d^{hi}.
struct Tail {
    int period = 1;
    std::vector<Module> mods;
    std::vector<Matrix> diffs;
    Matrix seam;
};

/// Cochain complex over a fixed algebra: a finite window of terms and differentials
/// d^n : X^n -> X^{n+1}, optionally extended by eventually-periodic tails.
class Complex {
public:
    Complex() = default;
    Complex(AlgebraPtr alg, int lo, std::vector<Module> terms, std::vector<Matrix> diffs,
            std::optional<Tail> left = std::nullopt, std::optional<Tail> right = std::nullopt,
            bool trusted = false);

    static Complex zero(AlgebraPtr alg);
    /// single module placed in the given degree
    static Complex stalk(const Module& m, int degree = 0);

    const AlgebraPtr& algebra() const { return alg_; }
    std::uint32_t prime() const { return alg_->prime(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool has_left_tail() const { return left_.has_value(); }
    bool has_right_tail() const { return right_.has_value(); }
    const std::optional<Tail>& left_tail() const { return left_; }
    const std::optional<Tail>& right_tail() const { return right_; }
    int left_period() const { return left_ ? left_->period : 1; }
    int right_period() const { return right_ ? right_->period : 1; }

    /// total term function; returns the zero module beyond absent tails
    const Module& term(int n) const;
    /// total differential d^n : term(n) -> term(n+1)
    Matrix diff(int n) const;

    bool is_zero_object() const;
    /// degreewise dimension, 0 outside
    int term_dim(int n) const { return term(n).dim(); }

    /// identical presentation (same window, terms, matrices, tails)
    bool same_presentation(const Complex& o) const;

    /// extend the window down to m (m <= lo), materializing tail copies; tail rotates
    Complex unrolled_left(int m) const;
    Complex unrolled_right(int m) const;

    /// drop zero boundary terms and all-zero tails; canonical zero object if empty
    Complex trimmed() const;

    void check_d_squared() const;

private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<Module> terms_;
    std::vector<Matrix> diffs_;  // diffs_[k] = d^{lo+k}, size terms_.size()-1
    std::optional<Tail> left_, right_;
    Module zero_;
};

/// Assemble a complex by evaluating term/diff callbacks over [w_lo, w_hi] and
/// attaching periodic tails sampled just below/above the window. The callbacks
/// must already be periodic there.
Complex build_complex(const AlgebraPtr& alg, int w_lo, int w_hi,
                      const std::function<Module(int)>& term_fn,
                      const std::function<Matrix(int)>& diff_fn,
                      std::optional<int> left_period, std::optional<int> right_period);

Complex shift(const Complex& x, int k);

Complex direct_sum(const Complex& a, const Complex& b);

/// brutal truncations: replace terms outside the range by zero
Complex brutal_le(const Complex& x, int n);
Complex brutal_ge(const Complex& x, int n);

/// subtle truncations ending in the image of the boundary:
///   le: ... -> X^{n-1} -> X^n -> Im(d^n) -> 0
///   ge: 0 -> Im(d^{n-1}) -> X^n -> X^{n+1} -> ...
Complex intelligent_le(const Complex& x, int n);
Complex intelligent_ge(const Complex& x, int n);

struct IntelligentLe {
    Complex cx;
    Matrix top_inclusion;     // Im(d^n) -> X^{n+1}
    Matrix top_corestriction; // X^n -> Im(d^n)
};
IntelligentLe intelligent_le_with_maps(const Complex& x, int n);

struct HomologyData {
    int dim;
    Matrix cycle_basis;    // columns in X^n spanning a complement of im inside ker
    Matrix boundary_basis; // columns spanning im(d^{n-1})
};
HomologyData homology(const Complex& x, int n);
int homology_dim(const Complex& x, int n);

struct HomologyProfile {
    int lo, hi;                    // evaluated window (extends past seams)
    std::vector<int> dims;         // H^n for n in [lo, hi]
    std::vector<int> left_block;   // per-period dims deep inside the left tail (empty if none)
    std::vector<int> right_block;

    bool exact() const;
    bool left_bounded() const;     // H^n = 0 for n << 0
    bool right_bounded() const;
    bool bounded() const { return left_bounded() && right_bounded(); }
    /// lowest/highest degree with nonzero homology; nullopt if exact on that side or unbounded
    std::optional<int> min_support() const;
    std::optional<int> max_support() const;
};

HomologyProfile homology_profile(const Complex& x);

/// transport across K-duality: degrees negate, arrows transpose, tails swap sides
Complex op_transport(const Complex& x, const AlgebraPtr& op_alg);

}  // namespace homcat
