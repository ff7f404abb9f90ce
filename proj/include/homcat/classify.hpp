#pragma once

#include <set>
#include <string>

#include "homcat/minimal.hpp"

namespace homcat {

/// The thirteen full triangulated subcategories of K(E), keyed by
/// (complex boundedness, homology boundedness). "Full" is the ambient category.
enum class HasseLabel {
    Full,        // K
    InfPlus,     // K^{inf,+}
    InfMinus,    // K^{inf,-}
    InfBounded,  // K^{inf,b}
    Plus,        // K^+
    Minus,       // K^-
    PlusBounded,   // K^{+,b}
    MinusBounded,  // K^{-,b}
    InfExact,      // K^{inf,0}: exact complexes
    Bounded,       // K^b
    PlusExact,     // K^{+,0}
    MinusExact,    // K^{-,0}
    BoundedExact,  // K^{b,0}
};

std::string label_name(HasseLabel l);
HasseLabel label_from_name(const std::string& s);
const std::vector<HasseLabel>& all_labels();

/// is `sub` contained in `super` in the inclusion diagram?
bool label_leq(HasseLabel sub, HasseLabel super);
/// least label containing both (the diagram is join-closed)
HasseLabel label_join(HasseLabel a, HasseLabel b);
/// every triangulated piece of the diagram is extension closed, so a triangle with
/// ends in a and b has middle in label_join(a, b)

enum class Ambient { Modules, Projectives, Injectives };
Ambient ambient_from_name(const std::string& s);
std::string ambient_name(Ambient a);

struct Classification {
    std::set<HasseLabel> labels;   // upward closed
    bool supp_left_bounded;        // up to homotopy equivalence
    bool supp_right_bounded;
    bool h_left_bounded;
    bool h_right_bounded;
    bool exact;

    bool in(HasseLabel l) const { return labels.count(l) > 0; }
};

/// Membership in the thirteen subcategories. For the projective ambient the
/// boundedness answers are computed on the minimal model (sound and complete for
/// complexes of projectives); for the module ambient they come from the presentation
/// support, upgraded by a contractibility test on the pure tail pieces. The injective
/// ambient is transported through the opposite algebra.
Classification classify(const Complex& x, Ambient ambient,
                        const SessionConfig& cfg = default_config());

}  // namespace homcat
