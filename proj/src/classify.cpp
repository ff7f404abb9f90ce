#include "homcat/classify.hpp"

#include <algorithm>
#include <map>

namespace homcat {

namespace {

using L = HasseLabel;

const std::map<L, std::string> kNames = {
    {L::Full, "K"},           {L::InfPlus, "K_inf+"},      {L::InfMinus, "K_inf-"},
    {L::InfBounded, "K_infb"}, {L::Plus, "K+"},             {L::Minus, "K-"},
    {L::PlusBounded, "K+b"},  {L::MinusBounded, "K-b"},    {L::InfExact, "K_inf0"},
    {L::Bounded, "Kb"},       {L::PlusExact, "K+0"},       {L::MinusExact, "K-0"},
    {L::BoundedExact, "Kb0"},
};

}  // namespace

std::string label_name(HasseLabel l) { return kNames.at(l); }

HasseLabel label_from_name(const std::string& s) {
    for (const auto& [l, n] : kNames)
        if (n == s) return l;
    throw ParseError("unknown subcategory label '" + s + "'");
}

const std::vector<HasseLabel>& all_labels() {
    static const std::vector<HasseLabel> v = {
        L::Full,       L::InfPlus,     L::InfMinus,  L::InfBounded, L::Plus,
        L::Minus,      L::PlusBounded, L::MinusBounded, L::InfExact, L::Bounded,
        L::PlusExact,  L::MinusExact,  L::BoundedExact,
    };
    return v;
}

namespace {

/// defining flags: (supp left bdd, supp right bdd, H left bdd, H right bdd, exact)
struct Flags {
    bool sl, sr, hl, hr, ex;
};

bool member(L l, const Flags& f) {
    switch (l) {
        case L::Full: return true;
        case L::InfPlus: return f.hl;
        case L::InfMinus: return f.hr;
        case L::InfBounded: return f.hl && f.hr;
        case L::Plus: return f.sl;
        case L::Minus: return f.sr;
        case L::PlusBounded: return f.sl && f.hr;
        case L::MinusBounded: return f.sr && f.hl;
        case L::InfExact: return f.ex;
        case L::Bounded: return f.sl && f.sr;
        case L::PlusExact: return f.sl && f.ex;
        case L::MinusExact: return f.sr && f.ex;
        case L::BoundedExact: return f.sl && f.sr && f.ex;
    }
    return false;
}

}  // namespace

bool label_leq(HasseLabel sub, HasseLabel super) {
    // test containment over all 32 flag patterns (membership is monotone in the flags)
    for (int m = 0; m < 32; ++m) {
        Flags f{bool(m & 1), bool(m & 2), bool(m & 4), bool(m & 8), bool(m & 16)};
        // normalize: support bounds imply homology bounds; exact implies both h-bounds
        if (f.sl) f.hl = true;
        if (f.sr) f.hr = true;
        if (f.ex) f.hl = f.hr = true;
        if (member(sub, f) && !member(super, f)) return false;
    }
    return true;
}

HasseLabel label_join(HasseLabel a, HasseLabel b) {
    HasseLabel best = L::Full;
    for (HasseLabel c : all_labels()) {
        if (!label_leq(a, c) || !label_leq(b, c)) continue;
        if (label_leq(c, best)) best = c;
    }
    return best;
}

Ambient ambient_from_name(const std::string& s) {
    if (s == "modules") return Ambient::Modules;
    if (s == "projectives") return Ambient::Projectives;
    if (s == "injectives") return Ambient::Injectives;
    throw ParseError("unknown ambient '" + s + "' (expected modules|projectives|injectives)");
}

std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::Modules: return "modules";
        case Ambient::Projectives: return "projectives";
        case Ambient::Injectives: return "injectives";
    }
    return "?";
}

namespace {

bool tail_is_zero(const std::optional<Tail>& t) {
    if (!t) return true;
    for (const auto& m : t->mods)
        if (m.dim() != 0) return false;
    return true;
}

Classification classify_impl(const Complex& x, Ambient ambient, const SessionConfig& cfg) {
    Classification out{};
    HomologyProfile hp = homology_profile(x);
    out.h_left_bounded = hp.left_bounded();
    out.h_right_bounded = hp.right_bounded();
    out.exact = hp.exact();

    if (ambient == Ambient::Projectives) {
        MinimalModel mm = minimal_model(x, cfg);
        out.supp_left_bounded = tail_is_zero(mm.model.left_tail());
        out.supp_right_bounded = tail_is_zero(mm.model.right_tail());
    } else {
        Complex t = x.trimmed();
        out.supp_left_bounded = !t.has_left_tail();
        out.supp_right_bounded = !t.has_right_tail();
        // a contractible pure tail piece can be split off up to homotopy equivalence;
        // the cut position matters, so try one full period of phases
        if (!out.supp_left_bounded)
            for (int k = 0; k < t.left_period() && !out.supp_left_bounded; ++k)
                if (is_contractible(brutal_le(t, t.lo() - 1 - k), cfg)) out.supp_left_bounded = true;
        if (!out.supp_right_bounded)
            for (int k = 0; k < t.right_period() && !out.supp_right_bounded; ++k)
                if (is_contractible(brutal_ge(t, t.hi() + 1 + k), cfg)) out.supp_right_bounded = true;
    }

    Flags f{out.supp_left_bounded, out.supp_right_bounded, out.h_left_bounded, out.h_right_bounded,
            out.exact};
    for (HasseLabel l : all_labels())
        if (member(l, f)) out.labels.insert(l);
    return out;
}

}  // namespace

Classification classify(const Complex& x, Ambient ambient, const SessionConfig& cfg) {
    if (ambient == Ambient::Injectives) {
        Classification c = classify_impl(op_transport(x, x.algebra()->opposite()), Ambient::Projectives, cfg);
        std::swap(c.supp_left_bounded, c.supp_right_bounded);
        std::swap(c.h_left_bounded, c.h_right_bounded);
        Classification out = c;
        out.labels.clear();
        Flags f{c.supp_left_bounded, c.supp_right_bounded, c.h_left_bounded, c.h_right_bounded, c.exact};
        for (HasseLabel l : all_labels())
            if (member(l, f)) out.labels.insert(l);
        return out;
    }
    return classify_impl(x, ambient, cfg);
}

}  // namespace homcat
