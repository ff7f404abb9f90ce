#include "homcat/witness.hpp"

#include <numeric>

namespace homcat {

namespace {

/// componentwise equality over the full relevant range
bool maps_equal(const ChainMap& f, const ChainMap& g) {
    int lo = std::min(f.lo(), g.lo());
    int hi = std::max(f.hi(), g.hi());
    int ll = std::lcm(f.left_period(), g.left_period());
    int lr = std::lcm(f.right_period(), g.right_period());
    for (int n = lo - ll; n <= hi + lr; ++n)
        if (!(f.component(n) == g.component(n))) return false;
    return true;
}

bool is_zero_map(const ChainMap& f) {
    for (int n = f.lo() - f.left_period(); n <= f.hi() + f.right_period(); ++n)
        if (!f.component(n).is_zero()) return false;
    return true;
}

}  // namespace

TriangleData stupid_triangle(const Complex& x, int n) {
    const std::uint32_t p = x.prime();
    Complex u = brutal_ge(x, n);
    Complex v = brutal_le(x, n - 1);

    ChainMap into_x = ChainMap::from_formula(u, x, [&](int d) {
        Matrix m(x.term_dim(d), u.term_dim(d), p);
        if (d >= n)
            for (int i = 0; i < u.term_dim(d); ++i) m.set(i, i, 1);
        return m;
    });
    ChainMap onto_v = ChainMap::from_formula(x, v, [&](int d) {
        Matrix m(v.term_dim(d), x.term_dim(d), p);
        if (d <= n - 1)
            for (int i = 0; i < v.term_dim(d); ++i) m.set(i, i, 1);
        return m;
    });
    Complex u1 = shift(u, 1);
    ChainMap connecting = ChainMap::from_formula(v, u1, [&](int d) {
        if (d == n - 1) return x.diff(n - 1).negated();
        return Matrix(u1.term_dim(d), v.term_dim(d), p);
    });

    Complex c = cone(into_x);
    // cone(u -> x)^d = u^{d+1} (+) x^d
    ChainMap phi = ChainMap::from_formula(c, v, [&](int d) {
        Matrix m(v.term_dim(d), c.term_dim(d), p);
        if (d <= n - 1) {
            int off = u.term_dim(d + 1);
            for (int i = 0; i < v.term_dim(d); ++i) m.set(i, off + i, 1);
        }
        return m;
    });
    ChainMap psi = ChainMap::from_formula(v, c, [&](int d) {
        Matrix m(c.term_dim(d), v.term_dim(d), p);
        if (d < n - 1) {
            int off = u.term_dim(d + 1);
            for (int i = 0; i < v.term_dim(d); ++i) m.set(off + i, i, 1);
        } else if (d == n - 1) {
            // (-d^{n-1}, id) into u^n (+) x^{n-1}
            Matrix dneg = x.diff(n - 1).negated();
            for (int i = 0; i < dneg.rows(); ++i)
                for (int j = 0; j < dneg.cols(); ++j) m.set(i, j, dneg.at(i, j));
            int off = u.term_dim(n);
            for (int i = 0; i < v.term_dim(d); ++i) m.set(off + i, i, 1);
        }
        return m;
    });
    Homotopy h(c, c, 0, {}, 1, 1);
    {
        // h^d = [[0, 1], [0, 0]] : u^{d+1} (+) x^d -> u^d (+) x^{d-1} for d >= n
        std::vector<Matrix> comps;
        int lo = std::min({c.lo(), x.lo(), n}) - 2 * std::lcm(c.left_period(), x.left_period());
        int hi = std::max(c.hi(), x.hi()) + 2 * std::lcm(c.right_period(), x.right_period());
        for (int d = lo; d <= hi; ++d) {
            Matrix m(c.term_dim(d - 1), c.term_dim(d), p);
            if (d >= n) {
                int off = u.term_dim(d + 1);
                for (int i = 0; i < x.term_dim(d); ++i) m.set(i, off + i, 1);
            }
            comps.push_back(m);
        }
        h = Homotopy(c, c, lo, std::move(comps), std::lcm(c.left_period(), x.left_period()),
                     std::lcm(c.right_period(), x.right_period()));
    }
    return {u, x, v, into_x, onto_v, connecting, {phi, psi, h, true}};
}

TriangleData intelligent_triangle(const Complex& x, int n) {
    const std::uint32_t p = x.prime();
    IntelligentLe le = intelligent_le_with_maps(x, n);
    Complex u = le.cx;
    Complex v = intelligent_ge(x, n + 1);
    const Matrix& incl = le.top_inclusion;      // Im(d^n) -> X^{n+1}
    const Matrix& cor = le.top_corestriction;   // X^n -> Im(d^n)

    ChainMap into_x = ChainMap::from_formula(u, x, [&](int d) {
        Matrix m(x.term_dim(d), u.term_dim(d), p);
        if (d <= n)
            for (int i = 0; i < u.term_dim(d); ++i) m.set(i, i, 1);
        else if (d == n + 1)
            m = incl;
        return m;
    });
    ChainMap onto_v = ChainMap::from_formula(x, v, [&](int d) {
        Matrix m(v.term_dim(d), x.term_dim(d), p);
        if (d == n) m = cor;
        else if (d > n)
            for (int i = 0; i < v.term_dim(d); ++i) m.set(i, i, 1);
        return m;
    });
    Complex u1 = shift(u, 1);
    ChainMap connecting = ChainMap::from_formula(v, u1, [&](int d) {
        Matrix m(u1.term_dim(d), v.term_dim(d), p);
        if (d == n)
            for (int i = 0; i < v.term_dim(n); ++i) m.set(i, i, 1);  // identity on Im(d^n)
        return m;
    });

    Complex c = cone(into_x);
    // cone^d = u^{d+1} (+) x^d; u^{n+1} = Im(d^n)
    ChainMap phi = ChainMap::from_formula(c, v, [&](int d) {
        Matrix m(v.term_dim(d), c.term_dim(d), p);
        if (d == n) {
            // (id, cor)
            for (int i = 0; i < v.term_dim(n); ++i) m.set(i, i, 1);
            int off = u.term_dim(n + 1);
            for (int i = 0; i < cor.rows(); ++i)
                for (int j = 0; j < cor.cols(); ++j) m.set(i, off + j, cor.at(i, j));
        } else if (d > n) {
            int off = u.term_dim(d + 1);  // zero block
            for (int i = 0; i < v.term_dim(d); ++i) m.set(i, off + i, 1);
        }
        return m;
    });
    ChainMap psi = ChainMap::from_formula(v, c, [&](int d) {
        Matrix m(c.term_dim(d), v.term_dim(d), p);
        if (d == n) {
            for (int i = 0; i < v.term_dim(n); ++i) m.set(i, i, 1);  // into the Im slot
        } else if (d > n) {
            int off = u.term_dim(d + 1);
            for (int i = 0; i < v.term_dim(d); ++i) m.set(off + i, i, 1);
        }
        return m;
    });
    Homotopy h(c, c, 0, {}, 1, 1);
    {
        std::vector<Matrix> comps;
        int ll = std::lcm(c.left_period(), x.left_period());
        int lr = std::lcm(c.right_period(), x.right_period());
        int lo = std::min({c.lo(), x.lo(), n}) - 2 * ll;
        int hi = std::max(c.hi(), x.hi()) + 2 * lr;
        for (int d = lo; d <= hi; ++d) {
            // h^d = [[0, 1], [0, 0]] : u^{d+1} (+) x^d -> u^d (+) x^{d-1} for d <= n
            Matrix m(c.term_dim(d - 1), c.term_dim(d), p);
            if (d <= n) {
                int off = u.term_dim(d + 1);
                for (int i = 0; i < x.term_dim(d); ++i) m.set(i, off + i, 1);
            }
            comps.push_back(m);
        }
        h = Homotopy(c, c, lo, std::move(comps), ll, lr);
    }
    return {u, x, v, into_x, onto_v, connecting, {phi, psi, h, true}};
}

bool verify_certificate(const TriangleData& t) {
    if (!is_chain_map(t.into_x) || !is_chain_map(t.onto_v) || !is_chain_map(t.connecting)) return false;
    if (!is_chain_map(t.certificate.phi) || !is_chain_map(t.certificate.psi)) return false;
    ChainMap round_v = compose(t.certificate.phi, t.certificate.psi) - ChainMap::identity(t.v);
    if (t.certificate.phi_psi_exact) {
        if (!is_zero_map(round_v)) return false;
    } else if (!null_homotopy(round_v)) {
        return false;
    }
    Complex c = t.certificate.phi.source();
    ChainMap round_c = ChainMap::identity(c) - compose(t.certificate.psi, t.certificate.phi);
    if (!maps_equal(round_c, t.certificate.round_cone.boundary())) return false;
    // the projection X -> cone composed with phi recovers the triangle map onto V
    ChainMap can = ChainMap::from_formula(t.x, c, [&](int d) {
        Matrix m(c.term_dim(d), t.x.term_dim(d), t.x.prime());
        int off = t.u.term_dim(d + 1);
        for (int i = 0; i < t.x.term_dim(d); ++i) m.set(off + i, i, 1);
        return m;
    });
    if (!maps_equal(compose(t.certificate.phi, can), t.onto_v)) return false;
    return true;
}

bool verify_witness(const TriangleWitness& w, Ambient ambient, const SessionConfig& cfg) {
    TriangleData t{w.u, w.x, w.v, w.into_x, w.onto_v, w.connecting, w.certificate};
    if (!verify_certificate(t)) return false;
    if (!null_homotopy(compose(w.onto_v, w.into_x), cfg)) return false;
    if (!classify(w.u, ambient, cfg).in(w.u_label)) return false;
    if (!classify(w.v, ambient, cfg).in(w.v_label)) return false;
    return true;
}

const std::vector<Decomposition>& decomposition_table() {
    using L = HasseLabel;
    static const std::vector<Decomposition> table = {
        // brutal truncation at degree 1: U = tau_{>=1}, V = tau_{<=0}
        {"b1", L::InfPlus, L::Plus, L::InfBounded, true, Ambient::Projectives,
         "left-bounded against homology-bounded"},
        {"b2", L::InfMinus, L::InfBounded, L::Minus, true, Ambient::Projectives,
         "homology-bounded against right-bounded"},
        {"b3", L::InfBounded, L::PlusBounded, L::MinusBounded, true, Ambient::Projectives,
         "two-sided homology-bounded split"},
        {"b4", L::Full, L::InfPlus, L::InfMinus, true, Ambient::Projectives,
         "homology left-bounded against homology right-bounded"},
        {"b5", L::InfPlus, L::Plus, L::MinusBounded, true, Ambient::Projectives, "composite family"},
        {"b6", L::Full, L::InfPlus, L::Minus, true, Ambient::Projectives, "composite family"},
        {"b7", L::InfMinus, L::PlusBounded, L::Minus, true, Ambient::Projectives, "composite family"},
        {"b8", L::Full, L::Plus, L::InfMinus, true, Ambient::Projectives, "composite family"},
        {"b9", L::Full, L::Plus, L::Minus, true, Ambient::Projectives, "one-sided split"},
        // subtle truncation, degree auto-selected: U = sigma_{<=n}, V = sigma_{>=n+1}
        {"s1", L::InfPlus, L::InfBounded, L::Plus, false, Ambient::Modules, "reversed order of b1"},
        {"s2", L::InfMinus, L::Minus, L::InfBounded, false, Ambient::Modules, "reversed order of b2"},
        {"s3", L::InfBounded, L::MinusBounded, L::PlusBounded, false, Ambient::Modules,
         "reversed order of b3"},
        {"s4", L::Full, L::InfMinus, L::InfPlus, false, Ambient::Modules, "reversed order of b4"},
        {"s5", L::InfPlus, L::MinusBounded, L::Plus, false, Ambient::Modules, "reversed order of b5"},
        {"s6", L::Full, L::Minus, L::InfPlus, false, Ambient::Modules, "reversed order of b6"},
        {"s7", L::InfMinus, L::Minus, L::PlusBounded, false, Ambient::Modules, "reversed order of b7"},
        {"s8", L::Full, L::InfMinus, L::Plus, false, Ambient::Modules, "reversed order of b8"},
        {"s9", L::Full, L::Minus, L::Plus, false, Ambient::Modules, "reversed order of b9"},
        // exactness families
        {"sa", L::InfExact, L::MinusExact, L::PlusExact, false, Ambient::Modules,
         "exact split at any degree"},
        {"sb", L::InfBounded, L::InfExact, L::PlusBounded, false, Ambient::Modules,
         "cut below the homology support"},
        {"sc", L::InfBounded, L::MinusBounded, L::InfExact, false, Ambient::Modules,
         "cut above the homology support"},
        {"sd", L::PlusBounded, L::Bounded, L::PlusExact, false, Ambient::Modules,
         "bounded head, exact tail"},
        {"se", L::MinusBounded, L::MinusExact, L::Bounded, false, Ambient::Modules,
         "exact head, bounded tail"},
        // one-sided ambient families
        {"inj-split", L::InfPlus, L::InfExact, L::Plus, false, Ambient::Injectives,
         "exact part against the left-bounded part, injective terms"},
        {"proj-split", L::InfMinus, L::Minus, L::InfExact, false, Ambient::Projectives,
         "right-bounded part against the exact part, projective terms"},
    };
    return table;
}

const Decomposition& decomposition_by_id(const std::string& id) {
    for (const auto& d : decomposition_table())
        if (d.id == id) return d;
    throw ParseError("unknown decomposition id '" + id + "'");
}

namespace {

int select_degree(const Decomposition& dec, const Complex& x) {
    if (dec.brutal) return 1;
    HomologyProfile hp = homology_profile(x);
    bool need_min = dec.id == "sb" || dec.id == "se" || dec.id == "inj-split";
    bool need_max = dec.id == "sc" || dec.id == "sd" || dec.id == "proj-split";
    if (need_min) {
        if (!hp.left_bounded())
            throw UnsupportedError("cannot pick a truncation degree: homology unbounded to the left");
        auto m = hp.min_support();
        return m ? *m - 1 : 0;
    }
    if (need_max) {
        if (!hp.right_bounded())
            throw UnsupportedError("cannot pick a truncation degree: homology unbounded to the right");
        auto m = hp.max_support();
        return m ? *m : 0;
    }
    return 0;
}

}  // namespace

TriangleWitness star_witness(const Complex& x, const std::string& decomposition_id, Ambient ambient,
                             const SessionConfig& cfg) {
    const Decomposition& dec = decomposition_by_id(decomposition_id);
    Classification cx = classify(x, ambient, cfg);
    if (!cx.in(dec.ambient_label))
        throw ValidationError("complex does not carry the ambient label " +
                              label_name(dec.ambient_label) + " required by " + dec.id);
    int n = select_degree(dec, x);
    TriangleData t = dec.brutal ? stupid_triangle(x, n) : intelligent_triangle(x, n);
    TriangleWitness w{t.u, t.x, t.v, t.into_x, t.onto_v, t.connecting, dec.u_label, dec.v_label,
                      t.certificate};
    if (!verify_witness(w, ambient, cfg))
        throw ValidationError("constructed witness for " + dec.id + " failed verification");
    return w;
}

SplitWitness split_witness(const Complex& x, const std::string& decomposition_id, Ambient ambient,
                           const SessionConfig& cfg) {
    const Decomposition& dec = decomposition_by_id(decomposition_id);
    if (dec.id.size() != 2 || dec.id[0] != 's' || dec.id[1] < '1' || dec.id[1] > '9')
        throw ParseError("split witnesses exist for the two-sided families s1..s9");
    std::string brutal_id = std::string("b") + dec.id[1];
    TriangleWitness subtle = star_witness(x, dec.id, ambient, cfg);
    TriangleWitness brutal = star_witness(x, brutal_id, ambient, cfg);
    return {brutal, subtle};
}

TriangleWitness compose_tstructures(const TriangleWitness& outer, const TriangleWitness& inner,
                                    Ambient ambient, const SessionConfig& cfg) {
    if (!inner.x.same_presentation(outer.v))
        throw ValidationError("inner witness must decompose the V part of the outer witness");
    const std::uint32_t p = outer.x.prime();
    ChainMap c = compose(inner.onto_v, outer.onto_v);  // X -> V''
    Complex conec = cone(c);
    Complex w = shift(conec, -1);
    const Complex& x = outer.x;
    const Complex& vpp = inner.v;

    // w^d = x^d (+) v''^{d-1}; the rotated triangle map is minus the projection
    ChainMap into_x = ChainMap::from_formula(w, x, [&](int d) {
        Matrix m(x.term_dim(d), w.term_dim(d), p);
        for (int i = 0; i < x.term_dim(d); ++i) m.set(i, i, p - 1);
        return m;
    });
    ChainMap onto_v = c;
    ChainMap connecting = ChainMap::from_formula(vpp, conec, [&](int d) {
        Matrix m(conec.term_dim(d), vpp.term_dim(d), p);
        int off = x.term_dim(d + 1);
        for (int i = 0; i < vpp.term_dim(d); ++i) m.set(off + i, i, 1);
        return m;
    });

    Complex cc = cone(into_x);
    // cc^d = w^{d+1} (+) x^d = x^{d+1} (+) v''^d (+) x^d ; phi = [0, id, c]
    ChainMap phi = ChainMap::from_formula(cc, vpp, [&](int d) {
        Matrix m(vpp.term_dim(d), cc.term_dim(d), p);
        int off1 = x.term_dim(d + 1);
        for (int i = 0; i < vpp.term_dim(d); ++i) m.set(i, off1 + i, 1);
        Matrix cd = c.component(d);
        int off2 = off1 + vpp.term_dim(d);
        for (int i = 0; i < cd.rows(); ++i)
            for (int j = 0; j < cd.cols(); ++j) m.set(i, off2 + j, cd.at(i, j));
        return m;
    });
    auto eq = homotopy_inverse(phi, cfg);
    if (!eq) throw ValidationError("composition certificate could not be completed");

    TriangleWitness out{w,
                        x,
                        vpp,
                        into_x,
                        onto_v,
                        connecting,
                        label_join(outer.u_label, inner.u_label),
                        inner.v_label,
                        {phi, eq->bwd, eq->on_source, false}};
    if (!verify_witness(out, ambient, cfg))
        throw ValidationError("composed witness failed verification");
    return out;
}

}  // namespace homcat
