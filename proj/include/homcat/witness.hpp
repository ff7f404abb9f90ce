#pragma once

#include "homcat/classify.hpp"

namespace homcat {

/// A homotopy equivalence cone(u) ~ V packaged for later replay.
struct TriangleCertificate {
    ChainMap phi;        // cone(u) -> V
    ChainMap psi;        // V -> cone(u)
    Homotopy round_cone; // id - psi phi = dh + hd on the cone
    bool phi_psi_exact;  // phi psi == id_V on the nose
};

/// Distinguished triangle U -> X -> V -> U[1] with classified end terms.
struct TriangleWitness {
    Complex u, x, v;
    ChainMap into_x;     // U -> X
    ChainMap onto_v;     // X -> V
    ChainMap connecting; // V -> U[1]
    HasseLabel u_label, v_label;
    TriangleCertificate certificate;
};

struct TriangleData {
    Complex u, x, v;
    ChainMap into_x, onto_v, connecting;
    TriangleCertificate certificate;
};

/// degreewise split triangle tau_{>=n}X -> X -> tau_{<=n-1}X -> [1]
TriangleData stupid_triangle(const Complex& x, int n);

/// sigma_{<=n}X -> X -> sigma_{>=n+1}X -> [1] with the explicit equivalence
/// cone(incl) ~ sigma_{>=n+1}X; phi psi = id holds exactly and the homotopy on the
/// cone side is written down in closed form, no solver involved.
TriangleData intelligent_triangle(const Complex& x, int n);

/// replay a certificate: chain conditions, exact identities, homotopy identity
bool verify_certificate(const TriangleData& t);
bool verify_witness(const TriangleWitness& w, Ambient ambient,
                    const SessionConfig& cfg = default_config());

/// Star decompositions. Brutal ids (truncation at degree 1) and subtle ids
/// (degree auto-selected from the homology profile) each give nine families;
/// the exactness families "sa".."se" and the one-sided duals complete the list.
struct Decomposition {
    std::string id;          // "b1".."b9", "s1".."s9", "sa".."se", "inj-split", "proj-split"
    HasseLabel ambient_label;
    HasseLabel u_label, v_label;
    bool brutal;             // brutal truncation at 1 vs subtle truncation at chosen n
    Ambient default_ambient;
    std::string description;
};

const std::vector<Decomposition>& decomposition_table();
const Decomposition& decomposition_by_id(const std::string& id);

/// verified witness that X lies in (u_label) * (v_label) for the chosen family
TriangleWitness star_witness(const Complex& x, const std::string& decomposition_id, Ambient ambient,
                             const SessionConfig& cfg = default_config());

struct SplitWitness {
    TriangleWitness brutal_order;   // X in U * V
    TriangleWitness subtle_order;   // X in V * U
};

/// both-order witnesses for the nine two-sided families ("s1".."s9")
SplitWitness split_witness(const Complex& x, const std::string& decomposition_id, Ambient ambient,
                           const SessionConfig& cfg = default_config());

/// octahedron-style composition: the inner witness decomposes the V part of the
/// outer one; the result certifies X in (join of U labels) * (inner V label)
TriangleWitness compose_tstructures(const TriangleWitness& outer, const TriangleWitness& inner,
                                    Ambient ambient, const SessionConfig& cfg = default_config());

}  // namespace homcat
