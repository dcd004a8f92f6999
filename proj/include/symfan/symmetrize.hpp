#pragma once

// Geometric symmetrization: the orbit hull G(P) computed directly, the vertex
// cones kappa(v, g), and the fan and f-vector of G(P) assembled from the
// refined fundamental fan.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ffan.hpp"
#include "polytope.hpp"
#include "typea.hpp"

namespace symfan {

inline std::vector<UPoint> orbit_points(const Polytope& P) {
    std::set<UPoint> pts;
    for (const auto& g : all_permutations(static_cast<int>(P.d())))
        for (const auto& v : P.vertices()) pts.insert(act_U(v, g));
    return {pts.begin(), pts.end()};
}

struct Oracle {
    Polytope hull;
    FaceLattice faces;
};

/// Hull of the full orbit, with no use of fan theory.
inline Oracle symmetrization_oracle(const Polytope& P) {
    Oracle o;
    o.hull = Polytope::hull(orbit_points(P));
    o.faces = face_lattice(o.hull);
    return o;
}

/// kappa(v, g) = g^-1 [Phi ∩ ncone(v, P)].
inline Cone kappa_cone(const Polytope& P, int v, const Permutation& g) {
    require_placed_and_appropriate(P);
    Cone c = cone_intersect(fundamental_chamber(static_cast<int>(P.d())), normal_cone(P, {v}));
    return act_cone(g.inverse(), c);
}

struct VertexConeReport {
    std::size_t checked = 0;
    bool all_vertices = true;
    bool all_cones_match = true;
    std::string first_failure;
    bool ok() const { return all_vertices && all_cones_match; }
};

/// For every vertex v of P and g in S_d: v g is a vertex of the orbit hull and
/// its normal cone there equals kappa(v, g).
inline VertexConeReport verify_vertex_cones(const Polytope& P, const Oracle& o) {
    require_placed_and_appropriate(P);
    VertexConeReport rep;
    for (std::size_t v = 0; v < P.vertices().size(); ++v)
        for (const auto& g : all_permutations(static_cast<int>(P.d()))) {
            ++rep.checked;
            UPoint vg = act_U(P.vertices()[v], g);
            int idx = o.hull.vertex_index(vg);
            if (idx < 0) {
                if (rep.first_failure.empty()) rep.first_failure = to_string(vg) + " is not a vertex";
                rep.all_vertices = false;
                continue;
            }
            if (!(normal_cone(o.hull, {idx}) == kappa_cone(P, static_cast<int>(v), g))) {
                if (rep.first_failure.empty()) rep.first_failure = "normal cone mismatch at " + to_string(vg);
                rep.all_cones_match = false;
            }
        }
    return rep;
}

/// The vertex set of P is the vertex set of a face of the orbit hull.
inline bool check_P_is_face(const Polytope& P, const Oracle& o) {
    std::vector<int> idx;
    for (const auto& v : P.vertices()) {
        int i = o.hull.vertex_index(v);
        if (i < 0) return false;
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return o.faces.find(idx) >= 0;
}

/// f_k(G(P)) = sum over phi of (number of codim-k cones in the cell at phi) * |G| / m(phi).
inline FVector fvector_from_refined(const FundamentalFan& ff, bool include_empty = false) {
    const int d = ff.d();
    FVector f;
    f.include_empty = include_empty;
    f.counts.assign(static_cast<std::size_t>(d), 0);
    for (const auto& [phi, cell] : refined_fan(ff)) {
        auto fi = codim_counts(ff, cell);
        for (std::size_t k = 0; k < fi.size(); ++k) f.counts[k] += fi[k] * (factorial(d) / stabilizer_order(phi));
    }
    while (f.counts.size() > 1 && f.counts.back() == 0) f.counts.pop_back();
    return f;
}

struct AssembledCone {
    int tau;          // index into the fundamental fan
    Permutation g;    // canonical coset representative for the carrier of tau
};

/// The cones g tau of G(FFan(P)), one per coset of the carrier stabilizer.
inline std::vector<AssembledCone> assemble_fan(const FundamentalFan& ff) {
    std::vector<AssembledCone> out;
    for (std::size_t t = 0; t < ff.cones.size(); ++t)
        for (auto& g : coset_reps(ff.cones[t].carrier)) out.push_back({static_cast<int>(t), std::move(g)});
    return out;
}

inline Cone assembled_cone(const FundamentalFan& ff, const AssembledCone& a) {
    return act_cone(a.g, ff.cones[static_cast<std::size_t>(a.tau)].cone);
}

/// Orbit of a designated point of P and the face lattice of P, as a label.
struct HybridLabel {
    UPoint u;
    FVector face_fvector;
};

inline HybridLabel hybrid_label(const FundamentalFan& ff) { return {ff.P.vertices().front(), f_vector(ff.faces)}; }

struct SymmetrizationResult {
    Oracle oracle;
    std::map<std::pair<int, Permutation>, int> vertex_index;   // (v, g) -> index of v g in the hull
    std::vector<AssembledCone> fan;
    HybridLabel hybrid;
};

inline SymmetrizationResult symmetrize_polytope(const Polytope& P) {
    SymmetrizationResult r;
    FundamentalFan ff = fundamental_fan(P);
    r.oracle = symmetrization_oracle(P);
    for (std::size_t v = 0; v < P.vertices().size(); ++v)
        for (const auto& g : all_permutations(static_cast<int>(P.d())))
            r.vertex_index[{static_cast<int>(v), g}] = r.oracle.hull.vertex_index(act_U(P.vertices()[v], g));
    r.fan = assemble_fan(ff);
    r.hybrid = hybrid_label(ff);
    return r;
}

struct DissectionReport {
    bool full_dimensional_pointed = true;
    bool interiors_disjoint = true;
    bool probes_covered = true;
    std::size_t cones = 0;
    std::size_t probes = 0;
    std::string first_failure;
    bool ok() const { return full_dimensional_pointed && interiors_disjoint && probes_covered; }
};

/// Exact check that the cones form a pointed conic dissection of W_d, with
/// covering tested on random rational probe points.
inline DissectionReport check_dissection(const std::vector<Cone>& cones, std::size_t probes, std::mt19937_64& rng) {
    DissectionReport rep;
    rep.cones = cones.size();
    rep.probes = probes;
    for (const auto& c : cones)
        if (!c.full_dimensional() || !c.pointed()) {
            rep.full_dimensional_pointed = false;
            if (rep.first_failure.empty()) rep.first_failure = "cone is not full-dimensional and pointed";
        }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (relints_meet(cones[i], cones[j])) {
                rep.interiors_disjoint = false;
                if (rep.first_failure.empty())
                    rep.first_failure = "interiors of cones " + std::to_string(i) + " and " + std::to_string(j) + " meet";
            }
    if (cones.empty()) return rep;
    const std::size_t n = cones.front().ambient();
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (std::size_t p = 0; p < probes; ++p) {
        IVec x(n);
        for (auto& c : x) c = coord(rng);
        std::size_t inside = 0, interior = 0;
        for (const auto& c : cones) {
            auto k = c.contains(x);
            if (k != Containment::outside) ++inside;
            if (k == Containment::interior) ++interior;
        }
        if (inside == 0 || interior > 1 || (inside > 1 && interior > 0)) {
            rep.probes_covered = false;
            if (rep.first_failure.empty()) rep.first_failure = "probe " + vec_to_string(x) + " badly covered";
        }
    }
    return rep;
}

inline std::vector<Cone> kappa_cones(const Polytope& P) {
    std::vector<Cone> out;
    for (std::size_t v = 0; v < P.vertices().size(); ++v)
        for (const auto& g : all_permutations(static_cast<int>(P.d())))
            out.push_back(kappa_cone(P, static_cast<int>(v), g));
    return out;
}

}  // namespace symfan
