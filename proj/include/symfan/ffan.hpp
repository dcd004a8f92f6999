#pragma once

// Placement checks, the fundamental fan FFan(P) = faces of {sigma ∩ Phi},
// its refinement by carrier, and the posets Z(P), Z(P, phi), R(P).

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytope.hpp"
#include "sigma_poset.hpp"
#include "typea.hpp"

namespace symfan {

class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of P^∨ ∩ Phi°, if there is one.
inline std::optional<WVector> is_placed(const Polytope& P) {
    const int d = static_cast<int>(P.d());
    Cone c = cone_intersect(perp_space(P).as_cone(), fundamental_chamber(d));
    WVector w = WVector::from_reduced(c.relint_point());
    auto s = chamber_face_of_point(w);
    if (s && static_cast<int>(s->size()) == d) return w;
    return std::nullopt;
}

/// Index of a vertex whose coordinates are not strictly increasing.
inline std::optional<int> appropriate_violation(const Polytope& P) {
    for (std::size_t i = 0; i < P.vertices().size(); ++i) {
        const auto& v = P.vertices()[i];
        for (std::size_t k = 1; k < v.d(); ++k)
            if (!(v[k - 1] < v[k])) return static_cast<int>(i);
    }
    return std::nullopt;
}

inline bool is_appropriate(const Polytope& P) { return !appropriate_violation(P).has_value(); }

inline void require_placed_and_appropriate(const Polytope& P) {
    if (auto v = appropriate_violation(P))
        throw HypothesisViolation("polytope is not appropriate: vertex " +
                                  to_string(P.vertices()[static_cast<std::size_t>(*v)]) +
                                  " does not have strictly increasing coordinates");
    if (!is_placed(P))
        throw HypothesisViolation("polytope is not placed: its perpendicular space misses the open fundamental chamber");
}

struct OmegaPair {
    int face;                   // index into the face lattice of P
    OrderedSetPartition phi;    // standard, indexes a face of Phi
};

struct FFanCone {
    Cone cone;
    OrderedSetPartition carrier;
    int source;  // face of P whose normal cone is the inclusion-minimal one containing cone
};

struct FundamentalFan {
    Polytope P;
    FaceLattice faces;
    std::vector<Cone> normal_cones;   // parallel to faces.faces
    std::vector<OmegaPair> omega;
    std::vector<FFanCone> cones;      // parallel to omega

    int d() const { return static_cast<int>(P.d()); }
    std::size_t codim(std::size_t i) const { return P.d() - 1 - cones[i].cone.dim(); }
    std::string label(std::size_t i) const {
        std::string s = "{";
        const auto& vs = faces.faces[static_cast<std::size_t>(omega[i].face)].verts;
        for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k]);
        return s + "}/" + to_string(omega[i].phi);
    }
};

inline std::vector<OmegaPair> omega(const Polytope& P, const FaceLattice& fl, const std::vector<Cone>& ncones) {
    require_placed_and_appropriate(P);
    std::vector<OmegaPair> out;
    for (const auto& s : standard_osps(static_cast<int>(P.d()))) {
        Cone phi = osp_cone(s);
        for (std::size_t f = 0; f < fl.faces.size(); ++f)
            if (relints_meet(ncones[f], phi)) out.push_back({static_cast<int>(f), s});
    }
    return out;
}

inline FundamentalFan fundamental_fan(const Polytope& P) {
    require_placed_and_appropriate(P);
    FundamentalFan ff;
    ff.P = P;
    ff.faces = face_lattice(P);
    ff.normal_cones = normal_fan(P, ff.faces);
    auto om = omega(P, ff.faces, ff.normal_cones);
    std::vector<std::size_t> order(om.size());
    std::vector<FFanCone> cones;
    for (const auto& pr : om) {
        Cone c = cone_intersect(ff.normal_cones[static_cast<std::size_t>(pr.face)], osp_cone(pr.phi));
        cones.push_back({std::move(c), pr.phi, pr.face});
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto &ca = cones[a], &cb = cones[b];
        if (ca.cone.dim() != cb.cone.dim()) return ca.cone.dim() < cb.cone.dim();
        if (!(ca.carrier == cb.carrier)) return ca.carrier < cb.carrier;
        return ca.source < cb.source;
    });
    for (std::size_t i : order) {
        ff.omega.push_back(om[i]);
        ff.cones.push_back(std::move(cones[i]));
    }
    return ff;
}

/// Cells of the refined fan: indices of cones grouped by carrier.
inline std::map<OrderedSetPartition, std::vector<int>> refined_fan(const FundamentalFan& ff) {
    std::map<OrderedSetPartition, std::vector<int>> cells;
    for (const auto& s : standard_osps(ff.d())) cells[s];
    for (std::size_t i = 0; i < ff.cones.size(); ++i) cells[ff.cones[i].carrier].push_back(static_cast<int>(i));
    return cells;
}

/// f^i: number of cones of codimension i, for i = 0 .. d-1.
inline std::vector<long long> codim_counts(const FundamentalFan& ff, const std::vector<int>& which) {
    std::vector<long long> f(static_cast<std::size_t>(ff.d()), 0);
    for (int i : which) ++f[ff.codim(static_cast<std::size_t>(i))];
    return f;
}

inline std::vector<int> all_indices(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// Inclusion order on the cones of FFan(P).
inline Poset zposet(const FundamentalFan& ff) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ff.cones.size(); ++i) labels.push_back(ff.label(i));
    return Poset::from_leq(std::move(labels), [&](int a, int b) {
        return ff.cones[static_cast<std::size_t>(b)].cone.contains_cone(ff.cones[static_cast<std::size_t>(a)].cone);
    });
}

inline SigmaPoset rposet(const FundamentalFan& ff) {
    SigmaPoset r;
    r.poset = zposet(ff);
    for (const auto& c : ff.cones) r.carrier.push_back(c.carrier);
    return r;
}

/// Z(P, phi): the cell at phi with the induced order.
inline Poset zposet_cell(const FundamentalFan& ff, const OrderedSetPartition& phi) {
    return zposet(ff).induced(refined_fan(ff).at(phi));
}

/// Removes the corank-1 elements covered by exactly one maximal element and
/// everything below them. Returns the surviving element indices.
inline std::vector<int> prune_to_phi_cell_indices(const Poset& z) {
    auto r = z.rank_function();
    if (!r) throw std::invalid_argument("prune_to_phi_cell: poset is not graded");
    auto mx = z.maximal();
    int top = mx.empty() ? 0 : (*r)[static_cast<std::size_t>(mx[0])];
    for (int m : mx)
        if ((*r)[static_cast<std::size_t>(m)] != top)
            throw std::invalid_argument("prune_to_phi_cell: maximal elements have different ranks");
    std::vector<bool> removed(z.size(), false);
    for (std::size_t x = 0; x < z.size(); ++x) {
        if ((*r)[x] != top - 1) continue;
        int covering_max = 0;
        for (int y : z.up(static_cast<int>(x)))
            if (z.up(y).empty()) ++covering_max;
        if (covering_max != 1) continue;
        removed[x] = true;
        for (std::size_t w = 0; w < z.size(); ++w)
            if (z.lt(static_cast<int>(w), static_cast<int>(x))) removed[w] = true;
    }
    std::vector<int> keep;
    for (std::size_t x = 0; x < z.size(); ++x)
        if (!removed[x]) keep.push_back(static_cast<int>(x));
    return keep;
}

inline Poset prune_to_phi_cell(const Poset& z) { return z.induced(prune_to_phi_cell_indices(z)); }

/// Face poset of P (nonempty faces) ordered by inclusion.
inline Poset face_poset(const FaceLattice& fl) {
    std::vector<std::string> labels;
    for (const auto& f : fl.faces) {
        std::string s = "{";
        for (std::size_t k = 0; k < f.verts.size(); ++k) s += (k ? "," : "") + std::to_string(f.verts[k]);
        labels.push_back(s + "}");
    }
    return Poset::from_covers(std::move(labels), fl.covers);
}

/// Z(P, Phi) against the dual face poset of P, matching codim(tau) with dim(F).
inline IsoResult zpphi_iso(const FundamentalFan& ff, std::size_t budget = default_iso_budget) {
    const auto cell = refined_fan(ff).at(OrderedSetPartition::finest(ff.d()));
    Poset z = zposet(ff).induced(cell);
    Poset f = face_poset(ff.faces).dual();
    if (z.size() != f.size()) return {};
    std::vector<int> ca, cb;
    for (int i : cell) ca.push_back(static_cast<int>(ff.codim(static_cast<std::size_t>(i))));
    for (const auto& face : ff.faces.faces) cb.push_back(face.dim);
    return poset_iso(z, f, budget, ca, cb);
}

/// The pruned poset Z(P) against the geometric cell Z(P, Phi).
inline IsoResult zdetermine_iso(const FundamentalFan& ff, std::size_t budget = default_iso_budget) {
    Poset pruned = prune_to_phi_cell(zposet(ff));
    Poset cell = zposet_cell(ff, OrderedSetPartition::finest(ff.d()));
    if (pruned.size() != cell.size()) return {};
    return poset_iso(pruned, cell, budget);
}

/// tau <= tau' iff source and carrier are both below, over all pairs of FFan(P).
inline bool check_bijection_order(const FundamentalFan& ff) {
    Poset z = zposet(ff);
    Poset f = face_poset(ff.faces);
    for (std::size_t a = 0; a < ff.cones.size(); ++a)
        for (std::size_t b = 0; b < ff.cones.size(); ++b) {
            bool geo = z.leq(static_cast<int>(a), static_cast<int>(b));
            // normal cones reverse the face order
            bool comb = f.leq(ff.cones[b].source, ff.cones[a].source) && ff.cones[b].carrier.refines(ff.cones[a].carrier);
            if (geo != comb) return false;
        }
    return true;
}

}  // namespace symfan
