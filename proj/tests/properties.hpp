#pragma once

// Seeded random instances and the four property suites shared by the unit
// tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <string>

#include <symfan/symmetrize.hpp>

namespace symfan::testing {

struct SuiteResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0; }
};

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// gamma + sum c_i (e_i - 2 e_{i+1} + e_{i+2}) for small c: every vertex is
/// strictly increasing and (0, 1, ..., d-1) is constant on the hull.
inline Polytope random_placed_polytope(std::mt19937_64& rng, int d) {
    const auto npts = static_cast<std::size_t>(uniform(rng, 1, d == 3 ? 2 : 5));
    std::vector<UPoint> pts;
    for (std::size_t p = 0; p < npts; ++p) {
        IVec x(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = 20 * i;
        for (int i = 0; i + 2 < d; ++i) {
            long c = uniform(rng, -2, 2);
            x[static_cast<std::size_t>(i)] += c;
            x[static_cast<std::size_t>(i + 1)] -= 2 * c;
            x[static_cast<std::size_t>(i + 2)] += c;
        }
        pts.emplace_back(x);
    }
    return Polytope::hull(pts);
}

/// Random points of the slice with coordinate sum 3d, entries small.
inline Polytope random_polytope(std::mt19937_64& rng, int d) {
    const auto npts = static_cast<std::size_t>(uniform(rng, 1, d + 3));
    std::vector<UPoint> pts;
    for (std::size_t p = 0; p < npts; ++p) {
        IVec x(static_cast<std::size_t>(d));
        long s = 0;
        for (int i = 0; i + 1 < d; ++i) {
            x[static_cast<std::size_t>(i)] = uniform(rng, 0, 5);
            s += x[static_cast<std::size_t>(i)].convert_to<long>();
        }
        x.back() = 3 * d - s;
        pts.emplace_back(x);
    }
    return Polytope::hull(pts);
}

inline IVec random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
    IVec v(n);
    for (auto& x : v) x = uniform(rng, -bound, bound);
    return v;
}

inline Cone random_cone(std::mt19937_64& rng, std::size_t n, std::size_t min_gens, std::size_t max_gens) {
    std::vector<IVec> gens;
    const auto k = static_cast<std::size_t>(uniform(rng, static_cast<long>(min_gens), static_cast<long>(max_gens)));
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, 3));
    return Cone::from_generators(n, gens, {});
}

/// kappa(v, g) over all vertices and group elements is a pointed conic dissection.
inline SuiteResult dissection_suite(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (std::size_t c = 0; c < cases; ++c) {
        int d = static_cast<int>(uniform(rng, 3, 4));
        Polytope P = random_placed_polytope(rng, d);
        ++r.cases;
        auto rep = check_dissection(kappa_cones(P), 50, rng);
        if (!rep.ok()) r.fail("case " + std::to_string(c) + ": " + rep.first_failure);
    }
    return r;
}

/// gamma1 meets the interior of a full-dimensional gamma2 => the relative interiors meet.
inline SuiteResult aux_suite(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    std::size_t attempts = 0;
    while (r.cases < cases && attempts++ < 100 * cases) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 3));
        Cone g2 = random_cone(rng, n, n, n + 3);
        if (!g2.full_dimensional()) continue;
        Cone g1 = random_cone(rng, n, 1, 3);
        if (!meets_relint(g1, g2)) continue;
        ++r.cases;
        Cone c = cone_intersect(g1, g2);
        IVec p = c.relint_point();
        if (!(g1.contains(p) == Containment::interior && g2.contains(p) == Containment::interior))
            r.fail("gamma1 rays " + std::to_string(g1.rays().size()) + " in dimension " + std::to_string(n));
    }
    if (r.cases < cases) r.fail("too few instances satisfied the hypothesis");
    return r;
}

/// F ⊆ G iff ncone(G) ⊆ ncone(F), and ncone(F) has codimension dim F.
inline SuiteResult face_fan_suite(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (std::size_t c = 0; c < cases; ++c) {
        int d = static_cast<int>(uniform(rng, 3, 4));
        Polytope P = random_polytope(rng, d);
        FaceLattice fl = face_lattice(P);
        auto nc = normal_fan(P, fl);
        ++r.cases;
        bool ok = true;
        for (std::size_t i = 0; i < fl.faces.size() && ok; ++i) {
            if (static_cast<int>(P.d() - 1 - nc[i].dim()) != fl.faces[i].dim) ok = false;
            for (std::size_t j = 0; j < fl.faces.size() && ok; ++j) {
                const auto& F = fl.faces[i].verts;
                const auto& G = fl.faces[j].verts;
                bool sub = std::includes(G.begin(), G.end(), F.begin(), F.end());
                if (sub != nc[i].contains_cone(nc[j])) ok = false;
            }
        }
        if (!ok) r.fail("case " + std::to_string(c) + " with " + std::to_string(P.vertices().size()) + " vertices");
    }
    return r;
}

/// [g w, u - x0] = [w, u g - x0 g].
inline SuiteResult duality_suite(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (std::size_t c = 0; c < cases; ++c) {
        int d = static_cast<int>(uniform(rng, 2, 4));
        auto perms = all_permutations(d);
        const auto& g = perms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(perms.size()) - 1))];
        QVec wq, uq, xq;
        for (int i = 0; i < d; ++i) {
            wq.emplace_back(uniform(rng, -20, 20), uniform(rng, 1, 5));
            uq.emplace_back(uniform(rng, -20, 20), uniform(rng, 1, 5));
            xq.emplace_back(uniform(rng, -20, 20), uniform(rng, 1, 5));
        }
        Rat shift = 0;
        for (int i = 0; i < d; ++i) shift += uq[static_cast<std::size_t>(i)] - xq[static_cast<std::size_t>(i)];
        xq.back() += shift;
        WVector w(wq);
        UPoint u(uq), x0(xq);
        ++r.cases;
        if (pairing(act_W(g, w), u, x0) != pairing(w, act_U(u, g), act_U(x0, g)))
            r.fail("g = " + to_string(g) + ", w = " + to_string(w));
    }
    return r;
}

}  // namespace symfan::testing
