#pragma once

// Polytopes given by vertices in an affine slice of Q^d, their face
// lattices, normal fans in W_d and f-vectors.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "kernel.hpp"

namespace symfan {

struct FaceLattice {
    struct Face {
        std::vector<int> verts;
        int dim = 0;
    };
    std::vector<Face> faces;                    // sorted by (dim, verts); last is the polytope
    std::vector<std::pair<int, int>> covers;    // (i, j): faces[i] is a facet of faces[j]

    int rank() const { return faces.empty() ? -1 : faces.back().dim; }
    int find(const std::vector<int>& verts) const {
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i].verts == verts) return static_cast<int>(i);
        return -1;
    }
};

struct FVector {
    std::vector<long long> counts;  // f_0, ..., f_e
    bool include_empty = false;

    std::vector<long long> values() const {
        std::vector<long long> out;
        if (include_empty) out.push_back(1);
        out.insert(out.end(), counts.begin(), counts.end());
        return out;
    }
    long long euler_sum() const {
        long long s = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) s += (i % 2 ? -1 : 1) * counts[i];
        return s;
    }
    /// sum (-1)^i f_i = 1 for every polytope of dimension >= 0.
    bool euler_holds() const { return euler_sum() == 1; }
    friend bool operator==(const FVector& a, const FVector& b) { return a.values() == b.values(); }
};

inline std::string to_string(const FVector& f) {
    std::string s = "(";
    auto v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

class Polytope {
public:
    Polytope() = default;

    /// Convex hull; duplicate and non-vertex input points are dropped.
    static Polytope hull(const std::vector<UPoint>& points) {
        if (points.empty()) throw std::invalid_argument("hull: empty point set");
        const std::size_t d = points.front().d();
        for (const auto& p : points) {
            require_same_dim(p.d(), d, "hull");
            if (p.slice_sum() != points.front().slice_sum())
                throw std::invalid_argument("hull: points lie in different slices");
        }
        std::vector<IVec> gens;
        for (const auto& p : points) gens.push_back(homogenize(p));
        Cone c = Cone::from_generators(d + 1, gens, {});
        Polytope P;
        P.d_ = d;
        P.slice_sum_ = points.front().slice_sum();
        for (const auto& r : c.rays()) {
            QVec x(d);
            for (std::size_t i = 0; i < d; ++i) x[i] = Rat(r[i + 1], r[0]);
            P.verts_.emplace_back(std::move(x));
        }
        std::sort(P.verts_.begin(), P.verts_.end());
        P.cone_ = std::move(c);
        P.index_facets();
        return P;
    }

    std::size_t d() const { return d_; }
    const Rat& slice_sum() const { return slice_sum_; }
    const std::vector<UPoint>& vertices() const { return verts_; }
    int dim() const { return static_cast<int>(cone_.dim()) - 1; }
    /// Homogenized facet inequalities b + a.x >= 0 stored as (b, a).
    const std::vector<IVec>& facets() const { return cone_.ineqs(); }
    const std::vector<Bitset>& facet_vertices() const { return facet_verts_; }

    int vertex_index(const UPoint& u) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), u);
        if (it == verts_.end() || !(*it == u)) return -1;
        return static_cast<int>(it - verts_.begin());
    }

    static IVec homogenize(const UPoint& p) {
        QVec h;
        h.reserve(p.d() + 1);
        h.push_back(1);
        h.insert(h.end(), p.coords().begin(), p.coords().end());
        IVec r = primitive(h);
        return r;
    }

    /// Facet normal functional in W (reduced coordinates), maximized on facet j.
    IVec facet_functional(std::size_t j) const {
        const IVec& f = cone_.ineqs()[j];
        IVec w(d_ - 1);
        for (std::size_t i = 1; i < d_; ++i) w[i - 1] = f[1] - f[i + 1];
        return primitive(std::move(w));
    }

private:
    void index_facets() {
        facet_verts_.clear();
        for (const auto& f : cone_.ineqs()) {
            Bitset b(verts_.size());
            for (std::size_t i = 0; i < verts_.size(); ++i)
                if (dot(f, homogenize(verts_[i])) == 0) b.set(i);
            facet_verts_.push_back(std::move(b));
        }
    }

    std::size_t d_ = 0;
    Rat slice_sum_ = 0;
    std::vector<UPoint> verts_;
    Cone cone_;
    std::vector<Bitset> facet_verts_;
};

inline Polytope hull(const std::vector<UPoint>& pts) { return Polytope::hull(pts); }

inline int face_dim(const Polytope& P, const std::vector<int>& verts) {
    std::vector<IVec> h;
    for (int i : verts) h.push_back(Polytope::homogenize(P.vertices()[static_cast<std::size_t>(i)]));
    return static_cast<int>(rank(h, P.d() + 1)) - 1;
}

inline FaceLattice face_lattice(const Polytope& P) {
    const std::size_t nv = P.vertices().size();
    Bitset all(nv);
    for (std::size_t i = 0; i < nv; ++i) all.set(i);

    std::map<Bitset, std::vector<Bitset>> children;
    std::vector<Bitset> todo{all};
    children[all];
    while (!todo.empty()) {
        Bitset f = std::move(todo.back());
        todo.pop_back();
        std::vector<Bitset> cand;
        for (const auto& fv : P.facet_vertices()) {
            Bitset g = f & fv;
            if (g.none() || g == f) continue;
            cand.push_back(std::move(g));
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<Bitset> maximal;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            bool is_max = true;
            for (std::size_t j = 0; j < cand.size() && is_max; ++j)
                if (i != j && cand[i].subset_of(cand[j])) is_max = false;
            if (is_max) maximal.push_back(cand[i]);
        }
        for (const auto& g : maximal) {
            if (children.find(g) == children.end()) {
                children[g];
                todo.push_back(g);
            }
        }
        children[f] = std::move(maximal);
    }

    FaceLattice fl;
    std::vector<std::pair<Bitset, FaceLattice::Face>> faces;
    for (const auto& [s, ch] : children) faces.push_back({s, {s.indices(), face_dim(P, s.indices())}});
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second.dim, a.second.verts) < std::tie(b.second.dim, b.second.verts);
    });
    std::map<Bitset, int> id;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        id[faces[i].first] = static_cast<int>(i);
        fl.faces.push_back(faces[i].second);
    }
    for (const auto& [s, ch] : children)
        for (const auto& c : ch) fl.covers.emplace_back(id[c], id[s]);
    std::sort(fl.covers.begin(), fl.covers.end());
    return fl;
}

/// {w : <w, x> = <w, y> for all x, y in P}, in reduced W coordinates.
inline LinearSubspace perp_space(const Polytope& P) {
    std::vector<IVec> diffs;
    const auto& v = P.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
        QVec r(P.d() - 1);
        for (std::size_t k = 1; k < P.d(); ++k) r[k - 1] = v[i][k] - v[0][k];
        diffs.push_back(primitive(r));
    }
    return LinearSubspace(P.d() - 1, nullspace(diffs, P.d() - 1));
}

/// Normal cone (maximization convention) of the face with the given vertices.
inline Cone normal_cone(const Polytope& P, const std::vector<int>& verts) {
    std::vector<IVec> rays;
    for (std::size_t j = 0; j < P.facets().size(); ++j) {
        const Bitset& fv = P.facet_vertices()[j];
        bool contains = std::all_of(verts.begin(), verts.end(), [&](int i) { return fv.test(static_cast<std::size_t>(i)); });
        if (contains) rays.push_back(P.facet_functional(j));
    }
    return Cone::from_generators(P.d() - 1, std::move(rays), perp_space(P).basis());
}

/// Parallel to face_lattice(P).faces.
inline std::vector<Cone> normal_fan(const Polytope& P, const FaceLattice& fl) {
    std::vector<Cone> out;
    out.reserve(fl.faces.size());
    for (const auto& f : fl.faces) out.push_back(normal_cone(P, f.verts));
    return out;
}

inline FVector f_vector(const FaceLattice& fl, bool include_empty = false) {
    FVector f;
    f.include_empty = include_empty;
    f.counts.assign(static_cast<std::size_t>(std::max(fl.rank(), 0) + 1), 0);
    for (const auto& face : fl.faces) ++f.counts[static_cast<std::size_t>(face.dim)];
    return f;
}

}  // namespace symfan
