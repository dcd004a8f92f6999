#pragma once

// Vectors in the quotient space W = Q^d / Q(1,...,1), points of an affine
// slice U, and homogeneous polyhedral cones.
//
// A Cone lives in Q^n. Cones that describe subsets of W_d use n = d - 1
// "reduced" coordinates (w_2, ..., w_d) of the canonical representative with
// w_1 = 0; WVector::reduced and WVector::from_reduced convert.

#include <algorithm>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dd.hpp"
#include "rational.hpp"

namespace symfan {

class WVector {
public:
    WVector() = default;
    explicit WVector(QVec coords) : c_(std::move(coords)) {
        if (c_.empty()) throw std::invalid_argument("WVector: empty coordinate vector");
        Rat s = c_[0];
        for (auto& x : c_) x -= s;
    }
    explicit WVector(const IVec& coords) : WVector(to_q(coords)) {}

    static WVector from_reduced(const QVec& r) {
        QVec c;
        c.reserve(r.size() + 1);
        c.push_back(0);
        c.insert(c.end(), r.begin(), r.end());
        return WVector(std::move(c));
    }
    static WVector from_reduced(const IVec& r) { return from_reduced(to_q(r)); }

    std::size_t d() const { return c_.size(); }
    const QVec& coords() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    QVec reduced() const { return QVec(c_.begin() + 1, c_.end()); }

    friend bool operator==(const WVector&, const WVector&) = default;
    friend auto operator<=>(const WVector& a, const WVector& b) { return a.c_ <=> b.c_; }

private:
    QVec c_;
};

inline std::string to_string(const WVector& w) { return vec_to_string(w.coords()); }

class UPoint {
public:
    UPoint() = default;
    explicit UPoint(QVec coords) : c_(std::move(coords)) {
        for (const auto& x : c_) sum_ += x;
    }
    explicit UPoint(const IVec& coords) : UPoint(to_q(coords)) {}

    std::size_t d() const { return c_.size(); }
    const QVec& coords() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const Rat& slice_sum() const { return sum_; }

    friend bool operator==(const UPoint& a, const UPoint& b) { return a.c_ == b.c_; }
    friend auto operator<=>(const UPoint& a, const UPoint& b) { return a.c_ <=> b.c_; }

private:
    QVec c_;
    Rat sum_ = 0;
};

inline std::string to_string(const UPoint& u) { return vec_to_string(u.coords()); }

/// [w, u - x0]. Independent of the representative of w because u - x0 sums to 0.
inline Rat pairing(const WVector& w, const UPoint& u, const UPoint& x0) {
    require_same_dim(w.d(), u.d(), "pairing");
    require_same_dim(w.d(), x0.d(), "pairing");
    if (u.slice_sum() != x0.slice_sum())
        throw std::invalid_argument("pairing: u and x0 lie in different slices");
    Rat s = 0;
    for (std::size_t i = 0; i < w.d(); ++i) s += w[i] * (u[i] - x0[i]);
    return s;
}

enum class Containment { interior, boundary, outside };

inline const char* to_string(Containment c) {
    switch (c) {
        case Containment::interior: return "interior";
        case Containment::boundary: return "boundary";
        case Containment::outside: return "outside";
    }
    return "?";
}

class Cone {
public:
    Cone() = default;

    /// The zero cone {0} in Q^n.
    static Cone zero(std::size_t n) { return from_generators(n, {}, {}); }
    static Cone whole(std::size_t n) { return from_halfspaces(n, {}, {}); }

    static Cone from_generators(std::size_t n, std::vector<IVec> rays, std::vector<IVec> lines) {
        for (auto& r : rays) require_same_dim(r.size(), n, "Cone::from_generators");
        for (auto& l : lines) require_same_dim(l.size(), n, "Cone::from_generators");
        std::vector<IVec> ineqs = rays;
        // the dual cone: a.r >= 0, a.l = 0
        DDResult dual = dd_solve(n, ineqs, lines);
        return from_minimal_halfspaces(n, std::move(dual.rays), std::move(dual.lineality));
    }

    /// {x : a.x >= 0 for a in ineqs, b.x = 0 for b in eqs}.
    static Cone from_halfspaces(std::size_t n, const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs) {
        DDResult primal = dd_solve(n, ineqs, eqs);
        return from_generators(n, std::move(primal.rays), std::move(primal.lineality));
    }

    std::size_t ambient() const { return n_; }
    const std::vector<IVec>& rays() const { return rays_; }
    const std::vector<IVec>& lineality() const { return lin_; }
    /// Facet normals a with a.x >= 0, one per facet, reduced modulo eqs().
    const std::vector<IVec>& ineqs() const { return ineqs_; }
    /// Basis of the orthogonal complement of the linear span.
    const std::vector<IVec>& eqs() const { return eqs_; }

    std::size_t dim() const { return n_ - eqs_.size(); }
    std::size_t lineality_dim() const { return lin_.size(); }
    bool pointed() const { return lin_.empty(); }
    bool full_dimensional() const { return eqs_.empty(); }
    bool is_zero() const { return rays_.empty() && lin_.empty(); }

    /// Sum of the ray generators; lies in the relative interior.
    IVec relint_point() const {
        IVec p(n_, Int(0));
        for (const auto& r : rays_)
            for (std::size_t i = 0; i < n_; ++i) p[i] += r[i];
        return p;
    }

    Containment contains(const QVec& x) const {
        require_same_dim(x.size(), n_, "Cone::contains");
        for (const auto& b : eqs_)
            if (dot(b, x) != 0) return Containment::outside;
        bool strict = true;
        for (const auto& a : ineqs_) {
            Rat v = dot(a, x);
            if (v < 0) return Containment::outside;
            if (v == 0) strict = false;
        }
        return strict ? Containment::interior : Containment::boundary;
    }
    Containment contains(const IVec& x) const { return contains(to_q(x)); }
    bool contains_cone(const Cone& o) const {
        require_same_dim(o.n_, n_, "Cone::contains_cone");
        for (const auto& r : o.rays_)
            if (contains(r) == Containment::outside) return false;
        for (const auto& l : o.lin_) {
            if (contains(l) == Containment::outside) return false;
            if (contains(negated(l)) == Containment::outside) return false;
        }
        return true;
    }

    /// Indices of the facets (ineqs) vanishing on x.
    std::vector<int> active_facets(const IVec& x) const {
        std::vector<int> out;
        for (std::size_t j = 0; j < ineqs_.size(); ++j)
            if (dot(ineqs_[j], x) == 0) out.push_back(static_cast<int>(j));
        return out;
    }

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.n_ == b.n_ && a.rays_ == b.rays_ && a.lin_ == b.lin_;
    }
    friend bool operator<(const Cone& a, const Cone& b) {
        return std::tie(a.n_, a.lin_, a.rays_) < std::tie(b.n_, b.lin_, b.rays_);
    }

private:
    static Cone from_minimal_halfspaces(std::size_t n, std::vector<IVec> ineqs, std::vector<IVec> eqs) {
        Cone c;
        c.n_ = n;
        c.ineqs_ = std::move(ineqs);
        c.eqs_ = std::move(eqs);
        DDResult primal = dd_solve(n, c.ineqs_, c.eqs_);
        c.rays_ = std::move(primal.rays);
        c.lin_ = std::move(primal.lineality);
        return c;
    }

    std::size_t n_ = 0;
    std::vector<IVec> rays_, lin_, ineqs_, eqs_;
};

inline Cone cone_intersect(const Cone& a, const Cone& b) {
    require_same_dim(a.ambient(), b.ambient(), "cone_intersect");
    std::vector<IVec> ineqs = a.ineqs(), eqs = a.eqs();
    ineqs.insert(ineqs.end(), b.ineqs().begin(), b.ineqs().end());
    eqs.insert(eqs.end(), b.eqs().begin(), b.eqs().end());
    return Cone::from_halfspaces(a.ambient(), ineqs, eqs);
}

/// relint(a) and relint(b) meet.
inline bool relints_meet(const Cone& a, const Cone& b) {
    Cone c = cone_intersect(a, b);
    IVec p = c.relint_point();
    return a.contains(p) == Containment::interior && b.contains(p) == Containment::interior;
}

/// a meets relint(b).
inline bool meets_relint(const Cone& a, const Cone& b) {
    Cone c = cone_intersect(a, b);
    return b.contains(c.relint_point()) == Containment::interior;
}

/// All nonempty faces, c itself included, sorted by dimension then generators.
inline std::vector<Cone> cone_faces(const Cone& c) {
    const auto& rays = c.rays();
    const std::size_t nr = rays.size();
    std::vector<Bitset> facet_rays;
    for (const auto& a : c.ineqs()) {
        Bitset b(nr);
        for (std::size_t i = 0; i < nr; ++i)
            if (dot(a, rays[i]) == 0) b.set(i);
        facet_rays.push_back(std::move(b));
    }
    Bitset all(nr);
    for (std::size_t i = 0; i < nr; ++i) all.set(i);
    std::set<Bitset> seen{all};
    std::vector<Bitset> todo{all};
    while (!todo.empty()) {
        Bitset f = std::move(todo.back());
        todo.pop_back();
        for (const auto& fr : facet_rays) {
            Bitset g = f & fr;
            if (g == f) continue;
            if (seen.insert(g).second) todo.push_back(g);
        }
    }
    std::vector<Cone> out;
    for (const auto& s : seen) {
        std::vector<IVec> sub;
        for (int i : s.indices()) sub.push_back(rays[static_cast<std::size_t>(i)]);
        out.push_back(Cone::from_generators(c.ambient(), std::move(sub), c.lineality()));
    }
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a < b;
    });
    return out;
}

class LinearSubspace {
public:
    LinearSubspace() = default;
    LinearSubspace(std::size_t n, const std::vector<IVec>& spanning) : n_(n), basis_(canonical_basis(spanning, n)) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<IVec>& basis() const { return basis_; }
    Cone as_cone() const { return Cone::from_generators(n_, {}, basis_); }

    friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

private:
    std::size_t n_ = 0;
    std::vector<IVec> basis_;
};

inline IVec to_reduced_int(const WVector& w) { return primitive(w.reduced()); }

}  // namespace symfan
