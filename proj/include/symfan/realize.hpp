#pragma once

// Decorated ordered set partitions F_d, the generating subposet Z_d with its
// carrier map, the simplex P = T_gamma0(Delta_{d-2}) realizing it, and the
// end-to-end realization pipeline.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffan.hpp"
#include "poset.hpp"
#include "sigma_poset.hpp"
#include "symmetrize.hpp"
#include "typea.hpp"

namespace symfan {

struct DecoratedOSP {
    OrderedSetPartition osp;
    std::vector<int> B;  // sorted, nonempty subset of Type(osp); [d-1] for the trivial element

    DecoratedOSP() = default;
    DecoratedOSP(OrderedSetPartition s, std::vector<int> b) : osp(std::move(s)), B(std::move(b)) {
        std::sort(B.begin(), B.end());
        B.erase(std::unique(B.begin(), B.end()), B.end());
        const int d = osp.d();
        if (B.empty()) throw std::invalid_argument("DecoratedOSP: B must be nonempty");
        if (osp.size() == 1) {
            if (static_cast<int>(B.size()) != d - 1 || B.front() != 1 || B.back() != d - 1)
                throw std::invalid_argument("DecoratedOSP: the one-block partition requires B = [d-1]");
        } else {
            auto t = osp.type();
            if (!std::includes(t.begin(), t.end(), B.begin(), B.end()))
                throw std::invalid_argument("DecoratedOSP: B is not contained in Type");
        }
    }

    int d() const { return osp.d(); }
    bool trivial() const { return osp.size() == 1; }
    /// 0 for the trivial element, else |S| - |B| (one plus the number of double bars).
    int corank() const { return trivial() ? 0 : static_cast<int>(osp.size()) - static_cast<int>(B.size()); }
    int rank() const { return d() - 1 - corank(); }

    DecoratedOSP acted(const Permutation& g) const { return DecoratedOSP(osp.acted(g), B); }

    friend bool operator==(const DecoratedOSP&, const DecoratedOSP&) = default;
    friend auto operator<=>(const DecoratedOSP& a, const DecoratedOSP& b) {
        if (auto c = a.osp <=> b.osp; c != 0) return c;
        return a.B <=> b.B;
    }
};

/// Bar representation: "|" at Type positions in B, "||" at the others, no bars
/// for the trivial element.
inline std::string to_string(const DecoratedOSP& x) {
    std::string s;
    const auto& bl = x.osp.blocks();
    auto t = x.osp.type();
    for (std::size_t k = 0; k < bl.size(); ++k) {
        if (k) s += std::binary_search(x.B.begin(), x.B.end(), t[k - 1]) ? "|" : "||";
        for (int v : bl[k]) s += std::to_string(v);
    }
    return s;
}

/// Parses a bar representation; "∥" is accepted for a double bar.
inline DecoratedOSP parse_decorated(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "∥") == 0) {
            s += "||";
            i += 2;
        } else if (text[i] != ' ') {
            s += text[i];
        }
    }
    std::vector<std::vector<int>> blocks(1);
    std::vector<bool> single;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '|') {
            bool dbl = i + 1 < s.size() && s[i + 1] == '|';
            if (dbl) ++i;
            single.push_back(!dbl);
            blocks.emplace_back();
        } else if (s[i] >= '1' && s[i] <= '9') {
            blocks.back().push_back(s[i] - '0');
        } else {
            throw std::invalid_argument("parse_decorated: bad character in '" + text + "'");
        }
    }
    OrderedSetPartition osp(blocks);
    std::vector<int> B;
    if (osp.size() == 1) {
        for (int i = 1; i < osp.d(); ++i) B.push_back(i);
    } else {
        auto t = osp.type();
        for (std::size_t k = 0; k < single.size(); ++k)
            if (single[k]) B.push_back(t[k]);
    }
    return DecoratedOSP(std::move(osp), std::move(B));
}

/// Product order: S refines S' and B ⊆ B'.
inline bool decorated_leq(const DecoratedOSP& a, const DecoratedOSP& b) {
    return a.osp.refines(b.osp) && std::includes(b.B.begin(), b.B.end(), a.B.begin(), a.B.end());
}

inline std::vector<DecoratedOSP> all_decorated(int d) {
    std::vector<DecoratedOSP> out;
    for (const auto& s : all_osps(d)) {
        if (s.size() == 1) {
            std::vector<int> all;
            for (int i = 1; i < d; ++i) all.push_back(i);
            out.emplace_back(s, all);
            continue;
        }
        auto t = s.type();
        for (unsigned m = 1; m < (1U << t.size()); ++m) {
            std::vector<int> B;
            for (std::size_t k = 0; k < t.size(); ++k)
                if (m >> k & 1U) B.push_back(t[k]);
            out.emplace_back(s, B);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Covers of x in F_d from the three bar operations.
inline std::vector<DecoratedOSP> decorated_upper_covers(const DecoratedOSP& x) {
    std::vector<DecoratedOSP> out;
    if (x.trivial()) return out;
    auto t = x.osp.type();
    bool any_double = false;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (std::binary_search(x.B.begin(), x.B.end(), t[k])) continue;
        any_double = true;
        out.emplace_back(x.osp.merged(k), x.B);
        auto B2 = x.B;
        B2.push_back(t[k]);
        out.emplace_back(x.osp, B2);
    }
    if (!any_double) out.emplace_back(OrderedSetPartition::trivial(x.d()), [&] {
        std::vector<int> all;
        for (int i = 1; i < x.d(); ++i) all.push_back(i);
        return all;
    }());
    return out;
}

struct DecoratedPoset {
    SymmetricPoset t;
    std::vector<DecoratedOSP> elements;  // parallel to t.poset
};

inline DecoratedPoset decorated_poset(int d) {
    if (d < 2 || d > 5) throw std::invalid_argument("decorated_poset: d must be between 2 and 5");
    DecoratedPoset out;
    out.elements = all_decorated(d);
    std::map<DecoratedOSP, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        index[out.elements[i]] = static_cast<int>(i);
        labels.push_back(to_string(out.elements[i]));
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (const auto& y : decorated_upper_covers(out.elements[i])) covers.emplace_back(static_cast<int>(i), index.at(y));
    out.t.d = d;
    out.t.poset = Poset::from_covers(std::move(labels), std::move(covers));
    out.t.act = [els = out.elements, index](const Permutation& g, int x) {
        return index.at(els[static_cast<std::size_t>(x)].acted(g));
    };
    return out;
}

struct GeneratingSubposet {
    SigmaPoset z;                  // induced from the dual of F_d, carrier lambda(S, B) = sigma_S
    std::vector<int> in_F;         // element of decorated_poset(d) for each element of z
    std::vector<DecoratedOSP> elements;
    std::vector<int> rank;         // rank in the dual of F_d
};

inline GeneratingSubposet generating_subposet(const DecoratedPoset& F) {
    GeneratingSubposet g;
    for (std::size_t i = 0; i < F.elements.size(); ++i)
        if (F.elements[i].osp.is_standard()) {
            g.in_F.push_back(static_cast<int>(i));
            g.elements.push_back(F.elements[i]);
            g.z.carrier.push_back(F.elements[i].osp);
            g.rank.push_back(F.elements[i].corank());
        }
    g.z.poset = F.t.poset.dual().induced(g.in_F);
    return g;
}

struct ConditionReport {
    bool n1 = false, n2 = false, n3 = false;
    std::string n1_witness, n2_witness, n3_witness;
    bool ok() const { return n1 && n2 && n3; }
};

/// N1 lambda order-preserving, N2 lambda surjective onto the faces of Phi,
/// N3 maximal elements of each cell have rank dim(phi).
inline ConditionReport necessary_conditions(const SigmaPoset& z, int d, std::vector<int> rank = {}) {
    ConditionReport rep;
    if (rank.empty()) {
        auto r = z.poset.rank_function();
        if (!r) throw std::invalid_argument("necessary_conditions: poset is not graded and no rank given");
        rank = *r;
    }
    auto v = order_consistency_violation<TypeA>(z);
    rep.n1 = !v.has_value();
    if (v) rep.n1_witness = z.poset.label(v->first) + " <= " + z.poset.label(v->second);

    rep.n2 = true;
    for (const auto& s : standard_osps(d))
        if (std::find(z.carrier.begin(), z.carrier.end(), s) == z.carrier.end()) {
            rep.n2 = false;
            rep.n2_witness = "no element over " + to_string(s);
            break;
        }

    rep.n3 = true;
    for (std::size_t x = 0; x < z.poset.size() && rep.n3; ++x) {
        bool maximal_in_cell = true;
        for (int y : z.poset.strict_upset(static_cast<int>(x)).indices())
            if (z.carrier[static_cast<std::size_t>(y)] == z.carrier[x]) maximal_in_cell = false;
        if (maximal_in_cell && rank[x] != static_cast<int>(z.carrier[x].size()) - 1) {
            rep.n3 = false;
            rep.n3_witness = z.poset.label(static_cast<int>(x)) + " has rank " + std::to_string(rank[x]);
        }
    }
    return rep;
}

/// T_gamma(x) = gamma + sum x_i a_i with a_i = e_{i+1} - e_i.
inline UPoint t_gamma(const QVec& x, const UPoint& gamma) {
    require_same_dim(x.size() + 1, gamma.d(), "t_gamma");
    QVec u = gamma.coords();
    for (std::size_t i = 0; i < x.size(); ++i) {
        u[i] -= x[i];
        u[i + 1] += x[i];
    }
    return UPoint(std::move(u));
}

inline UPoint gamma0(int d) {
    QVec g;
    for (int i = 1; i <= d; ++i) g.push_back(Rat(i * i));
    return UPoint(std::move(g));
}

/// T_gamma(Delta_{d-2}) with Delta_{d-2} = conv(e_1, ..., e_{d-1}).
inline Polytope build_P(int d, const UPoint& gamma) {
    if (d < 3) throw std::invalid_argument("build_P: d must be at least 3");
    std::vector<UPoint> pts;
    for (int i = 0; i < d - 1; ++i) {
        QVec e(static_cast<std::size_t>(d - 1), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(t_gamma(e, gamma));
    }
    return Polytope::hull(pts);
}

inline Polytope build_P(int d) { return build_P(d, gamma0(d)); }

/// First differences (w_2 - w_1, ..., w_d - w_{d-1}).
inline QVec delta(const WVector& w) {
    QVec out;
    for (std::size_t i = 1; i < w.d(); ++i) out.push_back(w[i] - w[i - 1]);
    return out;
}

/// delta_i as a functional on reduced coordinates, i in [d-1].
inline IVec delta_functional(int d, int i) {
    IVec full(static_cast<std::size_t>(d), Int(0));
    full[static_cast<std::size_t>(i)] += 1;
    full[static_cast<std::size_t>(i - 1)] -= 1;
    return IVec(full.begin() + 1, full.end());
}

/// nu_B: delta_i = delta_j for i, j in B and delta_i <= delta_j for i outside B, j in B.
inline Cone nu_cone(const std::vector<int>& B, int d) {
    if (B.empty()) throw std::invalid_argument("nu_cone: B must be nonempty");
    std::vector<IVec> ineqs, eqs;
    const int j0 = B.front();
    IVec dj0 = delta_functional(d, j0);
    for (int i = 1; i < d; ++i) {
        IVec di = delta_functional(d, i);
        IVec diff(di.size());
        for (std::size_t k = 0; k < di.size(); ++k) diff[k] = dj0[k] - di[k];
        if (std::binary_search(B.begin(), B.end(), i)) {
            if (i != j0) eqs.push_back(diff);
        } else {
            ineqs.push_back(diff);
        }
    }
    return Cone::from_halfspaces(static_cast<std::size_t>(d - 1), ineqs, eqs);
}

/// (S, B) lies in Z_d: S standard, and either B ⊆ Type(S) with |S| > 1, or
/// the trivial element.
inline bool in_generating_set(const OrderedSetPartition& s, const std::vector<int>& B) {
    if (!s.is_standard() || B.empty()) return false;
    if (s.size() == 1) return static_cast<int>(B.size()) == s.d() - 1;
    auto t = s.type();
    return std::includes(t.begin(), t.end(), B.begin(), B.end());
}

struct CharIntersect {
    bool meet = false;
    std::optional<WVector> witness;
    bool witness_interior = false;
};

/// Decides whether relint(sigma_S) and relint(nu_B) meet, and checks the
/// explicit witness sum_{i in B} 2 f_i + sum_{i in Type(S) \ B} f_i when S is not trivial.
inline CharIntersect charintersect(const OrderedSetPartition& s, const std::vector<int>& B, int d) {
    CharIntersect r;
    Cone sigma = osp_cone(s), nu = nu_cone(B, d);
    r.meet = relints_meet(sigma, nu);
    if (r.meet && s.size() > 1) {
        QVec w(static_cast<std::size_t>(d), Rat(0));
        auto t = s.type();
        for (int i : t) {
            int c = std::binary_search(B.begin(), B.end(), i) ? 2 : 1;
            for (int k = i; k < d; ++k) w[static_cast<std::size_t>(k)] += c;
        }
        WVector wv(w);
        r.witness = wv;
        auto x = wv.reduced();
        r.witness_interior = sigma.contains(x) == Containment::interior && nu.contains(x) == Containment::interior;
    } else if (r.meet) {
        r.witness = WVector(QVec(static_cast<std::size_t>(d), Rat(0)));
        auto x = r.witness->reduced();
        r.witness_interior = sigma.contains(x) == Containment::interior && nu.contains(x) == Containment::interior;
    }
    return r;
}

struct PipelineStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RealizeReport {
    int d = 0;
    std::vector<PipelineStage> stages;
    std::size_t F_size = 0, Z_size = 0, R_size = 0, symmetrized_size = 0, face_poset_size = 0;
    FVector oracle_fvector;
    bool na_informational = false;
    bool nb_informational = false;
    double seconds = 0;
    bool ok() const {
        return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.ok; });
    }
};

/// Generating subposet, necessary conditions, P = T_gamma0(Delta_{d-2}),
/// R(P) against Z_d, symmetrization, and comparison with F_d. Stops at the
/// first failing stage.
inline RealizeReport realize_pipeline(int d, std::size_t budget = default_iso_budget) {
    auto t0 = std::chrono::steady_clock::now();
    RealizeReport rep;
    rep.d = d;
    auto stage = [&](std::string name, bool ok, std::string detail = {}) {
        rep.stages.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    auto finish = [&] {
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    };
    if (d < 3 || d > 5) throw std::invalid_argument("realize_pipeline: d must be between 3 and 5");

    DecoratedPoset F = decorated_poset(d);
    rep.F_size = F.elements.size();
    GeneratingSubposet Z = generating_subposet(F);
    rep.Z_size = Z.elements.size();
    auto gen = check_generating_subposet(F.t, Z.in_F);
    if (!stage("generating_subposet", gen.ok(), gen.detail)) return finish();

    auto compat = compatibility_check(F.t, Z.in_F);
    bool lambda_ok = compat.lambda.has_value() && *compat.lambda == Z.z.carrier;
    if (!stage("compatibility", lambda_ok, lambda_ok ? "" : "stabilizers do not match sigma_S")) return finish();

    auto nc = necessary_conditions(Z.z, d, Z.rank);
    if (!stage("necessary_conditions", nc.ok(), nc.n1_witness + nc.n2_witness + nc.n3_witness)) return finish();

    {
        std::vector<int> cell;
        for (std::size_t i = 0; i < Z.z.carrier.size(); ++i)
            if (Z.z.carrier[i] == OrderedSetPartition::finest(d)) cell.push_back(static_cast<int>(i));
        Polytope simplex = build_P(d);
        Poset sp = face_poset(face_lattice(simplex));
        rep.na_informational = static_cast<bool>(poset_iso(Z.z.poset.induced(cell), sp.dual(), budget));
    }

    Polytope P = build_P(d);
    bool hyp = is_placed(P).has_value() && is_appropriate(P);
    if (!stage("placed_and_appropriate", hyp)) return finish();

    FundamentalFan ff = fundamental_fan(P);
    SigmaPoset R = rposet(ff);
    rep.R_size = R.poset.size();
    auto iso1 = sigma_poset_iso(R, Z.z, budget);
    rep.nb_informational = static_cast<bool>(iso1);
    if (!stage("R(P) ~ Z_d as sigma-posets", static_cast<bool>(iso1), to_string(iso1.status))) return finish();

    auto GR = symmetrize<TypeA>(R);
    rep.symmetrized_size = GR.poset.size();
    if (!stage("symmetrize", GR.poset.size() == F.elements.size(),
               std::to_string(GR.poset.size()) + " elements vs " + std::to_string(F.elements.size())))
        return finish();

    auto iso2 = poset_iso(GR.poset, F.t.poset.dual(), budget);
    if (!stage("symmetrized ~ dual F_d", static_cast<bool>(iso2), to_string(iso2.status))) return finish();

    Oracle o = symmetrization_oracle(P);
    rep.oracle_fvector = f_vector(o.faces);
    Poset hull_faces = face_poset(o.faces);
    rep.face_poset_size = hull_faces.size();
    auto iso3 = poset_iso(hull_faces, F.t.poset, budget);
    stage("face poset of hull ~ F_d", static_cast<bool>(iso3),
          std::to_string(hull_faces.size()) + " faces, " + to_string(iso3.status));
    return finish();
}

}  // namespace symfan
