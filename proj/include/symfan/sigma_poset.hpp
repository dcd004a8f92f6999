#pragma once

// Posets whose elements carry a face of the fundamental chamber, their
// symmetrization under a chamber group, and posets with a group action:
// generating subposets and compatibility with parabolic subgroups.

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "poset.hpp"
#include "typea.hpp"

namespace symfan {

template <class Face>
struct BasicSigmaPoset {
    Poset poset;
    std::vector<Face> carrier;  // parallel to poset elements
};

using SigmaPoset = BasicSigmaPoset<OrderedSetPartition>;

/// x <= y implies carrier(x) is a face of carrier(y). Returns the first violation.
template <ChamberGroup G = TypeA>
std::optional<std::pair<int, int>> order_consistency_violation(const BasicSigmaPoset<typename G::Face>& r) {
    const int n = static_cast<int>(r.poset.size());
    for (int x = 0; x < n; ++x)
        for (int y : r.poset.strict_upset(x).indices())
            if (!G::face_leq(r.carrier[static_cast<std::size_t>(x)], r.carrier[static_cast<std::size_t>(y)]))
                return std::pair{x, y};
    return std::nullopt;
}

template <ChamberGroup G = TypeA>
bool is_order_consistent(const BasicSigmaPoset<typename G::Face>& r) {
    return !order_consistency_violation<G>(r).has_value();
}

template <ChamberGroup G = TypeA>
struct BasicSymmetrizedPoset {
    Poset poset;
    std::vector<int> tag;                       // element of the input poset
    std::vector<typename G::Element> coset;     // canonical representative of g G_carrier(tag)
};

using SymmetrizedPoset = BasicSymmetrizedPoset<TypeA>;

/// Elements (x, g G_x) with g a canonical coset representative. Under order
/// consistency G_y is a subgroup of G_x whenever x <= y, so the two cosets
/// g1 G_x and g2 G_y meet exactly when g2 G_y lies inside g1 G_x; the covers are
/// (x, canon_x(g2)) < (y, g2) over the covers x < y of the input.
template <ChamberGroup G = TypeA>
BasicSymmetrizedPoset<G> symmetrize(const BasicSigmaPoset<typename G::Face>& r) {
    if (auto v = order_consistency_violation<G>(r))
        throw std::invalid_argument("symmetrize: input is not order-consistent at (" + r.poset.label(v->first) +
                                    ", " + r.poset.label(v->second) + ")");
    BasicSymmetrizedPoset<G> out;
    const std::size_t n = r.poset.size();
    std::vector<std::map<typename G::Element, int>> id(n);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        for (auto& g : G::coset_reps(r.carrier[x])) {
            id[x].emplace(g, static_cast<int>(out.tag.size()));
            labels.push_back(r.poset.label(static_cast<int>(x)) + "@" + to_string(g));
            out.tag.push_back(static_cast<int>(x));
            out.coset.push_back(g);
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (auto [x1, x2] : r.poset.covers()) {
        const auto& f1 = r.carrier[static_cast<std::size_t>(x1)];
        for (const auto& [g2, j] : id[static_cast<std::size_t>(x2)]) {
            auto g1 = G::canonical_rep(g2, f1);
            covers.emplace_back(id[static_cast<std::size_t>(x1)].at(g1), j);
        }
    }
    out.poset = Poset::from_covers(std::move(labels), std::move(covers));
    return out;
}

/// Predicted element count: sum over x of |G| / m(carrier(x)).
template <ChamberGroup G = TypeA>
long long symmetrized_size(const BasicSigmaPoset<typename G::Face>& r, int d) {
    long long s = 0;
    for (const auto& f : r.carrier) s += G::order(d) / G::stabilizer_order(f);
    return s;
}

template <class Face>
std::pair<std::vector<int>, std::vector<int>> carrier_colours(const BasicSigmaPoset<Face>& a,
                                                              const BasicSigmaPoset<Face>& b) {
    std::map<Face, int> ids;
    for (const auto& f : a.carrier) ids.emplace(f, 0);
    for (const auto& f : b.carrier) ids.emplace(f, 0);
    int k = 0;
    for (auto& [f, v] : ids) v = k++;
    std::vector<int> ca, cb;
    for (const auto& f : a.carrier) ca.push_back(ids[f]);
    for (const auto& f : b.carrier) cb.push_back(ids[f]);
    return {ca, cb};
}

/// Isomorphism preserving carriers.
template <class Face>
IsoResult sigma_poset_iso(const BasicSigmaPoset<Face>& a, const BasicSigmaPoset<Face>& b,
                          std::size_t budget = default_iso_budget) {
    if (a.poset.size() != b.poset.size()) return {};
    auto [ca, cb] = carrier_colours(a, b);
    IsoResult r = poset_iso(a.poset, b.poset, budget, ca, cb);
    if (r)
        for (std::size_t i = 0; i < r.map.size(); ++i)
            if (!(a.carrier[i] == b.carrier[static_cast<std::size_t>(r.map[i])]))
                throw std::logic_error("sigma_poset_iso: carrier not preserved");
    return r;
}

/// A poset with an action of S_d given elementwise.
struct SymmetricPoset {
    Poset poset;
    int d = 0;
    std::function<int(const Permutation&, int)> act;
};

/// Every adjacent transposition maps covers to covers.
inline bool action_preserves_order(const SymmetricPoset& t) {
    for (int i = 1; i < t.d; ++i) {
        Permutation s = Permutation::transposition(t.d, i, i + 1);
        for (auto [a, b] : t.poset.covers()) {
            const auto& u = t.poset.up(t.act(s, a));
            if (std::find(u.begin(), u.end(), t.act(s, b)) == u.end()) return false;
        }
    }
    return true;
}

struct GeneratorReport {
    bool disjoint_cover = false;
    bool order_transport = false;
    std::string detail;
    bool ok() const { return disjoint_cover && order_transport; }
};

/// Checks the two generating-subposet axioms for z inside t.
inline GeneratorReport check_generating_subposet(const SymmetricPoset& t, const std::vector<int>& z) {
    if (!action_preserves_order(t)) throw std::invalid_argument("check_generating_subposet: action is not order-preserving");
    GeneratorReport rep;
    const std::size_t n = t.poset.size();
    const auto group = all_permutations(t.d);
    std::vector<int> owner(n, -1);
    rep.disjoint_cover = true;
    for (std::size_t k = 0; k < z.size() && rep.disjoint_cover; ++k) {
        std::set<int> orbit;
        for (const auto& g : group) orbit.insert(t.act(g, z[k]));
        for (int x : orbit) {
            if (owner[static_cast<std::size_t>(x)] != -1) {
                rep.disjoint_cover = false;
                rep.detail = "orbits of " + t.poset.label(z[k]) + " and " +
                             t.poset.label(z[static_cast<std::size_t>(owner[static_cast<std::size_t>(x)])]) + " meet";
                break;
            }
            owner[static_cast<std::size_t>(x)] = static_cast<int>(k);
        }
    }
    if (rep.disjoint_cover)
        for (std::size_t x = 0; x < n; ++x)
            if (owner[x] == -1) {
                rep.disjoint_cover = false;
                rep.detail = "element " + t.poset.label(static_cast<int>(x)) + " is not in any orbit";
                break;
            }
    if (!rep.disjoint_cover) return rep;

    // relations transported from z must be exactly the relations of t
    std::vector<Bitset> allowed(n, Bitset(n));
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = 0; b < z.size(); ++b) {
            if (!t.poset.leq(z[a], z[b])) continue;
            for (const auto& g : group) allowed[static_cast<std::size_t>(t.act(g, z[a]))].set(static_cast<std::size_t>(t.act(g, z[b])));
        }
    rep.order_transport = true;
    for (std::size_t x = 0; x < n && rep.order_transport; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (allowed[x].test(y) != t.poset.leq(static_cast<int>(x), static_cast<int>(y))) {
                rep.order_transport = false;
                rep.detail = "relation " + t.poset.label(static_cast<int>(x)) + " <= " + t.poset.label(static_cast<int>(y)) +
                             (allowed[x].test(y) ? " transported but absent" : " present but not transported");
                break;
            }
    return rep;
}

struct CompatibilityResult {
    std::optional<std::vector<OrderedSetPartition>> lambda;  // per z, when every stabilizer is parabolic
    int witness = -1;                                         // index into z of a non-parabolic stabilizer
    long long witness_order = 0;
    std::vector<std::vector<int>> witness_orbits;
};

/// Setwise stabilizer of element x, by brute force over S_d.
inline std::vector<Permutation> element_stabilizer(const SymmetricPoset& t, int x) {
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(t.d))
        if (t.act(g, x) == x) out.push_back(g);
    return out;
}

/// Orbits of a permutation group on [d].
inline std::vector<std::vector<int>> point_orbits(int d, const std::vector<Permutation>& grp) {
    std::vector<int> comp(static_cast<std::size_t>(d));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
    for (const auto& g : grp)
        for (int i = 1; i <= d; ++i) comp[static_cast<std::size_t>(find(i - 1))] = find(g(i) - 1);
    std::map<int, std::vector<int>> by;
    for (int i = 0; i < d; ++i) by[find(i)].push_back(i + 1);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : by) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

/// For each z, matches its stabilizer with the Young subgroup of a standard
/// ordered set partition (a parabolic subgroup of S_d).
inline CompatibilityResult compatibility_check(const SymmetricPoset& t, const std::vector<int>& z) {
    CompatibilityResult res;
    std::vector<OrderedSetPartition> lambda;
    for (std::size_t k = 0; k < z.size(); ++k) {
        auto stab = element_stabilizer(t, z[k]);
        auto orbits = point_orbits(t.d, stab);
        bool intervals = true;
        for (const auto& o : orbits)
            if (o.back() - o.front() + 1 != static_cast<int>(o.size())) intervals = false;
        std::optional<OrderedSetPartition> phi;
        if (intervals) {
            OrderedSetPartition s(orbits);
            if (stabilizer_order(s) == static_cast<long long>(stab.size())) phi = s;
        }
        if (!phi) {
            res.witness = static_cast<int>(k);
            res.witness_order = static_cast<long long>(stab.size());
            res.witness_orbits = orbits;
            return res;
        }
        lambda.push_back(*phi);
    }
    res.lambda = std::move(lambda);
    return res;
}

/// Set partitions of [d] ordered by refinement, with the natural action.
inline SymmetricPoset set_partition_poset(int d) {
    using Blocks = std::vector<std::vector<int>>;
    std::vector<Blocks> parts;
    Blocks cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > d) {
            parts.push_back(cur);
            return;
        }
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k].push_back(i);
            rec(i + 1);
            cur[k].pop_back();
        }
        cur.push_back({i});
        rec(i + 1);
        cur.pop_back();
    };
    rec(1);
    auto canon = [](Blocks b) {
        for (auto& x : b) std::sort(x.begin(), x.end());
        std::sort(b.begin(), b.end());
        return b;
    };
    for (auto& p : parts) p = canon(p);
    std::sort(parts.begin(), parts.end());
    std::map<Blocks, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        index[parts[i]] = static_cast<int>(i);
        std::string s;
        for (std::size_t k = 0; k < parts[i].size(); ++k) {
            if (k) s += "|";
            for (int x : parts[i][k]) s += std::to_string(x);
        }
        labels.push_back(s);
    }
    auto refines = [&](const Blocks& a, const Blocks& b) {
        for (const auto& x : a) {
            bool inside = false;
            for (const auto& y : b)
                if (std::includes(y.begin(), y.end(), x.begin(), x.end())) inside = true;
            if (!inside) return false;
        }
        return true;
    };
    SymmetricPoset t;
    t.d = d;
    t.poset = Poset::from_leq(labels, [&](int i, int j) {
        return refines(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)]);
    });
    t.act = [parts, index, canon](const Permutation& g, int x) {
        Blocks b = parts[static_cast<std::size_t>(x)];
        for (auto& blk : b)
            for (auto& v : blk) v = g(v);
        return index.at(canon(b));
    };
    return t;
}

/// Ordered set partitions of [d] ordered by refinement (finer is smaller).
inline SymmetricPoset osp_poset(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("osp_poset: d out of range");
    auto osps = all_osps(d);
    std::map<OrderedSetPartition, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < osps.size(); ++i) {
        index[osps[i]] = static_cast<int>(i);
        labels.push_back(to_string(osps[i]));
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < osps.size(); ++i)
        for (std::size_t k = 0; k + 1 < osps[i].size(); ++k) covers.emplace_back(static_cast<int>(i), index.at(osps[i].merged(k)));
    SymmetricPoset t;
    t.d = d;
    t.poset = Poset::from_covers(std::move(labels), std::move(covers));
    t.act = [osps, index](const Permutation& g, int x) { return index.at(osps[static_cast<std::size_t>(x)].acted(g)); };
    return t;
}

/// Indices of the standard ordered set partitions inside osp_poset(d).
inline std::vector<int> standard_elements(const SymmetricPoset& osp) {
    std::vector<int> out;
    for (std::size_t i = 0; i < osp.poset.size(); ++i)
        if (OrderedSetPartition::parse(osp.poset.label(static_cast<int>(i))).is_standard()) out.push_back(static_cast<int>(i));
    return out;
}

inline Poset std_osp_poset(int d) {
    auto t = osp_poset(d);
    return t.poset.induced(standard_elements(t));
}

/// Nonempty subsets of [d] ordered by inclusion, with the natural action.
inline SymmetricPoset boolean_poset(int d) {
    std::vector<unsigned> sets;
    for (unsigned s = 1; s < (1U << d); ++s) sets.push_back(s);
    std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<int> index(1U << d, -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        index[sets[i]] = static_cast<int>(i);
        std::string s;
        for (int k = 0; k < d; ++k)
            if (sets[i] >> k & 1U) s += std::to_string(k + 1);
        labels.push_back(s);
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int k = 0; k < d; ++k)
            if (!(sets[i] >> k & 1U)) covers.emplace_back(static_cast<int>(i), index[sets[i] | (1U << k)]);
    SymmetricPoset t;
    t.d = d;
    t.poset = Poset::from_covers(std::move(labels), std::move(covers));
    t.act = [sets, index](const Permutation& g, int x) {
        unsigned s = sets[static_cast<std::size_t>(x)], r = 0;
        for (int k = 0; k < g.d(); ++k)
            if (s >> k & 1U) r |= 1U << (g(k + 1) - 1);
        return index[r];
    };
    return t;
}

}  // namespace symfan
