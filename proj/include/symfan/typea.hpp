#pragma once

// The symmetric group S_d acting on W_d and on slices of Q^d.
//
// Permutations are stored in one-line notation (g(1), ..., g(d)), 1-based.
// Composition is (g * h)(i) = g(h(i)). The left action on W is
// (g w)_i = w_{g^-1(i)} and the right action on U is (u g)_i = u_{g(i)}, so
// [g w, u] = [w, u g].

#include <algorithm>
#include <concepts>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kernel.hpp"

namespace symfan {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
        std::vector<bool> seen(p_.size(), false);
        for (int x : p_) {
            if (x < 1 || x > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(x - 1)])
                throw std::invalid_argument("Permutation: not a bijection of [d]");
            seen[static_cast<std::size_t>(x - 1)] = true;
        }
    }
    static Permutation identity(int d) {
        std::vector<int> v(static_cast<std::size_t>(d));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation transposition(int d, int i, int j) {
        Permutation p = identity(d);
        std::swap(p.p_[static_cast<std::size_t>(i - 1)], p.p_[static_cast<std::size_t>(j - 1)]);
        return p;
    }

    int d() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return p_; }

    Permutation inverse() const {
        std::vector<int> q(p_.size());
        for (std::size_t i = 0; i < p_.size(); ++i) q[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i + 1);
        return Permutation(std::move(q));
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < p_.size(); ++i)
            if (p_[i] != static_cast<int>(i + 1)) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& g, const Permutation& h) {
        require_same_dim(g.p_.size(), h.p_.size(), "Permutation composition");
        std::vector<int> r(g.p_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = g(h.p_[i]);
        return Permutation(std::move(r));
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> p_;
};

inline std::string to_string(const Permutation& g) {
    std::string s = "[";
    for (int i = 1; i <= g.d(); ++i) s += (i > 1 ? "," : "") + std::to_string(g(i));
    return s + "]";
}

inline std::vector<Permutation> all_permutations(int d) {
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline WVector act_W(const Permutation& g, const WVector& w) {
    require_same_dim(static_cast<std::size_t>(g.d()), w.d(), "act_W");
    QVec c(w.d());
    for (int i = 1; i <= g.d(); ++i) c[static_cast<std::size_t>(g(i) - 1)] = w[static_cast<std::size_t>(i - 1)];
    return WVector(std::move(c));
}

inline UPoint act_U(const UPoint& u, const Permutation& g) {
    require_same_dim(static_cast<std::size_t>(g.d()), u.d(), "act_U");
    QVec c(u.d());
    for (int i = 1; i <= g.d(); ++i) c[static_cast<std::size_t>(i - 1)] = u[static_cast<std::size_t>(g(i) - 1)];
    return UPoint(std::move(c));
}

/// g acting on a cone of W_d given in reduced coordinates.
inline Cone act_cone(const Permutation& g, const Cone& c) {
    require_same_dim(static_cast<std::size_t>(g.d()), c.ambient() + 1, "act_cone");
    auto move = [&](const IVec& v) { return primitive(act_W(g, WVector::from_reduced(v)).reduced()); };
    std::vector<IVec> rays, lines;
    for (const auto& r : c.rays()) rays.push_back(move(r));
    for (const auto& l : c.lineality()) lines.push_back(move(l));
    return Cone::from_generators(c.ambient(), std::move(rays), std::move(lines));
}

class OrderedSetPartition {
public:
    OrderedSetPartition() = default;
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks) : b_(std::move(blocks)) {
        int d = 0;
        for (auto& blk : b_) {
            if (blk.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
            std::sort(blk.begin(), blk.end());
            d += static_cast<int>(blk.size());
        }
        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        for (const auto& blk : b_)
            for (int x : blk) {
                if (x < 1 || x > d || seen[static_cast<std::size_t>(x - 1)])
                    throw std::invalid_argument("OrderedSetPartition: blocks do not partition [d]");
                seen[static_cast<std::size_t>(x - 1)] = true;
            }
        d_ = d;
    }

    /// Compact form "123|45|6"; digits only, so d <= 9.
    static OrderedSetPartition parse(const std::string& s) {
        std::vector<std::vector<int>> blocks(1);
        for (char ch : s) {
            if (ch == '|') {
                blocks.emplace_back();
            } else if (ch >= '1' && ch <= '9') {
                blocks.back().push_back(ch - '0');
            } else if (ch != ' ') {
                throw std::invalid_argument("OrderedSetPartition: bad character in '" + s + "'");
            }
        }
        return OrderedSetPartition(std::move(blocks));
    }

    static OrderedSetPartition finest(int d) {
        std::vector<std::vector<int>> b;
        for (int i = 1; i <= d; ++i) b.push_back({i});
        return OrderedSetPartition(std::move(b));
    }
    static OrderedSetPartition trivial(int d) {
        std::vector<int> all(static_cast<std::size_t>(d));
        std::iota(all.begin(), all.end(), 1);
        return OrderedSetPartition({all});
    }
    /// The standard OSP with the given Type (a subset of [d-1]).
    static OrderedSetPartition standard_from_type(int d, const std::vector<int>& type) {
        std::vector<std::vector<int>> b(1);
        std::vector<int> t = type;
        std::sort(t.begin(), t.end());
        std::size_t k = 0;
        for (int i = 1; i <= d; ++i) {
            b.back().push_back(i);
            if (k < t.size() && t[k] == i) {
                b.emplace_back();
                ++k;
            }
        }
        if (b.back().empty()) throw std::invalid_argument("standard_from_type: type not inside [d-1]");
        return OrderedSetPartition(std::move(b));
    }

    int d() const { return d_; }
    std::size_t size() const { return b_.size(); }
    const std::vector<std::vector<int>>& blocks() const { return b_; }

    bool is_standard() const {
        for (std::size_t i = 0; i + 1 < b_.size(); ++i)
            if (b_[i].back() > b_[i + 1].front()) return false;
        return true;
    }
    /// Partial sums of block sizes, excluding d.
    std::vector<int> type() const {
        std::vector<int> t;
        int s = 0;
        for (std::size_t i = 0; i + 1 < b_.size(); ++i) t.push_back(s += static_cast<int>(b_[i].size()));
        return t;
    }
    /// Index of the block containing x.
    std::vector<int> block_of() const {
        std::vector<int> out(static_cast<std::size_t>(d_));
        for (std::size_t k = 0; k < b_.size(); ++k)
            for (int x : b_[k]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(k);
        return out;
    }

    /// this is a refinement of o, i.e. this <= o in O_d.
    bool refines(const OrderedSetPartition& o) const {
        if (o.d_ != d_) return false;
        auto ob = o.block_of();
        int last = -1;
        for (const auto& blk : b_) {
            int k = ob[static_cast<std::size_t>(blk.front() - 1)];
            for (int x : blk)
                if (ob[static_cast<std::size_t>(x - 1)] != k) return false;
            if (k < last) return false;
            last = k;
        }
        return true;
    }

    OrderedSetPartition acted(const Permutation& g) const {
        std::vector<std::vector<int>> nb;
        for (const auto& blk : b_) {
            std::vector<int> x;
            for (int i : blk) x.push_back(g(i));
            nb.push_back(std::move(x));
        }
        return OrderedSetPartition(std::move(nb));
    }

    /// Merge blocks k and k+1.
    OrderedSetPartition merged(std::size_t k) const {
        auto nb = b_;
        nb[k].insert(nb[k].end(), nb[k + 1].begin(), nb[k + 1].end());
        nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(k + 1));
        return OrderedSetPartition(std::move(nb));
    }

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
    friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) { return a.b_ <=> b.b_; }

private:
    std::vector<std::vector<int>> b_;
    int d_ = 0;
};

inline std::string to_string(const OrderedSetPartition& s) {
    std::string out;
    for (std::size_t k = 0; k < s.blocks().size(); ++k) {
        if (k) out += "|";
        for (int x : s.blocks()[k]) out += std::to_string(x);
    }
    return out;
}

/// sigma_S = {w : w_i = w_j within a block, w_i <= w_j across consecutive blocks}.
inline Cone osp_cone(const OrderedSetPartition& s) {
    const int d = s.d();
    if (d < 1) throw std::invalid_argument("osp_cone: empty partition");
    std::vector<IVec> rays;
    auto bo = s.block_of();
    for (std::size_t a = 0; a + 1 < s.size(); ++a) {
        QVec w(static_cast<std::size_t>(d), Rat(0));
        for (int i = 0; i < d; ++i)
            if (bo[static_cast<std::size_t>(i)] > static_cast<int>(a)) w[static_cast<std::size_t>(i)] = 1;
        rays.push_back(primitive(WVector(w).reduced()));
    }
    return Cone::from_generators(static_cast<std::size_t>(d - 1), std::move(rays), {});
}

inline Cone fundamental_chamber(int d) {
    if (d < 2) throw std::invalid_argument("fundamental_chamber: d must be at least 2");
    return osp_cone(OrderedSetPartition::finest(d));
}

/// f_i = (0^i, 1^(d-i)).
inline WVector f_ray(int d, int i) {
    QVec w(static_cast<std::size_t>(d), Rat(0));
    for (int k = i; k < d; ++k) w[static_cast<std::size_t>(k)] = 1;
    return WVector(std::move(w));
}

struct ChamberFace {
    OrderedSetPartition osp;
    Cone cone;

    explicit ChamberFace(OrderedSetPartition s) : osp(std::move(s)), cone(osp_cone(osp)) {
        if (!osp.is_standard()) throw std::invalid_argument("ChamberFace: partition is not standard");
    }
    std::size_t dim() const { return osp.size() - 1; }
    friend bool operator==(const ChamberFace& a, const ChamberFace& b) { return a.osp == b.osp; }
    friend bool operator<(const ChamberFace& a, const ChamberFace& b) { return a.osp < b.osp; }
};

/// Standard OSP whose cone has w (a point of the fundamental chamber) in its relative interior.
inline std::optional<OrderedSetPartition> chamber_face_of_point(const WVector& w) {
    std::vector<std::vector<int>> b{{1}};
    for (std::size_t i = 1; i < w.d(); ++i) {
        if (w[i] < w[i - 1]) return std::nullopt;
        if (w[i] == w[i - 1])
            b.back().push_back(static_cast<int>(i + 1));
        else
            b.push_back({static_cast<int>(i + 1)});
    }
    return OrderedSetPartition(std::move(b));
}

/// Inclusion-minimal face of the fundamental chamber containing t.
inline ChamberFace carrier(const Cone& t) {
    const int d = static_cast<int>(t.ambient()) + 1;
    if (!fundamental_chamber(d).contains_cone(t))
        throw std::invalid_argument("carrier: cone is not inside the fundamental chamber");
    auto s = chamber_face_of_point(WVector::from_reduced(t.relint_point()));
    return ChamberFace(*s);
}

inline long long stabilizer_order(const OrderedSetPartition& s) {
    long long m = 1;
    for (const auto& b : s.blocks()) m *= factorial(static_cast<int>(b.size()));
    return m;
}

/// The Young subgroup fixing every block of s setwise.
inline std::vector<Permutation> stabilizer(const OrderedSetPartition& s) {
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(s.d())) {
        bool ok = true;
        auto bo = s.block_of();
        for (int i = 1; i <= s.d() && ok; ++i)
            if (bo[static_cast<std::size_t>(g(i) - 1)] != bo[static_cast<std::size_t>(i - 1)]) ok = false;
        if (ok) out.push_back(g);
    }
    return out;
}

/// Lexicographically least element of the left coset g Y_s.
inline Permutation canonical_rep(const Permutation& g, const OrderedSetPartition& s) {
    std::vector<int> v = g.one_line();
    for (const auto& b : s.blocks()) {
        std::vector<int> vals;
        for (int i : b) vals.push_back(v[static_cast<std::size_t>(i - 1)]);
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < b.size(); ++k) v[static_cast<std::size_t>(b[k] - 1)] = vals[k];
    }
    return Permutation(std::move(v));
}

/// One lex-least representative per left coset of the stabilizer of s, sorted.
inline std::vector<Permutation> coset_reps(const OrderedSetPartition& s) {
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(s.d()))
        if (canonical_rep(g, s) == g) out.push_back(g);
    return out;
}

/// (g, w0) with w0 weakly increasing and w = g w0; ties broken by original index.
inline std::pair<Permutation, WVector> chamber_of_point(const WVector& w) {
    std::vector<int> idx(w.d());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
    });
    QVec w0(w.d());
    std::vector<int> g(w.d());
    for (std::size_t k = 0; k < w.d(); ++k) {
        w0[k] = w[static_cast<std::size_t>(idx[k])];
        g[k] = idx[k] + 1;
    }
    return {Permutation(std::move(g)), WVector(std::move(w0))};
}

inline std::vector<OrderedSetPartition> all_osps(int d) {
    std::vector<OrderedSetPartition> out;
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto& self, unsigned remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned sub = remaining; sub; sub = (sub - 1) & remaining) {
            std::vector<int> blk;
            for (int i = 0; i < d; ++i)
                if (sub >> i & 1U) blk.push_back(i + 1);
            cur.push_back(std::move(blk));
            self(self, remaining & ~sub);
            cur.pop_back();
        }
    };
    rec(rec, (1U << d) - 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<OrderedSetPartition> standard_osps(int d) {
    std::vector<OrderedSetPartition> out;
    for (unsigned t = 0; t < (1U << (d - 1)); ++t) {
        std::vector<int> type;
        for (int i = 1; i < d; ++i)
            if (t >> (i - 1) & 1U) type.push_back(i);
        out.push_back(OrderedSetPartition::standard_from_type(d, type));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Interface a chamber group offers to the symmetrization machinery.
template <class G>
concept ChamberGroup = requires(const typename G::Element& g, const typename G::Face& f, int d) {
    { G::elements(d) } -> std::same_as<std::vector<typename G::Element>>;
    { G::order(d) } -> std::convertible_to<long long>;
    { G::faces(d) } -> std::same_as<std::vector<typename G::Face>>;
    { G::stabilizer_order(f) } -> std::convertible_to<long long>;
    { G::coset_reps(f) } -> std::same_as<std::vector<typename G::Element>>;
    { G::canonical_rep(g, f) } -> std::same_as<typename G::Element>;
    { G::face_leq(f, f) } -> std::same_as<bool>;
    { G::face_cone(f) } -> std::same_as<Cone>;
    { G::act(g, std::declval<const Cone&>()) } -> std::same_as<Cone>;
};

struct TypeA {
    using Element = Permutation;
    using Face = OrderedSetPartition;

    static std::vector<Element> elements(int d) { return all_permutations(d); }
    static std::vector<Face> faces(int d) { return standard_osps(d); }
    static long long order(int d) { return factorial(d); }
    static long long stabilizer_order(const Face& f) { return symfan::stabilizer_order(f); }
    static std::vector<Element> coset_reps(const Face& f) { return symfan::coset_reps(f); }
    static Element canonical_rep(const Element& g, const Face& f) { return symfan::canonical_rep(g, f); }
    /// Face inclusion: sigma_a is a face of sigma_b iff b refines a.
    static bool face_leq(const Face& a, const Face& b) { return b.refines(a); }
    static Cone face_cone(const Face& f) { return osp_cone(f); }
    static Cone act(const Element& g, const Cone& c) { return act_cone(g, c); }
};

static_assert(ChamberGroup<TypeA>);

}  // namespace symfan
