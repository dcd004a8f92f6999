#pragma once

// Double description method over Q^n with explicit lineality.
//
// Solves {x : a.x >= 0 (a in ineqs), b.x = 0 (b in eqs)} for a minimal
// generating system: a basis of the lineality space plus one generator per
// extreme ray of the cone modulo lineality. Adjacency is decided with the
// combinatorial test on zero sets, filtered by the usual rank bound.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rational.hpp"

namespace symfan {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void resize(std::size_t n) {
        n_ = n;
        w_.resize((n + 63) / 64, 0);
    }
    void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    /// this ⊆ o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::size_t and_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.w_ <=> b.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct DDResult {
    std::vector<IVec> lineality;  // canonical basis (primitive rref rows)
    std::vector<IVec> rays;       // extreme rays reduced modulo lineality, primitive, sorted
};

namespace detail {

struct DDRay {
    IVec v;
    Bitset zeros;
};

inline std::size_t pointed_dim(const std::vector<DDRay>& rays, std::size_t n) {
    std::vector<IVec> m;
    m.reserve(rays.size());
    for (const auto& r : rays) m.push_back(r.v);
    return rank(m, n);
}

}  // namespace detail

inline DDResult dd_solve(std::size_t n, std::span<const IVec> ineqs, std::span<const IVec> eqs) {
    struct Row {
        const IVec* a;
        bool eq;
    };
    std::vector<Row> rows;
    rows.reserve(ineqs.size() + eqs.size());
    for (const auto& b : eqs) {
        require_same_dim(b.size(), n, "dd_solve");
        rows.push_back({&b, true});
    }
    for (const auto& a : ineqs) {
        require_same_dim(a.size(), n, "dd_solve");
        rows.push_back({&a, false});
    }
    const std::size_t m = rows.size();

    std::vector<IVec> lin;
    for (std::size_t i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<detail::DDRay> rays;

    for (std::size_t k = 0; k < m; ++k) {
        const IVec& a = *rows[k].a;
        const bool eq = rows[k].eq;

        auto l0 = std::find_if(lin.begin(), lin.end(), [&](const IVec& l) { return dot(a, l) != 0; });
        if (l0 != lin.end()) {
            IVec piv = *l0;
            lin.erase(l0);
            Int s = dot(a, piv);
            if (s < 0) {
                piv = negated(std::move(piv));
                s = -s;
            }
            for (auto& l : lin) {
                Int t = dot(a, l);
                if (t == 0) continue;
                for (std::size_t j = 0; j < n; ++j) l[j] = s * l[j] - t * piv[j];
                l = primitive(std::move(l));
            }
            for (auto& r : rays) {
                Int t = dot(a, r.v);
                if (t != 0) {
                    for (std::size_t j = 0; j < n; ++j) r.v[j] = s * r.v[j] - t * piv[j];
                    r.v = primitive(std::move(r.v));
                }
                r.zeros.resize(m);
                r.zeros.set(k);
            }
            if (!eq) {
                Bitset z(m);
                for (std::size_t j = 0; j < k; ++j) z.set(j);
                rays.push_back({primitive(std::move(piv)), std::move(z)});
            }
            continue;
        }

        std::vector<detail::DDRay> pos, zero, neg;
        std::vector<Int> pos_val, neg_val;
        for (auto& r : rays) {
            Int t = dot(a, r.v);
            if (t > 0) {
                pos.push_back(std::move(r));
                pos_val.push_back(t);
            } else if (t < 0) {
                neg.push_back(std::move(r));
                neg_val.push_back(t);
            } else {
                r.zeros.resize(m);
                r.zeros.set(k);
                zero.push_back(std::move(r));
            }
        }

        std::vector<detail::DDRay> next;
        if (!pos.empty() && !neg.empty()) {
            std::vector<detail::DDRay> all;
            all.reserve(pos.size() + zero.size() + neg.size());
            for (const auto& r : pos) all.push_back(r);
            for (const auto& r : zero) all.push_back(r);
            for (const auto& r : neg) all.push_back(r);
            const std::size_t dim = detail::pointed_dim(all, n);
            const std::size_t need = dim >= 2 ? dim - 2 : 0;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    Bitset common = pos[i].zeros & neg[j].zeros;
                    if (common.count() < need) continue;
                    bool adjacent = true;
                    const std::size_t jj = pos.size() + zero.size() + j;
                    for (std::size_t q = 0; q < all.size() && adjacent; ++q) {
                        if (q == i || q == jj) continue;
                        if (common.subset_of(all[q].zeros)) adjacent = false;
                    }
                    if (!adjacent) continue;
                    IVec v(n);
                    const Int& cp = pos_val[i];
                    const Int cn = -neg_val[j];
                    for (std::size_t t = 0; t < n; ++t) v[t] = cp * neg[j].v[t] + cn * pos[i].v[t];
                    common.resize(m);
                    common.set(k);
                    next.push_back({primitive(std::move(v)), std::move(common)});
                }
            }
        }
        if (!eq)
            for (auto& r : pos) {
                r.zeros.resize(m);
                next.push_back(std::move(r));
            }
        for (auto& r : zero) next.push_back(std::move(r));
        rays = std::move(next);
    }

    DDResult out;
    out.lineality = canonical_basis(lin, n);
    Rref lb = rref(lin, n);
    for (const auto& r : rays) out.rays.push_back(primitive(reduce_modulo(to_q(r.v), lb)));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace symfan
