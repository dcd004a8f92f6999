#pragma once

// Finite posets stored as cover relations plus a dense order relation, and
// an isomorphism search based on colour refinement with individualization.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dd.hpp"

namespace symfan {

class Poset {
public:
    Poset() = default;

    /// Covers (i, j) mean i is covered by j. Throws if the relation is cyclic.
    static Poset from_covers(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers) {
        Poset p;
        p.labels_ = std::move(labels);
        const std::size_t n = p.labels_.size();
        p.up_.assign(n, {});
        p.down_.assign(n, {});
        std::sort(covers.begin(), covers.end());
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        for (auto [a, b] : covers) {
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n || a == b)
                throw std::invalid_argument("Poset: cover index out of range");
            p.up_[static_cast<std::size_t>(a)].push_back(b);
            p.down_[static_cast<std::size_t>(b)].push_back(a);
        }
        p.close();
        p.check_covers();
        return p;
    }

    /// Builds the covers of the order given by leq(i, j).
    static Poset from_leq(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
        const std::size_t n = labels.size();
        std::vector<Bitset> below(n, Bitset(n)), above(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq(static_cast<int>(i), static_cast<int>(j))) {
                    below[j].set(i);
                    above[i].set(j);
                }
        std::vector<std::pair<int, int>> covers;
        for (std::size_t j = 0; j < n; ++j)
            for (int i : below[j].indices())
                if ((above[static_cast<std::size_t>(i)] & below[j]).none()) covers.emplace_back(i, static_cast<int>(j));
        return from_covers(std::move(labels), std::move(covers));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& up(int i) const { return up_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& down(int i) const { return down_[static_cast<std::size_t>(i)]; }
    std::size_t num_covers() const {
        std::size_t c = 0;
        for (const auto& u : up_) c += u.size();
        return c;
    }
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < up_.size(); ++i)
            for (int j : up_[i]) out.emplace_back(static_cast<int>(i), j);
        return out;
    }

    bool leq(int i, int j) const { return i == j || upset_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }
    const Bitset& strict_upset(int i) const { return upset_[static_cast<std::size_t>(i)]; }

    std::vector<int> minimal() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (down_[i].empty()) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> maximal() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (up_[i].empty()) out.push_back(static_cast<int>(i));
        return out;
    }

    /// Rank function if every maximal chain between comparable elements has
    /// consistent length (minimal elements get rank 0); nullopt otherwise.
    std::optional<std::vector<int>> rank_function() const {
        std::vector<int> r(size(), -1);
        for (int i : order_) {
            const auto& dn = down_[static_cast<std::size_t>(i)];
            if (dn.empty()) {
                r[static_cast<std::size_t>(i)] = 0;
                continue;
            }
            int v = r[static_cast<std::size_t>(dn[0])] + 1;
            for (int k : dn)
                if (r[static_cast<std::size_t>(k)] + 1 != v) return std::nullopt;
            r[static_cast<std::size_t>(i)] = v;
        }
        return r;
    }

    /// Graded in the strong sense: ranked, and all minimal elements share rank 0
    /// and all maximal elements share the top rank.
    bool graded() const {
        auto r = rank_function();
        if (!r) return false;
        auto mx = maximal();
        for (int m : mx)
            if ((*r)[static_cast<std::size_t>(m)] != (*r)[static_cast<std::size_t>(mx[0])]) return false;
        return true;
    }

    Poset dual() const {
        std::vector<std::pair<int, int>> c;
        for (auto [a, b] : covers()) c.emplace_back(b, a);
        return from_covers(labels_, std::move(c));
    }

    /// Induced subposet on the given elements, in the given order.
    Poset induced(const std::vector<int>& elems) const {
        std::vector<std::string> lab;
        for (int e : elems) lab.push_back(labels_[static_cast<std::size_t>(e)]);
        return from_leq(std::move(lab), [&](int a, int b) {
            return leq(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]);
        });
    }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return -1;
    }

private:
    void close() {
        const std::size_t n = size();
        // Kahn order, then strict up-sets in reverse topological order
        std::vector<int> indeg(n, 0);
        for (std::size_t i = 0; i < n; ++i) indeg[i] = static_cast<int>(down_[i].size());
        std::vector<int> q;
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] == 0) q.push_back(static_cast<int>(i));
        order_.clear();
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            order_.push_back(v);
            for (int w : up_[static_cast<std::size_t>(v)])
                if (--indeg[static_cast<std::size_t>(w)] == 0) q.push_back(w);
        }
        if (order_.size() != n) throw std::invalid_argument("Poset: cover relation has a cycle");
        upset_.assign(n, Bitset(n));
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            auto& s = upset_[static_cast<std::size_t>(*it)];
            for (int w : up_[static_cast<std::size_t>(*it)]) {
                s.set(static_cast<std::size_t>(w));
                s |= upset_[static_cast<std::size_t>(w)];
            }
        }
    }

    void check_covers() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (int j : up_[i])
                for (int k : up_[i])
                    if (k != j && upset_[static_cast<std::size_t>(k)].test(static_cast<std::size_t>(j)))
                        throw std::invalid_argument("Poset: relation (" + labels_[i] + ", " +
                                                    labels_[static_cast<std::size_t>(j)] + ") is not a cover");
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<Bitset> upset_;
    std::vector<int> order_;
};

/// Every interval [x, z] with rank(z) - rank(x) = 2 has exactly 4 elements.
inline bool diamond_check(const Poset& p) {
    auto r = p.rank_function();
    if (!r) throw std::invalid_argument("diamond_check: poset is not graded");
    for (std::size_t x = 0; x < p.size(); ++x) {
        std::map<int, int> middle_count;
        for (int y : p.up(static_cast<int>(x)))
            for (int z : p.up(y)) ++middle_count[z];
        for (auto [z, c] : middle_count)
            if (c != 2) return false;
    }
    return true;
}

enum class IsoStatus { isomorphic, not_isomorphic, budget_exceeded };

inline const char* to_string(IsoStatus s) {
    switch (s) {
        case IsoStatus::isomorphic: return "isomorphic";
        case IsoStatus::not_isomorphic: return "not_isomorphic";
        case IsoStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct IsoResult {
    IsoStatus status = IsoStatus::not_isomorphic;
    std::vector<int> map;  // a -> b when isomorphic
    std::size_t nodes = 0;
    explicit operator bool() const { return status == IsoStatus::isomorphic; }
};

inline constexpr std::size_t default_iso_budget = 100000;

/// f is an order isomorphism a -> b (checked on covers, which determine the order).
inline bool is_isomorphism(const Poset& a, const Poset& b, const std::vector<int>& f) {
    if (a.size() != b.size() || f.size() != a.size() || a.num_covers() != b.num_covers()) return false;
    std::vector<bool> hit(b.size(), false);
    for (int x : f) {
        if (x < 0 || static_cast<std::size_t>(x) >= b.size() || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = true;
    }
    for (auto [i, j] : a.covers()) {
        const auto& u = b.up(f[static_cast<std::size_t>(i)]);
        if (std::find(u.begin(), u.end(), f[static_cast<std::size_t>(j)]) == u.end()) return false;
    }
    return true;
}

namespace detail {

class IsoSearch {
public:
    IsoSearch(const Poset& a, const Poset& b, std::size_t budget) : a_(a), b_(b), budget_(budget) {}

    IsoResult run(const std::vector<int>& seed_a, const std::vector<int>& seed_b) {
        IsoResult res;
        if (a_.size() != b_.size() || a_.num_covers() != b_.num_covers()) return res;
        n_ = a_.size();
        std::vector<int> col(2 * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            col[i] = seed_a.empty() ? 0 : seed_a[i];
            col[n_ + i] = seed_b.empty() ? 0 : seed_b[i];
        }
        bool over = false;
        auto m = search(std::move(col), over);
        res.nodes = nodes_;
        if (m) {
            res.status = IsoStatus::isomorphic;
            res.map = std::move(*m);
        } else {
            res.status = over ? IsoStatus::budget_exceeded : IsoStatus::not_isomorphic;
        }
        return res;
    }

private:
    const std::vector<int>& ups(std::size_t v) const {
        return v < n_ ? a_.up(static_cast<int>(v)) : b_.up(static_cast<int>(v - n_));
    }
    const std::vector<int>& downs(std::size_t v) const {
        return v < n_ ? a_.down(static_cast<int>(v)) : b_.down(static_cast<int>(v - n_));
    }

    /// Refines jointly; false if the colour classes are unbalanced between a and b.
    bool refine(std::vector<int>& col) const {
        std::size_t classes = 0;
        for (;;) {
            std::map<std::vector<int>, int> ids;
            std::vector<std::vector<int>> sig(2 * n_);
            for (std::size_t v = 0; v < 2 * n_; ++v) {
                const std::size_t off = v < n_ ? 0 : n_;
                auto& s = sig[v];
                s.push_back(col[v]);
                std::vector<int> u, d;
                for (int w : ups(v)) u.push_back(col[off + static_cast<std::size_t>(w)]);
                for (int w : downs(v)) d.push_back(col[off + static_cast<std::size_t>(w)]);
                std::sort(u.begin(), u.end());
                std::sort(d.begin(), d.end());
                s.push_back(-1);
                s.insert(s.end(), u.begin(), u.end());
                s.push_back(-2);
                s.insert(s.end(), d.begin(), d.end());
                ids.emplace(s, 0);
            }
            int next = 0;
            for (auto& [k, v] : ids) v = next++;
            std::vector<int> cnt(ids.size(), 0);
            for (std::size_t v = 0; v < 2 * n_; ++v) {
                col[v] = ids[sig[v]];
                cnt[static_cast<std::size_t>(col[v])] += v < n_ ? 1 : -1;
            }
            for (int c : cnt)
                if (c != 0) return false;
            if (ids.size() == classes) return true;
            classes = ids.size();
        }
    }

    std::optional<std::vector<int>> search(std::vector<int> col, bool& over) {
        if (++nodes_ > budget_) {
            over = true;
            return std::nullopt;
        }
        if (!refine(col)) return std::nullopt;
        std::map<int, std::vector<std::size_t>> cls_a, cls_b;
        for (std::size_t v = 0; v < n_; ++v) cls_a[col[v]].push_back(v);
        for (std::size_t v = 0; v < n_; ++v) cls_b[col[n_ + v]].push_back(v);
        int pick = -1;
        std::size_t best = SIZE_MAX;
        for (auto& [c, vs] : cls_a)
            if (vs.size() > 1 && vs.size() < best) {
                best = vs.size();
                pick = c;
            }
        if (pick < 0) {
            std::vector<int> f(n_);
            for (std::size_t v = 0; v < n_; ++v) f[v] = static_cast<int>(cls_b[col[v]][0]);
            if (is_isomorphism(a_, b_, f)) return f;
            return std::nullopt;
        }
        const std::size_t x = cls_a[pick][0];
        const int fresh = static_cast<int>(2 * n_) + 1;
        for (std::size_t y : cls_b[pick]) {
            std::vector<int> c2 = col;
            c2[x] = fresh;
            c2[n_ + y] = fresh;
            auto r = search(std::move(c2), over);
            if (r) return r;
            if (over) return std::nullopt;
        }
        return std::nullopt;
    }

    const Poset& a_;
    const Poset& b_;
    std::size_t budget_;
    std::size_t n_ = 0;
    std::size_t nodes_ = 0;
};

}  // namespace detail

/// Order isomorphism a -> b. seed colours, when given, must be preserved.
inline IsoResult poset_iso(const Poset& a, const Poset& b, std::size_t budget = default_iso_budget,
                           const std::vector<int>& seed_a = {}, const std::vector<int>& seed_b = {}) {
    if (!seed_a.empty() && seed_a.size() != a.size()) throw std::invalid_argument("poset_iso: seed size");
    if (!seed_b.empty() && seed_b.size() != b.size()) throw std::invalid_argument("poset_iso: seed size");
    if (seed_a.empty() != seed_b.empty()) throw std::invalid_argument("poset_iso: seed both or neither");
    IsoResult r = detail::IsoSearch(a, b, budget).run(seed_a, seed_b);
    if (r && !is_isomorphism(a, b, r.map)) throw std::logic_error("poset_iso: produced map fails recheck");
    return r;
}

}  // namespace symfan
