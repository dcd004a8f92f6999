#pragma once

// Exact scalars and the small amount of dense linear algebra the rest of the
// library needs. Everything is over Q; integer vectors are used wherever a
// direction only matters up to positive scaling.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symfan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

inline std::string to_string(const Rat& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Int& i) { return i.str(); }

/// Parses "p", "-p" or "p/q". The result is always in lowest terms.
inline Rat parse_rat(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    auto valid_int = [](std::string_view v) {
        if (v.empty()) return false;
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view v) {
        if (!v.empty() && v[0] == '+') v.remove_prefix(1);
        return Int(std::string(v));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(s)) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        return Rat(to_int(s));
    }
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    Int q = to_int(den);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rat(to_int(num), q);
}

template <class T>
std::string vec_to_string(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline Int dot(const IVec& a, const IVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

/// Divides by the gcd of the entries. Sign is preserved.
inline IVec primitive(IVec v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Clears denominators then divides by the gcd. Sign is preserved.
inline IVec primitive(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    IVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    return primitive(std::move(out));
}

/// Primitive with the first nonzero entry made positive; canonical for lines.
inline IVec primitive_line(IVec v) {
    v = primitive(std::move(v));
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

inline QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

inline IVec negated(IVec v) {
    for (auto& x : v) x = -x;
    return v;
}

/// Reduced row echelon form over Q. Returns the nonzero rows and the pivot
/// column of each.
struct Rref {
    std::vector<QVec> rows;
    std::vector<std::size_t> pivots;
};

inline Rref rref(std::vector<QVec> m, std::size_t ncols) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline Rref rref(const std::vector<IVec>& m, std::size_t ncols) {
    std::vector<QVec> q;
    q.reserve(m.size());
    for (const auto& v : m) q.push_back(to_q(v));
    return rref(std::move(q), ncols);
}

inline std::size_t rank(const std::vector<IVec>& m, std::size_t ncols) {
    return rref(m, ncols).pivots.size();
}

/// Basis of {x : row . x = 0 for every row}, as primitive integer vectors in
/// a canonical (echelon) form.
inline std::vector<IVec> nullspace(const std::vector<IVec>& m, std::size_t ncols) {
    Rref e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<IVec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

/// Canonical basis of the row space: rref rows scaled to primitive integers.
inline std::vector<IVec> canonical_basis(const std::vector<IVec>& m, std::size_t ncols) {
    Rref e = rref(m, ncols);
    std::vector<IVec> out;
    out.reserve(e.rows.size());
    for (const auto& row : e.rows) out.push_back(primitive(row));
    return out;
}

/// Removes the components of v along the canonical basis `basis` (its rref
/// pivots), giving a representative of v modulo span(basis) that vanishes on
/// the pivot columns.
inline QVec reduce_modulo(QVec v, const Rref& basis) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        Rat f = v[basis.pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[i][j];
    }
    return v;
}

}  // namespace symfan
