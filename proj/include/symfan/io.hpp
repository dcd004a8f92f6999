#pragma once

// JSON and Graphviz DOT serialization.

#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffan.hpp"
#include "polytope.hpp"
#include "poset.hpp"
#include "realize.hpp"
#include "sigma_poset.hpp"

namespace symfan {

using json = nlohmann::json;

inline constexpr const char* schema_version = "symfan/1";

/// Malformed input; where is a JSON pointer into the offending document.
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) throw InputError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(at + "/" + key, "missing field");
    return *it;
}

inline void check_schema(const json& j) {
    if (!j.is_object()) throw InputError("", "expected an object");
    auto it = j.find("schema");
    if (it != j.end() && *it != schema_version)
        throw InputError("/schema", "unsupported schema " + it->dump());
}

}  // namespace detail

inline json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        const Int& n = numerator(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return to_string(r);
}

inline Rat rat_from_json(const json& j, const std::string& at) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(at, e.what());
    }
    throw InputError(at, "expected an integer or a \"p/q\" string");
}

inline json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline json ivec_to_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(Rat(x)));
    return a;
}

inline QVec qvec_from_json(const json& j, const std::string& at) {
    if (!j.is_array()) throw InputError(at, "expected an array");
    QVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat_from_json(j[i], at + "/" + std::to_string(i)));
    return v;
}

inline json to_json(const Polytope& P) {
    json vs = json::array();
    for (const auto& v : P.vertices()) vs.push_back(qvec_to_json(v.coords()));
    return {{"schema", schema_version}, {"d", P.d()}, {"slice_sum", to_string(P.slice_sum())}, {"vertices", vs}};
}

inline Polytope polytope_from_json(const json& j) {
    detail::check_schema(j);
    const json& vs = detail::field(j, "vertices", "");
    if (!vs.is_array() || vs.empty()) throw InputError("/vertices", "expected a nonempty array");
    std::vector<UPoint> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) pts.emplace_back(qvec_from_json(vs[i], "/vertices/" + std::to_string(i)));
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].d() != pts.front().d())
            throw InputError("/vertices/" + std::to_string(i), "vertex dimension differs from the first vertex");
    if (auto it = j.find("d"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(pts.front().d()))
            throw InputError("/d", "does not match the vertex dimension");
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].slice_sum() != pts.front().slice_sum())
            throw InputError("/vertices/" + std::to_string(i), "vertices do not lie on a common slice");
    if (auto it = j.find("slice_sum"); it != j.end()) {
        if (rat_from_json(*it, "/slice_sum") != pts.front().slice_sum())
            throw InputError("/slice_sum", "does not match the coordinate sums");
    }
    return Polytope::hull(pts);
}

inline json to_json(const FaceLattice& fl) {
    json faces = json::array();
    for (const auto& f : fl.faces) faces.push_back({{"verts", f.verts}, {"dim", f.dim}});
    json covers = json::array();
    for (auto [i, j] : fl.covers) covers.push_back({i, j});
    return {{"schema", schema_version}, {"faces", faces}, {"covers", covers}};
}

inline FaceLattice face_lattice_from_json(const json& j) {
    detail::check_schema(j);
    FaceLattice fl;
    try {
        for (const auto& f : detail::field(j, "faces", "")) fl.faces.push_back({f.at("verts").get<std::vector<int>>(), f.at("dim").get<int>()});
        for (const auto& c : detail::field(j, "covers", "")) fl.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    } catch (const json::exception& e) {
        throw InputError("/faces", e.what());
    }
    return fl;
}

inline bool operator==(const FaceLattice& a, const FaceLattice& b) {
    if (a.faces.size() != b.faces.size() || a.covers != b.covers) return false;
    for (std::size_t i = 0; i < a.faces.size(); ++i)
        if (a.faces[i].verts != b.faces[i].verts || a.faces[i].dim != b.faces[i].dim) return false;
    return true;
}

inline json to_json(const Poset& p) {
    auto r = p.rank_function();
    json els = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json e = {{"id", i}, {"label", p.label(static_cast<int>(i))}};
        e["rank"] = r ? json((*r)[i]) : json(nullptr);
        els.push_back(e);
    }
    json covers = json::array();
    for (auto [i, j] : p.covers()) covers.push_back({i, j});
    return {{"schema", schema_version}, {"elements", els}, {"covers", covers}};
}

inline Poset poset_from_json(const json& j) {
    detail::check_schema(j);
    const json& els = detail::field(j, "elements", "");
    if (!els.is_array()) throw InputError("/elements", "expected an array");
    std::vector<std::string> labels(els.size());
    std::vector<bool> seen(els.size(), false);
    for (std::size_t k = 0; k < els.size(); ++k) {
        const std::string at = "/elements/" + std::to_string(k);
        const json& id = detail::field(els[k], "id", at);
        if (!id.is_number_integer() || id.get<long long>() < 0 || id.get<std::size_t>() >= els.size())
            throw InputError(at + "/id", "id out of range");
        auto i = id.get<std::size_t>();
        if (seen[i]) throw InputError(at + "/id", "duplicate id");
        seen[i] = true;
        auto lb = els[k].find("label");
        labels[i] = lb != els[k].end() && lb->is_string() ? lb->get<std::string>() : std::to_string(i);
    }
    std::vector<std::pair<int, int>> covers;
    const json& cs = detail::field(j, "covers", "");
    if (!cs.is_array()) throw InputError("/covers", "expected an array");
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto& c = cs[k];
        const std::string at = "/covers/" + std::to_string(k);
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw InputError(at, "expected a pair of ids");
        long long a = c[0].get<long long>(), b = c[1].get<long long>();
        if (a < 0 || b < 0 || a >= static_cast<long long>(els.size()) || b >= static_cast<long long>(els.size()))
            throw InputError(at, "id out of range");
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    try {
        return Poset::from_covers(std::move(labels), std::move(covers));
    } catch (const std::invalid_argument& e) {
        throw InputError("/covers", e.what());
    }
}

inline json to_json(const Cone& c) {
    json rays = json::array(), lin = json::array();
    for (const auto& r : c.rays()) rays.push_back(ivec_to_json(r));
    for (const auto& l : c.lineality()) lin.push_back(ivec_to_json(l));
    return {{"dim", c.dim()}, {"rays", rays}, {"lineality", lin}};
}

/// Cells keyed by the carrier; rays in reduced coordinates (w_2, ..., w_d with w_1 = 0).
inline json refined_fan_json(const FundamentalFan& ff) {
    json cells = json::object();
    for (const auto& [phi, idx] : refined_fan(ff)) {
        json cones = json::array();
        for (int i : idx) {
            json c = to_json(ff.cones[static_cast<std::size_t>(i)].cone);
            c["label"] = ff.label(static_cast<std::size_t>(i));
            c["codim"] = ff.codim(static_cast<std::size_t>(i));
            cones.push_back(c);
        }
        cells[to_string(phi)] = cones;
    }
    return {{"schema", schema_version}, {"d", ff.d()}, {"polytope", to_json(ff.P)}, {"cells", cells}};
}

inline json to_json(const FVector& f) { return f.values(); }

inline json to_json(const RealizeReport& r) {
    json stages = json::array();
    for (const auto& s : r.stages) stages.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
    return {{"schema", schema_version},
            {"d", r.d},
            {"ok", r.ok()},
            {"stages", stages},
            {"sizes",
             {{"F", r.F_size},
              {"Z", r.Z_size},
              {"R", r.R_size},
              {"symmetrized", r.symmetrized_size},
              {"face_poset", r.face_poset_size}}},
            {"oracle_fvector", to_json(r.oracle_fvector)},
            {"Na", r.na_informational},
            {"Nb", r.nb_informational},
            {"seconds", r.seconds}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + " byte " + std::to_string(e.byte), e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

/// Hasse diagram with one rank=same subgraph per rank, drawn bottom to top.
inline std::string export_dot(const Poset& p, const std::string& name = "poset") {
    std::ostringstream os;
    os << "digraph \"" << detail::dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << detail::dot_escape(p.label(static_cast<int>(i))) << "\"];\n";
    if (auto r = p.rank_function()) {
        std::map<int, std::vector<std::size_t>> layers;
        for (std::size_t i = 0; i < p.size(); ++i) layers[(*r)[i]].push_back(i);
        for (const auto& [k, v] : layers) {
            os << "  { rank=same;";
            for (auto i : v) os << " n" << i << ";";
            os << " }\n";
        }
    }
    for (auto [i, j] : p.covers()) os << "  n" << i << " -> n" << j << " [arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

inline std::string export_dot(const SigmaPoset& r, const std::string& name = "poset") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r.poset.size(); ++i)
        labels.push_back(r.poset.label(static_cast<int>(i)) + " [" + to_string(r.carrier[i]) + "]");
    Poset q = Poset::from_covers(labels, r.poset.covers());
    return export_dot(q, name);
}

}  // namespace symfan
