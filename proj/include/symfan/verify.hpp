#pragma once

// The full battery of checks on a single placed and appropriate polytope,
// each comparing a fan-theoretic computation against the hull oracle or an
// exact combinatorial recount.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "ffan.hpp"
#include "sigma_poset.hpp"
#include "symmetrize.hpp"

namespace symfan {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    FVector refined, oracle;
    std::size_t symmetrized_size = 0;
    double seconds = 0;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t probes = 200;
    std::size_t budget = default_iso_budget;
    bool include_empty = false;
    bool dissection = true;
};

/// f_0 = d! f_0(P) and f_1 = d!/2 (f^1(FFan(P)) + f_1(P)).
inline std::pair<bool, std::string> check_low_fvector(const FundamentalFan& ff, const FVector& oracle) {
    const long long n = factorial(ff.d());
    FVector fp = f_vector(ff.faces);
    auto fan = codim_counts(ff, all_indices(ff.cones.size()));
    long long f0 = n * fp.counts[0];
    long long f1p = fp.counts.size() > 1 ? fp.counts[1] : 0;
    long long f1 = n / 2 * (fan[1] + f1p);
    long long o1 = oracle.counts.size() > 1 ? oracle.counts[1] : 0;
    bool ok = oracle.counts[0] == f0 && o1 == f1;
    return {ok, "f0 " + std::to_string(f0) + " f1 " + std::to_string(n / 2) + "*(" + std::to_string(fan[1]) + "+" +
                    std::to_string(f1p) + ")=" + std::to_string(f1)};
}

inline VerifyReport verify_polytope(const Polytope& P, const VerifyOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    require_placed_and_appropriate(P);
    VerifyReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    FundamentalFan ff = fundamental_fan(P);
    Oracle o = symmetrization_oracle(P);
    rep.refined = fvector_from_refined(ff, opt.include_empty);
    rep.oracle = f_vector(o.faces, opt.include_empty);
    add("fvector_agree", rep.refined == rep.oracle, to_string(rep.refined) + " vs " + to_string(rep.oracle));
    add("euler", rep.oracle.euler_holds(), std::to_string(rep.oracle.euler_sum()));

    auto [low, low_detail] = check_low_fvector(ff, rep.oracle);
    add("vertex_edge_counts", low, low_detail);

    auto vc = verify_vertex_cones(P, o);
    add("vertex_cones", vc.ok(), std::to_string(vc.checked) + " checked " + vc.first_failure);
    add("P_is_face", check_P_is_face(P, o));

    bool cells_nonempty = true;
    for (const auto& [phi, cell] : refined_fan(ff))
        if (cell.empty()) cells_nonempty = false;
    add("cells_nonempty", cells_nonempty);
    add("omega_order", check_bijection_order(ff));

    SigmaPoset R = rposet(ff);
    add("order_consistent", is_order_consistent<TypeA>(R));
    auto GR = symmetrize<TypeA>(R);
    rep.symmetrized_size = GR.poset.size();
    auto iso = poset_iso(GR.poset, face_poset(o.faces).dual(), opt.budget);
    add("symmetrized_poset", static_cast<bool>(iso),
        std::to_string(GR.poset.size()) + " elements, " + to_string(iso.status));

    long long total = 0;
    for (auto v : rep.oracle.counts) total += v;
    add("assembled_fan_size", static_cast<long long>(assemble_fan(ff).size()) == total);

    auto zp = zpphi_iso(ff, opt.budget);
    add("cell_at_Phi", static_cast<bool>(zp), to_string(zp.status));
    auto zd = zdetermine_iso(ff, opt.budget);
    add("pruned_cell", static_cast<bool>(zd), to_string(zd.status));

    if (opt.dissection) {
        std::mt19937_64 rng(opt.seed);
        auto ds = check_dissection(kappa_cones(P), opt.probes, rng);
        add("dissection", ds.ok(), std::to_string(ds.cones) + " cones " + ds.first_failure);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace symfan
