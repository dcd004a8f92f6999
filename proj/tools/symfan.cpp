#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symfan/symfan.hpp"

using namespace symfan;

namespace {

enum Exit : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_bad_input = 2,
    exit_hypothesis = 3,
    exit_budget = 4,
};

struct Job {
    std::string input;
    std::optional<int> d;
    bool include_empty = false;
    std::string dot;
    std::string report;
    std::string poset_out;
    std::string oracle = "both";
    std::uint64_t seed = 1;
    std::size_t budget = default_iso_budget;
    std::string iso_a, iso_b;
};

Polytope load_polytope(const Job& job) {
    Polytope P = polytope_from_json(read_json_file(job.input));
    if (job.d && *job.d != static_cast<int>(P.d()))
        throw InputError(job.input + "/d", "--d " + std::to_string(*job.d) + " does not match vertex dimension " +
                                               std::to_string(P.d()));
    return P;
}

void emit(const json& out, const Job& job) {
    std::cout << out.dump(2) << "\n";
    if (!job.report.empty()) write_text_file(job.report, out.dump(2) + "\n");
}

int run_ffan(const Job& job) {
    Polytope P = load_polytope(job);
    FundamentalFan ff = fundamental_fan(P);
    json out = refined_fan_json(ff);
    out["num_cones"] = ff.cones.size();
    emit(out, job);
    SigmaPoset R = rposet(ff);
    if (!job.dot.empty()) write_text_file(job.dot, export_dot(R, "Z(P)"));
    if (!job.poset_out.empty()) write_text_file(job.poset_out, to_json(R.poset).dump(2) + "\n");
    return exit_ok;
}

int run_symmetrize(const Job& job) {
    Polytope P = load_polytope(job);
    json out = {{"schema", schema_version}, {"d", P.d()}};
    std::optional<FVector> refined, oracle;
    if (job.oracle != "on") {
        FundamentalFan ff = fundamental_fan(P);
        refined = fvector_from_refined(ff, job.include_empty);
        out["refined_fvector"] = to_json(*refined);
        auto GR = symmetrize<TypeA>(rposet(ff));
        out["symmetrized_poset_size"] = GR.poset.size();
        if (!job.dot.empty()) write_text_file(job.dot, export_dot(GR.poset, "symmetrized"));
        if (!job.poset_out.empty()) write_text_file(job.poset_out, to_json(GR.poset).dump(2) + "\n");
    }
    if (job.oracle != "off") {
        Oracle o = symmetrization_oracle(P);
        oracle = f_vector(o.faces, job.include_empty);
        out["oracle_fvector"] = to_json(*oracle);
        out["hull"] = to_json(o.hull);
    }
    bool ok = true;
    if (refined && oracle) {
        ok = *refined == *oracle;
        out["agree"] = ok;
    }
    emit(out, job);
    return ok ? exit_ok : exit_check_failed;
}

int run_fvector(const Job& job) {
    Polytope P = load_polytope(job);
    json out = {{"schema", schema_version}, {"d", P.d()}, {"polytope_fvector", to_json(f_vector(face_lattice(P), job.include_empty))}};
    if (is_appropriate(P) && is_placed(P)) {
        out["symmetrization_fvector"] = to_json(fvector_from_refined(fundamental_fan(P), job.include_empty));
        out["method"] = "refined_fan";
    } else {
        out["symmetrization_fvector"] = to_json(f_vector(symmetrization_oracle(P).faces, job.include_empty));
        out["method"] = "oracle";
    }
    emit(out, job);
    return exit_ok;
}

int run_verify(const Job& job) {
    Polytope P = load_polytope(job);
    VerifyOptions opt;
    opt.seed = job.seed;
    opt.budget = job.budget;
    opt.include_empty = job.include_empty;
    VerifyReport rep = verify_polytope(P, opt);
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json out = {{"schema", schema_version},
                {"d", P.d()},
                {"ok", rep.ok()},
                {"checks", checks},
                {"refined_fvector", to_json(rep.refined)},
                {"oracle_fvector", to_json(rep.oracle)},
                {"symmetrized_poset_size", rep.symmetrized_size},
                {"seconds", rep.seconds}};
    emit(out, job);
    if (!job.dot.empty() || !job.poset_out.empty()) {
        auto GR = symmetrize<TypeA>(rposet(fundamental_fan(P)));
        if (!job.dot.empty()) write_text_file(job.dot, export_dot(GR.poset, "symmetrized"));
        if (!job.poset_out.empty()) write_text_file(job.poset_out, to_json(GR.poset).dump(2) + "\n");
    }
    return rep.ok() ? exit_ok : exit_check_failed;
}

int run_realize(const Job& job) {
    if (!job.d) throw InputError("--d", "required");
    if (*job.d < 3 || *job.d > 5) throw InputError("--d", "must be between 3 and 5");
    RealizeReport rep = realize_pipeline(*job.d, job.budget);
    emit(to_json(rep), job);
    if (!job.dot.empty() || !job.poset_out.empty()) {
        auto F = decorated_poset(*job.d);
        if (!job.dot.empty()) write_text_file(job.dot, export_dot(F.t.poset, "F_" + std::to_string(*job.d)));
        if (!job.poset_out.empty()) write_text_file(job.poset_out, to_json(F.t.poset).dump(2) + "\n");
    }
    return rep.ok() ? exit_ok : exit_check_failed;
}

int run_poset_iso(const Job& job) {
    Poset a = poset_from_json(read_json_file(job.iso_a));
    Poset b = poset_from_json(read_json_file(job.iso_b));
    IsoResult r = poset_iso(a, b, job.budget);
    json out = {{"schema", schema_version},
                {"isomorphic", r.status == IsoStatus::isomorphic},
                {"status", to_string(r.status)},
                {"sizes", {a.size(), b.size()}},
                {"nodes", r.nodes}};
    if (r) {
        json map = json::object();
        for (std::size_t i = 0; i < r.map.size(); ++i)
            map[a.label(static_cast<int>(i))] = b.label(r.map[i]);
        out["map"] = map;
    }
    emit(out, job);
    switch (r.status) {
        case IsoStatus::isomorphic: return exit_ok;
        case IsoStatus::not_isomorphic: return exit_check_failed;
        case IsoStatus::budget_exceeded: return exit_budget;
    }
    return exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetrization of polytopes under the symmetric group"};
    app.require_subcommand(1);
    Job job;

    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", job.input, "polytope JSON");
        if (needs_input) in->required()->check(CLI::ExistingFile);
        sub->add_option("--d", job.d, "ambient dimension, checked against the input");
        sub->add_flag("--include-empty", job.include_empty, "prepend the empty face to f-vectors");
        sub->add_option("--dot", job.dot, "write a Graphviz Hasse diagram");
        sub->add_option("--report", job.report, "also write the JSON result to this file");
        sub->add_option("--poset", job.poset_out, "write the resulting poset as JSON");
        sub->add_option("--seed", job.seed, "seed for randomized probes");
        sub->add_option("--budget", job.budget, "node budget for isomorphism search");
    };

    auto* ffan = app.add_subcommand("ffan", "fundamental and refined fundamental fan");
    common(ffan, true);
    auto* sym = app.add_subcommand("symmetrize", "f-vector of the symmetrization by fan assembly and by direct hull");
    common(sym, true);
    sym->add_option("--oracle", job.oracle, "on: hull only, off: fan only, both: compare")
        ->check(CLI::IsMember({"on", "off", "both"}));
    auto* fv = app.add_subcommand("fvector", "f-vectors of the input and its symmetrization");
    common(fv, true);
    auto* ver = app.add_subcommand("verify", "run every check on one input");
    common(ver, true);
    auto* rea = app.add_subcommand("realize", "realize the decorated ordered set partition poset");
    common(rea, false);
    auto* iso = app.add_subcommand("poset-iso", "isomorphism test for two poset JSON files");
    iso->add_option("a", job.iso_a, "first poset")->required()->check(CLI::ExistingFile);
    iso->add_option("b", job.iso_b, "second poset")->required()->check(CLI::ExistingFile);
    iso->add_option("--budget", job.budget, "node budget for isomorphism search");
    iso->add_option("--report", job.report, "also write the JSON result to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    }

    try {
        if (*ffan) return run_ffan(job);
        if (*sym) return run_symmetrize(job);
        if (*fv) return run_fvector(job);
        if (*ver) return run_verify(job);
        if (*rea) return run_realize(job);
        if (*iso) return run_poset_iso(job);
    } catch (const InputError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (const DimensionMismatch& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
