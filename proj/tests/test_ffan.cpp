#include <catch2/catch_amalgamated.hpp>

#include <symfan/ffan.hpp>

#include "support.hpp"

using namespace symfan;
using namespace symfan::testing;

TEST_CASE("placement", "[ffan]") {
    Polytope S = S_poly();
    auto w = is_placed(S);
    REQUIRE(w);
    CHECK(pairing(*w, S.vertices()[0], S.vertices()[1]) == 0);
    CHECK(fundamental_chamber(4).contains(w->reduced()) == Containment::interior);

    CHECK_FALSE(is_placed(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK_FALSE(is_placed(poly({{1, 2, 9}, {1, 3, 8}})));
    CHECK(is_placed(L_poly()));
}

TEST_CASE("appropriateness", "[ffan]") {
    CHECK(is_appropriate(S_poly()));
    CHECK(is_appropriate(L_poly()));
    Polytope bad = poly({{2, 1, 6, 8}, {0, 4, 5, 8}});
    CHECK_FALSE(is_appropriate(bad));
    CHECK_THROWS_AS(fundamental_fan(bad), HypothesisViolation);
    CHECK_THROWS_AS(fundamental_fan(poly({{1, 2, 9}, {1, 3, 8}})), HypothesisViolation);
}

TEST_CASE("omega and the fundamental fan of S", "[ffan]") {
    FundamentalFan ff = fundamental_fan(S_poly());
    CHECK(ff.omega.size() == 12);
    CHECK(ff.cones.size() == 12);
    std::map<std::size_t, int> by_dim;
    for (const auto& c : ff.cones) ++by_dim[c.cone.dim()];
    CHECK(by_dim == std::map<std::size_t, int>{{0, 1}, {1, 4}, {2, 5}, {3, 2}});
    for (const auto& c : ff.cones) CHECK(carrier(c.cone).osp == c.carrier);

    auto cells = refined_fan(ff);
    CHECK(cells.at(OrderedSetPartition::finest(4)).size() == 3);
    CHECK(cells.at(OrderedSetPartition::parse("12|3|4")).size() == 1);
    CHECK(cells.at(OrderedSetPartition::parse("1|23|4")).size() == 1);
    const auto& c34 = cells.at(OrderedSetPartition::parse("1|2|34"));
    REQUIRE(c34.size() == 3);
    std::set<std::vector<IVec>> rays;
    for (int i : c34) rays.insert(ff.cones[static_cast<std::size_t>(i)].cone.rays());
    auto f1 = red({0, 1, 1, 1}), f2 = red({0, 0, 1, 1}), f12 = red({0, 1, 2, 2});
    auto sorted = [](std::vector<IVec> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(rays == std::set<std::vector<IVec>>{sorted({f2, f12}), sorted({f1, f12}), {f12}});
    for (const auto& s : {"1|234", "12|34", "123|4", "1234"})
        CHECK(cells.at(OrderedSetPartition::parse(s)).size() == 1);
    CHECK(codim_counts(ff, all_indices(ff.cones.size()))[1] == 5);
}

TEST_CASE("L has six cones", "[ffan]") {
    FundamentalFan ff = fundamental_fan(L_poly());
    CHECK(ff.omega.size() == 6);
    SigmaPoset r = rposet(ff);
    std::map<OrderedSetPartition, int> tags;
    for (const auto& c : r.carrier) ++tags[c];
    CHECK(tags[OrderedSetPartition::parse("123")] == 1);
    CHECK(tags[OrderedSetPartition::parse("1|23")] + tags[OrderedSetPartition::parse("12|3")] == 2);
    CHECK(tags[OrderedSetPartition::finest(3)] == 3);
    auto kept = prune_to_phi_cell_indices(r.poset);
    CHECK(kept.size() == 3);
    for (int k : kept) CHECK(r.carrier[static_cast<std::size_t>(k)] == OrderedSetPartition::finest(3));
}

TEST_CASE("a point meets every face of Phi", "[ffan]") {
    FundamentalFan ff = fundamental_fan(poly({{1, 2, 4, 7}}));
    CHECK(ff.omega.size() == 8);
    for (const auto& [phi, cell] : refined_fan(ff)) {
        REQUIRE(cell.size() == 1);
        CHECK(ff.cones[static_cast<std::size_t>(cell[0])].cone == osp_cone(phi));
    }
}

TEST_CASE("X and Y", "[ffan]") {
    for (const auto& P : {X_poly(), Y_poly()}) {
        FundamentalFan ff = fundamental_fan(P);
        const auto& top = refined_fan(ff).at(OrderedSetPartition::finest(5));
        int full = 0;
        for (const auto& c : ff.cones)
            if (c.cone.dim() == 4) {
                ++full;
                CHECK(c.cone.rays().size() == 4);
            }
        CHECK(full == 2);
        CHECK(top.size() == 3);
    }
    CHECK(poset_iso(zposet(fundamental_fan(X_poly())), zposet(fundamental_fan(Y_poly()))));
}

TEST_CASE("cell at Phi and pruning", "[ffan]") {
    for (const auto& P : {S_poly(), L_poly(), X_poly(), Y_poly()}) {
        FundamentalFan ff = fundamental_fan(P);
        CHECK(refined_fan(ff).at(OrderedSetPartition::finest(ff.d())).size() == ff.faces.faces.size());
        CHECK(zpphi_iso(ff));
        CHECK(zdetermine_iso(ff));
        CHECK(check_bijection_order(ff));
    }
    Poset complete = osp_poset(3).poset.dual();
    CHECK(prune_to_phi_cell(complete).size() == complete.size());
}
