#include <catch2/catch_amalgamated.hpp>

#include <symfan/ffan.hpp>
#include <symfan/sigma_poset.hpp>

#include "support.hpp"

using namespace symfan;
using namespace symfan::testing;

namespace {

Poset chain(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        if (i) covers.emplace_back(i - 1, i);
    }
    return Poset::from_covers(labels, covers);
}

}  // namespace

TEST_CASE("poset construction", "[posets]") {
    Poset c = chain(4);
    CHECK(c.leq(0, 3));
    CHECK_FALSE(c.leq(3, 0));
    CHECK(c.num_covers() == 3);
    CHECK(c.rank_function() == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);

    Poset b = boolean_poset(3).poset;
    Poset d = b.dual();
    CHECK(d.dual().covers() == b.covers());
    CHECK(d.leq(6, 0) == b.leq(0, 6));
}

TEST_CASE("diamond property", "[posets]") {
    CHECK(diamond_check(face_poset(face_lattice(poly({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})))));
    CHECK(diamond_check(osp_poset(3).poset));
    Poset s3 = set_partition_poset(3).poset;
    CHECK(s3.size() == 5);
    CHECK_FALSE(diamond_check(s3));
    Poset pentagon = Poset::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK_THROWS_AS(diamond_check(pentagon), std::invalid_argument);
}

TEST_CASE("poset isomorphism", "[posets]") {
    Poset b = boolean_poset(4).poset;
    auto self = poset_iso(b, b);
    REQUIRE(self);
    CHECK(is_isomorphism(b, b, self.map));
    CHECK(poset_iso(b, b.dual()).status == IsoStatus::not_isomorphic);
    CHECK(poset_iso(chain(4), chain(4).dual()));
    CHECK(poset_iso(chain(3), Poset::from_covers({"a", "b", "c"}, {{0, 1}, {0, 2}})).status == IsoStatus::not_isomorphic);
    CHECK(poset_iso(Poset::from_covers({}, {}), Poset::from_covers({}, {})));

    Poset f = osp_poset(4).poset;
    auto tight = poset_iso(f, f.dual(), 1);
    CHECK(tight.status != IsoStatus::isomorphic);
}

TEST_CASE("sigma poset isomorphism respects carriers", "[posets]") {
    SigmaPoset a, b;
    a.poset = Poset::from_covers({"x", "y"}, {{0, 1}});
    b.poset = a.poset;
    a.carrier = {OrderedSetPartition::parse("12|3"), OrderedSetPartition::parse("1|2|3")};
    b.carrier = {OrderedSetPartition::parse("1|23"), OrderedSetPartition::parse("1|2|3")};
    CHECK(poset_iso(a.poset, b.poset));
    CHECK_FALSE(sigma_poset_iso(a, b));
    CHECK(sigma_poset_iso(a, a));
    SigmaPoset e;
    e.poset = Poset::from_covers({}, {});
    CHECK(sigma_poset_iso(e, e));
}

TEST_CASE("order consistency", "[posets]") {
    SigmaPoset r = rposet(fundamental_fan(S_poly()));
    CHECK(is_order_consistent(r));
    auto bad = r;
    auto top = static_cast<std::size_t>(bad.poset.maximal().front());
    std::swap(bad.carrier[0], bad.carrier[top]);
    CHECK_FALSE(is_order_consistent(bad));
    CHECK_THROWS_AS(symmetrize(bad), std::invalid_argument);

    SigmaPoset anti;
    anti.poset = Poset::from_covers({"a", "b"}, {});
    anti.carrier = {OrderedSetPartition::parse("1234"), OrderedSetPartition::parse("1|2|3|4")};
    CHECK(is_order_consistent(anti));
}

TEST_CASE("poset symmetrization sizes", "[posets]") {
    SigmaPoset rl = rposet(fundamental_fan(L_poly()));
    auto gl = symmetrize(rl);
    CHECK(gl.poset.size() == 25);
    CHECK(symmetrized_size(rl, 3) == 25);
    std::map<OrderedSetPartition, int> by;
    for (int t : gl.tag) ++by[rl.carrier[static_cast<std::size_t>(t)]];
    CHECK(by[OrderedSetPartition::parse("123")] == 1);
    CHECK(by[OrderedSetPartition::parse("1|2|3")] == 18);

    SigmaPoset rs = rposet(fundamental_fan(S_poly()));
    CHECK(symmetrize(rs).poset.size() == 147);

    SigmaPoset one;
    one.poset = Poset::from_covers({"t"}, {});
    one.carrier = {OrderedSetPartition::finest(4)};
    auto g1 = symmetrize(one);
    CHECK(g1.poset.size() == 24);
    CHECK(g1.poset.num_covers() == 0);
}

TEST_CASE("generating subposets", "[posets]") {
    auto b = boolean_poset(4);
    std::vector<int> chain_ids;
    for (const std::string s : {"1", "12", "123", "1234"}) chain_ids.push_back(b.poset.index_of(s));
    REQUIRE(std::find(chain_ids.begin(), chain_ids.end(), -1) == chain_ids.end());
    CHECK(check_generating_subposet(b, chain_ids).ok());

    auto o = osp_poset(3);
    CHECK(check_generating_subposet(o, standard_elements(o)).ok());
    auto doubled = standard_elements(o);
    doubled.push_back(o.poset.index_of("2|1|3"));
    CHECK_FALSE(check_generating_subposet(o, doubled).disjoint_cover);
}

TEST_CASE("compatibility", "[posets]") {
    auto s4 = set_partition_poset(4);
    std::vector<int> all = all_indices(s4.poset.size());
    std::vector<int> reps;
    std::set<int> covered;
    for (int x : all) {
        if (covered.count(x)) continue;
        reps.push_back(x);
        for (const auto& g : all_permutations(4)) covered.insert(s4.act(g, x));
    }
    auto res = compatibility_check(s4, reps);
    REQUIRE_FALSE(res.lambda);
    CHECK(res.witness_order == 8);
    CHECK(res.witness_orbits == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    auto b = boolean_poset(3);
    std::vector<int> chain_ids;
    for (const std::string s : {"1", "12", "123"}) chain_ids.push_back(b.poset.index_of(s));
    auto ok = compatibility_check(b, chain_ids);
    REQUIRE(ok.lambda);
    CHECK((*ok.lambda)[0] == OrderedSetPartition::parse("1|23"));
    CHECK((*ok.lambda)[1] == OrderedSetPartition::parse("12|3"));
}
