#include <catch2/catch_amalgamated.hpp>

#include <symfan/realize.hpp>

#include "support.hpp"

using namespace symfan;
using namespace symfan::testing;

TEST_CASE("decorated ordered set partitions", "[realize]") {
    auto x = parse_decorated("5||2|4||1||3");
    CHECK(x.B == std::vector<int>{2});
    CHECK(x.corank() == 4);
    CHECK(x.rank() == 0);
    CHECK(to_string(x) == "5||2|4||1||3");
    CHECK(parse_decorated("5∥2|4∥1∥3") == x);
    CHECK(to_string(parse_decorated("12345")) == "12345");
    CHECK(parse_decorated("12345").corank() == 0);
    CHECK_THROWS_AS(DecoratedOSP(OrderedSetPartition::parse("12|3"), {}), std::invalid_argument);
    CHECK_THROWS_AS(DecoratedOSP(OrderedSetPartition::parse("12|3"), {1}), std::invalid_argument);
}

TEST_CASE("decorated poset sizes and grading", "[realize]") {
    CHECK(all_decorated(3).size() == 25);
    CHECK(all_decorated(4).size() == 291);
    CHECK(all_decorated(5).size() == 3961);
    for (int d : {3, 4}) {
        auto F = decorated_poset(d);
        auto r = F.t.poset.rank_function();
        REQUIRE(r);
        for (std::size_t i = 0; i < F.elements.size(); ++i) CHECK((*r)[i] == F.elements[i].rank());
        CHECK(diamond_check(F.t.poset));
        CHECK(action_preserves_order(F.t));
        auto top = F.t.poset.maximal();
        REQUIRE(top.size() == 1);
        CHECK(F.elements[static_cast<std::size_t>(top[0])].trivial());
    }
}

TEST_CASE("bar covers agree with the product order", "[realize]") {
    for (int d : {3, 4}) {
        auto F = decorated_poset(d);
        for (std::size_t a = 0; a < F.elements.size(); ++a)
            for (std::size_t b = 0; b < F.elements.size(); ++b)
                REQUIRE(F.t.poset.leq(static_cast<int>(a), static_cast<int>(b)) ==
                        decorated_leq(F.elements[a], F.elements[b]));
    }
}

TEST_CASE("the d = 5 chain", "[realize]") {
    std::vector<std::string> chain{"5||2|4||1||3", "5||2|4||13", "5|2|4||13", "5|2|4|13", "12345"};
    auto F = decorated_poset(5);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        int a = F.t.poset.index_of(chain[k]), b = F.t.poset.index_of(chain[k + 1]);
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        const auto& up = F.t.poset.up(a);
        CHECK(std::find(up.begin(), up.end(), b) != up.end());
    }
}

TEST_CASE("generating subposet and conditions", "[realize]") {
    auto F = decorated_poset(4);
    auto Z = generating_subposet(F);
    CHECK(Z.elements.size() == 20);
    std::map<int, int> by_rank;
    for (int r : Z.rank) ++by_rank[r];
    CHECK(by_rank == std::map<int, int>{{0, 1}, {1, 7}, {2, 9}, {3, 3}});
    CHECK(check_generating_subposet(F.t, Z.in_F).ok());
    auto compat = compatibility_check(F.t, Z.in_F);
    REQUIRE(compat.lambda);
    CHECK(*compat.lambda == Z.z.carrier);
    auto nc = necessary_conditions(Z.z, 4, Z.rank);
    CHECK(nc.n1);
    CHECK(nc.n2);
    CHECK(nc.n3);

    auto broken = Z.z;
    std::swap(broken.carrier[0], broken.carrier.back());
    CHECK_FALSE(necessary_conditions(broken, 4, Z.rank).ok());
}

TEST_CASE("transport and the simplex", "[realize]") {
    CHECK(t_gamma({Rat(1), Rat(0), Rat(0)}, gamma0(4)) == up({0, 5, 9, 16}));
    CHECK(t_gamma({Rat(0), Rat(0), Rat(0)}, gamma0(4)) == gamma0(4));
    Polytope P4 = build_P(4);
    std::vector<UPoint> want{up({0, 5, 9, 16}), up({1, 3, 10, 16}), up({1, 4, 8, 17})};
    std::sort(want.begin(), want.end());
    CHECK(P4.vertices() == want);
    Polytope P3 = build_P(3);
    CHECK(P3.vertices() == std::vector<UPoint>{up({0, 5, 9}), up({1, 3, 10})});
    CHECK(is_placed(P4));
    CHECK(is_appropriate(P4));
    CHECK_FALSE(is_appropriate(build_P(4, up({1, 2, 3, 4}))));
}

TEST_CASE("nu cones are the normal cones of the simplex", "[realize]") {
    auto line = nu_cone({1, 2, 3}, 4);
    CHECK(line.dim() == 1);
    CHECK(line.lineality() == std::vector<IVec>{red({0, 1, 2, 3})});
    auto n2 = nu_cone({2}, 4);
    CHECK(n2.contains(red({0, 1, 3, 4})) == Containment::interior);
    CHECK(n2.contains(red({0, 3, 4, 5})) == Containment::outside);
    CHECK_THROWS(nu_cone({}, 4));
    for (int d : {3, 4, 5}) {
        Polytope P = build_P(d);
        for (unsigned m = 1; m < (1U << (d - 1)); ++m) {
            std::vector<int> B, verts;
            for (int i = 1; i < d; ++i)
                if (m >> (i - 1) & 1U) B.push_back(i);
            for (int i : B) {
                QVec e(static_cast<std::size_t>(d - 1), Rat(0));
                e[static_cast<std::size_t>(i - 1)] = 1;
                verts.push_back(P.vertex_index(t_gamma(e, gamma0(d))));
            }
            std::sort(verts.begin(), verts.end());
            CHECK(nu_cone(B, d) == normal_cone(P, verts));
        }
    }
}

TEST_CASE("delta", "[realize]") {
    CHECK(delta(WVector(iv({0, 1, 3, 6}))) == QVec{Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("characteristic intersections", "[realize]") {
    auto r = charintersect(OrderedSetPartition::parse("12|34"), {2}, 4);
    CHECK(r.meet);
    REQUIRE(r.witness);
    CHECK(*r.witness == WVector(iv({0, 0, 2, 2})));
    CHECK(r.witness_interior);
    auto t = charintersect(OrderedSetPartition::trivial(4), {1, 2, 3}, 4);
    CHECK(t.meet);
    CHECK(t.witness_interior);
    CHECK_FALSE(charintersect(OrderedSetPartition::parse("12|3|4"), {1}, 4).meet);

    for (int d : {3, 4}) {
        for (const auto& s : standard_osps(d))
            for (unsigned m = 1; m < (1U << (d - 1)); ++m) {
                std::vector<int> B;
                for (int i = 1; i < d; ++i)
                    if (m >> (i - 1) & 1U) B.push_back(i);
                auto c = charintersect(s, B, d);
                CHECK(c.meet == in_generating_set(s, B));
                if (c.meet) CHECK(c.witness_interior);
            }
    }
}

TEST_CASE("realization pipeline", "[realize]") {
    for (int d : {3, 4}) {
        auto rep = realize_pipeline(d);
        for (const auto& s : rep.stages) {
            INFO(s.name << " " << s.detail);
            CHECK(s.ok);
        }
        CHECK(rep.stages.size() == 8);
        CHECK(rep.na_informational);
        CHECK(rep.nb_informational);
    }
    CHECK(realize_pipeline(3).face_poset_size == 25);
    CHECK(realize_pipeline(4).face_poset_size == 291);
}

TEST_CASE("realization pipeline in dimension five", "[realize][slow]") {
    auto rep = realize_pipeline(5);
    CHECK(rep.ok());
    CHECK(rep.face_poset_size == 3961);
}
