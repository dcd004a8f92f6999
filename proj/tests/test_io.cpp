#include <catch2/catch_amalgamated.hpp>

#include <symfan/io.hpp>

#include "support.hpp"

using namespace symfan;
using namespace symfan::testing;

TEST_CASE("polytope JSON round trip", "[io]") {
    QVec half{Rat(1, 2), Rat(3, 2), Rat(4)};
    Polytope P = Polytope::hull({UPoint(half), up({1, 1, 4})});
    json j = to_json(P);
    CHECK(j["schema"] == schema_version);
    CHECK(j["vertices"][0][0] == "1/2");
    Polytope Q = polytope_from_json(json::parse(j.dump()));
    CHECK(Q.vertices() == P.vertices());
    CHECK(to_json(Q) == j);
}

TEST_CASE("malformed polytope input names the location", "[io]") {
    auto fails_at = [](const std::string& text, const std::string& where) {
        try {
            polytope_from_json(json::parse(text));
        } catch (const InputError& e) {
            return e.where() == where;
        }
        return false;
    };
    CHECK(fails_at(R"({"d":3})", "/vertices"));
    CHECK(fails_at(R"({"vertices":[[1,2,3],[1,2]]})", "/vertices/1"));
    CHECK(fails_at(R"({"vertices":[[1,2,3],[1,2,4]]})", "/vertices/1"));
    CHECK(fails_at(R"({"vertices":[[1,"x",3]]})", "/vertices/0/1"));
    CHECK(fails_at(R"({"d":4,"vertices":[[1,2,3]]})", "/d"));
    CHECK(fails_at(R"({"schema":"other","vertices":[[1,2,3]]})", "/schema"));
    CHECK(fails_at(R"([1,2])", ""));
}

TEST_CASE("poset and face lattice JSON round trip", "[io]") {
    FundamentalFan ff = fundamental_fan(S_poly());
    Poset z = zposet(ff);
    json j = to_json(z);
    Poset back = poset_from_json(json::parse(j.dump()));
    CHECK(back.labels() == z.labels());
    CHECK(back.covers() == z.covers());
    CHECK(to_json(back) == j);
    CHECK(j["elements"][0]["rank"] == 0);

    FaceLattice fl = face_lattice(S_poly());
    CHECK(face_lattice_from_json(json::parse(to_json(fl).dump())) == fl);

    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements":[{"id":0},{"id":0}],"covers":[]})")), InputError);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements":[{"id":0}],"covers":[[0,3]]})")), InputError);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements":[{"id":0},{"id":1}],"covers":[[0,1],[1,0]]})")),
                    InputError);
}

TEST_CASE("refined fan JSON", "[io]") {
    json j = refined_fan_json(fundamental_fan(S_poly()));
    CHECK(j["cells"].size() == 8);
    CHECK(j["cells"]["1|2|3|4"].size() == 3);
    CHECK(j["cells"]["1|2|34"].size() == 3);
}

TEST_CASE("DOT export", "[io]") {
    auto count = [](const std::string& s, const std::string& needle) {
        std::size_t n = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
        return n;
    };
    std::string z = export_dot(rposet(fundamental_fan(S_poly())));
    CHECK(count(z, "[label=") == 12);
    CHECK(count(z, "rank=same") == 4);
    std::string f = export_dot(decorated_poset(3).t.poset);
    CHECK(count(f, "[label=") == 25);
    std::string one = export_dot(Poset::from_covers({"x"}, {}));
    CHECK(count(one, "[label=") == 1);
    CHECK(count(one, "->") == 0);
}
