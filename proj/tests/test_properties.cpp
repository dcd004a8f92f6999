#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

using namespace symfan;
using namespace symfan::testing;

namespace {

constexpr std::uint64_t seed = 20240611;
constexpr std::size_t cases = 100;

}  // namespace

TEST_CASE("kappa cones form a pointed dissection", "[properties]") {
    auto r = dissection_suite(seed, cases);
    INFO(r.first_failure);
    CHECK(r.cases == cases);
    CHECK(r.ok());
}

TEST_CASE("a cone meeting the interior of a full-dimensional cone meets it in relative interiors", "[properties]") {
    auto r = aux_suite(seed, cases);
    INFO(r.first_failure);
    CHECK(r.cases == cases);
    CHECK(r.ok());
}

TEST_CASE("normal cones reverse the face order", "[properties]") {
    auto r = face_fan_suite(seed, cases);
    INFO(r.first_failure);
    CHECK(r.cases == cases);
    CHECK(r.ok());
}

TEST_CASE("the two actions are dual", "[properties]") {
    auto r = duality_suite(seed, cases);
    INFO(r.first_failure);
    CHECK(r.cases == cases);
    CHECK(r.ok());
}

TEST_CASE("generated polytopes satisfy the hypotheses", "[properties]") {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 50; ++k) {
        Polytope P = random_placed_polytope(rng, k % 2 ? 3 : 4);
        CHECK(is_placed(P));
        CHECK(is_appropriate(P));
    }
}
