#include <doctest.h>

#include <limits>

#include "qhscatter/errors.hpp"
#include "qhscatter/model.hpp"

using namespace qhs;

TEST_CASE("build sorts features by position") {
    const auto p = Potential1D::build(
        {{2.0, complexd{1.0, 0.0}}, {-1.5, complexd{0.0, 1.0}}, {0.25, complexd{0.0, -1.0}}},
        {{3.0, 4.0, complexd{0.5, 0.0}}, {-4.0, -3.0, complexd{0.0, 0.5}}});
    REQUIRE(p.deltas().size() == 3);
    CHECK(p.deltas()[0].position == -1.5);
    CHECK(p.deltas()[1].position == 0.25);
    CHECK(p.deltas()[2].position == 2.0);
    REQUIRE(p.segments().size() == 2);
    CHECK(p.segments()[0].x_lo == -4.0);
    CHECK(p.segments()[1].x_lo == 3.0);
}

TEST_CASE("the standard spike and well configurations are all expressible") {
    const double lambda = 1.0, a = 1.0, eps = 0.1;
    CHECK_NOTHROW(Potential1D::build({{0.0, 2.0 * lambda * complexd{1.0, eps}}}, {}));
    CHECK_NOTHROW(Potential1D::build(
        {{-a, complexd{0.0, -lambda}}, {a, complexd{0.0, lambda}}}, {}));
    CHECK_NOTHROW(Potential1D::build(
        {}, {{-1.0, 0.0, complexd{0.0, -1.0}}, {0.0, 1.0, complexd{0.0, 1.0}}}));
}

TEST_CASE("overlapping segments are rejected") {
    CHECK_THROWS_AS(Potential1D::build({}, {{0.0, 2.0, complexd{1.0, 0.0}},
                                            {1.0, 3.0, complexd{1.0, 0.0}}}),
                    OverlapError);
    // shared endpoint is not an overlap
    CHECK_NOTHROW(Potential1D::build({}, {{0.0, 1.0, complexd{1.0, 0.0}},
                                          {1.0, 2.0, complexd{2.0, 0.0}}}));
}

TEST_CASE("delta inside a segment interior is rejected, boundary is fine") {
    const UniformSegment seg{-1.0, 1.0, complexd{0.0, 1.0}};
    CHECK_THROWS_AS(Potential1D::build({{0.0, complexd{1.0, 0.0}}}, {seg}),
                    PlacementError);
    CHECK_NOTHROW(Potential1D::build({{1.0, complexd{1.0, 0.0}}}, {seg}));
    CHECK_NOTHROW(Potential1D::build({{-1.0, complexd{1.0, 0.0}}}, {seg}));
}

TEST_CASE("degenerate or non-finite inputs are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Potential1D::build({}, {{1.0, 1.0, complexd{1.0, 0.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Potential1D::build({}, {{2.0, 1.0, complexd{1.0, 0.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Potential1D::build({{inf, complexd{1.0, 0.0}}}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Potential1D::build({{0.0, complexd{inf, 0.0}}}, {}),
        std::invalid_argument);
}

TEST_CASE("real_valued sees imaginary parts anywhere") {
    const auto real_pot = Potential1D::build({{0.0, complexd{2.0, 0.0}}},
                                             {{1.0, 2.0, complexd{-1.0, 0.0}}});
    CHECK(real_pot.real_valued());
    const auto lossy = Potential1D::build({{0.0, complexd{2.0, 1e-30}}}, {});
    CHECK_FALSE(lossy.real_valued());
}

TEST_CASE("value_at reports segment plateaus and zero elsewhere") {
    const auto p = Potential1D::build(
        {}, {{-1.0, 0.0, complexd{0.0, -3.0}}, {0.0, 1.0, complexd{0.0, 3.0}}});
    CHECK(p.value_at(-0.5) == complexd{0.0, -3.0});
    CHECK(p.value_at(0.5) == complexd{0.0, 3.0});
    CHECK(p.value_at(5.0) == complexd{0.0, 0.0});
    CHECK(p.value_at(-5.0) == complexd{0.0, 0.0});
}

TEST_CASE("JSON round-trip preserves every feature exactly") {
    const auto p = Potential1D::build(
        {{-1.25, complexd{0.5, -2.75}}, {0.0, complexd{2.0, 0.2}}},
        {{1.0, 2.5, complexd{-0.125, 0.0625}}});
    const auto q = potential_from_json(to_json(p));
    REQUIRE(q.deltas().size() == p.deltas().size());
    REQUIRE(q.segments().size() == p.segments().size());
    for (std::size_t i = 0; i < p.deltas().size(); ++i) {
        CHECK(q.deltas()[i].position == p.deltas()[i].position);
        CHECK(q.deltas()[i].strength == p.deltas()[i].strength);
    }
    CHECK(q.segments()[0].x_lo == p.segments()[0].x_lo);
    CHECK(q.segments()[0].x_hi == p.segments()[0].x_hi);
    CHECK(q.segments()[0].value == p.segments()[0].value);
}

TEST_CASE("JSON parser rejects malformed documents") {
    CHECK_THROWS_AS(potential_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(potential_from_json(R"({"deltas":[{"x":0}]})"),
                    std::invalid_argument);
}
