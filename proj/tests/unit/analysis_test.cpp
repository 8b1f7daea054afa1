#include <catch2/catch_amalgamated.hpp>

#include "bvms/analysis.hpp"
#include "bvms/gallery.hpp"

using bvms::DeltaEntry;
using bvms::PointId;
using bvms::Rational;

namespace {

bvms::SelfMap identity_map(const bvms::FiniteSpace& space) {
    std::vector<PointId> image;
    for (std::size_t i = 0; i < space.size(); ++i) image.push_back(PointId{i});
    return bvms::SelfMap{std::move(image)};
}

bvms::SelfMap constant_map(const bvms::FiniteSpace& space, PointId target) {
    return bvms::SelfMap{std::vector<PointId>(space.size(), target)};
}

}  // namespace

TEST_CASE("constant maps are contractive; the identity is not") {
    const auto g = bvms::reciprocal_space(10);
    CHECK(bvms::check_contractive(g.space, *g.map).holds);

    const auto report = bvms::check_contractive(g.space, identity_map(g.space));
    CHECK_FALSE(report.holds);
    // Every unordered pair ties (after == before).
    CHECK(report.violations.size() == g.space.size() * (g.space.size() - 1) / 2);
    for (const auto& v : report.violations) CHECK(v.after == v.before);
}

TEST_CASE("the naturals family is not contractive at (10, 11), refuting its documented claim") {
    const auto g = bvms::naturals_space(40);
    const auto report = bvms::check_contractive(g.space, *g.map);
    REQUIRE_FALSE(report.holds);

    // Violations are exactly the pairs (10, y) for 11 <= y <= 30.
    CHECK(report.violations.size() == 20);
    const auto& first = report.violations.front();
    CHECK(g.space.label(first.x) == "10");
    CHECK(g.space.label(first.y) == "11");
    CHECK(first.before == Rational(1, 10));
    CHECK(first.after == Rational(2));
    for (const auto& v : report.violations) CHECK(g.space.label(v.x) == "10");

    CHECK_FALSE(g.errata.empty());
}

TEST_CASE("fixed points of the gallery maps") {
    const auto reciprocal = bvms::reciprocal_space(10);
    const auto fixed = bvms::find_fixed_points(reciprocal.space, *reciprocal.map);
    REQUIRE(fixed.size() == 1);
    CHECK(reciprocal.space.label(fixed[0]) == "1/4");

    const auto naturals = bvms::naturals_space(40);
    CHECK(bvms::find_fixed_points(naturals.space, *naturals.map).empty());

    const auto unit = bvms::unit_sequence_space(25);
    CHECK(bvms::find_fixed_points(unit.space, *unit.map).empty());

    const auto g = bvms::random_space(5, 3);
    const auto all = bvms::find_fixed_points(g.space, identity_map(g.space));
    CHECK(all.size() == 5);
}

TEST_CASE("a contractive map on a finite space has at most one fixed point") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto g = bvms::random_space(4 + seed % 5, seed);
        const auto map = bvms::random_contractive_map(g.space, seed * 1000 + 1);
        REQUIRE(bvms::check_contractive(g.space, map).holds);
        CAPTURE(seed);
        CHECK(bvms::find_fixed_points(g.space, map).size() <= 1);
    }
}

TEST_CASE("condition over point pairs: constant map is unconstrained everywhere") {
    const auto g = bvms::reciprocal_space(8);
    const auto grid = bvms::default_epsilon_grid(g.space);
    const auto report = bvms::check_condition_a(g.space, *g.map, grid);
    CHECK(report.holds);
    CHECK_FALSE(report.witness.has_value());
    for (const auto& entry : report.delta_at) CHECK(entry.kind == DeltaEntry::Kind::Unconstrained);
}

TEST_CASE("condition over point pairs: the halving family admits delta >= epsilon") {
    const auto g = bvms::halving_space(8);
    const auto grid = bvms::default_epsilon_grid(g.space);
    const auto report = bvms::check_condition_a(g.space, *g.map, grid);
    CHECK(report.holds);
    for (const auto& entry : report.delta_at) {
        CAPTURE(entry.epsilon.to_string());
        if (entry.kind == DeltaEntry::Kind::Value) CHECK(entry.delta >= entry.epsilon);
    }
}

TEST_CASE("condition over point pairs fails for the naturals family") {
    const auto g = bvms::naturals_space(40);
    const auto report = bvms::check_condition_a(g.space, *g.map, {Rational(1)});
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.delta_at.size() == 1);
    CHECK(report.delta_at[0].kind == DeltaEntry::Kind::Absent);
    REQUIRE(report.witness.has_value());
    // First pair with d(Tx,Ty) > 1 >= d(x,y): (10, 11).
    CHECK(g.space.label(PointId{report.witness->i}) == "10");
    CHECK(g.space.label(PointId{report.witness->j}) == "11");
    CHECK(report.witness->before == Rational(1, 10));
    CHECK(report.witness->after == Rational(2));
}

TEST_CASE("under contractivity every grid epsilon has an admissible delta") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const auto g = bvms::random_space(4 + seed % 4, seed);
        const auto map = bvms::random_contractive_map(g.space, seed + 7);
        REQUIRE(bvms::check_contractive(g.space, map).holds);
        const auto report = bvms::check_condition_a(g.space, map, bvms::default_epsilon_grid(g.space));
        CAPTURE(seed);
        CHECK(report.holds);
    }
}

TEST_CASE("condition over iterate pairs: constant and halving maps hold") {
    const auto constant = bvms::reciprocal_space(8);
    const auto grid = bvms::orbit_epsilon_grid(constant.space, *constant.map,
                                               constant.space.require("1/2"), 6);
    if (!grid.empty()) {
        const auto report = bvms::check_condition_b(constant.space, *constant.map,
                                                    constant.space.require("1/2"), grid, 6);
        CHECK(report.holds);
    }

    const auto halving = bvms::halving_space(10);
    const PointId one = halving.space.require("1");
    const auto hgrid = bvms::orbit_epsilon_grid(halving.space, *halving.map, one, 14);
    const auto hreport = bvms::check_condition_b(halving.space, *halving.map, one, hgrid, 14);
    CHECK(hreport.holds);
    for (const auto& entry : hreport.delta_at) {
        CAPTURE(entry.epsilon.to_string());
        if (entry.kind == DeltaEntry::Kind::Value) CHECK(entry.delta >= entry.epsilon);
    }
}

TEST_CASE("condition over iterate pairs: refuted on the naturals orbit of 5") {
    const auto g = bvms::naturals_space(40);
    const PointId five = g.space.require("5");
    const auto report = bvms::check_condition_b(g.space, *g.map, five, {Rational(3, 2)}, 6);
    REQUIRE_FALSE(report.holds);
    CHECK(report.horizon == 6);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->i == 1);
    CHECK(report.witness->j == 2);
    CHECK(report.witness->before == Rational(3, 2));
    CHECK(report.witness->after == Rational(2));

    // A refutation persists at every larger horizon.
    for (std::size_t h : {7u, 10u, 20u}) {
        CAPTURE(h);
        CHECK_FALSE(bvms::check_condition_b(g.space, *g.map, five, {Rational(3, 2)}, h).holds);
    }
}

TEST_CASE("grid preconditions are enforced") {
    const auto g = bvms::reciprocal_space(8);
    CHECK_THROWS_AS(bvms::check_condition_a(g.space, *g.map, {}), bvms::ShapeError);
    CHECK_THROWS_AS(bvms::check_condition_a(g.space, *g.map, {Rational(0)}), bvms::ShapeError);
    CHECK_THROWS_AS(bvms::check_condition_b(g.space, *g.map, PointId{0}, {Rational(1)}, 1),
                    bvms::ShapeError);
}

TEST_CASE("orbit bound of the naturals orbit of 5") {
    const auto g = bvms::naturals_space(40);
    const auto report = bvms::orbit_bound(g.space, *g.map, g.space.require("5"), 2, 10);
    CHECK(report.bound == Rational(5));
    CHECK(report.attained_at == 1);
    CHECK(report.horizon_effective == 10);
}

TEST_CASE("orbit bound from a fixed point is zero") {
    const auto g = bvms::reciprocal_space(10);
    const auto report = bvms::orbit_bound(g.space, *g.map, g.space.require("1/4"), 3, 50);
    CHECK(report.bound == Rational(0));
    CHECK(report.attained_at == 0);
}

TEST_CASE("partial maps cut the orbit bound horizon and say so") {
    const auto g = bvms::unit_sequence_space(25);
    const auto report = bvms::orbit_bound(g.space, *g.map, g.space.require("e1"), 2, 13);
    CHECK(report.horizon_requested == 13);
    CHECK(report.horizon_effective == 3);
    CHECK(report.bound == Rational(23, 13));  // d(e1, e12) = 1 + 10/13
    CHECK(report.attained_at == 1);
}

TEST_CASE("condition over iterate pairs needs the orbit to reach the horizon") {
    const auto g = bvms::unit_sequence_space(25);
    CHECK_THROWS_AS(
        bvms::check_condition_b(g.space, *g.map, g.space.require("e1"), {Rational(1)}, 6),
        bvms::OrbitTooShortError);
}
