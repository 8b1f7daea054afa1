#include <catch2/catch_amalgamated.hpp>

#include "bvms/gallery.hpp"
#include "bvms/verify.hpp"
#include "support/brute.hpp"

using bvms::PointId;
using bvms::Rational;
using bvms::Verdict;

namespace {

// The four-branch table of the no-fixed-point family, buildable at sizes
// the gallery refuses (it needs N >= 30 for map totality; the space alone
// is fine at any size).
bvms::FiniteSpace naturals_table(std::size_t N) {
    std::vector<std::string> labels;
    for (std::size_t x = 1; x <= N; ++x) labels.push_back(std::to_string(x));
    std::vector<std::vector<Rational>> dist(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const std::int64_t x = static_cast<std::int64_t>(i) + 1;
            const std::int64_t y = static_cast<std::int64_t>(j) + 1;
            const std::int64_t gap = x > y ? x - y : y - x;
            if (x == y)
                dist[i][j] = Rational(0);
            else if (x < 10 && y < 10)
                dist[i][j] = Rational(10 * gap);
            else if (x >= 10 && y >= 10)
                dist[i][j] = Rational(gap, 10);
            else
                dist[i][j] = Rational(5);
        }
    return make_space(std::move(labels), dist);
}

}  // namespace

TEST_CASE("a true metric has min_s = 1 for v = 1") {
    const auto space = bvms::make_space(
        {"0", "1", "2"},
        {{Rational(0), Rational(1), Rational(2)},
         {Rational(1), Rational(0), Rational(1)},
         {Rational(2), Rational(1), Rational(0)}});
    CHECK(bvms::min_s(space, 1) == Rational(1));
    CHECK(bvms::verify_polygon(space, 1, Rational(1)).verdict == Verdict::Certified);
}

TEST_CASE("spaces with fewer than v+2 points are vacuous") {
    const auto space = bvms::make_space(
        {"a", "b", "c"},
        {{Rational(0), Rational(1), Rational(1)},
         {Rational(1), Rational(0), Rational(1)},
         {Rational(1), Rational(1), Rational(0)}});
    const auto result = bvms::verify_polygon(space, 2, Rational(1));
    CHECK(result.verdict == Verdict::Vacuous);
    CHECK(result.tuples_checked == 0);
    CHECK(bvms::min_s(space, 2) == Rational(1));

    const auto certified = bvms::certify_class(space, bvms::MetricClass(5, Rational(1)));
    CHECK(certified.status() == bvms::MetricClass::Status::Certified);
}

TEST_CASE("constructed violation: cheap detour points refute v=1, s=1") {
    // d(a,b) = 1 but c and d sit at 1/100 from everything.
    const Rational c(1, 100);
    const auto space = bvms::make_space(
        {"a", "b", "c", "d"},
        {{Rational(0), Rational(1), c, c},
         {Rational(1), Rational(0), c, c},
         {c, c, Rational(0), c},
         {c, c, c, Rational(0)}});
    const auto result = bvms::verify_polygon(space, 1, Rational(1));
    REQUIRE(result.verdict == Verdict::Refuted);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->x == PointId{0});
    CHECK(result.witness->y == PointId{1});
    CHECK(result.witness->chain == std::vector<PointId>{PointId{2}});
    CHECK(result.witness->lhs == Rational(1));
    CHECK(result.witness->rhs == Rational(1, 50));

    const auto refuted = bvms::certify_class(space, bvms::MetricClass(1, Rational(1)));
    CHECK(refuted.status() == bvms::MetricClass::Status::Refuted);
}

TEST_CASE("truncation of the no-fixed-point family to {1..15} certifies at (v=2, s=1000)") {
    const auto space = naturals_table(15);
    const auto result = bvms::verify_polygon(space, 2, Rational(1000));
    CHECK(result.verdict == Verdict::Certified);
    // 105 pairs, 13 * 12 ordered tuples each.
    CHECK(result.tuples_checked == 16380);
    CHECK(bvms::min_s(space, 2) == Rational(800, 101));
}

TEST_CASE("enumeration count matches the closed formula on certified runs") {
    for (std::uint64_t seed : {11u, 12u}) {
        for (int v : {1, 2}) {
            const auto g = bvms::random_space(6, seed);
            const auto result = bvms::verify_polygon(g.space, v, bvms::min_s(g.space, v));
            REQUIRE(result.verdict == Verdict::Certified);
            const std::uint64_t pairs = 6 * 5 / 2;
            const std::uint64_t tuples = v == 1 ? 4 : 4 * 3;
            CAPTURE(seed, v);
            CHECK(result.tuples_checked == pairs * tuples);
        }
    }
}

TEST_CASE("implementation and reference enumerator agree on random spaces") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const std::size_t n = 4 + seed % 4;  // 4..7
        for (int v : {1, 2}) {
            const auto g = bvms::random_space(n, seed);
            const Rational mine = bvms::min_s(g.space, v);
            const Rational reference = brute::min_s(g.space, v);
            CAPTURE(seed, n, v);
            CHECK(mine == reference);
            CHECK(bvms::verify_polygon(g.space, v, mine).verdict == Verdict::Certified);
            CHECK(brute::satisfies(g.space, v, mine));
            const Rational shaved = mine * Rational(999, 1000);
            const auto at_shaved = bvms::verify_polygon(g.space, v, shaved).verdict;
            if (mine > Rational(1)) {
                CHECK(at_shaved == Verdict::Refuted);
                CHECK_FALSE(brute::satisfies(g.space, v, shaved));
            }
        }
    }
}

TEST_CASE("monotonicity in s: certifying at s certifies at every larger s") {
    const auto g = bvms::random_space(6, 99);
    const Rational tight = bvms::min_s(g.space, 2);
    for (const Rational& above : {tight, tight * Rational(2), tight + Rational(5)}) {
        CHECK(bvms::verify_polygon(g.space, 2, above).verdict == Verdict::Certified);
    }
}

TEST_CASE("min_s is scale invariant") {
    for (std::uint64_t seed : {3u, 4u}) {
        const auto g = bvms::random_space(6, seed);
        for (int v : {1, 2}) {
            const Rational base = bvms::min_s(g.space, v);
            for (const Rational& c : {Rational(1, 3), Rational(2), Rational(7)}) {
                CAPTURE(seed, v, c.to_string());
                CHECK(bvms::min_s(bvms::scale_space(g.space, c), v) == base);
            }
        }
    }
}

TEST_CASE("budget guard refuses oversized enumerations up front") {
    const auto g = bvms::random_space(8, 1);
    try {
        bvms::verify_polygon(g.space, 2, Rational(1), bvms::EnumerationBudget{100});
        FAIL("expected BudgetExceededError");
    } catch (const bvms::BudgetExceededError& e) {
        CHECK(e.required == 8ull * 8 * 8 * 8);
        CHECK(e.budget == 100);
    }
    CHECK_THROWS_AS(bvms::min_s(g.space, 2, bvms::EnumerationBudget{100}), bvms::BudgetExceededError);
}

TEST_CASE("refutation witness is deterministic: the union family at (v=3, s=2)") {
    const auto g = bvms::union_space(12);
    const auto first = bvms::verify_polygon(g.space, 3, Rational(2));
    const auto second = bvms::verify_polygon(g.space, 3, Rational(2));
    REQUIRE(first.verdict == Verdict::Refuted);
    REQUIRE(first.witness.has_value());

    // Frozen from two independent enumerators: the first violating pair is
    // (1/2, 1/8) through 1/3 -> 1/4 -> 1/5, every leg discounted to 1/2.
    CHECK(g.space.label(first.witness->x) == "1/2");
    CHECK(g.space.label(first.witness->y) == "1/8");
    REQUIRE(first.witness->chain.size() == 3);
    CHECK(g.space.label(first.witness->chain[0]) == "1/3");
    CHECK(g.space.label(first.witness->chain[1]) == "1/4");
    CHECK(g.space.label(first.witness->chain[2]) == "1/5");
    CHECK(first.witness->lhs == Rational(6));
    CHECK(first.witness->rhs == Rational(4));
    CHECK(first.tuples_checked == 6601);

    CHECK(second.witness->x == first.witness->x);
    CHECK(second.witness->y == first.witness->y);
    CHECK(second.witness->chain == first.witness->chain);
    CHECK(second.tuples_checked == first.tuples_checked);
}

TEST_CASE("min_s of the union truncation at v=3 is exactly 5") {
    const auto g = bvms::union_space(12);
    const auto detail = bvms::min_s_detail(g.space, 3);
    CHECK(detail.value == Rational(5));
    CHECK(detail.tuples_checked == 120120);
    CHECK(brute::min_s(g.space, 3) == Rational(5));
}

TEST_CASE("min_s of the reciprocal truncation at v=3 is exactly 2") {
    const auto g = bvms::reciprocal_space(10);
    CHECK(bvms::min_s(g.space, 3) == Rational(2));
    CHECK(brute::min_s(g.space, 3) == Rational(2));
}
