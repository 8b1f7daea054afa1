#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "bvms/rational.hpp"

using bvms::Rational;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).num() == 3);
    CHECK(Rational(3, 2).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), bvms::RationalParseError);
}

TEST_CASE("parsing follows the documented grammar") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("+3/6") == Rational(1, 2));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("1.50") == Rational(3, 2));

    CHECK_THROWS_AS(Rational::parse("1/0"), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse(""), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse("1."), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), bvms::RationalParseError);
    CHECK_THROWS_AS(Rational::parse("1 /2"), bvms::RationalParseError);
}

TEST_CASE("printing round-trips through parse") {
    for (const char* text : {"3/2", "-3/2", "0", "7", "-1/1000", "65611/7593"}) {
        CAPTURE(text);
        CHECK(Rational::parse(text).to_string() == text);
    }
    // Decimals normalize to fraction form.
    CHECK(Rational::parse("0.25").to_string() == "1/4");
}

TEST_CASE("comparisons agree with 128-bit cross-multiplication on random pairs") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
    for (int k = 0; k < 1000; ++k) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const __int128 lhs = static_cast<__int128>(a.num()) * b.den();
        const __int128 rhs = static_cast<__int128>(b.num()) * a.den();
        CAPTURE(a.to_string(), b.to_string());
        CHECK((a < b) == (lhs < rhs));
        CHECK((a == b) == (lhs == rhs));
        CHECK((a > b) == (lhs > rhs));
    }
}

TEST_CASE("arithmetic identities hold exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int k = 0; k < 200; ++k) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        CHECK(a + b - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(a * b / b == a);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    const Rational huge(std::numeric_limits<std::int64_t>::max(), 1);
    CHECK_THROWS_AS(huge * Rational(2), bvms::RationalOverflowError);
    CHECK_THROWS_AS(huge + huge, bvms::RationalOverflowError);
    // Reduction can rescue intermediate growth.
    CHECK(huge * Rational(2, 4) * Rational(2) == huge);
}
