#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlie/rational.hpp"
#include "torlie/rng.hpp"

using namespace torlie;

namespace {
constexpr std::size_t kTrials = 400;

Rational random_rational(SplitMix64& rng) {
    std::int64_t num = rng.range(-50, 50);
    std::int64_t den = rng.range(1, 30);
    return Rational(BigInt(num), BigInt(den));
}
}  // namespace

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("field axioms on random values") {
    SplitMix64 rng(42);
    for (std::size_t t = 0; t < kTrials; ++t) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        Rational c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("invariants hold after arithmetic") {
    SplitMix64 rng(7);
    for (std::size_t t = 0; t < kTrials; ++t) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        Rational s = a * b + a - b;
        CHECK(s.den() > 0);
        CHECK(boost::multiprecision::gcd(s.num(), s.den()) == 1);
    }
}

TEST_CASE("ordering is consistent with cross multiplication") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(-1), BigInt(3)));
    CHECK(Rational(2) > Rational(BigInt(7), BigInt(4)));
}

TEST_CASE("string round trip") {
    CHECK(Rational(BigInt(-5), BigInt(7)).str() == "-5/7");
    CHECK(Rational(12).str() == "12");
    CHECK(Rational::parse("-5/7") == Rational(BigInt(-5), BigInt(7)));
    CHECK(Rational::parse("9") == Rational(9));
    CHECK(Rational::parse("6/-8") == Rational(BigInt(-3), BigInt(4)));
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    SplitMix64 rng(11);
    for (std::size_t t = 0; t < 100; ++t) {
        Rational a = random_rational(rng);
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
