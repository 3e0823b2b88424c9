#include <random>

#include "doctest.h"

#include "faulhaber/ratnum.hpp"

using namespace faulhaber;

TEST_CASE("binomial") {
    CHECK(binomial(11, 3) == Integer(165));
    CHECK(binomial(5, 0) == Integer(1));
    CHECK(binomial(3, 7) == Integer(0));
    CHECK(binomial(3, -1) == Integer(0));
    CHECK(binomial(0, 0) == Integer(1));
    CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial satisfies Pascal's rule") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> pick_n(2, 120);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t n = pick_n(rng);
        std::uniform_int_distribution<std::int64_t> pick_r(1, n - 1);
        const std::int64_t r = pick_r(rng);
        CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
    }
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(11) == Integer(10395));
    CHECK(double_factorial(-1) == Integer(1));
    CHECK(double_factorial(0) == Integer(1));
    CHECK(double_factorial(6) == Integer(48));
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
    for (std::int64_t n = 1; n <= 60; ++n) {
        CHECK(double_factorial(n) * double_factorial(n - 1) == factorial(n));
    }
}

TEST_CASE("rat canonicalizes") {
    CHECK(rat(2, 4).to_string() == "1/2");
    CHECK(rat(3, -6).to_string() == "-1/2");
    const Rational z = rat(0, 5);
    CHECK(z.numerator() == Integer(0));
    CHECK(z.denominator() == Integer(1));
    CHECK(z.to_string() == "0");
    CHECK(rat(-4, -2).to_string() == "2");
    CHECK_THROWS_AS(rat(1, 0), ZeroDenominatorError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDenominatorError);
}

TEST_CASE("parsing and serialization") {
    CHECK(Rational::parse("-1/2") == rat(-1, 2));
    CHECK(Rational::parse("6/-4") == rat(-3, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("60074").to_string() == "60074");
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDenominatorError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Integer::parse("-"), ParseError);

    const std::string big = "-123456789012345678901234567890";
    CHECK(Integer::parse(big).to_string() == big);
    CHECK(Integer::parse("-0").to_string() == "0");
    CHECK(Integer::parse("-0") == Integer(0));
}

TEST_CASE("exact arithmetic round trips on random rationals") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = rat(num(rng), den(rng)) * pow2(trial % 70);
        const Rational b = rat(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        // Canonical form: string round trip is the identity and the denominator is positive.
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK(a.denominator() > Integer(0));
    }
}

TEST_CASE("powers") {
    CHECK(pow4(-2) == rat(1, 16));
    CHECK(pow4(3) == Rational(64));
    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(-9) == rat(1, 512));
    CHECK(pow(rat(-3, 2), 3) == rat(-27, 8));
    CHECK(pow(rat(5, 7), 0) == Rational(1));
}

TEST_CASE("operation counter") {
    reset_op_count();
    Rational x = rat(1, 3);
    x += rat(1, 6);
    x *= Rational(4);
    CHECK(op_count() == 2);
    CHECK(x == Rational(2));
}
