#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ak/rational.hpp"

using namespace ak::exact;

TEST_CASE("rational parse and canonical print") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("2/-4") == Rational(-1, 2));
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    // denominators stay positive after arithmetic
    Rational r = Rational(1, 3) - Rational(2, 3);
    CHECK(denominator(r) == 3);
    CHECK(numerator(r) == -1);
}

TEST_CASE("rational parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("big integers survive round trips") {
    std::string big = "123456789012345678901234567890/98765432109876543210987654321";
    Rational r = parse_rational(big);
    CHECK(parse_rational(to_string(r)) == r);
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = gauss_i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z.conj().conj() == z);  // conjugation is an involution
    CHECK(z.norm_sq() == Rational(1, 4) + Rational(9, 16));
    CHECK(z.norm_sq() >= 0);
    CHECK(GaussianRational(0).norm_sq() == 0);
    CHECK((z / z) == GaussianRational(1));
    CHECK((z * z.conj()).im == 0);
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
    CHECK(to_string(z) == "1/2-3/4i");
    CHECK(to_string(i) == "1i");
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(Rational(1, 16)) == Rational(1, 4));
    CHECK(*exact_sqrt(Rational(9)) == 3);
    CHECK(!exact_sqrt(Rational(2)).has_value());
    CHECK(!exact_sqrt(Rational(1, 8)).has_value());
    CHECK_THROWS_AS(exact_sqrt(Rational(-1)), std::domain_error);
}
