#include "doctest.h"

#include <stdexcept>

#include "altzeta/algebra/rational.hpp"

using altzeta::Rational;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(6, -8);
  CHECK(a.to_fraction() == "-3/4");
  CHECK((a + Rational(3, 4)).is_zero());
  CHECK((Rational(1, 3) * Rational(3, 5)).to_fraction() == "1/5");
  CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational serialization") {
  CHECK(Rational(5).to_fraction() == "5/1");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("-691/2730").to_fraction() == "-691/2730");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("factorial and binomial") {
  CHECK(altzeta::factorial(10) == Rational(3628800));
  CHECK(altzeta::binomial(10, 3) == Rational(120));
  CHECK(altzeta::binomial(3, 5).is_zero());
}
