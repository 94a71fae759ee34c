#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "akform/rational.hpp"

using akform::Rational;

TEST_CASE("rationals are always canonical") {
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");  // sign moves to the numerator
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(7).numerator() == 7);
  CHECK(Rational(7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("2/-4") == Rational(-1, 2));
  CHECK(Rational::parse("0/5").is_zero());

  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("str round-trips through parse") {
  const Rational samples[] = {Rational(0),      Rational(5),
                              Rational(-17, 3), Rational(22, 7),
                              Rational(-1, 1000000)};
  for (const Rational& q : samples) {
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("field arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(2, 6) == Rational(2, 3));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) * Rational(8, 9) == Rational(2, 3));
  CHECK(Rational(3, 4) / Rational(9, 8) == Rational(2, 3));
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(akform::abs(Rational(-2, 5)) == Rational(2, 5));
  CHECK(akform::inverse(Rational(-3, 7)) == Rational(-7, 3));

  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(akform::inverse(Rational(0)), std::domain_error);

  // No drift: (1/3 repeated) stays exact where doubles would not.
  Rational acc(0);
  for (int i = 0; i < 300; ++i) acc += Rational(1, 3);
  CHECK(acc == Rational(100));
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(5, 10) <= Rational(1, 2));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(-5, 15);
  CHECK(os.str() == "-1/3");
}
