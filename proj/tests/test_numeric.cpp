#include <doctest.h>

#include "nefwall/numeric.hpp"

using namespace nefwall;

TEST_CASE("isqrt and perfect squares") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  CHECK(is_square(Int(0)));
  CHECK(is_square(Int(169)));
  CHECK(!is_square(Int(13)));
  CHECK(!is_square(Int(-4)));
  CHECK_THROWS_AS(isqrt(Int(-1)), internal_error);
}

TEST_CASE("exact_div") {
  CHECK(exact_div(Int(84), Int(7)) == 12);
  CHECK(exact_div(Int(-84), Int(7)) == -12);
  CHECK_THROWS_AS(exact_div(Int(5), Int(2)), internal_error);
  CHECK_THROWS_AS(exact_div(Int(5), Int(0)), internal_error);
}

TEST_CASE("rationals reduce and print") {
  Rat r(Int(370), Int(117));
  CHECK(r.num() == 370);
  CHECK(r.den() == 117);
  CHECK(Rat(Int(30252), Int(8733)).str() == "10084/2911");
  CHECK(Rat(Int(4), Int(-6)).str() == "-2/3");  // denominator normalized positive
  CHECK(Rat(Int(12), Int(4)).str() == "3");
  CHECK(Rat(Int(0), Int(5)) == Rat(0));
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("rational parsing is exact only") {
  CHECK(Rat::parse("27/5") == Rat(Int(27), Int(5)));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("+7/2") == Rat(Int(7), Int(2)));
  CHECK(!Rat::parse("5.4").has_value());
  CHECK(!Rat::parse("").has_value());
  CHECK(!Rat::parse("1/0").has_value());
  CHECK(!Rat::parse("a/b").has_value());
  CHECK(!Rat::parse("1/-2").has_value());
}

TEST_CASE("rational arithmetic and order") {
  Rat a(Int(1), Int(3)), b(Int(1), Int(6));
  CHECK(a + b == Rat(Int(1), Int(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rat(Int(1), Int(18)));
  CHECK(a / b == Rat(2));
  CHECK(-a < b);
  CHECK(a <= a);
  CHECK_THROWS_AS(a / Rat(0), std::invalid_argument);
}

TEST_CASE("cmp_sqrt decides by squaring") {
  CHECK(cmp_sqrt(Rat(Int(19), Int(6)), Int(10)) == 1);     // 19/6 > sqrt(10)
  CHECK(cmp_sqrt(Rat(Int(117), Int(37)), Int(10)) == -1);  // odd convergent below
  CHECK(cmp_sqrt(Rat(4), Int(16)) == 0);
  CHECK(cmp_sqrt(Rat(-5), Int(2)) == -1);
  CHECK(cmp_sqrt(Rat(0), Int(0)) == 0);
  // within 1e-13 of sqrt(13), still decided exactly
  CHECK(cmp_sqrt(Rat(Int(18378371), Int(5097243)), Int(13)) == 1);
}
