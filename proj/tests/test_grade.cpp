#include <doctest.h>

#include "neutro/error.hpp"
#include "neutro/grade.hpp"

using namespace neutro;

TEST_SUITE("grade") {

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Grade(2, 4) == Grade(1, 2));
  CHECK(Grade(2, 4).numerator() == 1);
  CHECK(Grade(2, 4).denominator() == 2);
  CHECK(Grade(0, 7) == Grade::zero());
  CHECK(Grade(5, 5) == Grade::one());
}

TEST_CASE("range is enforced") {
  CHECK_THROWS_AS(Grade(3, 2), NeutroError);
  CHECK_THROWS_AS(Grade(1, 0), NeutroError);
  CHECK_THROWS_AS(Grade(-1, 2), NeutroError);
}

TEST_CASE("parsing decimals and fractions") {
  CHECK(Grade::parse("0.05") == Grade(1, 20));
  CHECK(Grade::parse("0.80") == Grade(4, 5));
  CHECK(Grade::parse("1") == Grade::one());
  CHECK(Grade::parse("1.0") == Grade::one());
  CHECK(Grade::parse("0") == Grade::zero());
  CHECK(Grade::parse("1/3") == Grade(1, 3));
  CHECK(Grade::parse("3/6") == Grade(1, 2));
}

TEST_CASE("parse failures") {
  CHECK_THROWS_WITH_AS(Grade::parse("1.5"), doctest::Contains("grade out of range"), NeutroError);
  CHECK_THROWS_AS(Grade::parse("-0.3"), NeutroError);
  CHECK_THROWS_AS(Grade::parse("5/4"), NeutroError);
  CHECK_THROWS_AS(Grade::parse(""), NeutroError);
  CHECK_THROWS_AS(Grade::parse("a"), NeutroError);
  CHECK_THROWS_AS(Grade::parse("0."), NeutroError);
  CHECK_THROWS_AS(Grade::parse("1/0"), NeutroError);
  CHECK_THROWS_AS(Grade::parse("0.1234567890123456789"), NeutroError);
}

TEST_CASE("shortest decimal or fraction rendering") {
  CHECK(Grade(1, 2).str() == "0.5");
  CHECK(Grade(1, 20).str() == "0.05");
  CHECK(Grade(3, 4).str() == "0.75");
  CHECK(Grade::zero().str() == "0");
  CHECK(Grade::one().str() == "1");
  CHECK(Grade(1, 3).str() == "1/3");
  CHECK(Grade(7, 12).str() == "7/12");
  CHECK(Grade(1, 1000).str() == "0.001");
  CHECK(Grade::parse(Grade(19, 20).str()) == Grade(19, 20));
}

TEST_CASE("ordering is exact rational comparison") {
  CHECK(Grade(1, 3) < Grade(1, 2));
  CHECK(Grade(2, 3) > Grade(3, 5));
  CHECK(Grade(2, 6) == Grade(1, 3));
  CHECK(std::max(Grade(3, 10), Grade(1, 4)) == Grade(3, 10));
}

TEST_CASE("complement") {
  CHECK(Grade(3, 10).complement() == Grade(7, 10));
  CHECK(Grade::zero().complement() == Grade::one());
  CHECK(Grade(1, 3).complement().complement() == Grade(1, 3));
}

TEST_CASE("sum_vs_one") {
  CHECK(sum_vs_one(Grade(3, 10), Grade(7, 10)) == 0);
  CHECK(sum_vs_one(Grade(1, 2), Grade(1, 3)) < 0);
  CHECK(sum_vs_one(Grade(9, 10), Grade(4, 5)) > 0);
  CHECK(sum_vs_one(Grade::zero(), Grade::zero()) < 0);
  CHECK(sum_vs_one(Grade::one(), Grade::zero()) == 0);
}

TEST_CASE("grid membership") {
  CHECK(Grade(1, 2).on_grid(2));
  CHECK(Grade(1, 2).on_grid(4));
  CHECK(!Grade(1, 3).on_grid(4));
  CHECK(Grade::zero().on_grid(1));
  CHECK(Grade::one().on_grid(1));
}

}  // TEST_SUITE
