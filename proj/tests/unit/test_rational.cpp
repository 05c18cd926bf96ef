#include <doctest.h>

#include "support.hpp"
#include "symbool/linear_combination.hpp"

using symbool::Rational;
using test::q;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational().str() == "0/1");
}

TEST_CASE("parse accepts p/q and integers") {
  CHECK(q("1/3") == Rational(1, 3));
  CHECK(q("-7") == Rational(-7));
  CHECK(q("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK(q("1/3") * q("3/4") == q("1/4"));
  CHECK(q("1/3") / q("2/3") == q("1/2"));
  CHECK(q("-2/3").pow(3) == q("-8/27"));
  CHECK(q("5/7").pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(q("1/2") / Rational(0), std::domain_error);
  CHECK(q("-1/2") < q("1/3"));
}

TEST_CASE("binomial and factorial") {
  CHECK(symbool::binomial(5, 2) == Rational(10));
  CHECK(symbool::binomial(3, 4) == Rational(0));
  CHECK(symbool::binomial(3, -1) == Rational(0));
  CHECK(symbool::factorial(0) == Rational(1));
  CHECK(symbool::factorial(10) == Rational(3628800));
}

TEST_CASE("linear combinations drop zero terms") {
  symbool::LinearCombination<int> v;
  v.add(1, q("1/2"));
  v.add(1, q("-1/2"));
  CHECK(v.empty());
  v.add(2, q("1/3"));
  v += symbool::LinearCombination<int>::term(3, q("2/3"));
  CHECK(v.mass() == Rational(1));
  CHECK((v - v).empty());
  CHECK((q("3") * v).coefficient(2) == Rational(1));
}

TEST_CASE("bilinear extension") {
  using V = symbool::LinearCombination<int>;
  V x = V::term(1, q("1/2")) + V::term(2, q("1/2"));
  V y = V::term(10, q("1/3")) + V::term(20, q("2/3"));
  auto z = symbool::bilinear(x, y, [](int a, int b) { return V::basis(a + b); });
  CHECK(z.coefficient(11) == q("1/6"));
  CHECK(z.coefficient(22) == q("1/3"));
  CHECK(z.mass() == Rational(1));
}
