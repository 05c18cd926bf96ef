#include <doctest.h>

#include <vector>

#include "symbool/subset.hpp"

using namespace symbool;

TEST_CASE("subsets over [k]") {
  const std::vector<unsigned> e13{1, 3};
  const Subset a = Subset::from_elements(3, e13);
  CHECK(a.bits() == 0b101u);
  CHECK(a.str() == "{1,3}");
  CHECK(a.cardinality() == 2);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.complement().str() == "{2}");
  CHECK(Subset::empty(2).str() == "{}");
  CHECK(Subset::full(3).bits() == 0b111u);
  CHECK_THROWS_AS(Subset(2, 0b100), std::invalid_argument);
}

TEST_CASE("operations reject mixed ground sets") {
  CHECK_THROWS_AS(Subset::empty(2).unite(Subset::empty(3)), std::invalid_argument);
  CHECK_THROWS_AS(subset_op(SetOp::Union, Subset::empty(2)), std::invalid_argument);
}

TEST_CASE("set laws hold exhaustively for k <= 4") {
  for (unsigned k = 0; k <= 4; ++k) {
    const auto all = power_set(k);
    CHECK(all.size() == (1u << k));
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
        CHECK(a.intersect(b).is_subset_of(a));
        CHECK(a.is_subset_of(a.unite(b)));
      }
  }
}

TEST_CASE("set op names round trip") {
  for (SetOp op : {SetOp::Union, SetOp::Intersection, SetOp::Complement}) CHECK(parse_set_op(to_string(op)) == op);
  CHECK_THROWS_AS(parse_set_op("xor"), std::invalid_argument);
}

TEST_CASE("power set respects the ground cap") {
  Limits small;
  small.ground_cap = 3;
  CHECK_THROWS_AS(power_set(4, small), BudgetExceeded);
}
