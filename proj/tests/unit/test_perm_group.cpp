#include <doctest.h>

#include "symbool/perm_group.hpp"

using namespace symbool;

TEST_CASE("permutations") {
  const std::vector<unsigned> img{2, 3, 1};
  const Permutation p = Permutation::from_one_based(img);
  CHECK(p.str() == "[2,3,1]");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_count() == 1);
  CHECK(Permutation::identity(3).cycle_count() == 3);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  const std::vector<unsigned> t{10, 20, 30};
  // (sigma . t)_sigma(i) = t_i
  CHECK(act<unsigned>(p, t) == std::vector<unsigned>{30, 10, 20});
}

TEST_CASE("group orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(cyclic_group(5).order() == 5);
  CHECK(trivial_group(3).order() == 1);
  const std::vector<unsigned> sizes{2, 1, 2};
  CHECK(young_group_from_sizes(sizes).order() == 4);
  CHECK(young_group_from_sizes(sizes).name() == "Young(2,1,2)");
  CHECK(young_group(3, {{1, 3}, {2}}).order() == 2);
  CHECK(symmetric_group(3).elements().front().is_identity());
}

TEST_CASE("closure of generators") {
  const auto g = enumerate_group(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  CHECK(g.order() == 24);
  CHECK(g.contains(Permutation({3, 2, 1, 0})));
}

TEST_CASE("young blocks must partition [m]") {
  CHECK_THROWS_AS(young_group(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(young_group(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(young_group(3, {{1, 2}, {4}}), std::invalid_argument);
}

TEST_CASE("group enumeration honours the budget") {
  Limits small;
  small.group_order_cap = 100;
  CHECK_THROWS_AS(symmetric_group(6, small), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_group(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({1, 2, 3, 4, 5, 0})}, small),
                  BudgetExceeded);
  try {
    symmetric_group(6, small);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 720);
    CHECK(e.allowed() == 100);
  }
}
