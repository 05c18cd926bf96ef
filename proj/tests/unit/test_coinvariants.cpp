#include <doctest.h>

#include "support.hpp"
#include "symbool/axioms.hpp"
#include "symbool/coinvariants.hpp"
#include "symbool/random.hpp"

using namespace symbool;
using test::vec;

namespace {

// Orbit index of the hat class a^ (a copies of [1]) in <P[1]>^(x)m / K.
std::size_t hat(const CoinvariantSpace& s, unsigned a) {
  TensorTuple t(s.tensor_power(), 0);
  for (unsigned i = 0; i < a; ++i) t[s.tensor_power() - 1 - i] = 1;
  return s.orbit_index(t);
}

}  // namespace

TEST_CASE("canonical representative under Z3") {
  const std::vector<std::size_t> t{1, 0, 1};
  const OrbitRep r = canonical_rep(t, cyclic_group(3));
  CHECK(r.canonical == TensorTuple{0, 1, 1});
  CHECK(r.orbit_size == 3);
  CHECK(burnside_count(cyclic_group(3), 2) == 4);
}

TEST_CASE("canonical representative is constant on orbits") {
  InstanceRng rng(5);
  const std::vector<PermGroup> groups{symmetric_group(4), cyclic_group(4), young_group(4, {{1, 3}, {2, 4}})};
  for (const auto& g : groups)
    for (int trial = 0; trial < 25; ++trial) {
      TensorTuple t(4);
      for (auto& x : t) x = rng.below(3);
      const OrbitRep r = canonical_rep(t, g);
      for (const auto& sigma : g.elements()) CHECK(canonical_rep(act<std::size_t>(sigma, t), g) == r);
    }
}

TEST_CASE("orbit counts match Burnside") {
  for (unsigned m = 1; m <= 5; ++m) {
    CHECK(CoinvariantSpace(symmetric_group(m), power_set_presentation(1)).dimension() == m + 1);
    CHECK(CoinvariantSpace(cyclic_group(m), power_set_presentation(1)).dimension() ==
          burnside_count(cyclic_group(m), 2));
  }
  const std::vector<unsigned> sizes{2, 1};
  CHECK(CoinvariantSpace(young_group_from_sizes(sizes), power_set_presentation(1)).dimension() == 6);
  CHECK(CoinvariantSpace(symmetric_group(2), power_set_presentation(2)).dimension() == 10);
}

TEST_CASE("Sym^2 <P[1]> table") {
  const CoinvariantSpace s(symmetric_group(2), power_set_presentation(1));
  const std::size_t h0 = hat(s, 0), h1 = hat(s, 1), h2 = hat(s, 2);
  CHECK(coinv_binary_product(s, SetOp::Union, h1, h1) == vec({{h1, "1/2"}, {h2, "1/2"}}));
  CHECK(coinv_binary_product(s, SetOp::Intersection, h1, h1) == vec({{h0, "1/2"}, {h1, "1/2"}}));
  CHECK(coinv_binary_product(s, SetOp::Union, h0, h1) == BoolVector::basis(h1));
  CHECK(coinv_binary_product(s, SetOp::Intersection, h2, h1) == BoolVector::basis(h1));
  const auto p = coinv_presentation(s);
  CHECK(p.complement_of(h1) == BoolVector::basis(h1));
  CHECK(p.complement_of(h0) == BoolVector::basis(h2));
  CHECK(s.orbit_label(h1) == "({},{1})");
}

TEST_CASE("Z3 <P[1]> products") {
  const CoinvariantSpace s(cyclic_group(3), power_set_presentation(1));
  const std::size_t h0 = hat(s, 0), h1 = hat(s, 1), h2 = hat(s, 2), h3 = hat(s, 3);
  CHECK(coinv_binary_product(s, SetOp::Union, h1, h1) == vec({{h1, "1/3"}, {h2, "2/3"}}));
  CHECK(coinv_binary_product(s, SetOp::Union, h1, h2) == vec({{h2, "2/3"}, {h3, "1/3"}}));
  CHECK(coinv_binary_product(s, SetOp::Union, h2, h2) == vec({{h2, "1/3"}, {h3, "2/3"}}));
  CHECK(coinv_binary_product(s, SetOp::Intersection, h1, h1) == vec({{h0, "2/3"}, {h1, "1/3"}}));
  CHECK(coinv_binary_product(s, SetOp::Intersection, h1, h2) == vec({{h0, "1/3"}, {h1, "2/3"}}));
  CHECK(coinv_binary_product(s, SetOp::Intersection, h2, h2) == vec({{h1, "2/3"}, {h2, "1/3"}}));
}

TEST_CASE("m-ary union of three 1^ in Sym^2") {
  const CoinvariantSpace s(symmetric_group(2), power_set_presentation(1));
  const std::vector<std::size_t> ops(3, hat(s, 1));
  CHECK(coinv_mary_product(s, SetOp::Union, ops) == vec({{hat(s, 1), "1/4"}, {hat(s, 2), "3/4"}}));
}

TEST_CASE("m-ary product equals the folded binary product") {
  const std::vector<PermGroup> groups{symmetric_group(3), cyclic_group(3), young_group(3, {{1, 2}, {3}})};
  for (const auto& g : groups) {
    const CoinvariantSpace s(g, power_set_presentation(1));
    const auto p = coinv_presentation(s);
    const std::size_t d = s.dimension();
    for (SetOp op : {SetOp::Union, SetOp::Intersection})
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c) {
            const std::vector<std::size_t> ops{a, b, c};
            const BoolVector ab = op == SetOp::Union ? p.union_of(a, b) : p.intersection_of(a, b);
            const BoolVector folded = op == SetOp::Union ? apply_union(p, ab, BoolVector::basis(c))
                                                         : apply_intersection(p, ab, BoolVector::basis(c));
            CHECK(coinv_mary_product(s, op, ops) == folded);
          }
  }
}

TEST_CASE("products are stochastic and commutative") {
  const CoinvariantSpace s(cyclic_group(4), power_set_presentation(1));
  for (std::size_t a = 0; a < s.dimension(); ++a)
    for (std::size_t b = 0; b < s.dimension(); ++b)
      for (SetOp op : {SetOp::Union, SetOp::Intersection}) {
        const auto v = coinv_binary_product(s, op, a, b);
        CHECK(v.mass() == Rational(1));
        for (const auto& [i, c] : v) CHECK(c.sign() > 0);
        CHECK(v == coinv_binary_product(s, op, b, a));
      }
}

TEST_CASE("co-invariants of the trivial group are the tensor power") {
  const CoinvariantSpace s(trivial_group(2), power_set_presentation(1));
  CHECK(s.dimension() == 4);
  CHECK(check_boolean_axioms(coinv_presentation(s)).all_passed());
}

TEST_CASE("Sym^2 axiom failures") {
  const CoinvariantSpace s(symmetric_group(2), power_set_presentation(1));
  const auto p = coinv_presentation(s);
  const auto report = check_boolean_axioms(p);
  CHECK(report.failed_axioms() == std::vector<int>{3, 5, 6});
  const auto& absorption = report.result(Equation::IntersectionAbsorption);
  REQUIRE(absorption.witness.has_value());
  CHECK(absorption.witness->tuple == std::vector<std::size_t>{hat(s, 1), hat(s, 0)});
  const std::vector<std::size_t> pair{hat(s, 1), hat(s, 1)};
  const auto sides = evaluate_equation(p, Equation::IntersectionAbsorption, pair);
  TensorVector expected;
  expected.add({hat(s, 0)}, test::q("1/4"));
  expected.add({hat(s, 1)}, test::q("3/4"));
  CHECK(sides.lhs == expected);
  CHECK(sides.rhs == TensorVector::basis({hat(s, 1)}));
}

TEST_CASE("orbit table honours the tuple budget") {
  Limits small;
  small.tuple_cap = 100;
  CHECK_THROWS_AS(CoinvariantSpace(symmetric_group(4), power_set_presentation(2), small), BudgetExceeded);
}
