#include <doctest.h>

#include "support.hpp"
#include "symbool/coinvariants.hpp"
#include "symbool/random.hpp"
#include "symbool/symmetric_ie.hpp"

using namespace symbool;
using test::q;

namespace {

Subset S(unsigned k, std::initializer_list<unsigned> elems) {
  const std::vector<unsigned> e(elems);
  return Subset::from_elements(k, e);
}

Measure weights(std::initializer_list<const char*> w) {
  std::vector<Rational> out;
  for (const char* x : w) out.push_back(q(x));
  return Measure(std::move(out));
}

}  // namespace

TEST_CASE("measures are additive") {
  const Measure mu = weights({"1", "2", "3"});
  CHECK(measure_eval(mu, S(3, {1, 3})) == Rational(4));
  CHECK(measure_eval(mu, Subset::empty(3)) == Rational(0));
  CHECK_THROWS_AS(measure_eval(mu, S(2, {1})), std::invalid_argument);
  InstanceRng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Measure m = rng.measure(5);
    const Subset a = rng.subset(5);
    const Subset b = rng.subset(5).intersect(a.complement());
    CHECK(measure_eval(m, a.unite(b)) == measure_eval(m, a) + measure_eval(m, b));
  }
}

TEST_CASE("classical inclusion-exclusion") {
  const Measure counting = weights({"1", "1", "1"});
  const std::vector<Subset> sets{S(3, {1, 2}), S(3, {2, 3}), S(3, {1, 3})};
  const IePair r = classical_ie(counting, sets);
  CHECK(r.lhs == Rational(3));
  CHECK(r.rhs == Rational(3));
  InstanceRng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng.below(8));
    const std::size_t n = 1 + rng.below(5);
    std::vector<Subset> ss;
    for (std::size_t i = 0; i < n; ++i) ss.push_back(rng.subset(k));
    const IePair p = classical_ie(rng.measure(k), ss);
    CHECK(p.lhs == p.rhs);
  }
  CHECK_THROWS_AS(classical_ie(counting, {}), std::invalid_argument);
}

TEST_CASE("multiset classes are sorted") {
  const MultisetClass c(2, {S(2, {2}), S(2, {1}), S(2, {})});
  CHECK(c.str() == "{{},{1},{2}}");
  CHECK(c == MultisetClass(2, {S(2, {}), S(2, {2}), S(2, {1})}));
  CHECK_THROWS_AS(MultisetClass(2, {S(3, {1})}), std::invalid_argument);
}

TEST_CASE("two-fold union of two-element classes") {
  const MultisetClass ab(2, {S(2, {1}), S(2, {2})});
  const MultisetClass cd(2, {S(2, {1}), S(2, {})});
  const std::vector<MultisetClass> ops{ab, cd};
  ClassVector expected;
  expected.add(MultisetClass(2, {S(2, {1}), S(2, {2})}), q("1/2"));
  expected.add(MultisetClass(2, {S(2, {1}), S(2, {1, 2})}), q("1/2"));
  CHECK(nfold_union(ops) == expected);
  const std::vector<MultisetClass> one{ab};
  CHECK(nfold_union(one) == ClassVector::basis(ab));
}

TEST_CASE("n-fold union on k = 1 reproduces the Sym^2 constant") {
  const MultisetClass c(1, {S(1, {1}), S(1, {})});
  const std::vector<MultisetClass> ops{c, c};
  ClassVector expected;
  expected.add(c, q("1/2"));
  expected.add(MultisetClass(1, {S(1, {1}), S(1, {1})}), q("1/2"));
  CHECK(nfold_union(ops) == expected);
}

TEST_CASE("n-fold union matches the co-invariant m-ary product") {
  InstanceRng rng(9);
  for (unsigned m = 1; m <= 4; ++m) {
    const CoinvariantSpace space(symmetric_group(m), power_set_presentation(2));
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<MultisetClass> ops;
        std::vector<std::size_t> orbits;
        for (std::size_t i = 0; i < n; ++i) {
          ops.push_back(rng.multiset_class(2, m));
          orbits.push_back(orbit_of_class(space, ops.back()));
          CHECK(class_of_orbit(space, orbits.back()) == ops.back());
        }
        const ClassVector direct = nfold_union(ops);
        CHECK(direct == to_class_vector(space, coinv_mary_product(space, SetOp::Union, orbits)));
        CHECK(direct.mass() == Rational(1));
        std::vector<MultisetClass> reversed(ops.rbegin(), ops.rend());
        CHECK(nfold_union(reversed) == direct);
      }
  }
}

TEST_CASE("symmetric function values") {
  const Measure mu = weights({"2", "3"});
  const MultisetClass c(2, {S(2, {1}), S(2, {2})});
  CHECK(symfn_eval({SymFnKind::Elementary, 2}, c, mu) == Rational(6));
  CHECK(symfn_eval({SymFnKind::Homogeneous, 2}, c, mu) == Rational(4 + 6 + 9));
  CHECK(symfn_eval({SymFnKind::Power, 3}, c, mu) == Rational(8 + 27));
  CHECK_THROWS_AS(symfn_eval({SymFnKind::Elementary, 3}, c, mu), std::invalid_argument);
  InstanceRng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Measure m = rng.measure(3);
    const MultisetClass x = rng.multiset_class(3, 3);
    const Rational p1 = symfn_eval({SymFnKind::Power, 1}, x, m);
    CHECK(symfn_eval({SymFnKind::Elementary, 1}, x, m) == p1);
    CHECK(symfn_eval({SymFnKind::Homogeneous, 1}, x, m) == p1);
    Rational prod(1);
    for (const auto& s : x.entries()) prod *= measure_eval(m, s);
    CHECK(symfn_eval({SymFnKind::Elementary, 3}, x, m) == prod);
  }
}

TEST_CASE("power l = 1 with m = 1 is classical inclusion-exclusion") {
  const Measure mu = weights({"1/2", "-3"});
  const MultisetClass a(2, {S(2, {1})}), b(2, {S(2, {1, 2})});
  const std::vector<MultisetClass> ops{a, b};
  const std::vector<Subset> sets{S(2, {1}), S(2, {1, 2})};
  CHECK(ie_rhs({SymFnKind::Power, 1}, ops, mu) == classical_ie(mu, sets).rhs);
}

TEST_CASE("worked e2 and h2 instances") {
  const Measure mu = weights({"1", "1"});
  const std::vector<MultisetClass> ops{MultisetClass(2, {S(2, {1}), S(2, {2})}),
                                       MultisetClass(2, {S(2, {1}), S(2, {})})};
  const IeReport e = ie_verify({SymFnKind::Elementary, 2}, ops, mu);
  CHECK(e.equal);
  CHECK(e.lhs == q("3/2"));
  const IeReport h = ie_verify({SymFnKind::Homogeneous, 2}, ops, mu);
  CHECK(h.equal);
  CHECK(h.lhs == Rational(5));
  CHECK(listed_2e2_expansion(mu, S(2, {1}), S(2, {2}), S(2, {1}), S(2, {})) / Rational(2) == q("5/2"));
  CHECK(listed_2h2_expansion(mu, S(2, {1}), S(2, {2}), S(2, {1}), S(2, {})) / Rational(2) == Rational(7));
}

TEST_CASE("signed k = 3 instance") {
  const Measure mu = weights({"2", "-1/2", "3/4"});
  const std::vector<MultisetClass> ops{MultisetClass(3, {S(3, {1, 2}), S(3, {3})}),
                                       MultisetClass(3, {S(3, {2, 3}), S(3, {1})})};
  CHECK(ie_verify({SymFnKind::Elementary, 2}, ops, mu).rhs == q("105/32"));
  CHECK(ie_verify({SymFnKind::Homogeneous, 2}, ops, mu).rhs == q("43/4"));
  const Subset a = S(3, {1, 2}), b = S(3, {3}), c = S(3, {2, 3}), d = S(3, {1});
  CHECK(listed_2e2_expansion(mu, a, b, c, d) / Rational(2) == q("185/32"));
  CHECK(listed_2h2_expansion(mu, a, b, c, d) / Rational(2) == q("111/8"));
}

TEST_CASE("the identities hold on random small instances") {
  InstanceRng rng(13);
  for (SymFnKind kind : {SymFnKind::Power, SymFnKind::Elementary, SymFnKind::Homogeneous})
    for (unsigned l = 1; l <= 2; ++l)
      for (int trial = 0; trial < 10; ++trial) {
        const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
        const std::size_t m = 2, n = 1 + rng.below(3);
        std::vector<MultisetClass> ops;
        for (std::size_t i = 0; i < n; ++i) ops.push_back(rng.multiset_class(k, m));
        const IeReport r = ie_verify({kind, l}, ops, rng.measure(k));
        CHECK(r.equal);
        CHECK(r.breakdown.empty());
      }
}

TEST_CASE("term counts and budget") {
  CHECK(ie_term_count({SymFnKind::Power, 1}, 2, 1) == 3);
  // (2!)^1 sigmas, C(2,2) strict pairs, 3^2 maps
  CHECK(ie_term_count({SymFnKind::Elementary, 2}, 2, 2) == 18);
  Limits tiny;
  tiny.term_cap = 10;
  const std::vector<MultisetClass> ops(2, MultisetClass(1, {S(1, {}), S(1, {1})}));
  CHECK_THROWS_AS(ie_rhs({SymFnKind::Elementary, 2}, ops, weights({"1"}), tiny), BudgetExceeded);
  CHECK_THROWS_AS(ie_rhs({SymFnKind::Power, 1}, ops, weights({"1", "1"})), std::invalid_argument);
}

TEST_CASE("symmetric function kind names") {
  for (SymFnKind k : {SymFnKind::Power, SymFnKind::Elementary, SymFnKind::Homogeneous})
    CHECK(parse_symfn_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_symfn_kind("schur"), std::invalid_argument);
}
