#include <doctest.h>

#include <numeric>

#include "symbool/boolean_monoid.hpp"
#include "symbool/random.hpp"

using namespace symbool;

TEST_CASE("power set tables satisfy all twelve identities for k <= 5") {
  for (unsigned k = 0; k <= 5; ++k) {
    const auto report = monoid_axiom_check(BooleanMonoidTable::power_set(k));
    CHECK(report.identities.size() == 12);
    CHECK(report.all_passed());
  }
}

TEST_CASE("a broken complement is caught with a witness") {
  auto t = BooleanMonoidTable::power_set(2);
  t.set_complement(1, 1);
  const auto report = monoid_axiom_check(t);
  CHECK_FALSE(report.all_passed());
  const auto& r = report.find("intersection with complement is empty");
  CHECK_FALSE(r.passed);
  CHECK(r.witness == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(atoms_and_stone_iso(t), std::invalid_argument);
}

TEST_CASE("absorption is checked independently") {
  // P[1] with 1 n 1 = 0, so 1 n (1 u 0) = 0.
  auto t = BooleanMonoidTable::power_set(1);
  t.set_intersection(1, 1, 0);
  const auto report = monoid_axiom_check(t);
  CHECK_FALSE(report.find("intersection absorbs union").passed);
}

TEST_CASE("stone isomorphism of P[3]") {
  const auto iso = atoms_and_stone_iso(BooleanMonoidTable::power_set(3));
  CHECK(iso.atoms == std::vector<std::size_t>{1, 2, 4});
  for (std::size_t b = 0; b < 8; ++b) CHECK(iso.forward_map[b].bits() == b);
  CHECK(iso.preimage(Subset(3, 0b110)) == 6);
}

TEST_CASE("stone isomorphism survives relabeling") {
  InstanceRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned k = static_cast<unsigned>(rng.below(4));
    const auto base = BooleanMonoidTable::power_set(k);
    const Permutation p = rng.permutation(static_cast<unsigned>(base.size()));
    std::vector<std::size_t> new_index(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) new_index[i] = p(static_cast<unsigned>(i));
    const auto t = base.relabeled(new_index);
    const auto iso = atoms_and_stone_iso(t);
    CHECK(iso.atoms.size() == k);
    for (std::size_t a = 0; a < t.size(); ++a) {
      CHECK(iso.forward_map[t.complement(a)] == iso.forward_map[a].complement());
      for (std::size_t b = 0; b < t.size(); ++b)
        CHECK(iso.forward_map[t.unite(a, b)] == iso.forward_map[a].unite(iso.forward_map[b]));
    }
  }
}

TEST_CASE("product of P[1] and P[2] has three atoms") {
  const auto prod = product_monoid(BooleanMonoidTable::power_set(1), BooleanMonoidTable::power_set(2));
  CHECK(prod.size() == 8);
  CHECK(monoid_axiom_check(prod).all_passed());
  CHECK(atoms_and_stone_iso(prod).atoms.size() == 3);
}

TEST_CASE("table construction validates indices") {
  CHECK_THROWS_AS(BooleanMonoidTable(2, {0, 1, 1, 2}, {0, 0, 0, 1}, {1, 0}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(BooleanMonoidTable(2, {0, 1, 1}, {0, 0, 0, 1}, {1, 0}, 0, 1), std::invalid_argument);
}
