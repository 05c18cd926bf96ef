#include <doctest.h>

#include "support.hpp"
#include "symbool/distribution.hpp"
#include "symbool/presentation.hpp"
#include "symbool/random.hpp"

using namespace symbool;
using test::q;

namespace {

Distribution random_distribution(InstanceRng& rng, unsigned k) {
  SubsetVector w;
  Rational total;
  for (const auto& s : power_set(k)) {
    const Rational x = rng.rational(5, 1, false);
    w.add(s, x);
    total += x;
  }
  if (total.is_zero()) return Distribution::point_mass(Subset::empty(k));
  return Distribution(k, (Rational(1) / total) * w);
}

}  // namespace

TEST_CASE("distribution validation") {
  SubsetVector w;
  w.add(Subset::empty(1), q("1/2"));
  CHECK_THROWS_AS(Distribution(1, w), std::invalid_argument);
  w.add(Subset::full(1), q("3/4"));
  w.add(Subset::empty(1), q("-1/4"));
  CHECK(Distribution(1, w).probability(Subset::full(1)) == q("3/4"));
  SubsetVector negative;
  negative.add(Subset::empty(1), q("3/2"));
  negative.add(Subset::full(1), q("-1/2"));
  CHECK_THROWS_AS(Distribution(1, negative), std::invalid_argument);
  CHECK_THROWS_AS(Distribution(2, SubsetVector::basis(Subset::empty(1))), std::invalid_argument);
}

TEST_CASE("union of two fair coins on [1]") {
  const auto d = Distribution::uniform(1, {Subset::empty(1), Subset::full(1)});
  const auto u = dist_product(SetOp::Union, d, d);
  CHECK(u.probability(Subset::empty(1)) == q("1/4"));
  CHECK(u.probability(Subset::full(1)) == q("3/4"));
  CHECK(dist_complement(u).probability(Subset::empty(1)) == q("3/4"));
}

TEST_CASE("distribution products agree with the linearized algebra") {
  InstanceRng rng(11);
  for (unsigned k = 0; k <= 3; ++k) {
    const auto p = power_set_presentation(k);
    for (int trial = 0; trial < 10; ++trial) {
      const auto d1 = random_distribution(rng, k), d2 = random_distribution(rng, k);
      auto as_vector = [](const Distribution& d) {
        BoolVector v;
        for (const auto& [s, c] : d.weights()) v.add(s.bits(), c);
        return v;
      };
      CHECK(as_vector(dist_product(SetOp::Union, d1, d2)) == apply_union(p, as_vector(d1), as_vector(d2)));
      CHECK(as_vector(dist_product(SetOp::Intersection, d1, d2)) ==
            apply_intersection(p, as_vector(d1), as_vector(d2)));
      CHECK(dist_product(SetOp::Union, d1, d2).weights().mass() == Rational(1));
    }
  }
}
