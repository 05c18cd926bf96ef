#pragma once

#include "symbool/linear_combination.hpp"
#include "symbool/subset.hpp"

namespace symbool {

using SubsetVector = LinearCombination<Subset>;

/// Probability distribution over the subsets of [k]: a vector in <P[k]>
/// with nonnegative coefficients summing to exactly 1.
class Distribution {
 public:
  /// Throws std::invalid_argument on a negative coefficient, total mass other
  /// than 1, or a subset over a different ground set.
  Distribution(unsigned ground_size, SubsetVector weights);

  static Distribution point_mass(const Subset& s);
  /// Uniform over the given (distinct) subsets.
  static Distribution uniform(unsigned ground_size, const std::vector<Subset>& support);

  unsigned ground_size() const { return ground_size_; }
  const SubsetVector& weights() const { return weights_; }
  Rational probability(const Subset& s) const { return weights_.coefficient(s); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  unsigned ground_size_;
  SubsetVector weights_;
};

/// Law of (A op B) for independent A ~ d1, B ~ d2:
/// coefficient of c is the sum of d1(a) d2(b) over a op b = c.
Distribution dist_product(SetOp op, const Distribution& d1, const Distribution& d2);

/// Law of the complement: mass at a moves to a^c.
Distribution dist_complement(const Distribution& d);

}  // namespace symbool
