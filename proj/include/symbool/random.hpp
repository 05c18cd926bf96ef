#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symbool/perm_group.hpp"
#include "symbool/rational.hpp"
#include "symbool/subset.hpp"
#include "symbool/symmetric_ie.hpp"

namespace symbool {

/// Seeded generator for reproducible random instances.  Values are drawn
/// from raw mt19937_64 output by reduction modulo the range, so a seed gives
/// the same instance with every standard library.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform-ish integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// p/q with |p| <= max_num, 1 <= q <= max_den; signed unless told otherwise.
  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 9, bool allow_negative = true);
  Subset subset(unsigned ground_size);
  Measure measure(unsigned ground_size, bool allow_negative = true);
  MultisetClass multiset_class(unsigned ground_size, std::size_t m);
  Permutation permutation(unsigned degree);
  /// Random composition of m into positive block sizes.
  std::vector<unsigned> partition_sizes(unsigned m);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symbool
