#include "symbool/random.hpp"

#include <numeric>
#include <utility>

namespace symbool {

Rational InstanceRng::rational(std::int64_t max_num, std::int64_t max_den, bool allow_negative) {
  const std::int64_t p = between(allow_negative ? -max_num : 0, max_num);
  const std::int64_t q = between(1, max_den);
  return Rational(static_cast<long>(p), static_cast<long>(q));
}

Subset InstanceRng::subset(unsigned ground_size) {
  return Subset(ground_size, static_cast<std::uint32_t>(below(std::uint64_t{1} << ground_size)));
}

Measure InstanceRng::measure(unsigned ground_size, bool allow_negative) {
  std::vector<Rational> w;
  for (unsigned i = 0; i < ground_size; ++i) w.push_back(rational(9, 9, allow_negative));
  return Measure(std::move(w));
}

MultisetClass InstanceRng::multiset_class(unsigned ground_size, std::size_t m) {
  std::vector<Subset> entries;
  for (std::size_t i = 0; i < m; ++i) entries.push_back(subset(ground_size));
  return MultisetClass(ground_size, std::move(entries));
}

Permutation InstanceRng::permutation(unsigned degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (unsigned i = degree; i > 1; --i) std::swap(images[i - 1], images[below(i)]);
  return Permutation(std::move(images));
}

std::vector<unsigned> InstanceRng::partition_sizes(unsigned m) {
  std::vector<unsigned> sizes;
  unsigned left = m;
  while (left > 0) {
    const unsigned s = static_cast<unsigned>(between(1, left));
    sizes.push_back(s);
    left -= s;
  }
  return sizes;
}

}  // namespace symbool
