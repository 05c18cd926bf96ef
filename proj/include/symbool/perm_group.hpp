#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symbool/limits.hpp"

namespace symbool {

/// Bijection of {0..m-1}; images()[i] is the image of i.  Text and JSON use
/// 1-based images.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if images is not a bijection of [0, m).
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned degree);
  static Permutation from_one_based(std::span<const unsigned> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<unsigned>& images() const { return images_; }
  std::vector<unsigned> one_based() const;

  Permutation inverse() const;
  unsigned cycle_count() const;
  bool is_identity() const;
  std::string str() const;  // one-line 1-based notation, e.g. "[2,3,1]"

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

/// Place permutation of a tuple: (sigma . t)_j = t_{sigma^-1(j)}.
template <typename T>
std::vector<T> act(const Permutation& sigma, std::span<const T> t) {
  std::vector<T> out(t.size());
  for (unsigned i = 0; i < t.size(); ++i) out[sigma(i)] = t[i];
  return out;
}

/// Finite permutation group with its full element list, sorted
/// lexicographically by images (so the identity comes first).
class PermGroup {
 public:
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  /// Short description such as "S_3", "Z_4", "Young(2,1)".
  const std::string& name() const { return name_; }

 private:
  PermGroup(unsigned degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements, std::string name);

  friend PermGroup enumerate_group(unsigned, std::vector<Permutation>, const Limits&);
  friend PermGroup symmetric_group(unsigned, const Limits&);
  friend PermGroup cyclic_group(unsigned, const Limits&);
  friend PermGroup young_group(unsigned, const std::vector<std::vector<unsigned>>&, const Limits&);
  friend PermGroup trivial_group(unsigned);

  unsigned degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::string name_;
};

/// Closure of the generators under composition.  Throws BudgetExceeded as
/// soon as more than limits.group_order_cap elements have been found.
PermGroup enumerate_group(unsigned degree, std::vector<Permutation> generators,
                          const Limits& limits = {});

PermGroup symmetric_group(unsigned degree, const Limits& limits = {});
PermGroup cyclic_group(unsigned degree, const Limits& limits = {});
/// Block-preserving permutations of [m]; blocks hold 1-based positions and
/// must partition [m].
PermGroup young_group(unsigned degree, const std::vector<std::vector<unsigned>>& blocks,
                      const Limits& limits = {});
/// Young subgroup with consecutive blocks of the given sizes.
PermGroup young_group_from_sizes(std::span<const unsigned> block_sizes, const Limits& limits = {});
PermGroup trivial_group(unsigned degree);

}  // namespace symbool
