#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbool/limits.hpp"

namespace symbool {

enum class SetOp { Union, Intersection, Complement };

std::string to_string(SetOp op);
/// Parses "union", "intersection" or "complement".
SetOp parse_set_op(const std::string& name);

/// Hard ceiling on ground sizes representable by Subset.  The configurable
/// cap in Limits is normally much lower.
inline constexpr unsigned kMaxGroundSize = 31;

/// A subset of the ground set [k] = {1..k}, stored as a bitmask where
/// element i occupies bit i-1.
class Subset {
 public:
  Subset() = default;
  /// Throws std::invalid_argument if bits has a position above k set.
  Subset(unsigned ground_size, std::uint32_t bits);

  static Subset empty(unsigned ground_size) { return Subset(ground_size, 0); }
  static Subset full(unsigned ground_size);
  /// Elements are 1-based; duplicates are ignored.
  static Subset from_elements(unsigned ground_size, std::span<const unsigned> elements);

  unsigned ground_size() const { return ground_size_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(unsigned element) const;
  unsigned cardinality() const;
  std::vector<unsigned> elements() const;

  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset complement() const;
  bool is_subset_of(const Subset& other) const;

  /// "{}" or "{1,3}".
  std::string str() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.ground_size_ <=> b.ground_size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  void require_same_ground(const Subset& other) const;

  unsigned ground_size_ = 0;
  std::uint32_t bits_ = 0;
};

/// Applies a set operation; b is required for union and intersection and
/// must share a's ground size.
Subset subset_op(SetOp op, const Subset& a, const std::optional<Subset>& b = std::nullopt);

/// All 2^k subsets of [k] in bitmask order.
std::vector<Subset> power_set(unsigned ground_size, const Limits& limits = {});

/// Throws BudgetExceeded if k is over the configured ground cap.
void require_ground_within(unsigned ground_size, const Limits& limits);

}  // namespace symbool
