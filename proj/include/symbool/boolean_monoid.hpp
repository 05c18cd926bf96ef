#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symbool/limits.hpp"
#include "symbool/subset.hpp"

namespace symbool {

/// A finite set with union, intersection and complement given by index
/// tables, plus distinguished empty and total elements.  Nothing beyond
/// index validity is assumed; monoid_axiom_check decides whether the data is
/// actually a Boolean monoid.
class BooleanMonoidTable {
 public:
  using Index = std::size_t;

  /// union_table and intersection_table are row-major size x size.  Throws
  /// std::invalid_argument on wrong shapes or out-of-range entries.
  BooleanMonoidTable(std::size_t size, std::vector<Index> union_table,
                     std::vector<Index> intersection_table,
                     std::vector<Index> complement_table, Index empty, Index total);

  /// P([k]) with element i being the subset with bitmask i.
  static BooleanMonoidTable power_set(unsigned k, const Limits& limits = {});

  /// Same monoid with element i renamed to new_index_of[i].
  BooleanMonoidTable relabeled(std::span<const Index> new_index_of) const;

  std::size_t size() const { return size_; }
  Index unite(Index a, Index b) const { return union_[a * size_ + b]; }
  Index intersect(Index a, Index b) const { return intersection_[a * size_ + b]; }
  Index complement(Index a) const { return complement_[a]; }
  Index empty() const { return empty_; }
  Index total() const { return total_; }

  void set_union(Index a, Index b, Index value);
  void set_intersection(Index a, Index b, Index value);
  void set_complement(Index a, Index value);

  /// a <= b iff a n b = a.
  bool leq(Index a, Index b) const { return intersect(a, b) == a; }

 private:
  void check_index(Index i) const;

  std::size_t size_;
  std::vector<Index> union_;
  std::vector<Index> intersection_;
  std::vector<Index> complement_;
  Index empty_;
  Index total_;
};

/// Outcome of one of the twelve Boolean monoid identities.
struct IdentityResult {
  int axiom = 0;         // 1..6, grouping as in the usual axiom list
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // first failing (a, b, c...) in lexicographic order
};

struct MonoidAxiomReport {
  std::vector<IdentityResult> identities;

  bool all_passed() const;
  const IdentityResult& find(const std::string& name) const;
};

/// Checks commutativity, associativity, distributivity, units, complements
/// and absorption (two identities each) over all element tuples.
MonoidAxiomReport monoid_axiom_check(const BooleanMonoidTable& t);

/// Atoms of a Boolean monoid and its isomorphism onto the power set of the
/// atoms: forward_map[b] has bit i set iff atoms[i] <= b.
struct MonoidIsomorphism {
  std::vector<std::size_t> atoms;
  std::vector<Subset> forward_map;

  /// Element index mapped to a given subset of atoms.
  std::size_t preimage(const Subset& s) const;
};

/// Throws std::invalid_argument when the axiom check fails and
/// InconsistencyError when the element count is not 2^|atoms| or the map
/// fails to intertwine the operations.
MonoidIsomorphism atoms_and_stone_iso(const BooleanMonoidTable& t, const Limits& limits = {});

/// Componentwise product; element (i, j) has index i * t.size() + j.
/// Throws std::invalid_argument if either factor fails the axiom check.
BooleanMonoidTable product_monoid(const BooleanMonoidTable& s, const BooleanMonoidTable& t);

}  // namespace symbool
