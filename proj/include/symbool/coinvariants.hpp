#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symbool/limits.hpp"
#include "symbool/perm_group.hpp"
#include "symbool/presentation.hpp"
#include "symbool/subset.hpp"

namespace symbool {

/// Length-m sequence of base basis indices: a basis element of A^(x)m.
using TensorTuple = std::vector<std::size_t>;

/// Orbit of a tensor tuple under place permutation, represented by its
/// lexicographically smallest member.
struct OrbitRep {
  TensorTuple canonical;
  std::uint64_t orbit_size = 0;

  friend bool operator==(const OrbitRep&, const OrbitRep&) = default;
};

/// Brute-force canonical representative: the minimum of sigma . t over all
/// sigma in the group, with orbit size |K| / |stabilizer|.
OrbitRep canonical_rep(std::span<const std::size_t> tuple, const PermGroup& group);

/// Burnside's orbit count (1/|K|) sum_sigma dim^cycles(sigma).
std::uint64_t burnside_count(const PermGroup& group, std::size_t base_dimension);

/// The co-invariant space A^(x)m / K for a permutation group K of degree m
/// acting on a base presentation A by permuting tensor places.
///
/// Every tuple of A^(x)m is indexed up front (dim^m entries, bounded by
/// limits.tuple_cap) so that the class of any tuple is one table lookup.
/// Orbits are ordered by their canonical tuples; the orbit count is checked
/// against Burnside's count at construction.
class CoinvariantSpace {
 public:
  CoinvariantSpace(PermGroup group, AlgebraPresentation base, const Limits& limits = {});

  const PermGroup& group() const { return group_; }
  const AlgebraPresentation& base() const { return base_; }
  std::size_t tensor_power() const { return group_.degree(); }
  std::size_t dimension() const { return orbits_.size(); }
  const std::vector<OrbitRep>& orbits() const { return orbits_; }

  std::size_t orbit_index(std::span<const std::size_t> tuple) const;
  std::size_t orbit_index(const OrbitRep& rep) const { return orbit_index(rep.canonical); }
  /// "({},{1})" style label built from base labels.
  std::string orbit_label(std::size_t orbit) const;

  /// Class of the tensor product of per-place base vectors, expanded over
  /// orbit indices.
  BoolVector project(std::span<const BoolVector> places) const;

  std::uint64_t encode(std::span<const std::size_t> tuple) const;

  /// Inverse of every group element, aligned with group().elements().
  const std::vector<Permutation>& inverses() const { return inverses_; }

 private:
  PermGroup group_;
  AlgebraPresentation base_;
  std::vector<OrbitRep> orbits_;
  std::vector<std::uint32_t> orbit_of_code_;
  std::vector<Permutation> inverses_;
};

/// All orbit representatives of base^(x)m under K, in canonical order.
std::vector<OrbitRep> orbit_basis(const PermGroup& group, const AlgebraPresentation& base,
                                  const Limits& limits = {});

/// Co-invariant product of two classes:
/// (1/|K|) sum_sigma class(x op sigma.y), computed placewise in the base.
BoolVector coinv_binary_product(const CoinvariantSpace& space, SetOp op, std::size_t x,
                                std::size_t y);

/// n-ary co-invariant product over sigma in {id} x K^(n-1):
/// (1/|K|^(n-1)) sum class(j -> op_i entry sigma_i^-1(j) of operand i).
/// Throws BudgetExceeded when |K|^(n-1) exceeds limits.term_cap.
BoolVector coinv_mary_product(const CoinvariantSpace& space, SetOp op,
                              std::span<const std::size_t> operands, const Limits& limits = {});

/// Full presentation of the quotient: products from coinv_binary_product,
/// complement placewise, diagonal coproduct, ev the product of base evals,
/// and E, T the classes of the constant empty/total tuples.
AlgebraPresentation coinv_presentation(const CoinvariantSpace& space);

}  // namespace symbool
