#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symbool/coinvariants.hpp"
#include "symbool/limits.hpp"
#include "symbool/linear_combination.hpp"
#include "symbool/perm_group.hpp"
#include "symbool/rational.hpp"
#include "symbool/subset.hpp"

namespace symbool {

/// Finitely additive set function on P[k], fixed by its singleton weights.
/// Weights may be negative.
class Measure {
 public:
  explicit Measure(std::vector<Rational> weights);

  unsigned ambient() const { return static_cast<unsigned>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

/// Sum of singleton weights over a.  Throws std::invalid_argument on a
/// ground-size mismatch.
Rational measure_eval(const Measure& mu, const Subset& a);

struct IePair {
  Rational lhs;
  Rational rhs;
};

/// mu(union of sets) against sum over nonempty I of (-1)^(|I|+1) mu(intersection over I).
IePair classical_ie(const Measure& mu, std::span<const Subset> sets);

/// Basis element {a_1, ..., a_m} of <P[k]>^(x)m / S_m: a multiset of
/// subsets, kept sorted by bitmask.
class MultisetClass {
 public:
  MultisetClass(unsigned ground_size, std::vector<Subset> entries);

  unsigned ground_size() const { return ground_size_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Subset>& entries() const { return entries_; }
  /// "{{1},{2}}"
  std::string str() const;

  friend bool operator==(const MultisetClass&, const MultisetClass&) = default;
  friend auto operator<=>(const MultisetClass&, const MultisetClass&) = default;

 private:
  unsigned ground_size_;
  std::vector<Subset> entries_;
};

using ClassVector = LinearCombination<MultisetClass>;

/// n-fold union in <P[k]>^(x)m / S_m:
/// (1/(m!)^(n-1)) sum over sigma in {id} x S_m^(n-1) of
/// {u_i a^i_sigma_i(1), ..., u_i a^i_sigma_i(m)}.
ClassVector nfold_union(std::span<const MultisetClass> classes, const Limits& limits = {});

enum class SymFnKind { Power, Elementary, Homogeneous };

std::string to_string(SymFnKind kind);
SymFnKind parse_symfn_kind(const std::string& name);

struct SymFnSpec {
  SymFnKind kind = SymFnKind::Power;
  unsigned degree = 1;
};

/// p_l, e_l or h_l of (mu(a_1), ..., mu(a_m)).  e_l with l > m is rejected.
Rational symfn_eval(const SymFnSpec& spec, const MultisetClass& c, const Measure& mu);
/// Linear extension to combinations of classes.
Rational symfn_eval(const SymFnSpec& spec, const ClassVector& v, const Measure& mu);

/// Number of summands the right-hand side expansion visits.
std::uint64_t ie_term_count(const SymFnSpec& spec, std::size_t n, std::size_t m);

/// Right-hand side of the symmetric inclusion-exclusion identity, expanded
/// literally: over sigma, positions and exponent vectors {c_I} (power sums)
/// or over index sequences t and maps f: [l] -> nonempty subsets of [n]
/// (elementary and complete homogeneous).  Throws BudgetExceeded with the
/// term count when it is above limits.term_cap.
Rational ie_rhs(const SymFnSpec& spec, std::span<const MultisetClass> operands, const Measure& mu,
                const Limits& limits = {});

/// Contribution of one sigma in {id} x S_m^(n-1) to each side.
struct IeTerm {
  std::vector<Permutation> sigma;
  Rational lhs;
  Rational rhs;
};

struct IeReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  /// Filled only when the two sides differ.
  std::vector<IeTerm> breakdown;
};

/// lhs = symfn_eval(spec, nfold_union(operands), mu), rhs = ie_rhs(...).
IeReport ie_verify(const SymFnSpec& spec, std::span<const MultisetClass> operands, const Measure& mu,
                   const Limits& limits = {});

/// Fixed fourteen-term listing of 2 e_2({a,b} u {c,d}).  It is not the
/// general identity and generally differs from it; kept for comparison.
Rational listed_2e2_expansion(const Measure& mu, const Subset& a, const Subset& b, const Subset& c,
                              const Subset& d);
/// Fixed listing of 2 h_2({a,b} u {c,d}); same caveat.
Rational listed_2h2_expansion(const Measure& mu, const Subset& a, const Subset& b, const Subset& c,
                              const Subset& d);

/// Bijection between multiset classes and orbits of a co-invariant space
/// over power_set_presentation(k), where base index = subset bitmask.
std::size_t orbit_of_class(const CoinvariantSpace& space, const MultisetClass& c);
MultisetClass class_of_orbit(const CoinvariantSpace& space, std::size_t orbit);
ClassVector to_class_vector(const CoinvariantSpace& space, const BoolVector& v);

}  // namespace symbool
