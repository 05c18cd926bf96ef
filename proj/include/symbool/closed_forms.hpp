#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbool/coinvariants.hpp"
#include "symbool/limits.hpp"
#include "symbool/linear_combination.hpp"
#include "symbool/presentation.hpp"

namespace symbool {

/// Basis element a^ of <P[k]>/S_k: the class of any a-element subset of [k].
class HatIndex {
 public:
  /// Throws std::invalid_argument unless value <= ambient.
  HatIndex(unsigned value, unsigned ambient);

  unsigned value() const { return value_; }
  unsigned ambient() const { return ambient_; }

  friend bool operator==(const HatIndex&, const HatIndex&) = default;

 private:
  unsigned value_;
  unsigned ambient_;
};

/// Combination of hat basis elements sharing one ambient k; keys are hat values.
struct HatVector {
  unsigned ambient = 0;
  LinearCombination<unsigned> terms;

  friend bool operator==(const HatVector&, const HatVector&) = default;
};

/// a^ u b^ = (1/C(k,b)) sum_l C(a, b-l) C(k-a, l) (a+l)^
HatVector closed_union(HatIndex a, HatIndex b);

/// a^ n b^ = (1/C(k,b)) sum_l C(a, l) C(k-a, b-l) l^
HatVector closed_intersection(HatIndex a, HatIndex b);

/// The same sum without the C(k-a, b-l) factor.  Kept only to show where it
/// disagrees with the group average; its coefficients need not sum to 1.
HatVector uncorrected_intersection(HatIndex a, HatIndex b);

/// (a^)^c = (k-a)^
HatIndex closed_complement(HatIndex a);

std::string render(const HatVector& v);

struct ClosedFormMismatch {
  std::string op;  // "union", "intersection" or "complement"
  unsigned a = 0;
  unsigned b = 0;
  HatVector closed;
  HatVector brute_force;
};

struct ClosedFormReport {
  unsigned k = 0;
  bool union_matches = true;
  bool intersection_matches = true;
  bool complement_matches = true;
  std::optional<ClosedFormMismatch> first_mismatch;
  /// Every (a, b) where the uncorrected intersection differs from brute force.
  std::vector<ClosedFormMismatch> uncorrected_mismatches;

  bool all_match() const { return union_matches && intersection_matches && complement_matches; }
};

/// Index of the S_k orbit of ([1] x a, {} x (k-a)) in the space built from
/// symmetric_group(k) over power_set_presentation(1).
std::size_t hat_orbit(const CoinvariantSpace& sym_space, unsigned a);

/// Compares the closed forms with coinv_binary_product over S_k acting on
/// <P[1]>^(x)k for all 0 <= a, b <= k.  Throws BudgetExceeded when k is above
/// limits.closed_form_cap.
ClosedFormReport verify_closed_forms(unsigned k, const Limits& limits = {});

/// <P[k]>/S_k built from the closed forms alone, basis 0^..k^ labelled "0^".
AlgebraPresentation closed_form_presentation(unsigned k);

}  // namespace symbool
