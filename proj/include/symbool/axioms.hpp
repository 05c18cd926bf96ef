#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbool/presentation.hpp"

namespace symbool {

/// The fourteen equations making up the eight axiom groups of a linear
/// Boolean algebra.  Enumerator order is report order.
enum class Equation {
  UnionCommutative,         // 1: u = u o S
  IntersectionCommutative,  // 1: n = n o S
  UnionAssociative,         // 2
  IntersectionAssociative,  // 2
  IntersectionDistributes,  // 3: x n (y u z) = (x' n y) u (x'' n z), D(x) = x' (x) x''
  UnionDistributes,         // 3: x u (y n z) = (x' u y) n (x'' u z)
  UnionUnit,                // 4: x u E(1) = x
  IntersectionUnit,         // 4: x n T(1) = x
  IntersectionComplement,   // 5: n o (I (x) c) o D = E o ev
  UnionComplement,          // 5: u o (I (x) c) o D = T o ev
  IntersectionAbsorption,   // 6: x' n (x'' u y) = ev(y) x
  UnionAbsorption,          // 6: x' u (x'' n y) = ev(y) x
  Coassociative,            // 7
  Cocommutative,            // 8
};

inline constexpr std::size_t kEquationCount = 14;

int axiom_number(Equation e);
std::size_t equation_arity(Equation e);
std::string equation_name(Equation e);
std::vector<Equation> all_equations();

/// Both sides of one equation evaluated on one basis tuple.  Sides living in
/// V are keyed by 1-tuples, V(x)V by pairs and V(x)V(x)V by triples.
struct EquationSides {
  std::vector<std::size_t> tuple;
  TensorVector lhs;
  TensorVector rhs;
};

EquationSides evaluate_equation(const AlgebraPresentation& p, Equation e,
                                std::span<const std::size_t> tuple);

struct EquationResult {
  Equation equation = Equation::UnionCommutative;
  bool passed = true;
  std::size_t tuples_checked = 0;
  std::size_t failures = 0;
  /// First failing tuple in lexicographic order, with both sides.
  std::optional<EquationSides> witness;
};

struct AxiomReport {
  std::vector<EquationResult> equations;

  bool all_passed() const;
  bool axiom_passed(int axiom) const;
  /// Axiom groups (1..8) with at least one failing equation, ascending.
  std::vector<int> failed_axioms() const;
  const EquationResult& result(Equation e) const;
};

/// Evaluates every equation on every basis tuple of its arity and compares
/// both sides exactly.  Never throws for well-formed presentations; a
/// non-Boolean candidate simply yields failures.
AxiomReport check_boolean_axioms(const AlgebraPresentation& p);

}  // namespace symbool
