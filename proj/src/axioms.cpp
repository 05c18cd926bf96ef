#include "symbool/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbool {

int axiom_number(Equation e) {
  switch (e) {
    case Equation::UnionCommutative:
    case Equation::IntersectionCommutative: return 1;
    case Equation::UnionAssociative:
    case Equation::IntersectionAssociative: return 2;
    case Equation::IntersectionDistributes:
    case Equation::UnionDistributes: return 3;
    case Equation::UnionUnit:
    case Equation::IntersectionUnit: return 4;
    case Equation::IntersectionComplement:
    case Equation::UnionComplement: return 5;
    case Equation::IntersectionAbsorption:
    case Equation::UnionAbsorption: return 6;
    case Equation::Coassociative: return 7;
    case Equation::Cocommutative: return 8;
  }
  return 0;
}

std::size_t equation_arity(Equation e) {
  switch (axiom_number(e)) {
    case 1: return 2;
    case 2:
    case 3: return 3;
    case 6: return 2;
    default: return 1;
  }
}

std::string equation_name(Equation e) {
  switch (e) {
    case Equation::UnionCommutative: return "union commutative";
    case Equation::IntersectionCommutative: return "intersection commutative";
    case Equation::UnionAssociative: return "union associative";
    case Equation::IntersectionAssociative: return "intersection associative";
    case Equation::IntersectionDistributes: return "intersection distributes over union";
    case Equation::UnionDistributes: return "union distributes over intersection";
    case Equation::UnionUnit: return "empty is union unit";
    case Equation::IntersectionUnit: return "total is intersection unit";
    case Equation::IntersectionComplement: return "intersection with complement is empty";
    case Equation::UnionComplement: return "union with complement is total";
    case Equation::IntersectionAbsorption: return "intersection absorbs union";
    case Equation::UnionAbsorption: return "union absorbs intersection";
    case Equation::Coassociative: return "coproduct coassociative";
    case Equation::Cocommutative: return "coproduct cocommutative";
  }
  return "?";
}

std::vector<Equation> all_equations() {
  std::vector<Equation> out;
  for (std::size_t i = 0; i < kEquationCount; ++i) out.push_back(static_cast<Equation>(i));
  return out;
}

namespace {

TensorVector lift(const BoolVector& v) {
  return v.map_keys([](std::size_t i) { return std::vector<std::size_t>{i}; });
}

TensorVector lift(const PairVector& v) {
  return v.map_keys([](const std::pair<std::size_t, std::size_t>& ij) {
    return std::vector<std::size_t>{ij.first, ij.second};
  });
}

}  // namespace

EquationSides evaluate_equation(const AlgebraPresentation& p, Equation e,
                                std::span<const std::size_t> tuple) {
  if (tuple.size() != equation_arity(e))
    throw std::invalid_argument(equation_name(e) + " takes " +
                                std::to_string(equation_arity(e)) + " basis elements");
  for (std::size_t i : tuple)
    if (i >= p.dimension()) throw std::invalid_argument("basis index out of range");

  auto basis = [](std::size_t i) { return BoolVector::basis(i); };
  auto U = [&](const BoolVector& a, const BoolVector& b) { return apply_union(p, a, b); };
  auto N = [&](const BoolVector& a, const BoolVector& b) { return apply_intersection(p, a, b); };

  EquationSides s{{tuple.begin(), tuple.end()}, {}, {}};
  const BoolVector x = basis(tuple[0]);
  const BoolVector y = tuple.size() > 1 ? basis(tuple[1]) : BoolVector{};
  const BoolVector z = tuple.size() > 2 ? basis(tuple[2]) : BoolVector{};
  const PairVector& delta = p.coproduct_of(tuple[0]);

  // Sum over D(x) = sum c x' (x) x'' of c * f(x', x'').
  auto over_coproduct = [&](auto&& f) {
    BoolVector out;
    for (const auto& [uv, c] : delta) out += c * f(basis(uv.first), basis(uv.second));
    return out;
  };

  switch (e) {
    case Equation::UnionCommutative:
      s.lhs = lift(U(x, y)), s.rhs = lift(U(y, x));
      break;
    case Equation::IntersectionCommutative:
      s.lhs = lift(N(x, y)), s.rhs = lift(N(y, x));
      break;
    case Equation::UnionAssociative:
      s.lhs = lift(U(U(x, y), z)), s.rhs = lift(U(x, U(y, z)));
      break;
    case Equation::IntersectionAssociative:
      s.lhs = lift(N(N(x, y), z)), s.rhs = lift(N(x, N(y, z)));
      break;
    case Equation::IntersectionDistributes:
      s.lhs = lift(N(x, U(y, z)));
      s.rhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return U(N(a, y), N(b, z));
      }));
      break;
    case Equation::UnionDistributes:
      s.lhs = lift(U(x, N(y, z)));
      s.rhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return N(U(a, y), U(b, z));
      }));
      break;
    case Equation::UnionUnit:
      s.lhs = lift(U(x, apply_empty(p))), s.rhs = lift(x);
      break;
    case Equation::IntersectionUnit:
      s.lhs = lift(N(x, apply_total(p))), s.rhs = lift(x);
      break;
    case Equation::IntersectionComplement:
      s.lhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return N(a, apply_complement(p, b));
      }));
      s.rhs = lift(apply_empty(p, apply_eval(p, x)));
      break;
    case Equation::UnionComplement:
      s.lhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return U(a, apply_complement(p, b));
      }));
      s.rhs = lift(apply_total(p, apply_eval(p, x)));
      break;
    case Equation::IntersectionAbsorption:
      s.lhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return N(a, U(b, y));
      }));
      s.rhs = lift(apply_eval(p, y) * x);
      break;
    case Equation::UnionAbsorption:
      s.lhs = lift(over_coproduct([&](const BoolVector& a, const BoolVector& b) {
        return U(a, N(b, y));
      }));
      s.rhs = lift(apply_eval(p, y) * x);
      break;
    case Equation::Coassociative:
      for (const auto& [uv, c] : delta) {
        for (const auto& [ab, c2] : p.coproduct_of(uv.first))
          s.lhs.add({ab.first, ab.second, uv.second}, c * c2);
        for (const auto& [ab, c2] : p.coproduct_of(uv.second))
          s.rhs.add({uv.first, ab.first, ab.second}, c * c2);
      }
      break;
    case Equation::Cocommutative:
      s.lhs = lift(delta.map_keys([](const std::pair<std::size_t, std::size_t>& uv) {
        return std::pair{uv.second, uv.first};
      }));
      s.rhs = lift(delta);
      break;
  }
  return s;
}

bool AxiomReport::all_passed() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const EquationResult& r) { return r.passed; });
}

bool AxiomReport::axiom_passed(int axiom) const {
  return std::all_of(equations.begin(), equations.end(), [&](const EquationResult& r) {
    return axiom_number(r.equation) != axiom || r.passed;
  });
}

std::vector<int> AxiomReport::failed_axioms() const {
  std::vector<int> out;
  for (const auto& r : equations) {
    const int a = axiom_number(r.equation);
    if (!r.passed && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const EquationResult& AxiomReport::result(Equation e) const {
  for (const auto& r : equations)
    if (r.equation == e) return r;
  throw std::out_of_range("equation missing from report");
}

AxiomReport check_boolean_axioms(const AlgebraPresentation& p) {
  const std::size_t n = p.dimension();
  AxiomReport report;
  for (Equation e : all_equations()) {
    EquationResult r;
    r.equation = e;
    const std::size_t arity = equation_arity(e);
    std::vector<std::size_t> tuple(arity, 0);
    if (n > 0) {
      while (true) {
        auto sides = evaluate_equation(p, e, tuple);
        ++r.tuples_checked;
        if (sides.lhs != sides.rhs) {
          ++r.failures;
          if (!r.witness) r.witness = std::move(sides);
        }
        // odometer, last position fastest: lexicographic order
        std::size_t pos = arity;
        while (pos > 0 && ++tuple[pos - 1] == n) tuple[--pos] = 0;
        if (pos == 0) break;
      }
    }
    r.passed = r.failures == 0;
    report.equations.push_back(std::move(r));
  }
  return report;
}

}  // namespace symbool
