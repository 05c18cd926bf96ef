#include "symbool/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "symbool/perm_group.hpp"

namespace symbool {

HatIndex::HatIndex(unsigned value, unsigned ambient) : value_(value), ambient_(ambient) {
  if (value > ambient)
    throw std::invalid_argument("hat index " + std::to_string(value) + " exceeds ambient " +
                                std::to_string(ambient));
}

namespace {

void require_same_ambient(HatIndex a, HatIndex b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("hat indices with different ambient k");
}

}  // namespace

HatVector closed_union(HatIndex a, HatIndex b) {
  require_same_ambient(a, b);
  const long k = a.ambient(), av = a.value(), bv = b.value();
  HatVector out{a.ambient(), {}};
  const Rational norm = Rational(1) / binomial(k, bv);
  for (long l = 0; l <= std::min(k - av, bv); ++l)
    out.terms.add(static_cast<unsigned>(av + l), norm * binomial(av, bv - l) * binomial(k - av, l));
  return out;
}

HatVector closed_intersection(HatIndex a, HatIndex b) {
  require_same_ambient(a, b);
  const long k = a.ambient(), av = a.value(), bv = b.value();
  HatVector out{a.ambient(), {}};
  const Rational norm = Rational(1) / binomial(k, bv);
  for (long l = 0; l <= std::min(av, bv); ++l)
    out.terms.add(static_cast<unsigned>(l), norm * binomial(av, l) * binomial(k - av, bv - l));
  return out;
}

HatVector uncorrected_intersection(HatIndex a, HatIndex b) {
  require_same_ambient(a, b);
  const long k = a.ambient(), av = a.value(), bv = b.value();
  HatVector out{a.ambient(), {}};
  const Rational norm = Rational(1) / binomial(k, bv);
  for (long l = 0; l <= std::min(av, bv); ++l)
    out.terms.add(static_cast<unsigned>(l), norm * binomial(av, l));
  return out;
}

HatIndex closed_complement(HatIndex a) { return HatIndex(a.ambient() - a.value(), a.ambient()); }

std::string render(const HatVector& v) {
  if (v.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [h, c] : v.terms) {
    if (!first) s += " + ";
    s += c.str() + " " + std::to_string(h) + "^";
    first = false;
  }
  return s;
}

std::size_t hat_orbit(const CoinvariantSpace& sym_space, unsigned a) {
  const std::size_t k = sym_space.tensor_power();
  if (a > k) throw std::invalid_argument("hat index exceeds tensor power");
  // base index 1 is {1}, index 0 is {}
  TensorTuple t(k, 0);
  std::fill(t.begin(), t.begin() + a, 1);
  return sym_space.orbit_index(t);
}

namespace {

HatVector to_hats(const BoolVector& v, const std::vector<unsigned>& hat_of_orbit, unsigned k) {
  HatVector out{k, {}};
  for (const auto& [o, c] : v) out.terms.add(hat_of_orbit.at(o), c);
  return out;
}

}  // namespace

ClosedFormReport verify_closed_forms(unsigned k, const Limits& limits) {
  if (k > limits.closed_form_cap) throw BudgetExceeded("closed-form check ambient k", k, limits.closed_form_cap);
  const CoinvariantSpace space(symmetric_group(k, limits), power_set_presentation(1, limits), limits);
  if (space.dimension() != k + 1)
    throw InconsistencyError("S_k quotient of <P[1]>^(x)k has dimension " +
                             std::to_string(space.dimension()));

  std::vector<std::size_t> orbit_of_hat(k + 1);
  std::vector<unsigned> hat_of_orbit(k + 1);
  for (unsigned a = 0; a <= k; ++a) {
    orbit_of_hat[a] = hat_orbit(space, a);
    hat_of_orbit[orbit_of_hat[a]] = a;
  }

  ClosedFormReport report;
  report.k = k;
  auto note = [&](bool& flag, ClosedFormMismatch m) {
    flag = false;
    if (!report.first_mismatch) report.first_mismatch = std::move(m);
  };

  for (unsigned a = 0; a <= k; ++a) {
    for (unsigned b = 0; b <= k; ++b) {
      const HatIndex ha(a, k), hb(b, k);
      const auto bu = to_hats(coinv_binary_product(space, SetOp::Union, orbit_of_hat[a], orbit_of_hat[b]),
                              hat_of_orbit, k);
      const auto bi = to_hats(
          coinv_binary_product(space, SetOp::Intersection, orbit_of_hat[a], orbit_of_hat[b]),
          hat_of_orbit, k);
      if (auto cu = closed_union(ha, hb); cu != bu) note(report.union_matches, {"union", a, b, cu, bu});
      if (auto ci = closed_intersection(ha, hb); ci != bi)
        note(report.intersection_matches, {"intersection", a, b, ci, bi});
      if (auto ui = uncorrected_intersection(ha, hb); ui != bi)
        report.uncorrected_mismatches.push_back({"intersection", a, b, ui, bi});
    }
    const auto& t = space.orbits()[orbit_of_hat[a]].canonical;
    std::vector<BoolVector> places;
    for (std::size_t v : t) places.push_back(space.base().complement_of(v));
    const auto bc = to_hats(space.project(places), hat_of_orbit, k);
    HatVector cc{k, LinearCombination<unsigned>::basis(closed_complement(HatIndex(a, k)).value())};
    if (cc != bc) note(report.complement_matches, {"complement", a, 0, cc, bc});
  }
  return report;
}

AlgebraPresentation closed_form_presentation(unsigned k) {
  std::vector<std::string> labels;
  for (unsigned a = 0; a <= k; ++a) labels.push_back(std::to_string(a) + "^");
  AlgebraPresentation p(std::move(labels));
  auto lift = [](const HatVector& v) {
    BoolVector out;
    for (const auto& [h, c] : v.terms) out.add(h, c);
    return out;
  };
  for (unsigned a = 0; a <= k; ++a) {
    for (unsigned b = 0; b <= k; ++b) {
      p.set_union(a, b, lift(closed_union(HatIndex(a, k), HatIndex(b, k))));
      p.set_intersection(a, b, lift(closed_intersection(HatIndex(a, k), HatIndex(b, k))));
    }
    p.set_complement(a, BoolVector::basis(closed_complement(HatIndex(a, k)).value()));
    p.set_coproduct(a, PairVector::basis({a, a}));
    p.set_eval(a, Rational(1));
  }
  p.set_empty(BoolVector::basis(0));
  p.set_total(BoolVector::basis(k));
  return p;
}

}  // namespace symbool
