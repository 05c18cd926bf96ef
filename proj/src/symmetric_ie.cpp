#include "symbool/symmetric_ie.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace symbool {

Measure::Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.size() > kMaxGroundSize) throw std::invalid_argument("measure ground set too large");
}

Rational measure_eval(const Measure& mu, const Subset& a) {
  if (a.ground_size() != mu.ambient())
    throw std::invalid_argument("subset over [" + std::to_string(a.ground_size()) +
                                "] measured on [" + std::to_string(mu.ambient()) + "]");
  Rational s;
  for (unsigned e : a.elements()) s += mu.weights()[e - 1];
  return s;
}

IePair classical_ie(const Measure& mu, std::span<const Subset> sets) {
  const std::size_t n = sets.size();
  if (n == 0) throw std::invalid_argument("inclusion-exclusion needs at least one set");
  if (n > 31) throw std::invalid_argument("too many sets for subset enumeration");
  IePair out;
  Subset all = Subset::empty(mu.ambient());
  for (const auto& s : sets) all = all.unite(s);
  out.lhs = measure_eval(mu, all);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Subset inter = Subset::full(mu.ambient());
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) inter = inter.intersect(sets[i]);
    const Rational v = measure_eval(mu, inter);
    if (std::popcount(mask) % 2 == 1) out.rhs += v;
    else out.rhs -= v;
  }
  return out;
}

MultisetClass::MultisetClass(unsigned ground_size, std::vector<Subset> entries)
    : ground_size_(ground_size), entries_(std::move(entries)) {
  for (const auto& s : entries_)
    if (s.ground_size() != ground_size_)
      throw std::invalid_argument("class entry " + s.str() + " not over [" +
                                  std::to_string(ground_size_) + "]");
  std::sort(entries_.begin(), entries_.end());
}

std::string MultisetClass::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].str();
  }
  return s + "}";
}

namespace {

/// Odometer over {id} x S_m^(n-1), handing each sigma tuple to f.
class SigmaTuples {
 public:
  SigmaTuples(std::size_t m, std::size_t n, const Limits& limits)
      : group_(symmetric_group(static_cast<unsigned>(m), limits)), n_(n) {}

  std::uint64_t count() const { return saturating_pow(group_.order(), n_ - 1); }

  template <typename F>
  void for_each(F&& f) const {
    const auto& el = group_.elements();
    std::vector<std::size_t> choice(n_, 0);
    std::vector<const Permutation*> sigma(n_, &el[0]);
    while (true) {
      for (std::size_t i = 0; i < n_; ++i) sigma[i] = &el[choice[i]];
      f(std::as_const(sigma));
      std::size_t pos = n_;
      while (pos > 1 && ++choice[pos - 1] == el.size()) choice[--pos] = 0;
      if (pos <= 1) break;
    }
  }

 private:
  PermGroup group_;
  std::size_t n_;
};

struct Shape {
  std::size_t n;
  std::size_t m;
  unsigned k;
};

Shape check_operands(std::span<const MultisetClass> classes) {
  if (classes.empty()) throw std::invalid_argument("at least one operand class required");
  Shape s{classes.size(), classes[0].size(), classes[0].ground_size()};
  for (const auto& c : classes)
    if (c.size() != s.m || c.ground_size() != s.k)
      throw std::invalid_argument("operand classes must share m and k");
  if (s.n > 16) throw std::invalid_argument("too many operands");
  return s;
}

MultisetClass union_class(std::span<const MultisetClass> classes,
                          const std::vector<const Permutation*>& sigma, const Shape& sh) {
  std::vector<Subset> entries;
  entries.reserve(sh.m);
  for (std::size_t j = 0; j < sh.m; ++j) {
    Subset u = Subset::empty(sh.k);
    for (std::size_t i = 0; i < sh.n; ++i)
      u = u.unite(classes[i].entries()[(*sigma[i])(static_cast<unsigned>(j))]);
    entries.push_back(u);
  }
  return MultisetClass(sh.k, std::move(entries));
}

/// Calls f(idx) for every nondecreasing (weak) or increasing (strict)
/// length-l sequence over [0, m).
void for_each_index_sequence(std::size_t m, unsigned l, bool strict,
                             const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(l);
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned pos, std::size_t start) {
    if (pos == l) {
      f(idx);
      return;
    }
    for (std::size_t v = start; v < m; ++v) {
      idx[pos] = v;
      rec(pos + 1, strict ? v + 1 : v);
    }
  };
  rec(0, 0);
}

/// Calls f(c) for every vector of `parts` nonnegative integers summing to total.
void for_each_composition(std::size_t parts, unsigned total,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> c(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == parts) {
      c[pos] = left;
      f(c);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      c[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) f(c);
    return;
  }
  rec(0, total);
}

std::uint64_t sequence_count(std::size_t m, unsigned l, bool strict) {
  // C(m, l) strict, C(m + l - 1, l) weak
  const long top = strict ? static_cast<long>(m) : static_cast<long>(m + l) - 1;
  if (m == 0) return l == 0 ? 1 : 0;
  const Rational c = binomial(top, l);
  return c.raw().get_num().fits_ulong_p() ? c.raw().get_num().get_ui() : UINT64_MAX;
}

/// mu(intersection over I of a^i_sigma_i(j)) for every place j and nonempty I.
std::vector<std::vector<Rational>> intersection_table(std::span<const MultisetClass> classes,
                                                      const std::vector<const Permutation*>& sigma,
                                                      const Shape& sh, const Measure& mu) {
  const std::uint32_t subsets = std::uint32_t{1} << sh.n;
  std::vector<std::vector<Rational>> table(sh.m, std::vector<Rational>(subsets));
  for (std::size_t j = 0; j < sh.m; ++j) {
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Subset inter = Subset::full(sh.k);
      for (std::size_t i = 0; i < sh.n; ++i)
        if ((mask >> i) & 1u)
          inter = inter.intersect(classes[i].entries()[(*sigma[i])(static_cast<unsigned>(j))]);
      table[j][mask] = measure_eval(mu, inter);
    }
  }
  return table;
}

Rational sign_power(bool negative) { return negative ? Rational(-1) : Rational(1); }

/// Unnormalized right-hand side contribution of one sigma tuple.
Rational rhs_for_sigma(const SymFnSpec& spec, std::span<const MultisetClass> classes,
                       const std::vector<const Permutation*>& sigma, const Shape& sh,
                       const Measure& mu) {
  const auto table = intersection_table(classes, sigma, sh, mu);
  const std::uint32_t nonempty = (std::uint32_t{1} << sh.n) - 1;  // masks 1..nonempty
  const unsigned l = spec.degree;
  Rational total;

  if (spec.kind == SymFnKind::Power) {
    const Rational l_fact = factorial(l);
    for (std::size_t j = 0; j < sh.m; ++j) {
      for_each_composition(nonempty, l, [&](const std::vector<unsigned>& c) {
        Rational term = l_fact;
        for (std::uint32_t mask = 1; mask <= nonempty; ++mask) {
          const unsigned e = c[mask - 1];
          if (e == 0) continue;
          term /= factorial(e);
          // (-1)^((|I|+1) c_I)
          const bool negative = ((std::popcount(mask) + 1) * e) % 2 == 1;
          term *= sign_power(negative) * table[j][mask].pow(e);
        }
        total += term;
      });
    }
    return total;
  }

  const bool strict = spec.kind == SymFnKind::Elementary;
  std::vector<std::uint32_t> f(l, 1);
  for_each_index_sequence(sh.m, l, strict, [&](const std::vector<std::size_t>& t) {
    std::fill(f.begin(), f.end(), 1u);
    while (true) {
      Rational term(1);
      for (unsigned j = 0; j < l; ++j) {
        const bool negative = (std::popcount(f[j]) + 1) % 2 == 1;
        term *= sign_power(negative) * table[t[j]][f[j]];
      }
      total += term;
      unsigned pos = l;
      while (pos > 0 && ++f[pos - 1] > nonempty) f[--pos] = 1;
      if (pos == 0) break;
    }
  });
  return total;
}

void require_degree(const SymFnSpec& spec, std::size_t m) {
  if (spec.degree == 0) throw std::invalid_argument("symmetric function degree must be >= 1");
  if (spec.kind == SymFnKind::Elementary && spec.degree > m)
    throw std::invalid_argument("e_" + std::to_string(spec.degree) + " needs l <= m = " +
                                std::to_string(m));
}

}  // namespace

ClassVector nfold_union(std::span<const MultisetClass> classes, const Limits& limits) {
  const Shape sh = check_operands(classes);
  const SigmaTuples sigmas(sh.m, sh.n, limits);
  if (sigmas.count() > limits.term_cap)
    throw BudgetExceeded("permutation tuples (m!)^(n-1)", sigmas.count(), limits.term_cap);
  ClassVector out;
  const Rational w = Rational(1) / Rational(sigmas.count());
  sigmas.for_each([&](const std::vector<const Permutation*>& sigma) {
    out.add(union_class(classes, sigma, sh), w);
  });
  return out;
}

std::string to_string(SymFnKind kind) {
  switch (kind) {
    case SymFnKind::Power: return "power";
    case SymFnKind::Elementary: return "elementary";
    case SymFnKind::Homogeneous: return "homogeneous";
  }
  return "?";
}

SymFnKind parse_symfn_kind(const std::string& name) {
  if (name == "power") return SymFnKind::Power;
  if (name == "elementary") return SymFnKind::Elementary;
  if (name == "homogeneous") return SymFnKind::Homogeneous;
  throw std::invalid_argument("unknown symmetric function '" + name + "'");
}

Rational symfn_eval(const SymFnSpec& spec, const MultisetClass& c, const Measure& mu) {
  require_degree(spec, c.size());
  std::vector<Rational> x;
  for (const auto& s : c.entries()) x.push_back(measure_eval(mu, s));
  Rational total;
  if (spec.kind == SymFnKind::Power) {
    for (const auto& v : x) total += v.pow(spec.degree);
    return total;
  }
  for_each_index_sequence(x.size(), spec.degree, spec.kind == SymFnKind::Elementary,
                          [&](const std::vector<std::size_t>& t) {
                            Rational p(1);
                            for (std::size_t i : t) p *= x[i];
                            total += p;
                          });
  return total;
}

Rational symfn_eval(const SymFnSpec& spec, const ClassVector& v, const Measure& mu) {
  Rational total;
  for (const auto& [c, w] : v) total += w * symfn_eval(spec, c, mu);
  return total;
}

std::uint64_t ie_term_count(const SymFnSpec& spec, std::size_t n, std::size_t m) {
  std::uint64_t m_fact = 1;
  for (std::size_t i = 2; i <= m; ++i) m_fact = saturating_mul(m_fact, i);
  const std::uint64_t sigmas = saturating_pow(m_fact, n - 1);
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
  std::uint64_t inner;
  if (spec.kind == SymFnKind::Power) {
    // compositions of l into 2^n - 1 parts: C(l + parts - 1, parts - 1)
    const Rational c = binomial(static_cast<long>(spec.degree + nonempty - 1),
                                static_cast<long>(nonempty - 1));
    const std::uint64_t comps = c.raw().get_num().fits_ulong_p() ? c.raw().get_num().get_ui() : UINT64_MAX;
    inner = saturating_mul(m, comps);
  } else {
    inner = saturating_mul(sequence_count(m, spec.degree, spec.kind == SymFnKind::Elementary),
                           saturating_pow(nonempty, spec.degree));
  }
  return saturating_mul(sigmas, inner);
}

Rational ie_rhs(const SymFnSpec& spec, std::span<const MultisetClass> operands, const Measure& mu,
                const Limits& limits) {
  const Shape sh = check_operands(operands);
  require_degree(spec, sh.m);
  if (mu.ambient() != sh.k) throw std::invalid_argument("measure and operands over different ground sets");
  const std::uint64_t terms = ie_term_count(spec, sh.n, sh.m);
  if (terms > limits.term_cap) throw BudgetExceeded("inclusion-exclusion terms", terms, limits.term_cap);

  const SigmaTuples sigmas(sh.m, sh.n, limits);
  Rational total;
  sigmas.for_each([&](const std::vector<const Permutation*>& sigma) {
    total += rhs_for_sigma(spec, operands, sigma, sh, mu);
  });
  return total / Rational(sigmas.count());
}

IeReport ie_verify(const SymFnSpec& spec, std::span<const MultisetClass> operands, const Measure& mu,
                   const Limits& limits) {
  IeReport report;
  report.lhs = symfn_eval(spec, nfold_union(operands, limits), mu);
  report.rhs = ie_rhs(spec, operands, mu, limits);
  report.equal = report.lhs == report.rhs;
  if (!report.equal) {
    const Shape sh = check_operands(operands);
    const SigmaTuples sigmas(sh.m, sh.n, limits);
    const Rational w = Rational(1) / Rational(sigmas.count());
    sigmas.for_each([&](const std::vector<const Permutation*>& sigma) {
      IeTerm term;
      for (const auto* p : sigma) term.sigma.push_back(*p);
      term.lhs = w * symfn_eval(spec, union_class(operands, sigma, sh), mu);
      term.rhs = w * rhs_for_sigma(spec, operands, sigma, sh, mu);
      report.breakdown.push_back(std::move(term));
    });
  }
  return report;
}

Rational listed_2e2_expansion(const Measure& mu, const Subset& a, const Subset& b, const Subset& c,
                              const Subset& d) {
  auto M = [&](const Subset& s) { return measure_eval(mu, s); };
  return Rational(2) * M(a) * M(b) + Rational(2) * M(c) * M(d) + M(a) * M(d) + M(c) * M(b) +
         M(a) * M(c) + M(d) * M(b) - M(a) * M(b.intersect(d)) + M(c) * M(b.intersect(d)) +
         M(b) * M(a.intersect(c)) + M(d) * M(a.intersect(c)) + M(a) * M(b.intersect(c)) +
         M(d) * M(b.intersect(c)) + M(b) * M(a.intersect(d)) + M(c) * M(a.intersect(d));
}

Rational listed_2h2_expansion(const Measure& mu, const Subset& a, const Subset& b, const Subset& c,
                              const Subset& d) {
  auto M = [&](const Subset& s) { return measure_eval(mu, s); };
  auto sq = [](const Rational& r) { return r * r; };
  return sq(M(a) + M(c) - M(a.intersect(c))) + sq(M(b) + M(d) - M(b.intersect(d))) +
         sq(M(a) + M(d) - M(a.intersect(d))) + sq(M(b) + M(c) - M(b.intersect(c))) +
         Rational(2) * M(a) * M(b) + Rational(2) * M(c) * M(a) + M(a) * M(d) + M(c) * M(b) +
         M(a) * M(c) + M(d) * M(a) - M(a) * M(b.intersect(d)) + M(c) * M(b.intersect(d)) +
         M(b) * M(a.intersect(c)) + M(d) * M(a.intersect(c)) + M(a) * M(b.intersect(c)) +
         M(d) * M(b.intersect(c)) + M(b) * M(a.intersect(d)) + M(c) * M(a.intersect(d));
}

namespace {

unsigned power_set_ground(const CoinvariantSpace& space) {
  const std::size_t dim = space.base().dimension();
  if (dim == 0 || !std::has_single_bit(dim))
    throw std::invalid_argument("base presentation is not a power set");
  return static_cast<unsigned>(std::countr_zero(dim));
}

}  // namespace

std::size_t orbit_of_class(const CoinvariantSpace& space, const MultisetClass& c) {
  const unsigned k = power_set_ground(space);
  if (c.ground_size() != k || c.size() != space.tensor_power())
    throw std::invalid_argument("class " + c.str() + " does not fit the space");
  TensorTuple t;
  for (const auto& s : c.entries()) t.push_back(s.bits());
  return space.orbit_index(t);
}

MultisetClass class_of_orbit(const CoinvariantSpace& space, std::size_t orbit) {
  const unsigned k = power_set_ground(space);
  std::vector<Subset> entries;
  for (std::size_t i : space.orbits().at(orbit).canonical)
    entries.emplace_back(k, static_cast<std::uint32_t>(i));
  return MultisetClass(k, std::move(entries));
}

ClassVector to_class_vector(const CoinvariantSpace& space, const BoolVector& v) {
  ClassVector out;
  for (const auto& [orbit, c] : v) out.add(class_of_orbit(space, orbit), c);
  return out;
}

}  // namespace symbool
