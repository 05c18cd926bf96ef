#include "symbool/coinvariants.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace symbool {

OrbitRep canonical_rep(std::span<const std::size_t> tuple, const PermGroup& group) {
  if (tuple.size() != group.degree())
    throw std::invalid_argument("tuple length " + std::to_string(tuple.size()) +
                                " does not match group degree " + std::to_string(group.degree()));
  OrbitRep rep{{tuple.begin(), tuple.end()}, 0};
  std::uint64_t stabilizer = 0;
  for (const auto& sigma : group.elements()) {
    auto image = act(sigma, tuple);
    if (image < rep.canonical) rep.canonical = image;
    if (std::equal(image.begin(), image.end(), tuple.begin(), tuple.end())) ++stabilizer;
  }
  rep.orbit_size = group.order() / stabilizer;
  return rep;
}

std::uint64_t burnside_count(const PermGroup& group, std::size_t base_dimension) {
  std::uint64_t fixed = 0;
  for (const auto& sigma : group.elements()) fixed += saturating_pow(base_dimension, sigma.cycle_count());
  if (fixed % group.order() != 0)
    throw InconsistencyError("Burnside sum " + std::to_string(fixed) + " not divisible by |K| = " +
                             std::to_string(group.order()));
  return fixed / group.order();
}

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::optional<std::size_t> unit_label(const BoolVector& v) {
  if (v.size() != 1) return std::nullopt;
  const auto& [k, c] = *v.begin();
  if (c != Rational(1)) return std::nullopt;
  return k;
}

/// Base product table with a shortcut for entries that are a single basis
/// element with coefficient one (always the case for power-set bases).
class BaseOp {
 public:
  BaseOp(const AlgebraPresentation& base, SetOp op) : base_(base), op_(op) {
    if (op == SetOp::Complement) throw std::invalid_argument("complement is not a product");
    const std::size_t n = base.dimension();
    unit_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) unit_[i * n + j] = unit_label(full(i, j));
  }

  const BoolVector& full(std::size_t i, std::size_t j) const {
    return op_ == SetOp::Union ? base_.union_of(i, j) : base_.intersection_of(i, j);
  }
  const std::optional<std::size_t>& unit(std::size_t i, std::size_t j) const {
    return unit_[i * base_.dimension() + j];
  }
  BoolVector apply(const BoolVector& x, const BoolVector& y) const {
    return op_ == SetOp::Union ? apply_union(base_, x, y) : apply_intersection(base_, x, y);
  }

 private:
  const AlgebraPresentation& base_;
  SetOp op_;
  std::vector<std::optional<std::size_t>> unit_;
};

}  // namespace

CoinvariantSpace::CoinvariantSpace(PermGroup group, AlgebraPresentation base, const Limits& limits)
    : group_(std::move(group)), base_(std::move(base)) {
  const std::size_t m = group_.degree();
  const std::size_t dim = base_.dimension();
  if (dim == 0) throw std::invalid_argument("base presentation has dimension zero");
  const std::uint64_t tuples = saturating_pow(dim, m);
  if (tuples > limits.tuple_cap) throw BudgetExceeded("tensor tuples dim^m", tuples, limits.tuple_cap);

  inverses_.reserve(group_.order());
  for (const auto& sigma : group_.elements()) inverses_.push_back(sigma.inverse());

  orbit_of_code_.assign(tuples, kUnassigned);
  TensorTuple tuple(m, 0);
  for (std::uint64_t code = 0; code < tuples; ++code) {
    if (orbit_of_code_[code] == kUnassigned) {
      // Codes are visited in lexicographic tuple order, so the first
      // unassigned member of an orbit is its minimum.
      const auto orbit = static_cast<std::uint32_t>(orbits_.size());
      std::uint64_t size = 0;
      for (const auto& sigma : group_.elements()) {
        const auto image = encode(act(sigma, std::span<const std::size_t>(tuple)));
        if (orbit_of_code_[image] == kUnassigned) {
          orbit_of_code_[image] = orbit;
          ++size;
        }
      }
      orbits_.push_back({tuple, size});
    }
    for (std::size_t pos = m; pos-- > 0;) {
      if (++tuple[pos] < dim) break;
      tuple[pos] = 0;
    }
  }

  const std::uint64_t expected = burnside_count(group_, dim);
  if (orbits_.size() != expected)
    throw InconsistencyError("orbit enumeration found " + std::to_string(orbits_.size()) +
                             " orbits, Burnside count is " + std::to_string(expected));
}

std::uint64_t CoinvariantSpace::encode(std::span<const std::size_t> tuple) const {
  const std::size_t dim = base_.dimension();
  std::uint64_t code = 0;
  for (std::size_t v : tuple) code = code * dim + v;
  return code;
}

std::size_t CoinvariantSpace::orbit_index(std::span<const std::size_t> tuple) const {
  if (tuple.size() != tensor_power())
    throw std::invalid_argument("tuple length does not match tensor power");
  for (std::size_t v : tuple)
    if (v >= base_.dimension()) throw std::invalid_argument("tuple entry outside base basis");
  return orbit_of_code_[encode(tuple)];
}

std::string CoinvariantSpace::orbit_label(std::size_t orbit) const {
  std::string s = "(";
  const auto& t = orbits_.at(orbit).canonical;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ",";
    s += base_.label(t[j]);
  }
  return s + ")";
}

BoolVector CoinvariantSpace::project(std::span<const BoolVector> places) const {
  if (places.size() != tensor_power()) throw std::invalid_argument("one vector per place expected");
  const std::size_t dim = base_.dimension();
  std::vector<std::pair<std::uint64_t, Rational>> partial{{0, Rational(1)}};
  for (const auto& v : places) {
    base_.require_member(v);
    std::vector<std::pair<std::uint64_t, Rational>> next;
    next.reserve(partial.size() * v.size());
    for (const auto& [code, c] : partial)
      for (const auto& [i, ci] : v) next.emplace_back(code * dim + i, c * ci);
    partial = std::move(next);
  }
  BoolVector out;
  for (const auto& [code, c] : partial) out.add(orbit_of_code_[code], c);
  return out;
}

std::vector<OrbitRep> orbit_basis(const PermGroup& group, const AlgebraPresentation& base,
                                  const Limits& limits) {
  return CoinvariantSpace(group, base, limits).orbits();
}

namespace {

/// Accumulates classes of placewise products: integer counts for the
/// all-unit fast path, exact vectors otherwise.
class ClassAccumulator {
 public:
  ClassAccumulator(const CoinvariantSpace& space) : space_(space), counts_(space.dimension(), 0) {}

  void add_unit_tuple(std::span<const std::size_t> tuple) { ++counts_[space_.orbit_index(tuple)]; }
  void add_general(std::span<const BoolVector> places) { general_ += space_.project(places); }

  BoolVector finish(const Rational& scale) const {
    BoolVector out = general_;
    for (std::size_t o = 0; o < counts_.size(); ++o)
      if (counts_[o] != 0) out.add(o, Rational(counts_[o]));
    return scale * out;
  }

 private:
  const CoinvariantSpace& space_;
  std::vector<std::uint64_t> counts_;
  BoolVector general_;
};

}  // namespace

BoolVector coinv_binary_product(const CoinvariantSpace& space, SetOp op, std::size_t x,
                                std::size_t y) {
  const BaseOp table(space.base(), op);
  const auto& tx = space.orbits().at(x).canonical;
  const auto& ty = space.orbits().at(y).canonical;
  const std::size_t m = space.tensor_power();

  ClassAccumulator acc(space);
  TensorTuple z(m);
  for (const auto& sigma : space.group().elements()) {
    const auto sy = act(sigma, std::span<const std::size_t>(ty));
    bool all_unit = true;
    for (std::size_t j = 0; j < m && all_unit; ++j) {
      const auto& u = table.unit(tx[j], sy[j]);
      if (u) z[j] = *u;
      else all_unit = false;
    }
    if (all_unit) {
      acc.add_unit_tuple(z);
    } else {
      std::vector<BoolVector> places;
      for (std::size_t j = 0; j < m; ++j) places.push_back(table.full(tx[j], sy[j]));
      acc.add_general(places);
    }
  }
  return acc.finish(Rational(1) / Rational(space.group().order()));
}

BoolVector coinv_mary_product(const CoinvariantSpace& space, SetOp op,
                              std::span<const std::size_t> operands, const Limits& limits) {
  const std::size_t n = operands.size();
  if (n == 0) throw std::invalid_argument("m-ary product needs at least one operand");
  const std::uint64_t order = space.group().order();
  const std::uint64_t terms = saturating_pow(order, n - 1);
  if (terms > limits.term_cap) throw BudgetExceeded("group tuples |K|^(n-1)", terms, limits.term_cap);

  const BaseOp table(space.base(), op);
  const std::size_t m = space.tensor_power();
  std::vector<const TensorTuple*> tuples;
  for (std::size_t x : operands) tuples.push_back(&space.orbits().at(x).canonical);
  const auto& inverses = space.inverses();

  ClassAccumulator acc(space);
  std::vector<std::size_t> choice(n, 0);  // choice[0] stays at the identity
  TensorTuple z(m);
  while (true) {
    bool all_unit = true;
    for (std::size_t j = 0; j < m && all_unit; ++j) {
      std::size_t cur = (*tuples[0])[j];
      for (std::size_t i = 1; i < n; ++i) {
        const auto& u = table.unit(cur, (*tuples[i])[inverses[choice[i]](static_cast<unsigned>(j))]);
        if (!u) {
          all_unit = false;
          break;
        }
        cur = *u;
      }
      z[j] = cur;
    }
    if (all_unit) {
      acc.add_unit_tuple(z);
    } else {
      std::vector<BoolVector> places;
      for (std::size_t j = 0; j < m; ++j) {
        BoolVector cur = BoolVector::basis((*tuples[0])[j]);
        for (std::size_t i = 1; i < n; ++i)
          cur = table.apply(cur, BoolVector::basis(
                                     (*tuples[i])[inverses[choice[i]](static_cast<unsigned>(j))]));
        places.push_back(std::move(cur));
      }
      acc.add_general(places);
    }
    std::size_t pos = n;
    while (pos > 1 && ++choice[pos - 1] == order) choice[--pos] = 0;
    if (pos <= 1) break;
  }
  return acc.finish(Rational(1) / Rational(order).pow(static_cast<unsigned>(n - 1)));
}

AlgebraPresentation coinv_presentation(const CoinvariantSpace& space) {
  const std::size_t d = space.dimension();
  const std::size_t m = space.tensor_power();
  const auto& base = space.base();
  std::vector<std::string> labels;
  for (std::size_t o = 0; o < d; ++o) labels.push_back(space.orbit_label(o));

  AlgebraPresentation p(std::move(labels));
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      p.set_union(x, y, coinv_binary_product(space, SetOp::Union, x, y));
      p.set_intersection(x, y, coinv_binary_product(space, SetOp::Intersection, x, y));
    }
    const auto& t = space.orbits()[x].canonical;
    std::vector<BoolVector> places;
    Rational ev(1);
    for (std::size_t j = 0; j < m; ++j) {
      places.push_back(base.complement_of(t[j]));
      ev *= base.eval_of(t[j]);
    }
    p.set_complement(x, space.project(places));
    p.set_coproduct(x, PairVector::basis({x, x}));
    p.set_eval(x, ev);
  }
  const std::vector<BoolVector> empties(m, base.empty_vector());
  const std::vector<BoolVector> totals(m, base.total_vector());
  p.set_empty(space.project(empties));
  p.set_total(space.project(totals));
  return p;
}

}  // namespace symbool
