#include "symbool/boolean_monoid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symbool {

BooleanMonoidTable::BooleanMonoidTable(std::size_t size, std::vector<Index> union_table,
                                       std::vector<Index> intersection_table,
                                       std::vector<Index> complement_table, Index empty,
                                       Index total)
    : size_(size),
      union_(std::move(union_table)),
      intersection_(std::move(intersection_table)),
      complement_(std::move(complement_table)),
      empty_(empty),
      total_(total) {
  if (size_ == 0) throw std::invalid_argument("monoid table must have at least one element");
  if (union_.size() != size_ * size_ || intersection_.size() != size_ * size_)
    throw std::invalid_argument("union/intersection tables must be size x size");
  if (complement_.size() != size_)
    throw std::invalid_argument("complement table must have one entry per element");
  for (Index v : union_) check_index(v);
  for (Index v : intersection_) check_index(v);
  for (Index v : complement_) check_index(v);
  check_index(empty_);
  check_index(total_);
}

void BooleanMonoidTable::check_index(Index i) const {
  if (i >= size_)
    throw std::invalid_argument("table entry " + std::to_string(i) + " out of range for size " +
                                std::to_string(size_));
}

BooleanMonoidTable BooleanMonoidTable::power_set(unsigned k, const Limits& limits) {
  require_ground_within(k, limits);
  const std::size_t n = std::size_t{1} << k;
  const Index full = n - 1;
  std::vector<Index> uni(n * n), inter(n * n), comp(n);
  for (Index a = 0; a < n; ++a) {
    comp[a] = full & ~a;
    for (Index b = 0; b < n; ++b) {
      uni[a * n + b] = a | b;
      inter[a * n + b] = a & b;
    }
  }
  return BooleanMonoidTable(n, std::move(uni), std::move(inter), std::move(comp), 0, full);
}

BooleanMonoidTable BooleanMonoidTable::relabeled(std::span<const Index> new_index_of) const {
  if (new_index_of.size() != size_) throw std::invalid_argument("relabeling has wrong length");
  std::vector<bool> hit(size_, false);
  for (Index v : new_index_of) {
    check_index(v);
    if (hit[v]) throw std::invalid_argument("relabeling is not a bijection");
    hit[v] = true;
  }
  std::vector<Index> uni(size_ * size_), inter(size_ * size_), comp(size_);
  for (Index a = 0; a < size_; ++a) {
    comp[new_index_of[a]] = new_index_of[complement(a)];
    for (Index b = 0; b < size_; ++b) {
      uni[new_index_of[a] * size_ + new_index_of[b]] = new_index_of[unite(a, b)];
      inter[new_index_of[a] * size_ + new_index_of[b]] = new_index_of[intersect(a, b)];
    }
  }
  return BooleanMonoidTable(size_, std::move(uni), std::move(inter), std::move(comp),
                            new_index_of[empty_], new_index_of[total_]);
}

void BooleanMonoidTable::set_union(Index a, Index b, Index value) {
  check_index(a), check_index(b), check_index(value);
  union_[a * size_ + b] = value;
}

void BooleanMonoidTable::set_intersection(Index a, Index b, Index value) {
  check_index(a), check_index(b), check_index(value);
  intersection_[a * size_ + b] = value;
}

void BooleanMonoidTable::set_complement(Index a, Index value) {
  check_index(a), check_index(value);
  complement_[a] = value;
}

bool MonoidAxiomReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult& r) { return r.passed; });
}

const IdentityResult& MonoidAxiomReport::find(const std::string& name) const {
  for (const auto& r : identities)
    if (r.name == name) return r;
  throw std::out_of_range("no identity named '" + name + "'");
}

namespace {

using Index = BooleanMonoidTable::Index;

IdentityResult check_unary(int axiom, std::string name, std::size_t n,
                           const std::function<bool(Index)>& holds) {
  IdentityResult r{axiom, std::move(name), true, {}};
  for (Index a = 0; a < n; ++a)
    if (!holds(a)) {
      r.passed = false;
      r.witness = {a};
      break;
    }
  return r;
}

IdentityResult check_binary(int axiom, std::string name, std::size_t n,
                            const std::function<bool(Index, Index)>& holds) {
  IdentityResult r{axiom, std::move(name), true, {}};
  for (Index a = 0; a < n && r.passed; ++a)
    for (Index b = 0; b < n; ++b)
      if (!holds(a, b)) {
        r.passed = false;
        r.witness = {a, b};
        break;
      }
  return r;
}

IdentityResult check_ternary(int axiom, std::string name, std::size_t n,
                             const std::function<bool(Index, Index, Index)>& holds) {
  IdentityResult r{axiom, std::move(name), true, {}};
  for (Index a = 0; a < n && r.passed; ++a)
    for (Index b = 0; b < n && r.passed; ++b)
      for (Index c = 0; c < n; ++c)
        if (!holds(a, b, c)) {
          r.passed = false;
          r.witness = {a, b, c};
          break;
        }
  return r;
}

}  // namespace

MonoidAxiomReport monoid_axiom_check(const BooleanMonoidTable& t) {
  const std::size_t n = t.size();
  auto U = [&](Index a, Index b) { return t.unite(a, b); };
  auto N = [&](Index a, Index b) { return t.intersect(a, b); };
  auto C = [&](Index a) { return t.complement(a); };

  MonoidAxiomReport report;
  auto& ids = report.identities;
  ids.push_back(check_binary(1, "union commutative", n,
                             [&](Index a, Index b) { return U(a, b) == U(b, a); }));
  ids.push_back(check_binary(1, "intersection commutative", n,
                             [&](Index a, Index b) { return N(a, b) == N(b, a); }));
  ids.push_back(check_ternary(2, "union associative", n, [&](Index a, Index b, Index c) {
    return U(a, U(b, c)) == U(U(a, b), c);
  }));
  ids.push_back(check_ternary(2, "intersection associative", n, [&](Index a, Index b, Index c) {
    return N(a, N(b, c)) == N(N(a, b), c);
  }));
  ids.push_back(check_ternary(3, "intersection distributes over union", n,
                              [&](Index a, Index b, Index c) {
                                return N(a, U(b, c)) == U(N(a, b), N(a, c));
                              }));
  ids.push_back(check_ternary(3, "union distributes over intersection", n,
                              [&](Index a, Index b, Index c) {
                                return U(a, N(b, c)) == N(U(a, b), U(a, c));
                              }));
  ids.push_back(check_unary(4, "empty is union unit", n,
                            [&](Index a) { return U(a, t.empty()) == a; }));
  ids.push_back(check_unary(4, "total is intersection unit", n,
                            [&](Index a) { return N(a, t.total()) == a; }));
  ids.push_back(check_unary(5, "union with complement is total", n,
                            [&](Index a) { return U(a, C(a)) == t.total(); }));
  ids.push_back(check_unary(5, "intersection with complement is empty", n,
                            [&](Index a) { return N(a, C(a)) == t.empty(); }));
  ids.push_back(check_binary(6, "union absorbs intersection", n,
                             [&](Index a, Index b) { return U(a, N(a, b)) == a; }));
  ids.push_back(check_binary(6, "intersection absorbs union", n,
                             [&](Index a, Index b) { return N(a, U(a, b)) == a; }));
  return report;
}

std::size_t MonoidIsomorphism::preimage(const Subset& s) const {
  for (std::size_t i = 0; i < forward_map.size(); ++i)
    if (forward_map[i] == s) return i;
  throw std::out_of_range("subset " + s.str() + " has no preimage");
}

MonoidIsomorphism atoms_and_stone_iso(const BooleanMonoidTable& t, const Limits& limits) {
  const auto report = monoid_axiom_check(t);
  if (!report.all_passed()) {
    for (const auto& r : report.identities)
      if (!r.passed) throw std::invalid_argument("not a Boolean monoid: " + r.name + " fails");
  }
  const std::size_t n = t.size();

  MonoidIsomorphism iso;
  for (Index a = 0; a < n; ++a) {
    if (a == t.empty()) continue;
    bool minimal = true;
    for (Index b = 0; b < n && minimal; ++b)
      if (b != t.empty() && b != a && t.leq(b, a)) minimal = false;
    if (minimal) iso.atoms.push_back(a);
  }

  const auto k = static_cast<unsigned>(iso.atoms.size());
  require_ground_within(k, limits);
  if (n != (std::size_t{1} << k))
    throw InconsistencyError("table has " + std::to_string(n) + " elements but " +
                             std::to_string(k) + " atoms");

  iso.forward_map.reserve(n);
  for (Index b = 0; b < n; ++b) {
    std::uint32_t bits = 0;
    for (unsigned i = 0; i < k; ++i)
      if (t.leq(iso.atoms[i], b)) bits |= std::uint32_t{1} << i;
    iso.forward_map.emplace_back(k, bits);
  }

  const auto& f = iso.forward_map;
  std::vector<bool> hit(n, false);
  for (Index b = 0; b < n; ++b) {
    if (hit[f[b].bits()]) throw InconsistencyError("atom map is not injective");
    hit[f[b].bits()] = true;
  }
  if (f[t.empty()] != Subset::empty(k) || f[t.total()] != Subset::full(k))
    throw InconsistencyError("atom map does not send empty/total to empty/full");
  for (Index a = 0; a < n; ++a) {
    if (f[t.complement(a)] != f[a].complement())
      throw InconsistencyError("atom map does not intertwine complement");
    for (Index b = 0; b < n; ++b) {
      if (f[t.unite(a, b)] != f[a].unite(f[b]))
        throw InconsistencyError("atom map does not intertwine union");
      if (f[t.intersect(a, b)] != f[a].intersect(f[b]))
        throw InconsistencyError("atom map does not intertwine intersection");
    }
  }
  return iso;
}

BooleanMonoidTable product_monoid(const BooleanMonoidTable& s, const BooleanMonoidTable& t) {
  if (!monoid_axiom_check(s).all_passed())
    throw std::invalid_argument("first factor is not a Boolean monoid");
  if (!monoid_axiom_check(t).all_passed())
    throw std::invalid_argument("second factor is not a Boolean monoid");
  const std::size_t ns = s.size(), nt = t.size(), n = ns * nt;
  auto pair_index = [nt](Index i, Index j) { return i * nt + j; };
  std::vector<Index> uni(n * n), inter(n * n), comp(n);
  for (Index a = 0; a < n; ++a) {
    const Index a1 = a / nt, a2 = a % nt;
    comp[a] = pair_index(s.complement(a1), t.complement(a2));
    for (Index b = 0; b < n; ++b) {
      const Index b1 = b / nt, b2 = b % nt;
      uni[a * n + b] = pair_index(s.unite(a1, b1), t.unite(a2, b2));
      inter[a * n + b] = pair_index(s.intersect(a1, b1), t.intersect(a2, b2));
    }
  }
  return BooleanMonoidTable(n, std::move(uni), std::move(inter), std::move(comp),
                            pair_index(s.empty(), t.empty()), pair_index(s.total(), t.total()));
}

}  // namespace symbool
