#include "symbool/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "symbool/subset.hpp"

namespace symbool {

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      union_(labels_.size() * labels_.size()),
      intersection_(labels_.size() * labels_.size()),
      complement_(labels_.size()),
      coproduct_(labels_.size()),
      eval_(labels_.size()) {}

void AlgebraPresentation::set_labels(std::vector<std::string> labels) {
  if (labels.size() != labels_.size())
    throw std::invalid_argument("expected " + std::to_string(labels_.size()) + " labels");
  labels_ = std::move(labels);
}

std::optional<std::size_t> AlgebraPresentation::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void AlgebraPresentation::check_index(std::size_t i) const {
  if (i >= dimension())
    throw std::invalid_argument("basis index " + std::to_string(i) + " outside dimension " +
                                std::to_string(dimension()));
}

void AlgebraPresentation::require_member(const BoolVector& v) const {
  for (const auto& [i, c] : v) check_index(i);
}

void AlgebraPresentation::require_member(const PairVector& v) const {
  for (const auto& [ij, c] : v) {
    check_index(ij.first);
    check_index(ij.second);
  }
}

void AlgebraPresentation::set_union(std::size_t i, std::size_t j, BoolVector v) {
  check_index(i), check_index(j), require_member(v);
  union_[i * dimension() + j] = std::move(v);
}

void AlgebraPresentation::set_intersection(std::size_t i, std::size_t j, BoolVector v) {
  check_index(i), check_index(j), require_member(v);
  intersection_[i * dimension() + j] = std::move(v);
}

void AlgebraPresentation::set_complement(std::size_t i, BoolVector v) {
  check_index(i), require_member(v);
  complement_[i] = std::move(v);
}

void AlgebraPresentation::set_coproduct(std::size_t i, PairVector v) {
  check_index(i), require_member(v);
  coproduct_[i] = std::move(v);
}

void AlgebraPresentation::set_eval(std::size_t i, Rational v) {
  check_index(i);
  eval_[i] = std::move(v);
}

void AlgebraPresentation::set_empty(BoolVector v) {
  require_member(v);
  empty_ = std::move(v);
}

void AlgebraPresentation::set_total(BoolVector v) {
  require_member(v);
  total_ = std::move(v);
}

AlgebraPresentation power_set_presentation(unsigned k, const Limits& limits) {
  const auto subsets = power_set(k, limits);
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const auto& s : subsets) labels.push_back(s.str());

  AlgebraPresentation p(std::move(labels));
  const std::size_t n = subsets.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      p.set_union(a, b, BoolVector::basis(a | b));
      p.set_intersection(a, b, BoolVector::basis(a & b));
    }
    p.set_complement(a, BoolVector::basis(subsets[a].complement().bits()));
    p.set_coproduct(a, PairVector::basis({a, a}));
    p.set_eval(a, Rational(1));
  }
  p.set_empty(BoolVector::basis(0));
  p.set_total(BoolVector::basis(n - 1));
  return p;
}

StructureMap parse_structure_map(const std::string& name) {
  if (name == "union") return StructureMap::Union;
  if (name == "intersection") return StructureMap::Intersection;
  if (name == "complement") return StructureMap::Complement;
  if (name == "coproduct") return StructureMap::Coproduct;
  if (name == "eval") return StructureMap::Eval;
  if (name == "empty") return StructureMap::Empty;
  if (name == "total") return StructureMap::Total;
  throw std::invalid_argument("unknown structure map '" + name + "'");
}

BoolVector apply_union(const AlgebraPresentation& p, const BoolVector& x, const BoolVector& y) {
  p.require_member(x), p.require_member(y);
  return bilinear(x, y, [&](std::size_t i, std::size_t j) -> const BoolVector& {
    return p.union_of(i, j);
  });
}

BoolVector apply_intersection(const AlgebraPresentation& p, const BoolVector& x,
                              const BoolVector& y) {
  p.require_member(x), p.require_member(y);
  return bilinear(x, y, [&](std::size_t i, std::size_t j) -> const BoolVector& {
    return p.intersection_of(i, j);
  });
}

BoolVector apply_complement(const AlgebraPresentation& p, const BoolVector& x) {
  p.require_member(x);
  return x.extend([&](std::size_t i) -> const BoolVector& { return p.complement_of(i); });
}

PairVector apply_coproduct(const AlgebraPresentation& p, const BoolVector& x) {
  p.require_member(x);
  return x.extend([&](std::size_t i) -> const PairVector& { return p.coproduct_of(i); });
}

Rational apply_eval(const AlgebraPresentation& p, const BoolVector& x) {
  p.require_member(x);
  Rational s;
  for (const auto& [i, c] : x) s += c * p.eval_of(i);
  return s;
}

BoolVector apply_empty(const AlgebraPresentation& p, const Rational& s) { return s * p.empty_vector(); }

BoolVector apply_total(const AlgebraPresentation& p, const Rational& s) { return s * p.total_vector(); }

MapValue apply_map(const AlgebraPresentation& p, StructureMap map,
                   std::span<const BoolVector> args, const Rational& scalar) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument("structure map expects " + std::to_string(n) +
                                  " vector argument(s), got " + std::to_string(args.size()));
  };
  switch (map) {
    case StructureMap::Union: need(2); return apply_union(p, args[0], args[1]);
    case StructureMap::Intersection: need(2); return apply_intersection(p, args[0], args[1]);
    case StructureMap::Complement: need(1); return apply_complement(p, args[0]);
    case StructureMap::Coproduct: need(1); return apply_coproduct(p, args[0]);
    case StructureMap::Eval: need(1); return apply_eval(p, args[0]);
    case StructureMap::Empty: need(0); return apply_empty(p, scalar);
    case StructureMap::Total: need(0); return apply_total(p, scalar);
  }
  throw std::invalid_argument("unknown structure map");
}

AlgebraPresentation tensor_presentation(const AlgebraPresentation& p, const AlgebraPresentation& q) {
  const std::size_t dp = p.dimension(), dq = q.dimension();
  std::vector<std::string> labels;
  labels.reserve(dp * dq);
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j < dq; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");

  auto pair_index = [dq](std::size_t i, std::size_t j) { return i * dq + j; };
  auto tensor = [&](const BoolVector& x, const BoolVector& y) {
    BoolVector out;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y) out.add(pair_index(i, j), ci * cj);
    return out;
  };

  AlgebraPresentation t(std::move(labels));
  const std::size_t n = dp * dq;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t a1 = a / dq, a2 = a % dq;
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t b1 = b / dq, b2 = b % dq;
      t.set_union(a, b, tensor(p.union_of(a1, b1), q.union_of(a2, b2)));
      t.set_intersection(a, b, tensor(p.intersection_of(a1, b1), q.intersection_of(a2, b2)));
    }
    t.set_complement(a, tensor(p.complement_of(a1), q.complement_of(a2)));
    PairVector delta;
    for (const auto& [u, cu] : p.coproduct_of(a1))
      for (const auto& [v, cv] : q.coproduct_of(a2))
        delta.add({pair_index(u.first, v.first), pair_index(u.second, v.second)}, cu * cv);
    t.set_coproduct(a, std::move(delta));
    t.set_eval(a, p.eval_of(a1) * q.eval_of(a2));
  }
  t.set_empty(tensor(p.empty_vector(), q.empty_vector()));
  t.set_total(tensor(p.total_vector(), q.total_vector()));
  return t;
}

bool same_structure(const AlgebraPresentation& p, const AlgebraPresentation& q,
                    std::span<const std::size_t> relabel) {
  const std::size_t n = p.dimension();
  if (q.dimension() != n || relabel.size() != n) return false;
  auto r = [&](std::size_t i) { return relabel[i]; };
  auto rv = [&](const BoolVector& v) { return v.map_keys(r); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rv(p.union_of(a, b)) != q.union_of(r(a), r(b))) return false;
      if (rv(p.intersection_of(a, b)) != q.intersection_of(r(a), r(b))) return false;
    }
    if (rv(p.complement_of(a)) != q.complement_of(r(a))) return false;
    auto delta = p.coproduct_of(a).map_keys([&](const std::pair<std::size_t, std::size_t>& uv) {
      return std::pair{r(uv.first), r(uv.second)};
    });
    if (delta != q.coproduct_of(r(a))) return false;
    if (p.eval_of(a) != q.eval_of(r(a))) return false;
  }
  return rv(p.empty_vector()) == q.empty_vector() && rv(p.total_vector()) == q.total_vector();
}

namespace {

template <typename V, typename F>
std::string render_terms(const V& v, F&& key_label) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) s += " + ";
    s += c.str() + " " + key_label(k);
    first = false;
  }
  return s;
}

}  // namespace

std::string render(const BoolVector& v, const AlgebraPresentation& p) {
  return render_terms(v, [&](std::size_t i) { return p.label(i); });
}

std::string render(const TensorVector& v, const AlgebraPresentation& p) {
  return render_terms(v, [&](const std::vector<std::size_t>& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += "(x)";
      s += p.label(key[i]);
    }
    return s;
  });
}

}  // namespace symbool
