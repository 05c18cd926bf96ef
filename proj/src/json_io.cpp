#include "symbool/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace symbool::json_io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad("expected a nonnegative index, got " + j.dump());
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j) {
  if (!j.is_array()) bad("expected an index list, got " + j.dump());
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(index_from_json(e));
  return out;
}

BoolVector sparse_vector(const json& j, std::size_t dim) {
  BoolVector v;
  if (!j.is_array()) bad("expected a vector, got " + j.dump());
  const bool dense = !j.empty() && !j.front().is_array();
  if (dense) {
    if (j.size() != dim) bad("dense vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
    for (std::size_t i = 0; i < j.size(); ++i) v.add(i, rational_from_json(j[i]));
    return v;
  }
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("expected [index, coefficient], got " + e.dump());
    v.add(index_from_json(e[0]), rational_from_json(e[1]));
  }
  return v;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("expected a rational (\"p/q\" or integer), got " + j.dump());
}

json to_json(const Rational& r) { return r.str(); }

Subset subset_from_json(const json& j, unsigned ground_size) {
  if (!j.is_array()) bad("expected a subset as an element list, got " + j.dump());
  std::vector<unsigned> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("subset elements must be integers, got " + e.dump());
    const long long v = e.get<long long>();
    if (v < 1 || v > static_cast<long long>(ground_size))
      bad("element " + std::to_string(v) + " outside [" + std::to_string(ground_size) + "]");
    elems.push_back(static_cast<unsigned>(v));
  }
  return Subset::from_elements(ground_size, elems);
}

json to_json(const Subset& s) { return s.elements(); }

BooleanMonoidTable monoid_from_json(const json& j) {
  const std::size_t n = index_from_json(field(j, "size"));
  auto table = [&](const char* key) {
    const json& rows = field(j, key);
    if (!rows.is_array() || rows.size() != n) bad(std::string("'") + key + "' must have " + std::to_string(n) + " rows");
    std::vector<std::size_t> flat;
    for (const auto& row : rows) {
      auto r = index_list(row);
      if (r.size() != n) bad(std::string("'") + key + "' rows must have " + std::to_string(n) + " entries");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
  };
  return BooleanMonoidTable(n, table("union"), table("intersection"), index_list(field(j, "complement")),
                            index_from_json(field(j, "empty")), index_from_json(field(j, "total")));
}

json to_json(const BooleanMonoidTable& t) {
  const std::size_t n = t.size();
  json u = json::array(), in = json::array(), c = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json ru = json::array(), ri = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      ru.push_back(t.unite(a, b));
      ri.push_back(t.intersect(a, b));
    }
    u.push_back(ru);
    in.push_back(ri);
    c.push_back(t.complement(a));
  }
  return {{"size", n}, {"union", u}, {"intersection", in}, {"complement", c},
          {"empty", t.empty()}, {"total", t.total()}};
}

AlgebraPresentation presentation_from_json(const json& j) {
  const json& labels = field(j, "labels");
  if (!labels.is_array()) bad("'labels' must be a list of strings");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) bad("labels must be strings");
    names.push_back(l.get<std::string>());
  }
  AlgebraPresentation p(std::move(names));
  const std::size_t n = p.dimension();

  auto entries = [&](const char* key, std::size_t width) {
    std::vector<json> out;
    if (!j.contains(key)) return out;
    const json& list = j.at(key);
    if (!list.is_array()) bad(std::string("'") + key + "' must be a list");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != width)
        bad(std::string("'") + key + "' entries need " + std::to_string(width) + " fields, got " + e.dump());
      out.push_back(e);
    }
    return out;
  };
  auto check = [&](std::size_t i) {
    if (i >= n) bad("basis index " + std::to_string(i) + " out of range");
    return i;
  };

  for (const char* key : {"union", "intersection"}) {
    std::vector<BoolVector> acc(n * n);
    for (const auto& e : entries(key, 4))
      acc[check(index_from_json(e[0])) * n + check(index_from_json(e[1]))].add(check(index_from_json(e[2])),
                                                                                 rational_from_json(e[3]));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (std::string(key) == "union") p.set_union(a, b, acc[a * n + b]);
        else p.set_intersection(a, b, acc[a * n + b]);
      }
  }
  std::vector<BoolVector> comp(n);
  for (const auto& e : entries("complement", 3))
    comp[check(index_from_json(e[0]))].add(check(index_from_json(e[1])), rational_from_json(e[2]));
  std::vector<PairVector> cop(n);
  for (const auto& e : entries("coproduct", 4))
    cop[check(index_from_json(e[0]))].add({check(index_from_json(e[1])), check(index_from_json(e[2]))},
                                          rational_from_json(e[3]));
  for (std::size_t i = 0; i < n; ++i) {
    p.set_complement(i, comp[i]);
    p.set_coproduct(i, cop[i]);
  }
  if (j.contains("eval")) {
    const json& ev = j.at("eval");
    if (!ev.is_array() || ev.size() != n) bad("'eval' must list " + std::to_string(n) + " values");
    for (std::size_t i = 0; i < n; ++i) p.set_eval(i, rational_from_json(ev[i]));
  }
  if (j.contains("empty")) p.set_empty(sparse_vector(j.at("empty"), n));
  if (j.contains("total")) p.set_total(sparse_vector(j.at("total"), n));
  return p;
}

json to_json(const BoolVector& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({i, c.str()});
  return out;
}

json to_json(const AlgebraPresentation& p) {
  const std::size_t n = p.dimension();
  json u = json::array(), in = json::array(), c = json::array(), d = json::array(), ev = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, x] : p.union_of(a, b)) u.push_back({a, b, k, x.str()});
      for (const auto& [k, x] : p.intersection_of(a, b)) in.push_back({a, b, k, x.str()});
    }
    for (const auto& [k, x] : p.complement_of(a)) c.push_back({a, k, x.str()});
    for (const auto& [k, x] : p.coproduct_of(a)) d.push_back({a, k.first, k.second, x.str()});
    ev.push_back(p.eval_of(a).str());
  }
  return {{"labels", p.labels()},     {"union", u}, {"intersection", in},
          {"complement", c},          {"coproduct", d}, {"eval", ev},
          {"empty", to_json(p.empty_vector())}, {"total", to_json(p.total_vector())}};
}

PermGroup group_from_json(const json& j, const Limits& limits) {
  if (!j.is_object()) bad("group must be an object");
  if (j.contains("generators")) {
    const unsigned m = static_cast<unsigned>(index_from_json(field(j, "degree")));
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      std::vector<unsigned> images;
      for (std::size_t x : index_list(g)) images.push_back(static_cast<unsigned>(x));
      if (images.size() != m) bad("generator " + g.dump() + " has the wrong degree");
      gens.push_back(Permutation::from_one_based(images));
    }
    return enumerate_group(m, std::move(gens), limits);
  }
  const json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) bad("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "young") {
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array() || blocks.empty()) bad("'blocks' must be a nonempty list");
    if (blocks.front().is_array()) {
      std::vector<std::vector<unsigned>> pos;
      unsigned m = 0;
      for (const auto& b : blocks) {
        std::vector<unsigned> block;
        for (std::size_t x : index_list(b)) block.push_back(static_cast<unsigned>(x));
        m += static_cast<unsigned>(block.size());
        pos.push_back(std::move(block));
      }
      return young_group(m, pos, limits);
    }
    std::vector<unsigned> sizes;
    for (std::size_t x : index_list(blocks)) sizes.push_back(static_cast<unsigned>(x));
    return young_group_from_sizes(sizes, limits);
  }
  const unsigned m = static_cast<unsigned>(index_from_json(field(j, "degree")));
  if (kind == "symmetric") return symmetric_group(m, limits);
  if (kind == "cyclic") return cyclic_group(m, limits);
  if (kind == "trivial") return trivial_group(m);
  bad("unknown group kind '" + kind + "'");
}

Measure measure_from_json(const json& j) {
  const std::size_t k = index_from_json(field(j, "k"));
  const json& w = field(j, "weights");
  if (!w.is_array() || w.size() != k) bad("'weights' must have k = " + std::to_string(k) + " entries");
  std::vector<Rational> weights;
  for (const auto& x : w) weights.push_back(rational_from_json(x));
  return Measure(std::move(weights));
}

json to_json(const Measure& mu) {
  json w = json::array();
  for (const auto& x : mu.weights()) w.push_back(x.str());
  return {{"k", mu.ambient()}, {"weights", w}};
}

MultisetClass class_from_json(const json& j, unsigned ground_size) {
  if (!j.is_array()) bad("expected a class as a list of subsets, got " + j.dump());
  std::vector<Subset> entries;
  for (const auto& s : j) entries.push_back(subset_from_json(s, ground_size));
  return MultisetClass(ground_size, std::move(entries));
}

json to_json(const MultisetClass& c) {
  json out = json::array();
  for (const auto& s : c.entries()) out.push_back(to_json(s));
  return out;
}

Distribution distribution_from_json(const json& j) {
  const unsigned k = static_cast<unsigned>(index_from_json(field(j, "k")));
  const json& entries = field(j, "entries");
  if (!entries.is_array()) bad("'entries' must be a list");
  SubsetVector w;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2) bad("distribution entries are [subset, \"p/q\"], got " + e.dump());
    w.add(subset_from_json(e[0], k), rational_from_json(e[1]));
  }
  return Distribution(k, std::move(w));
}

json to_json(const Distribution& d) {
  json entries = json::array();
  for (const auto& [s, p] : d.weights()) entries.push_back({to_json(s), p.str()});
  return {{"k", d.ground_size()}, {"entries", entries}};
}

json to_json(const HatVector& v) {
  json out = json::array();
  for (const auto& [l, c] : v.terms) out.push_back({l, c.str()});
  return out;
}

}  // namespace symbool::json_io
