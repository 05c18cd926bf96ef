#include "symbool/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "symbool/axioms.hpp"
#include "symbool/boolean_monoid.hpp"
#include "symbool/closed_forms.hpp"
#include "symbool/coinvariants.hpp"
#include "symbool/distribution.hpp"
#include "symbool/json_io.hpp"
#include "symbool/random.hpp"
#include "symbool/symmetric_ie.hpp"

namespace symbool::cli {

namespace {

using json_io::json;

struct GroupOptions {
  std::string construction;
  unsigned m = 0;
  unsigned base_k = 1;
  std::vector<unsigned> blocks;
  unsigned k = 0;
};

PermGroup build_group(const GroupOptions& o) {
  if (o.construction == "young") {
    if (o.blocks.empty()) throw std::invalid_argument("--blocks is required for the young construction");
    unsigned total = 0;
    for (unsigned b : o.blocks) total += b;
    if (o.m != 0 && o.m != total)
      throw std::invalid_argument("--blocks sum to " + std::to_string(total) + " but --m is " + std::to_string(o.m));
    return young_group_from_sizes(o.blocks);
  }
  if (o.m == 0) throw std::invalid_argument("--m is required for the " + o.construction + " construction");
  if (o.construction == "sym") return symmetric_group(o.m);
  if (o.construction == "cyclic") return cyclic_group(o.m);
  throw std::invalid_argument("unknown construction '" + o.construction + "'");
}

/// Orbit labels, replaced by a^ when the base is <P[1]> and the number of
/// [1] entries already tells the orbits apart.
std::vector<std::string> class_labels(const CoinvariantSpace& space) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < space.dimension(); ++i) labels.push_back(space.orbit_label(i));
  if (space.base().dimension() != 2) return labels;
  std::vector<std::string> hats;
  std::set<std::size_t> seen;
  for (const auto& orbit : space.orbits()) {
    const auto ones = static_cast<std::size_t>(std::count(orbit.canonical.begin(), orbit.canonical.end(), 1u));
    if (!seen.insert(ones).second) return labels;
    hats.push_back(std::to_string(ones) + "^");
  }
  return hats;
}

struct Built {
  AlgebraPresentation presentation;
  std::string title;
  std::optional<CoinvariantSpace> space;
};

Built build_construction(const GroupOptions& o) {
  if (o.construction == "closed") {
    if (o.k == 0) throw std::invalid_argument("--k is required for the closed construction");
    return {closed_form_presentation(o.k), "closed forms for <P[" + std::to_string(o.k) + "]>/S_" + std::to_string(o.k),
            std::nullopt};
  }
  CoinvariantSpace space(build_group(o), power_set_presentation(o.base_k));
  AlgebraPresentation p = coinv_presentation(space);
  p.set_labels(class_labels(space));
  std::string title = space.group().name() + " co-invariants of <P[" + std::to_string(o.base_k) + "]>^(x)" +
                      std::to_string(space.tensor_power());
  return {std::move(p), std::move(title), std::move(space)};
}

void print_aligned(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& r : rows) out << "  " << r.first << std::string(width - r.first.size(), ' ') << " = " << r.second << '\n';
}

json sparse(const BoolVector& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({i, c.str()});
  return out;
}

int cmd_table(const GroupOptions& o, const std::string& op_name, const std::string& format, std::ostream& out) {
  const StructureMap map = parse_structure_map(op_name);
  if (map != StructureMap::Union && map != StructureMap::Intersection && map != StructureMap::Complement)
    throw std::invalid_argument("--op must be union, intersection or complement");
  const Built b = build_construction(o);
  const auto& p = b.presentation;
  const std::size_t n = p.dimension();

  if (format == "json") {
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      if (map == StructureMap::Complement) {
        entries.push_back({i, sparse(p.complement_of(i))});
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
        entries.push_back({i, j, sparse(map == StructureMap::Union ? p.union_of(i, j) : p.intersection_of(i, j))});
    }
    json doc;
    if (o.construction == "closed") {
      doc = {{"op", op_name}, {"k", o.k}, {"entries", entries}};
    } else {
      doc = {{"op", op_name},
             {"construction", o.construction},
             {"group", b.space->group().name()},
             {"m", b.space->tensor_power()},
             {"base_k", o.base_k},
             {"labels", p.labels()},
             {"entries", entries}};
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }

  out << b.title << ", dimension " << n << '\n';
  if (b.space) {
    std::vector<std::pair<std::string, std::string>> legend;
    for (std::size_t i = 0; i < n; ++i)
      if (p.label(i) != b.space->orbit_label(i)) legend.emplace_back(p.label(i), b.space->orbit_label(i));
    if (!legend.empty()) print_aligned(out, legend);
  }
  out << op_name << ":\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (map == StructureMap::Complement) {
      rows.emplace_back("c(" + p.label(i) + ")", render(p.complement_of(i), p));
      continue;
    }
    const std::string sym = map == StructureMap::Union ? " u " : " n ";
    for (std::size_t j = 0; j < n; ++j)
      rows.emplace_back(p.label(i) + sym + p.label(j),
                        render(map == StructureMap::Union ? p.union_of(i, j) : p.intersection_of(i, j), p));
  }
  print_aligned(out, rows);
  return kExitOk;
}

std::string tuple_str(const std::vector<std::size_t>& t, const AlgebraPresentation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + p.label(t[i]);
  return s + ")";
}

int cmd_axioms(const std::string& input, std::optional<unsigned> power_set_k, const GroupOptions& o,
               std::ostream& out) {
  const int sources = !input.empty() + power_set_k.has_value() + !o.construction.empty();
  if (sources != 1) throw std::invalid_argument("give exactly one of --input, --power-set, --construction");
  std::optional<AlgebraPresentation> p;
  std::string title;
  if (!input.empty()) {
    p = json_io::presentation_from_json(json_io::read_file(input));
    title = input;
  } else if (power_set_k) {
    p = power_set_presentation(*power_set_k);
    title = "<P[" + std::to_string(*power_set_k) + "]>";
  } else {
    Built b = build_construction(o);
    p = std::move(b.presentation);
    title = b.title;
  }

  const AxiomReport report = check_boolean_axioms(*p);
  out << title << ", dimension " << p->dimension() << '\n';
  std::size_t width = 0;
  for (const auto& r : report.equations) width = std::max(width, equation_name(r.equation).size());
  for (const auto& r : report.equations) {
    const std::string name = equation_name(r.equation);
    out << "axiom " << axiom_number(r.equation) << "  " << name << std::string(width - name.size(), ' ') << "  ";
    if (r.passed) {
      out << "pass (" << r.tuples_checked << " tuples)\n";
      continue;
    }
    out << "FAIL (" << r.failures << " of " << r.tuples_checked << " tuples)\n";
    if (r.witness) {
      out << "    first witness " << tuple_str(r.witness->tuple, *p) << ": " << render(r.witness->lhs, *p)
          << " != " << render(r.witness->rhs, *p) << '\n';
    }
  }
  const auto failed = report.failed_axioms();
  if (failed.empty()) {
    out << "all 8 axioms hold\n";
    return kExitOk;
  }
  out << "failing axioms:";
  for (int a : failed) out << ' ' << a;
  out << '\n';
  return kExitMismatch;
}

int cmd_stone(const std::string& input, std::optional<unsigned> power_set_k, std::ostream& out) {
  if (input.empty() == !power_set_k) throw std::invalid_argument("give exactly one of --input, --power-set");
  const BooleanMonoidTable t =
      input.empty() ? BooleanMonoidTable::power_set(*power_set_k) : json_io::monoid_from_json(json_io::read_file(input));
  const MonoidAxiomReport axioms = monoid_axiom_check(t);
  out << "monoid with " << t.size() << " elements\n";
  if (!axioms.all_passed()) {
    out << "not a Boolean monoid:\n";
    for (const auto& r : axioms.identities) {
      if (r.passed) continue;
      out << "  " << r.name << " fails at (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << r.witness[i];
      out << ")\n";
    }
    return kExitMismatch;
  }
  MonoidIsomorphism iso;
  try {
    iso = atoms_and_stone_iso(t);
  } catch (const InconsistencyError& e) {
    out << "isomorphism check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
  out << "atoms:";
  for (std::size_t i = 0; i < iso.atoms.size(); ++i) out << ' ' << iso.atoms[i] << "->" << (i + 1);
  out << '\n';
  out << "isomorphism onto P[" << iso.atoms.size() << "]:\n";
  for (std::size_t b = 0; b < t.size(); ++b) out << "  " << b << " -> " << iso.forward_map[b].str() << '\n';
  out << "verified: operations, empty and total are preserved\n";
  return kExitOk;
}

int oracle_closed_forms(unsigned k, std::ostream& out) {
  const ClosedFormReport r = verify_closed_forms(k);
  out << "k = " << k << ", " << (k + 1) * (k + 1) << " pairs (a,b)\n";
  out << "union formula: " << (r.union_matches ? "matches brute force" : "MISMATCH") << '\n';
  out << "complement formula: " << (r.complement_matches ? "matches brute force" : "MISMATCH") << '\n';
  out << "intersection formula: corrected form " << (r.intersection_matches ? "matches brute force" : "MISMATCH");
  if (r.uncorrected_mismatches.empty()) {
    out << "; uncorrected form also matches\n";
  } else {
    const auto& first = r.uncorrected_mismatches.front();
    out << "; uncorrected form mismatch at (a=" << first.a << ",b=" << first.b << ")\n";
    out << "uncorrected form differs at " << r.uncorrected_mismatches.size() << " pairs:\n";
    for (const auto& m : r.uncorrected_mismatches) {
      Rational mass;
      for (const auto& [l, c] : m.closed.terms) mass += c;
      out << "  (a=" << m.a << ",b=" << m.b << "): " << render(m.closed) << " (mass " << mass.str()
          << "), brute force " << render(m.brute_force) << '\n';
    }
  }
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    out << "first mismatch: " << m.op << " (a=" << m.a << ",b=" << m.b << "): closed " << render(m.closed)
        << ", brute force " << render(m.brute_force) << '\n';
  }
  return r.all_match() ? kExitOk : kExitMismatch;
}

int oracle_eddy(const GroupOptions& o, unsigned n, std::ostream& out) {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  const Built b = build_construction(o);
  const CoinvariantSpace& space = *b.space;
  const auto& p = b.presentation;
  const std::size_t dim = space.dimension();
  const std::uint64_t tuples = saturating_pow(dim, n);
  const Limits limits;
  if (tuples > limits.tuple_cap) throw BudgetExceeded("operand tuples", tuples, limits.tuple_cap);

  out << b.title << ", dimension " << dim << ", " << n << " operands\n";
  bool all = true;
  for (SetOp op : {SetOp::Union, SetOp::Intersection}) {
    std::vector<std::size_t> t(n, 0);
    std::uint64_t checked = 0;
    std::optional<std::vector<std::size_t>> bad;
    while (true) {
      const BoolVector mary = coinv_mary_product(space, op, t);
      BoolVector folded = BoolVector::basis(t[0]);
      for (std::size_t i = 1; i < n; ++i) {
        const BoolVector next = BoolVector::basis(t[i]);
        folded = op == SetOp::Union ? apply_union(p, folded, next) : apply_intersection(p, folded, next);
      }
      ++checked;
      if (mary != folded && !bad) {
        bad = t;
        out << "  " << to_string(op) << " mismatch at " << tuple_str(t, p) << ": m-ary " << render(mary, p)
            << ", folded " << render(folded, p) << '\n';
      }
      std::size_t pos = n;
      while (pos > 0 && ++t[pos - 1] == dim) t[--pos] = 0;
      if (pos == 0) break;
    }
    out << to_string(op) << ": " << checked << " operand tuples, " << (bad ? "MISMATCH" : "m-ary product equals folded product")
        << '\n';
    all = all && !bad;
  }
  return all ? kExitOk : kExitMismatch;
}

/// All m-element multisets of subsets of [k], as nondecreasing bitmask runs.
std::vector<MultisetClass> all_classes(unsigned k, std::size_t m) {
  std::vector<MultisetClass> out;
  const std::uint32_t count = std::uint32_t{1} << k;
  std::vector<std::uint32_t> idx(m, 0);
  while (true) {
    std::vector<Subset> entries;
    for (auto b : idx) entries.emplace_back(k, b);
    out.emplace_back(k, std::move(entries));
    std::size_t pos = m;
    while (pos > 0 && idx[pos - 1] + 1 == count) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < m; ++i) idx[i] = idx[pos - 1];
  }
  return out;
}

std::string classes_str(std::span<const MultisetClass> cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " | " : "") + cs[i].str();
  return s;
}

std::string render(const ClassVector& v) {
  std::string s;
  for (const auto& [c, w] : v) s += (s.empty() ? "" : " + ") + w.str() + " " + c.str();
  return s.empty() ? "0" : s;
}

int oracle_verde(unsigned m, unsigned n, unsigned k, std::ostream& out) {
  if (m == 0 || n == 0) throw std::invalid_argument("--m and --n must be positive");
  const CoinvariantSpace space(symmetric_group(m), power_set_presentation(k));
  const auto classes = all_classes(k, m);
  const std::uint64_t tuples = saturating_pow(classes.size(), n);
  const Limits limits;
  if (tuples > limits.tuple_cap) throw BudgetExceeded("operand tuples", tuples, limits.tuple_cap);

  std::vector<std::size_t> t(n, 0);
  std::uint64_t checked = 0;
  bool ok = true;
  while (true) {
    std::vector<MultisetClass> ops;
    std::vector<std::size_t> orbits;
    for (auto i : t) {
      ops.push_back(classes[i]);
      orbits.push_back(orbit_of_class(space, classes[i]));
    }
    const ClassVector direct = nfold_union(ops);
    const ClassVector via_orbits = to_class_vector(space, coinv_mary_product(space, SetOp::Union, orbits));
    ++checked;
    if (direct != via_orbits && ok) {
      ok = false;
      out << "mismatch at " << classes_str(ops) << ": n-fold union " << render(direct) << ", co-invariant product "
          << render(via_orbits) << '\n';
    }
    std::size_t pos = n;
    while (pos > 0 && ++t[pos - 1] == classes.size()) t[--pos] = 0;
    if (pos == 0) break;
  }
  out << "m = " << m << ", n = " << n << ", k = " << k << ": " << checked << " operand tuples, "
      << (ok ? "n-fold union equals the co-invariant product" : "MISMATCH") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

Measure parse_measure(const std::vector<std::string>& weights) {
  std::vector<Rational> w;
  for (const auto& s : weights) w.push_back(Rational::parse(s));
  return Measure(std::move(w));
}

std::string measure_str(const Measure& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.weights().size(); ++i) s += (i ? "," : "") + mu.weights()[i].str();
  return s + ")";
}

struct IeOptions {
  std::string fn;
  unsigned l = 1;
  unsigned m = 1;
  unsigned n = 2;
  unsigned k = 2;
  std::vector<std::string> measure;
  std::string measure_file;
  std::string operands;
  bool random = false;
  unsigned trials = 100;
  std::uint64_t seed = 0;
};

/// raw holds the operand entries in the order given, since the fixed
/// listing is not symmetric in a, b, c, d.
void print_listing_comparison(const SymFnSpec& spec, std::span<const MultisetClass> ops,
                              const std::vector<std::vector<Subset>>* raw, const Measure& mu, const Rational& lhs,
                              std::ostream& out) {
  if (spec.degree != 2 || ops.size() != 2 || ops[0].size() != 2 || spec.kind == SymFnKind::Power) return;
  const auto& x = raw ? (*raw)[0] : ops[0].entries();
  const auto& y = raw ? (*raw)[1] : ops[1].entries();
  const bool e = spec.kind == SymFnKind::Elementary;
  const Rational listed =
      (e ? listed_2e2_expansion(mu, x[0], x[1], y[0], y[1]) : listed_2h2_expansion(mu, x[0], x[1], y[0], y[1])) /
      Rational(2);
  out << "fixed two-by-two listing of 2" << (e ? "e" : "h") << "_2, halved = " << listed.str();
  if (listed == lhs) out << " (agrees with lhs)\n";
  else out << " (differs from lhs by " << (listed - lhs).str() << ")\n";
}

int report_instance(const SymFnSpec& spec, std::span<const MultisetClass> ops, const Measure& mu, std::ostream& out,
                    const std::vector<std::vector<Subset>>* raw = nullptr) {
  const IeReport r = ie_verify(spec, ops, mu);
  out << "measure " << measure_str(mu) << '\n';
  out << "operands " << classes_str(ops) << '\n';
  out << "n-fold union = " << render(nfold_union(ops)) << '\n';
  out << "lhs = " << r.lhs.str() << '\n';
  out << "rhs = " << r.rhs.str() << '\n';
  print_listing_comparison(spec, ops, raw, mu, r.lhs, out);
  if (r.equal) {
    out << "lhs = rhs\n";
    return kExitOk;
  }
  out << "MISMATCH; per-sigma contributions:\n";
  for (const auto& term : r.breakdown) {
    out << "  sigma";
    for (const auto& s : term.sigma) out << ' ' << s.str();
    out << ": lhs " << term.lhs.str() << ", rhs " << term.rhs.str() << '\n';
  }
  return kExitMismatch;
}

int cmd_ie(const IeOptions& o, bool n_given, bool m_given, bool k_given, std::ostream& out) {
  const SymFnSpec spec{parse_symfn_kind(o.fn == "p" ? "power" : o.fn == "e" ? "elementary" : o.fn == "h" ? "homogeneous" : o.fn),
                       o.l};
  if (!o.measure.empty() && !o.measure_file.empty()) throw std::invalid_argument("give only one of --measure, --measure-file");
  std::optional<Measure> mu;
  if (!o.measure.empty()) mu = parse_measure(o.measure);
  if (!o.measure_file.empty()) mu = json_io::measure_from_json(json_io::read_file(o.measure_file));
  unsigned k = o.k;
  if (mu) {
    if (k_given && mu->ambient() != k)
      throw std::invalid_argument("measure has " + std::to_string(mu->ambient()) + " weights but --k is " + std::to_string(k));
    k = mu->ambient();
  }

  std::optional<std::vector<MultisetClass>> given;
  std::vector<std::vector<Subset>> raw;
  if (!o.operands.empty()) {
    const json doc = o.operands.front() == '[' ? json::parse(o.operands, nullptr, false) : json_io::read_file(o.operands);
    if (doc.is_discarded() || !doc.is_array() || doc.empty()) throw std::invalid_argument("--operands must be a nonempty JSON list of classes");
    given.emplace();
    for (const auto& c : doc) {
      given->push_back(json_io::class_from_json(c, k));
      raw.emplace_back();
      for (const auto& e : c) raw.back().push_back(json_io::subset_from_json(e, k));
    }
    if (n_given && given->size() != o.n) throw std::invalid_argument("--operands lists " + std::to_string(given->size()) + " classes but --n is " + std::to_string(o.n));
    if (m_given && given->front().size() != o.m) throw std::invalid_argument("--operands classes do not have m = " + std::to_string(o.m) + " entries");
  }
  const std::size_t n = given ? given->size() : o.n;
  const std::size_t m = given ? given->front().size() : o.m;
  out << to_string(spec.kind) << " l = " << spec.degree << ", n = " << n << ", m = " << m << ", k = " << k << '\n';

  if (o.random) {
    InstanceRng rng(o.seed);
    out << "seed " << o.seed << ", " << o.trials << " trials\n";
    for (unsigned trial = 1; trial <= o.trials; ++trial) {
      const Measure tmu = mu ? *mu : rng.measure(k);
      std::vector<MultisetClass> ops;
      if (given) ops = *given;
      else
        for (std::size_t i = 0; i < n; ++i) ops.push_back(rng.multiset_class(k, m));
      const IeReport r = ie_verify(spec, ops, tmu);
      if (!r.equal) {
        out << "trial " << trial << ":\n";
        report_instance(spec, ops, tmu, out);
        return kExitMismatch;
      }
      out << "trial " << trial << ": mu " << measure_str(tmu) << ", operands " << classes_str(ops)
          << ": lhs = rhs = " << r.lhs.str() << '\n';
    }
    out << "all " << o.trials << " trials: lhs = rhs\n";
    return kExitOk;
  }

  if (!mu) throw std::invalid_argument("give --measure, --measure-file or --random");
  if (given) return report_instance(spec, *given, *mu, out, &raw);

  const auto classes = all_classes(k, m);
  const std::uint64_t tuples = saturating_pow(classes.size(), n);
  constexpr std::uint64_t kExhaustiveCap = 4096;
  if (tuples > kExhaustiveCap)
    throw std::invalid_argument(std::to_string(tuples) + " operand tuples is too many to enumerate; give --operands or --random");
  std::vector<std::size_t> t(n, 0);
  while (true) {
    std::vector<MultisetClass> ops;
    for (auto i : t) ops.push_back(classes[i]);
    if (!ie_verify(spec, ops, *mu).equal) return report_instance(spec, ops, *mu, out);
    std::size_t pos = n;
    while (pos > 0 && ++t[pos - 1] == classes.size()) t[--pos] = 0;
    if (pos == 0) break;
  }
  out << "measure " << measure_str(*mu) << '\n';
  out << "all " << tuples << " operand tuples: lhs = rhs\n";
  return kExitOk;
}

int cmd_dist(const std::string& op_name, std::optional<unsigned> k, const std::string& format,
             const std::vector<std::string>& files, std::ostream& out) {
  const SetOp op = parse_set_op(op_name);
  const std::size_t need = op == SetOp::Complement ? 1 : 2;
  if (files.size() != need)
    throw std::invalid_argument(op_name + " takes " + std::to_string(need) + " distribution file(s)");
  std::vector<Distribution> ds;
  for (const auto& f : files) {
    ds.push_back(json_io::distribution_from_json(json_io::read_file(f)));
    if (k && ds.back().ground_size() != *k)
      throw std::invalid_argument("'" + f + "' is over [" + std::to_string(ds.back().ground_size()) + "], not [" + std::to_string(*k) + "]");
  }
  const Distribution result = op == SetOp::Complement ? dist_complement(ds[0]) : dist_product(op, ds[0], ds[1]);
  if (format == "json") {
    out << json_io::to_json(result).dump() << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [s, p] : result.weights()) rows.emplace_back("P" + s.str(), p.str());
  print_aligned(out, rows);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with linear Boolean algebras and symmetric inclusion-exclusion", "symbool"};
  app.require_subcommand(1);

  const std::vector<std::string> constructions{"sym", "cyclic", "young", "closed"};
  const std::vector<std::string> ops{"union", "intersection", "complement"};
  const std::vector<std::string> formats{"text", "json"};

  GroupOptions table_o;
  std::string table_op = "union", table_format = "text";
  auto* table = app.add_subcommand("table", "Structure constants of a co-invariant algebra");
  table->add_option("--construction", table_o.construction, "sym, cyclic, young or closed")
      ->required()->check(CLI::IsMember(constructions));
  table->add_option("--m", table_o.m, "Tensor power (group degree)");
  table->add_option("--base-k", table_o.base_k, "Base power set P[k]")->capture_default_str();
  table->add_option("--blocks", table_o.blocks, "Young block sizes, e.g. 2,1")->delimiter(',');
  table->add_option("--k", table_o.k, "Ambient k for the closed construction");
  table->add_option("--op", table_op, "union, intersection or complement")->check(CLI::IsMember(ops))->capture_default_str();
  table->add_option("--format", table_format, "text or json")->check(CLI::IsMember(formats))->capture_default_str();

  GroupOptions axioms_o;
  std::string axioms_input;
  std::optional<unsigned> axioms_power;
  auto* axioms = app.add_subcommand("axioms", "Check the eight linear Boolean algebra axioms");
  axioms->add_option("--input", axioms_input, "Presentation JSON file");
  axioms->add_option("--power-set", axioms_power, "Use <P[k]>");
  axioms->add_option("--construction", axioms_o.construction, "sym, cyclic, young or closed")
      ->check(CLI::IsMember(constructions));
  axioms->add_option("--m", axioms_o.m, "Tensor power");
  axioms->add_option("--base-k", axioms_o.base_k, "Base power set P[k]")->capture_default_str();
  axioms->add_option("--blocks", axioms_o.blocks, "Young block sizes")->delimiter(',');
  axioms->add_option("--k", axioms_o.k, "Ambient k for the closed construction");

  std::string stone_input;
  std::optional<unsigned> stone_power;
  auto* stone = app.add_subcommand("stone", "Atoms and isomorphism onto a power set");
  stone->add_option("--input", stone_input, "Monoid table JSON file");
  stone->add_option("--power-set", stone_power, "Use P[k]");

  std::string check;
  GroupOptions oracle_o;
  oracle_o.construction = "sym";
  unsigned oracle_k = 3, oracle_n = 3;
  oracle_o.m = 3;
  auto* oracle = app.add_subcommand("oracle", "Compare closed forms and theorems against brute force");
  oracle->add_option("--check", check, "closed-forms, eddy or verde")
      ->required()->check(CLI::IsMember(std::vector<std::string>{"closed-forms", "eddy", "verde"}));
  oracle->add_option("--k", oracle_k, "Ambient k (closed-forms, verde)")->capture_default_str();
  auto* oracle_m = oracle->add_option("--m", oracle_o.m, "Tensor power")->capture_default_str();
  oracle->add_option("--n", oracle_n, "Operand count")->capture_default_str();
  oracle->add_option("--group", oracle_o.construction, "sym, cyclic or young (eddy)")
      ->check(CLI::IsMember(std::vector<std::string>{"sym", "cyclic", "young"}))->capture_default_str();
  oracle->add_option("--blocks", oracle_o.blocks, "Young block sizes (eddy)")->delimiter(',');
  oracle->add_option("--base-k", oracle_o.base_k, "Base power set P[k] (eddy)")->capture_default_str();

  IeOptions ie_o;
  auto* ie = app.add_subcommand("ie", "Verify symmetric inclusion-exclusion");
  ie->add_option("--fn", ie_o.fn, "power, elementary or homogeneous")
      ->required()->check(CLI::IsMember(std::vector<std::string>{"power", "elementary", "homogeneous", "p", "e", "h"}));
  ie->add_option("--l", ie_o.l, "Degree")->capture_default_str();
  auto* ie_m = ie->add_option("--m", ie_o.m, "Class size")->capture_default_str();
  auto* ie_n = ie->add_option("--n", ie_o.n, "Operand count")->capture_default_str();
  auto* ie_k = ie->add_option("--k", ie_o.k, "Ground set [k]")->capture_default_str();
  ie->add_option("--measure", ie_o.measure, "Singleton weights w1,w2,...")->delimiter(',');
  ie->add_option("--measure-file", ie_o.measure_file, "Measure JSON file");
  ie->add_option("--operands", ie_o.operands, "JSON list of classes, inline or a file path");
  ie->add_flag("--random", ie_o.random, "Random measures and operands");
  ie->add_option("--trials", ie_o.trials, "Random trials")->capture_default_str();
  ie->add_option("--seed", ie_o.seed, "Random seed")->capture_default_str();

  std::string dist_op;
  std::optional<unsigned> dist_k;
  std::string dist_format = "text";
  std::vector<std::string> dist_files;
  auto* dist = app.add_subcommand("dist", "Law of union, intersection or complement of random subsets");
  dist->add_option("--op", dist_op, "union, intersection or complement")->required()->check(CLI::IsMember(ops));
  dist->add_option("--k", dist_k, "Expected ground set size");
  dist->add_option("--format", dist_format, "text or json")->check(CLI::IsMember(formats))->capture_default_str();
  dist->add_option("files", dist_files, "Distribution JSON files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_o, table_op, table_format, out);
    if (*axioms) return cmd_axioms(axioms_input, axioms_power, axioms_o, out);
    if (*stone) return cmd_stone(stone_input, stone_power, out);
    if (*oracle) {
      if (check == "closed-forms") return oracle_closed_forms(oracle_k, out);
      if (check == "eddy") {
        if (oracle_o.construction == "young" && oracle_m->count() == 0) oracle_o.m = 0;
        return oracle_eddy(oracle_o, oracle_n, out);
      }
      return oracle_verde(oracle_o.m, oracle_n, oracle_k, out);
    }
    if (*ie) return cmd_ie(ie_o, ie_n->count() > 0, ie_m->count() > 0, ie_k->count() > 0, out);
    if (*dist) return cmd_dist(dist_op, dist_k, dist_format, dist_files, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symbool::cli
