#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symbool/axioms.hpp"
#include "symbool/boolean_monoid.hpp"
#include "symbool/cli.hpp"
#include "symbool/closed_forms.hpp"
#include "symbool/coinvariants.hpp"
#include "symbool/distribution.hpp"
#include "symbool/json_io.hpp"
#include "symbool/symmetric_ie.hpp"

namespace py = pybind11;
using namespace symbool;

namespace {

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.raw().get_num().get_str())), py::int_(py::str(r.raw().get_den().get_str())));
}

// Accepts int, fractions.Fraction or a "p/q" string.
Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::dict to_py(const HatVector& v) {
  py::dict d;
  for (const auto& [l, c] : v.terms) d[py::int_(l)] = to_py(c);
  return d;
}

py::dict to_py(const BoolVector& v) {
  py::dict d;
  for (const auto& [i, c] : v) d[py::int_(i)] = to_py(c);
  return d;
}

py::tuple to_py(const Subset& s) { return py::cast(s.elements()); }

py::tuple to_py(const MultisetClass& c) {
  py::list out;
  for (const auto& s : c.entries()) out.append(to_py(s));
  return py::tuple(out);
}

Subset subset_from_py(const std::vector<unsigned>& elems, unsigned k) { return Subset::from_elements(k, elems); }

MultisetClass class_from_py(const std::vector<std::vector<unsigned>>& c, unsigned k) {
  std::vector<Subset> entries;
  for (const auto& s : c) entries.push_back(subset_from_py(s, k));
  return MultisetClass(k, std::move(entries));
}

Measure measure_from_py(const py::sequence& weights) {
  std::vector<Rational> w;
  for (const auto& x : weights) w.push_back(from_py(x));
  return Measure(std::move(w));
}

PermGroup group_from_py(const std::string& kind, unsigned m, const std::vector<unsigned>& blocks) {
  if (kind == "sym" || kind == "symmetric") return symmetric_group(m);
  if (kind == "cyclic") return cyclic_group(m);
  if (kind == "young") return young_group_from_sizes(blocks);
  if (kind == "trivial") return trivial_group(m);
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

Distribution distribution_from_py(unsigned k, const py::dict& d) {
  SubsetVector w;
  for (const auto& [key, value] : d) w.add(subset_from_py(key.cast<std::vector<unsigned>>(), k), from_py(value));
  return Distribution(k, std::move(w));
}

py::dict to_py(const Distribution& d) {
  py::dict out;
  for (const auto& [s, p] : d.weights()) out[to_py(s)] = to_py(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_symbool, m) {
  m.doc() = "Exact linear Boolean algebra computations";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def(
      "coinvariant_table",
      [](const std::string& group, unsigned degree, unsigned base_k, const std::vector<unsigned>& blocks,
         const std::string& op) {
        const CoinvariantSpace space(group_from_py(group, degree, blocks), power_set_presentation(base_k));
        const SetOp set_op = parse_set_op(op);
        py::list labels;
        for (std::size_t i = 0; i < space.dimension(); ++i) labels.append(space.orbit_label(i));
        py::dict table;
        if (set_op == SetOp::Complement) {
          const AlgebraPresentation p = coinv_presentation(space);
          for (std::size_t i = 0; i < space.dimension(); ++i) table[py::int_(i)] = to_py(p.complement_of(i));
        } else {
          for (std::size_t i = 0; i < space.dimension(); ++i)
            for (std::size_t j = 0; j < space.dimension(); ++j)
              table[py::make_tuple(i, j)] = to_py(coinv_binary_product(space, set_op, i, j));
        }
        py::dict out;
        out["group"] = space.group().name();
        out["labels"] = labels;
        out["table"] = table;
        return out;
      },
      py::arg("group"), py::arg("m") = 0, py::arg("base_k") = 1, py::arg("blocks") = std::vector<unsigned>{},
      py::arg("op") = "union", "Structure constants of <P[base_k]>^(x)m / K, keyed by orbit indices.");

  m.def("orbit_count", [](const std::string& group, unsigned degree, unsigned base_k,
                          const std::vector<unsigned>& blocks) {
        const PermGroup g = group_from_py(group, degree, blocks);
        const CoinvariantSpace space(g, power_set_presentation(base_k));
        return py::make_tuple(space.dimension(), burnside_count(g, std::size_t{1} << base_k));
      },
      py::arg("group"), py::arg("m") = 0, py::arg("base_k") = 1, py::arg("blocks") = std::vector<unsigned>{},
      "(orbit count, Burnside count)");

  m.def("closed_union", [](unsigned a, unsigned b, unsigned k) { return to_py(closed_union({a, k}, {b, k})); },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("closed_intersection",
        [](unsigned a, unsigned b, unsigned k) { return to_py(closed_intersection({a, k}, {b, k})); },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("closed_complement", [](unsigned a, unsigned k) { return closed_complement({a, k}).value(); },
        py::arg("a"), py::arg("k"));
  m.def("verify_closed_forms", [](unsigned k) {
        const ClosedFormReport r = verify_closed_forms(k);
        py::list uncorrected;
        for (const auto& x : r.uncorrected_mismatches) uncorrected.append(py::make_tuple(x.a, x.b));
        py::dict out;
        out["union"] = r.union_matches;
        out["intersection"] = r.intersection_matches;
        out["complement"] = r.complement_matches;
        out["uncorrected_mismatches"] = uncorrected;
        return out;
      },
      py::arg("k"));

  m.def("failed_axioms", [](unsigned k) { return check_boolean_axioms(power_set_presentation(k)).failed_axioms(); },
        py::arg("k"), "Failing axiom groups of <P[k]> (empty when Boolean).");
  m.def("failed_axioms_json",
        [](const std::string& text) {
          return check_boolean_axioms(json_io::presentation_from_json(json_io::json::parse(text))).failed_axioms();
        },
        py::arg("presentation_json"));
  m.def("failed_axioms_coinvariant",
        [](const std::string& group, unsigned degree, unsigned base_k, const std::vector<unsigned>& blocks) {
          const CoinvariantSpace space(group_from_py(group, degree, blocks), power_set_presentation(base_k));
          return check_boolean_axioms(coinv_presentation(space)).failed_axioms();
        },
        py::arg("group"), py::arg("m") = 0, py::arg("base_k") = 1, py::arg("blocks") = std::vector<unsigned>{});

  m.def("stone_atoms",
        [](const std::string& text) {
          const MonoidIsomorphism iso = atoms_and_stone_iso(json_io::monoid_from_json(json_io::json::parse(text)));
          py::list images;
          for (const auto& s : iso.forward_map) images.append(to_py(s));
          return py::make_tuple(iso.atoms, images);
        },
        py::arg("monoid_json"), "(atoms, image of each element as a tuple of 1-based atom positions)");

  m.def("classical_ie",
        [](const py::sequence& weights, const std::vector<std::vector<unsigned>>& sets) {
          const Measure mu = measure_from_py(weights);
          std::vector<Subset> ss;
          for (const auto& s : sets) ss.push_back(subset_from_py(s, mu.ambient()));
          const IePair r = classical_ie(mu, ss);
          return py::make_tuple(to_py(r.lhs), to_py(r.rhs));
        },
        py::arg("weights"), py::arg("sets"));

  m.def("nfold_union",
        [](const std::vector<std::vector<std::vector<unsigned>>>& classes, unsigned k) {
          std::vector<MultisetClass> cs;
          for (const auto& c : classes) cs.push_back(class_from_py(c, k));
          py::dict out;
          for (const auto& [c, w] : nfold_union(cs)) out[to_py(c)] = to_py(w);
          return out;
        },
        py::arg("classes"), py::arg("k"));

  m.def("ie_verify",
        [](const std::string& fn, unsigned l, const std::vector<std::vector<std::vector<unsigned>>>& operands,
           const py::sequence& weights) {
          const Measure mu = measure_from_py(weights);
          std::vector<MultisetClass> cs;
          for (const auto& c : operands) cs.push_back(class_from_py(c, mu.ambient()));
          const IeReport r = ie_verify({parse_symfn_kind(fn), l}, cs, mu);
          py::dict out;
          out["lhs"] = to_py(r.lhs);
          out["rhs"] = to_py(r.rhs);
          out["equal"] = r.equal;
          return out;
        },
        py::arg("fn"), py::arg("l"), py::arg("operands"), py::arg("weights"));

  m.def("dist_product",
        [](const std::string& op, unsigned k, const py::dict& d1, const py::dict& d2) {
          return to_py(dist_product(parse_set_op(op), distribution_from_py(k, d1), distribution_from_py(k, d2)));
        },
        py::arg("op"), py::arg("k"), py::arg("d1"), py::arg("d2"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit status, stdout text, stderr text)");
}
