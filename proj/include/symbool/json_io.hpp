#pragma once

#include <string>

#include <json.hpp>

#include "symbool/boolean_monoid.hpp"
#include "symbool/closed_forms.hpp"
#include "symbool/distribution.hpp"
#include "symbool/perm_group.hpp"
#include "symbool/presentation.hpp"
#include "symbool/symmetric_ie.hpp"

// JSON encodings of the library's input and output objects.  Rationals are
// always written as "p/q" strings; on input plain integers are accepted too.
// Every *_from_json throws std::invalid_argument on malformed documents.
namespace symbool::json_io {

using nlohmann::json;

/// Parses a file; throws std::invalid_argument if it cannot be read or parsed.
json read_file(const std::string& path);

Rational rational_from_json(const json& j);
json to_json(const Rational& r);

/// Sorted 1-based element list, e.g. [1, 3].
Subset subset_from_json(const json& j, unsigned ground_size);
json to_json(const Subset& s);

/// {"size": N, "union": [[..]..], "intersection": [[..]..], "complement": [..],
///  "empty": e, "total": t}
BooleanMonoidTable monoid_from_json(const json& j);
json to_json(const BooleanMonoidTable& t);

/// {"labels": [...], "union": [[i, j, k, "p/q"], ...], "intersection": same,
///  "complement": [[i, k, "p/q"], ...], "coproduct": [[i, j, k, "p/q"], ...],
///  "eval": ["p/q", ...], "empty": [[k, "p/q"], ...], "total": same}.
/// Missing maps are zero.  "empty"/"total" may also be dense coefficient lists.
AlgebraPresentation presentation_from_json(const json& j);
json to_json(const AlgebraPresentation& p);

/// Sparse [[index, "p/q"], ...] form.
json to_json(const BoolVector& v);

/// {"degree": m, "generators": [[2, 1, 3], ...]} with 1-based images, or
/// {"kind": "symmetric"|"cyclic"|"trivial", "degree": m}, or
/// {"kind": "young", "blocks": [2, 1]} (sizes) / [[1, 3], [2]] (positions).
PermGroup group_from_json(const json& j, const Limits& limits = {});

/// {"k": 3, "weights": ["1/1", "2/1", "3/1"]}
Measure measure_from_json(const json& j);
json to_json(const Measure& mu);

/// [[1], [2]]: a list of subsets, each a sorted element list.
MultisetClass class_from_json(const json& j, unsigned ground_size);
json to_json(const MultisetClass& c);

/// {"k": 2, "entries": [[[1], "1/2"], [[], "1/2"]]}
Distribution distribution_from_json(const json& j);
json to_json(const Distribution& d);

/// [[l, "p/q"], ...]
json to_json(const HatVector& v);

}  // namespace symbool::json_io
