#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symbool/limits.hpp"
#include "symbool/linear_combination.hpp"
#include "symbool/rational.hpp"

namespace symbool {

/// Element of the free vector space on a presentation's basis; keys are
/// basis indices.
using BoolVector = LinearCombination<std::size_t>;
/// Element of V (x) V; keys are ordered index pairs.
using PairVector = LinearCombination<std::pair<std::size_t, std::size_t>>;
/// Element of V^(x)r for any r; keys are index tuples.  Used where tensors of
/// different ranks must be compared uniformly.
using TensorVector = LinearCombination<std::vector<std::size_t>>;

/// Finite-dimensional algebra with the seven structure maps of a linear
/// Boolean algebra, stored as exact structure tensors on a labelled basis.
///
/// A fresh presentation has every map equal to zero.  The setters check that
/// referenced indices exist; no algebraic law is enforced here.
class AlgebraPresentation {
 public:
  explicit AlgebraPresentation(std::vector<std::string> labels);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Renames the basis; throws std::invalid_argument on a size mismatch.
  void set_labels(std::vector<std::string> labels);

  const BoolVector& union_of(std::size_t i, std::size_t j) const { return union_[i * dimension() + j]; }
  const BoolVector& intersection_of(std::size_t i, std::size_t j) const {
    return intersection_[i * dimension() + j];
  }
  const BoolVector& complement_of(std::size_t i) const { return complement_[i]; }
  const PairVector& coproduct_of(std::size_t i) const { return coproduct_[i]; }
  const Rational& eval_of(std::size_t i) const { return eval_[i]; }
  const BoolVector& empty_vector() const { return empty_; }
  const BoolVector& total_vector() const { return total_; }

  void set_union(std::size_t i, std::size_t j, BoolVector v);
  void set_intersection(std::size_t i, std::size_t j, BoolVector v);
  void set_complement(std::size_t i, BoolVector v);
  void set_coproduct(std::size_t i, PairVector v);
  void set_eval(std::size_t i, Rational v);
  void set_empty(BoolVector v);
  void set_total(BoolVector v);

  /// Throws std::invalid_argument if v mentions an index outside the basis.
  void require_member(const BoolVector& v) const;
  void require_member(const PairVector& v) const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

 private:
  void check_index(std::size_t i) const;

  std::vector<std::string> labels_;
  std::vector<BoolVector> union_;
  std::vector<BoolVector> intersection_;
  std::vector<BoolVector> complement_;
  std::vector<PairVector> coproduct_;
  std::vector<Rational> eval_;
  BoolVector empty_;
  BoolVector total_;
};

/// <P[k]> with basis all subsets of [k] in bitmask order, labelled "{1,2}".
AlgebraPresentation power_set_presentation(unsigned k, const Limits& limits = {});

enum class StructureMap { Union, Intersection, Complement, Coproduct, Eval, Empty, Total };

StructureMap parse_structure_map(const std::string& name);

// Linear and bilinear extensions of the structure maps.  Each rejects vectors
// whose keys are not basis indices of p.
BoolVector apply_union(const AlgebraPresentation& p, const BoolVector& x, const BoolVector& y);
BoolVector apply_intersection(const AlgebraPresentation& p, const BoolVector& x,
                              const BoolVector& y);
BoolVector apply_complement(const AlgebraPresentation& p, const BoolVector& x);
PairVector apply_coproduct(const AlgebraPresentation& p, const BoolVector& x);
Rational apply_eval(const AlgebraPresentation& p, const BoolVector& x);
BoolVector apply_empty(const AlgebraPresentation& p, const Rational& s = Rational(1));
BoolVector apply_total(const AlgebraPresentation& p, const Rational& s = Rational(1));

using MapValue = std::variant<BoolVector, PairVector, Rational>;

/// Uniform entry point: args holds two vectors for union/intersection, one
/// for complement/coproduct/eval and none for empty/total (which use scalar).
MapValue apply_map(const AlgebraPresentation& p, StructureMap map,
                   std::span<const BoolVector> args, const Rational& scalar = Rational(1));

/// V (x) W with basis pairs (i, j) at index i * dim(W) + j and every
/// structure map defined componentwise.
AlgebraPresentation tensor_presentation(const AlgebraPresentation& p, const AlgebraPresentation& q);

/// True when q's structure tensors equal p's after renaming p's basis index
/// i to relabel[i].  Labels themselves are not compared.
bool same_structure(const AlgebraPresentation& p, const AlgebraPresentation& q,
                    std::span<const std::size_t> relabel);

/// Renders v with basis labels, e.g. "1/2 {1} + 1/2 {1,2}"; "0" when empty.
std::string render(const BoolVector& v, const AlgebraPresentation& p);
std::string render(const TensorVector& v, const AlgebraPresentation& p);

}  // namespace symbool
