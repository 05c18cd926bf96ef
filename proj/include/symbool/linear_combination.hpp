#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <type_traits>
#include <utility>

#include "symbool/rational.hpp"

namespace symbool {

/// Finite formal linear combination with exact rational coefficients.
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal.
template <typename Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination basis(const Key& key) {
    LinearCombination v;
    v.terms_.emplace(key, Rational(1));
    return v;
  }

  static LinearCombination term(const Key& key, const Rational& coeff) {
    LinearCombination v;
    v.add(key, coeff);
    return v;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Sum of all coefficients.
  Rational mass() const {
    Rational s;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Sum of coeff * f(key) over all terms, where f yields another
  /// combination.  This is the linear extension of f.
  template <typename F>
  auto extend(F&& f) const {
    using Out = std::remove_cvref_t<std::invoke_result_t<F, const Key&>>;
    Out out;
    for (const auto& [k, c] : terms_) {
      for (const auto& [k2, c2] : f(k)) out.add(k2, c * c2);
    }
    return out;
  }

  /// Relabels keys with f, merging terms that collide.
  template <typename F>
  auto map_keys(F&& f) const {
    using K2 = std::remove_cvref_t<std::invoke_result_t<F, const Key&>>;
    LinearCombination<K2> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(const Rational& s, LinearCombination v) {
    return v *= s;
  }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

/// Bilinear product of two combinations through a basis-level product f.
template <typename A, typename B, typename F>
auto bilinear(const LinearCombination<A>& x, const LinearCombination<B>& y, F&& f) {
  using Out = std::remove_cvref_t<std::invoke_result_t<F, const A&, const B&>>;
  Out out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      const Rational c = ca * cb;
      for (const auto& [k, ck] : f(a, b)) out.add(k, c * ck);
    }
  }
  return out;
}

}  // namespace symbool
