#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "symbool/closed_forms.hpp"
#include "symbool/presentation.hpp"
#include "symbool/rational.hpp"

namespace test {

inline symbool::Rational q(const char* text) { return symbool::Rational::parse(text); }

inline symbool::BoolVector vec(std::initializer_list<std::pair<std::size_t, const char*>> terms) {
  symbool::BoolVector v;
  for (const auto& [i, c] : terms) v.add(i, q(c));
  return v;
}

inline symbool::HatVector hats(unsigned k, std::initializer_list<std::pair<unsigned, const char*>> terms) {
  symbool::HatVector v;
  v.ambient = k;
  for (const auto& [l, c] : terms) v.terms.add(l, q(c));
  return v;
}

}  // namespace test
