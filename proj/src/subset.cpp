#include "symbool/subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symbool {

std::string to_string(SetOp op) {
  switch (op) {
    case SetOp::Union: return "union";
    case SetOp::Intersection: return "intersection";
    case SetOp::Complement: return "complement";
  }
  return "?";
}

SetOp parse_set_op(const std::string& name) {
  if (name == "union") return SetOp::Union;
  if (name == "intersection") return SetOp::Intersection;
  if (name == "complement") return SetOp::Complement;
  throw std::invalid_argument("unknown set operation '" + name + "'");
}

namespace {

std::uint32_t ground_mask(unsigned k) {
  return k >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
}

}  // namespace

Subset::Subset(unsigned ground_size, std::uint32_t bits)
    : ground_size_(ground_size), bits_(bits) {
  if (ground_size > kMaxGroundSize)
    throw std::invalid_argument("ground size " + std::to_string(ground_size) +
                                " exceeds the representable maximum");
  if ((bits & ~ground_mask(ground_size)) != 0)
    throw std::invalid_argument("subset has elements outside [" +
                                std::to_string(ground_size) + "]");
}

Subset Subset::full(unsigned ground_size) { return Subset(ground_size, ground_mask(ground_size)); }

Subset Subset::from_elements(unsigned ground_size, std::span<const unsigned> elements) {
  std::uint32_t bits = 0;
  for (unsigned e : elements) {
    if (e == 0 || e > ground_size)
      throw std::invalid_argument("element " + std::to_string(e) + " outside [" +
                                  std::to_string(ground_size) + "]");
    bits |= std::uint32_t{1} << (e - 1);
  }
  return Subset(ground_size, bits);
}

bool Subset::contains(unsigned element) const {
  return element >= 1 && element <= ground_size_ && ((bits_ >> (element - 1)) & 1u);
}

unsigned Subset::cardinality() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= ground_size_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

void Subset::require_same_ground(const Subset& other) const {
  if (ground_size_ != other.ground_size_)
    throw std::invalid_argument("subsets over different ground sets [" +
                                std::to_string(ground_size_) + "] and [" +
                                std::to_string(other.ground_size_) + "]");
}

Subset Subset::unite(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_size_, bits_ | other.bits_);
}

Subset Subset::intersect(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_size_, bits_ & other.bits_);
}

Subset Subset::complement() const { return Subset(ground_size_, ~bits_ & ground_mask(ground_size_)); }

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(other);
  return (bits_ & ~other.bits_) == 0;
}

std::string Subset::str() const {
  std::string s = "{";
  bool first = true;
  for (unsigned e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

Subset subset_op(SetOp op, const Subset& a, const std::optional<Subset>& b) {
  if (op == SetOp::Complement) {
    if (b) throw std::invalid_argument("complement takes a single subset");
    return a.complement();
  }
  if (!b) throw std::invalid_argument(to_string(op) + " needs two subsets");
  return op == SetOp::Union ? a.unite(*b) : a.intersect(*b);
}

void require_ground_within(unsigned ground_size, const Limits& limits) {
  const unsigned cap = std::min(limits.ground_cap, kMaxGroundSize);
  if (ground_size > cap) throw BudgetExceeded("ground set size", ground_size, cap);
}

std::vector<Subset> power_set(unsigned ground_size, const Limits& limits) {
  require_ground_within(ground_size, limits);
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << ground_size);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << ground_size); ++bits)
    out.emplace_back(ground_size, bits);
  return out;
}

}  // namespace symbool
