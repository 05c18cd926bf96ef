#include "symbool/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symbool {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("not a permutation of " + std::to_string(images_.size()) +
                                  " points");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<unsigned> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::span<const unsigned> images) {
  std::vector<unsigned> im;
  im.reserve(images.size());
  for (unsigned v : images) {
    if (v == 0) throw std::invalid_argument("1-based permutation contains 0");
    im.push_back(v - 1);
  }
  return Permutation(std::move(im));
}

std::vector<unsigned> Permutation::one_based() const {
  std::vector<unsigned> out(images_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

unsigned Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  unsigned cycles = 0;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (unsigned j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<unsigned> im(a.degree());
  for (unsigned i = 0; i < im.size(); ++i) im[i] = a(b(i));
  return Permutation(std::move(im));
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements, std::string name)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)),
      name_(std::move(name)) {
  std::sort(elements_.begin(), elements_.end());
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

std::uint64_t factorial_u64(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

void require_order(std::uint64_t order, const Limits& limits) {
  if (order > limits.group_order_cap)
    throw BudgetExceeded("permutation group order", order, limits.group_order_cap);
}

/// Every arrangement of `positions` among themselves, as full permutations.
std::vector<std::vector<unsigned>> block_arrangements(const std::vector<unsigned>& positions) {
  std::vector<unsigned> perm(positions);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

PermGroup enumerate_group(unsigned degree, std::vector<Permutation> generators,
                          const Limits& limits) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.str() + " has degree " +
                                  std::to_string(g.degree()) + ", expected " +
                                  std::to_string(degree));
  std::set<Permutation> found{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation g = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation h = s * g;
      if (found.insert(h).second) {
        if (found.size() > limits.group_order_cap)
          throw BudgetExceeded("permutation group order (lower bound)", found.size(),
                               limits.group_order_cap);
        frontier.push_back(std::move(h));
      }
    }
  }
  std::string name = "<" + std::to_string(generators.size()) + " generators>";
  return PermGroup(degree, std::move(generators), {found.begin(), found.end()}, std::move(name));
}

PermGroup symmetric_group(unsigned degree, const Limits& limits) {
  require_order(factorial_u64(degree), limits);
  std::vector<Permutation> elements;
  std::vector<unsigned> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  do {
    elements.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));

  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<unsigned> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens.emplace_back(std::move(swap));
    if (degree > 2) gens.emplace_back(std::move(cycle));
  }
  return PermGroup(degree, std::move(gens), std::move(elements), "S_" + std::to_string(degree));
}

PermGroup cyclic_group(unsigned degree, const Limits& limits) {
  require_order(std::max(degree, 1u), limits);
  std::vector<Permutation> elements;
  for (unsigned r = 0; r < std::max(degree, 1u); ++r) {
    std::vector<unsigned> im(degree);
    for (unsigned i = 0; i < degree; ++i) im[i] = (i + r) % degree;
    elements.emplace_back(std::move(im));
  }
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(elements[1]);
  return PermGroup(degree, std::move(gens), std::move(elements), "Z_" + std::to_string(degree));
}

PermGroup young_group(unsigned degree, const std::vector<std::vector<unsigned>>& blocks,
                      const Limits& limits) {
  std::vector<bool> covered(degree, false);
  std::vector<std::vector<unsigned>> zero_based;
  std::uint64_t order = 1;
  std::string name = "Young(";
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("Young subgroup block is empty");
    std::vector<unsigned> b;
    for (unsigned p : block) {
      if (p == 0 || p > degree || covered[p - 1])
        throw std::invalid_argument("Young blocks must partition [" + std::to_string(degree) + "]");
      covered[p - 1] = true;
      b.push_back(p - 1);
    }
    std::sort(b.begin(), b.end());
    order = saturating_mul(order, factorial_u64(static_cast<unsigned>(b.size())));
    if (!zero_based.empty()) name += ",";
    name += std::to_string(b.size());
    zero_based.push_back(std::move(b));
  }
  name += ")";
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::invalid_argument("Young blocks must partition [" + std::to_string(degree) + "]");
  require_order(order, limits);

  std::vector<std::vector<std::vector<unsigned>>> arrangements;
  for (const auto& b : zero_based) arrangements.push_back(block_arrangements(b));

  std::vector<Permutation> elements;
  std::vector<std::size_t> choice(zero_based.size(), 0);
  while (true) {
    std::vector<unsigned> im(degree);
    for (std::size_t bi = 0; bi < zero_based.size(); ++bi) {
      const auto& target = arrangements[bi][choice[bi]];
      for (std::size_t j = 0; j < target.size(); ++j) im[zero_based[bi][j]] = target[j];
    }
    elements.emplace_back(std::move(im));
    std::size_t pos = choice.size();
    while (pos > 0 && ++choice[pos - 1] == arrangements[pos - 1].size()) choice[--pos] = 0;
    if (pos == 0) break;
  }

  std::vector<Permutation> gens;
  for (const auto& b : zero_based) {
    if (b.size() < 2) continue;
    auto swap = Permutation::identity(degree).images();
    std::swap(swap[b[0]], swap[b[1]]);
    gens.emplace_back(std::move(swap));
    if (b.size() > 2) {
      auto cycle = Permutation::identity(degree).images();
      for (std::size_t j = 0; j < b.size(); ++j) cycle[b[j]] = b[(j + 1) % b.size()];
      gens.emplace_back(std::move(cycle));
    }
  }
  return PermGroup(degree, std::move(gens), std::move(elements), std::move(name));
}

PermGroup young_group_from_sizes(std::span<const unsigned> block_sizes, const Limits& limits) {
  std::vector<std::vector<unsigned>> blocks;
  unsigned next = 1;
  for (unsigned size : block_sizes) {
    std::vector<unsigned> b;
    for (unsigned i = 0; i < size; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return young_group(next - 1, blocks, limits);
}

PermGroup trivial_group(unsigned degree) {
  return PermGroup(degree, {}, {Permutation::identity(degree)}, "1_" + std::to_string(degree));
}

}  // namespace symbool
