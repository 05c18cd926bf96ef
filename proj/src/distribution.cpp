#include "symbool/distribution.hpp"

#include <stdexcept>

namespace symbool {

Distribution::Distribution(unsigned ground_size, SubsetVector weights)
    : ground_size_(ground_size), weights_(std::move(weights)) {
  for (const auto& [s, p] : weights_) {
    if (s.ground_size() != ground_size_)
      throw std::invalid_argument("distribution support " + s.str() + " not over [" +
                                  std::to_string(ground_size_) + "]");
    if (p.sign() < 0)
      throw std::invalid_argument("negative probability " + p.str() + " at " + s.str());
  }
  if (weights_.mass() != Rational(1))
    throw std::invalid_argument("distribution mass is " + weights_.mass().str() + ", not 1/1");
}

Distribution Distribution::point_mass(const Subset& s) {
  return Distribution(s.ground_size(), SubsetVector::basis(s));
}

Distribution Distribution::uniform(unsigned ground_size, const std::vector<Subset>& support) {
  if (support.empty()) throw std::invalid_argument("uniform distribution needs a support");
  const Rational w(1, static_cast<long>(support.size()));
  SubsetVector v;
  for (const auto& s : support) {
    if (!v.coefficient(s).is_zero()) throw std::invalid_argument("support has duplicates");
    v.add(s, w);
  }
  return Distribution(ground_size, std::move(v));
}

Distribution dist_product(SetOp op, const Distribution& d1, const Distribution& d2) {
  if (op == SetOp::Complement) throw std::invalid_argument("complement is not a binary product");
  if (d1.ground_size() != d2.ground_size())
    throw std::invalid_argument("distributions over different ground sets");
  SubsetVector out;
  for (const auto& [a, pa] : d1.weights())
    for (const auto& [b, pb] : d2.weights()) out.add(subset_op(op, a, b), pa * pb);
  return Distribution(d1.ground_size(), std::move(out));
}

Distribution dist_complement(const Distribution& d) {
  return Distribution(d.ground_size(),
                      d.weights().map_keys([](const Subset& s) { return s.complement(); }));
}

}  // namespace symbool
