#include "forge/ideal.hpp"

#include "forge/error.hpp"

namespace forge {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_))
      throw RingMismatch("generator " + g.to_string() + " is not in " + ring_->to_string());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> mapped;
  mapped.reserve(generators_.size());
  for (const auto& g : generators_) mapped.push_back(g.in_ring(target));
  return Ideal(target, std::move(mapped));
}

Ideal Ideal::with(const Polynomial& extra) const {
  auto gens = generators_;
  gens.push_back(extra);
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

RingPtr field_ring(const RingPtr& ring) {
  if (ring->coefficients().is_field()) return ring;
  return ring->with_coefficients(CoefficientRing::rationals());
}

}  // namespace forge
