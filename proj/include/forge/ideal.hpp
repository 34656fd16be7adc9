#pragma once

#include <string>
#include <vector>

#include "forge/polynomial.hpp"

namespace forge {

// Finitely generated ideal. Zero generators are pruned; an ideal with no
// generators is the zero ideal.
class Ideal {
public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  // Throws RingMismatch if a generator lives in another ring.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero_ideal() const { return generators_.empty(); }

  // Generators mapped into another ring (by variable name).
  Ideal in_ring(const RingPtr& target) const;
  Ideal with(const Polynomial& extra) const;

  // "(g1, g2)"; "(0)" for the zero ideal.
  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

// The ring Groebner computations run in: Z is lifted to Q, fields stay.
RingPtr field_ring(const RingPtr& ring);

}  // namespace forge
