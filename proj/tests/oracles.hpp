#pragma once

// Reference checks written only against Polynomial arithmetic, so they do not
// share code paths with the Groebner engine.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "forge/polynomial.hpp"

namespace forge::testing {

// Naive full reduction of f by a list over a field, one term at a time.
inline Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& by) {
  const auto& k = f.ring()->coefficients();
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const Term lead = f.leading_term();
    bool reduced = false;
    for (const auto& g : by) {
      if (g.leading_monomial().divides(lead.monomial)) {
        Scalar c = k.mul(lead.coefficient, k.inv(g.leading_coefficient()));
        f = f - g.times_term(g.leading_monomial().quotient_of(lead.monomial), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      auto single = Polynomial::monomial(f.ring(), lead.monomial, lead.coefficient);
      rem = rem + single;
      f = f - single;
    }
  }
  return rem;
}

inline bool all_s_polynomials_reduce(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      const auto& k = f.ring()->coefficients();
      Monomial l = f.leading_monomial().lcm(g.leading_monomial());
      Polynomial s = f.times_term(f.leading_monomial().quotient_of(l), k.inv(f.leading_coefficient())) -
                     g.times_term(g.leading_monomial().quotient_of(l), k.inv(g.leading_coefficient()));
      if (!naive_reduce(s, basis).is_zero()) return false;
    }
  }
  return true;
}

// Monic elements, and no term of one element divisible by another's leading monomial.
inline bool is_reduced(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        if (basis[j].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

// Monomials x^a y^b of total degree <= d, indexed by degree then by a descending.
inline int f2_index(unsigned a, unsigned b) {
  unsigned d = a + b;
  return static_cast<int>(d * (d + 1) / 2 + (d - a));
}

inline Polynomial f2_polynomial_from_mask(const RingPtr& ring, std::uint64_t mask, unsigned degree) {
  std::vector<Term> terms;
  for (unsigned d = 0; d <= degree; ++d)
    for (unsigned a = d + 1; a-- > 0;)
      if (mask >> f2_index(a, d - a) & 1) terms.push_back({Monomial(std::vector<std::uint32_t>{a, d - a}), Scalar(1)});
  return Polynomial::from_terms(ring, std::move(terms));
}

// All combinations sum c_i g_i over F_2[x,y] with deg c_i <= cofactor_degree,
// enumerated exhaustively and stored as a set of coefficient masks.
class F2CombinationOracle {
public:
  F2CombinationOracle(const std::vector<Polynomial>& gens, unsigned cofactor_degree) {
    unsigned gdeg = 0;
    for (const auto& g : gens) gdeg = std::max<unsigned>(gdeg, g.total_degree());
    max_degree_ = cofactor_degree + gdeg;
    unsigned slots = (max_degree_ + 1) * (max_degree_ + 2) / 2;
    if (slots > 28) throw std::invalid_argument("oracle too large");
    std::vector<std::uint32_t> vectors;
    for (const auto& g : gens)
      for (unsigned d = 0; d <= cofactor_degree; ++d)
        for (unsigned a = 0; a <= d; ++a) {
          std::uint32_t v = 0;
          for (const auto& t : g.terms()) v ^= 1u << f2_index(t.monomial[0] + a, t.monomial[1] + d - a);
          vectors.push_back(v);
        }
    if (vectors.size() > 24) throw std::invalid_argument("oracle too large");
    reachable_.assign(std::size_t{1} << slots, false);
    // Gray code walk over every subset of the shifted generators
    std::uint32_t current = 0;
    reachable_[0] = true;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << vectors.size()); ++step) {
      current ^= vectors[__builtin_ctzll(step)];
      reachable_[current] = true;
    }
  }

  // f of degree above the enumerated range is reported as not reachable.
  bool contains(const Polynomial& f) const {
    std::uint32_t v = 0;
    for (const auto& t : f.terms()) {
      if (t.monomial.degree() > max_degree_) return false;
      v ^= 1u << f2_index(t.monomial[0], t.monomial[1]);
    }
    return reachable_[v];
  }

private:
  unsigned max_degree_ = 0;
  std::vector<bool> reachable_;
};

}  // namespace forge::testing
