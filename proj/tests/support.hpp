#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "forge/parser.hpp"
#include "forge/polynomial.hpp"

namespace forge::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

inline RingPtr ring(const std::string& coefficients, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder::grevlex()) {
  return PolynomialRing::make(parse_coefficient_ring(coefficients), std::move(vars), order);
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

// Random polynomial with at most `terms` terms of total degree <= max_degree
// and integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& r, unsigned max_degree, unsigned terms,
                                    long bound = 5) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Term> out;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> exps(r->arity(), 0);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d && r->arity() > 0; ++i) {
      std::uniform_int_distribution<std::size_t> var(0, r->arity() - 1);
      exps[var(rng)] += 1;
    }
    out.push_back({Monomial(std::move(exps)), Scalar(coeff(rng))});
  }
  return Polynomial::from_terms(r, std::move(out));
}

inline Polynomial random_nonzero(std::mt19937_64& rng, const RingPtr& r, unsigned max_degree, unsigned terms,
                                 long bound = 5) {
  for (;;) {
    Polynomial p = random_polynomial(rng, r, max_degree, terms, bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace forge::testing
