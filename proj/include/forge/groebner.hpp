#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forge/ideal.hpp"

namespace forge {

// Reduced Groebner basis. Elements are monic, sorted by descending leading
// monomial, and live in field_ring(ideal ring) equipped with `order`.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division. f = sum q_i d_i + r with no term of r divisible by a
// leading monomial of a divisor. Inputs over Z are lifted to Q; the results
// live in field_ring(f.ring()) with the requested order. Throws DomainError on
// a zero divisor polynomial.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                MonomialOrder order = MonomialOrder::grevlex());

// Buchberger with Gebauer-Moeller pair pruning (product and chain criteria).
// Pairs are processed by (degree of lcm, first index, second index) under
// grevlex; under lex and block orders by the lcm itself, then indices.
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex());

// Fully reduced remainder of f modulo an already computed basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
// Every S-polynomial of the list reduces to zero modulo the list.
bool is_groebner_basis(const std::vector<Polynomial>& elements);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool is_unit_ideal(const Ideal& ideal);
// Equality of ideals via reduced grevlex bases; rings must share variables
// and coefficients.
bool ideals_equal(const Ideal& a, const Ideal& b);

// I intersected with the polynomials in the remaining variables, computed with
// a block order that puts `drop` first. The result stays in I's ring; over Z
// generators are made primitive with positive leading coefficient.
Ideal eliminate(const Ideal& ideal, const std::set<std::string>& drop);

// (I : f^inf) via (I, 1 - w f) and elimination of the fresh variable w.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

// Dimension of the quotient ring: the largest set of variables containing the
// support of no leading monomial of a grevlex basis. nullopt means I = (1).
std::optional<std::size_t> krull_dimension(const Ideal& ideal);

// All size x size minors of the Jacobian d gens_i / d vars_j.
Ideal jacobian_minors_ideal(const std::vector<Polynomial>& gens, const std::vector<std::string>& vars,
                            std::size_t size);

}  // namespace forge
