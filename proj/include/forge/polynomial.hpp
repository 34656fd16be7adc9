#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "forge/coefficients.hpp"
#include "forge/polynomial_ring.hpp"

namespace forge {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

// Sparse polynomial. Terms are kept strictly descending in the ring's monomial
// order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& coefficient);
  // Combines like terms, maps coefficients into the ring and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  // Constant term coefficient (zero if absent).
  Scalar constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  // The polynomial minus its leading term.
  Polynomial tail() const;
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  // Leading coefficient 1 (fields only).
  Polynomial monic() const;
  // Over Z and Q: integer coefficients with content 1 and positive leading
  // coefficient. Over F_p this is monic().
  Polynomial primitive() const;

  Polynomial pow(unsigned exponent) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  Polynomial derivative(std::size_t var) const;

  // Coefficients with respect to one variable, indexed by degree; entries do
  // not involve var and live in the same ring.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  // Re-expresses the polynomial in another ring, matching variables by name.
  // Coefficients are mapped into the target coefficient ring. Throws
  // DomainError if a variable that occurs is missing from the target.
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // f - c * m * g in one merge pass; used by reduction loops.
  static Polynomial sub_multiple(const Polynomial& f, const Scalar& c, const Monomial& m, const Polynomial& g);

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Value semantics helpers matching the operation names used by callers.
enum class ArithOp { Add, Sub, Mul };
Polynomial arith(ArithOp op, const Polynomial& f, const Polynomial& g);
Polynomial power(const Polynomial& f, unsigned exponent);

// Throws DomainError for variables missing from the assignment.
Scalar evaluate(const Polynomial& f, const std::map<std::string, Scalar>& point);
Polynomial partial_derivative(const Polynomial& f, const std::string& var);

// Simultaneous substitution into target (defaults to f's ring). Unassigned
// variables pass through by name.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment);
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target);

// Division-free determinant over the ring of the entries.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix, const RingPtr& ring);

void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace forge
