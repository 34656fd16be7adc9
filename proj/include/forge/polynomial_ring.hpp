#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/coefficients.hpp"

namespace forge {

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial unit(std::size_t arity, std::size_t var);

  std::size_t arity() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // True when the monomials share no variable.
  bool coprime(const Monomial& other) const;
  // Bit mask of variables with positive exponent (arity <= 64).
  std::uint64_t support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t degree_ = 0;
};

struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };

  Kind kind = Kind::Grevlex;
  // For Block: variables [0, split) form the first (eliminated) block, each
  // block is compared by grevlex.
  std::size_t split = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

class PolynomialRing {
public:
  // Throws DomainError on duplicate or malformed names, or a split out of bounds.
  static RingPtr make(CoefficientRing coefficients, std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex());

  const CoefficientRing& coefficients() const { return coefficients_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_[i]; }
  std::size_t arity() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  // Throws DomainError for unknown names.
  std::size_t require_index(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_coefficients(CoefficientRing coefficients) const;
  RingPtr with_variables(std::vector<std::string> variables) const;

  // "Z[x,y,z]"
  std::string to_string() const;

  // Same coefficients and same variable list, ignoring the monomial order.
  bool same_variables_and_coefficients(const PolynomialRing& other) const;

  friend bool operator==(const PolynomialRing&, const PolynomialRing&) = default;

private:
  PolynomialRing(CoefficientRing coefficients, std::vector<std::string> variables, MonomialOrder order)
      : coefficients_(coefficients), variables_(std::move(variables)), order_(order) {}

  CoefficientRing coefficients_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

bool is_valid_identifier(const std::string& name);

// Rings are compared by value; the same pointer is the fast path.
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace forge
