#include "forge/polynomial_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "forge/error.hpp"

namespace forge {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::unit(std::size_t arity, std::size_t var) {
  Monomial m(arity);
  m.exponents_[var] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other.arity());
  for (std::size_t i = 0; i < exponents_.size(); ++i) q.exponents_[i] = other.exponents_[i] - exponents_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(arity());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    l.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    l.degree_ += l.exponents_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size() && i < 64; ++i)
    if (exponents_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.arity());
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) m.exponents_[i] = a.exponents_[i] + b.exponents_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return grevlex_range(a, b, 0, a.arity());
    case Kind::Block: {
      auto first = grevlex_range(a, b, 0, split);
      if (first != 0) return first;
      return grevlex_range(a, b, split, a.arity());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

bool is_valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

RingPtr PolynomialRing::make(CoefficientRing coefficients, std::vector<std::string> variables,
                             MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_valid_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::Block && order.split > variables.size())
    throw DomainError("block split index out of bounds");
  if (order.kind != MonomialOrder::Kind::Block) order.split = 0;
  return RingPtr(new PolynomialRing(coefficients, std::move(variables), order));
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

std::size_t PolynomialRing::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw DomainError("unknown variable '" + name + "' in " + to_string());
  return *i;
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const { return make(coefficients_, variables_, order); }

RingPtr PolynomialRing::with_coefficients(CoefficientRing coefficients) const {
  return make(coefficients, variables_, order_);
}

RingPtr PolynomialRing::with_variables(std::vector<std::string> variables) const {
  MonomialOrder order = order_;
  if (order.kind == MonomialOrder::Kind::Block) order = MonomialOrder::grevlex();
  return make(coefficients_, std::move(variables), order);
}

std::string PolynomialRing::to_string() const {
  std::string s = coefficients_.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  return s + "]";
}

bool PolynomialRing::same_variables_and_coefficients(const PolynomialRing& other) const {
  return coefficients_ == other.coefficients_ && variables_ == other.variables_;
}

}  // namespace forge
