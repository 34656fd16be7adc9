#include "forge/coefficients.hpp"

#include <cctype>

#include "forge/error.hpp"

namespace forge {

namespace {

mpz_class reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class r = value % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
  return CoefficientRing(Kind::PrimeField, p);
}

Scalar CoefficientRing::from_rational(const Scalar& raw) const {
  Scalar value = raw;
  value.canonicalize();
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (value.get_den() != 1) throw DomainError("value " + format(value) + " is not an integer");
      return value;
    case Kind::PrimeField: {
      mpz_class m(static_cast<unsigned long>(modulus_));
      mpz_class den = reduce_mod(value.get_den(), modulus_);
      if (den == 0)
        throw DomainError("denominator of " + format(value) + " vanishes in " + name());
      mpz_class den_inv;
      mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
      return Scalar(reduce_mod(reduce_mod(value.get_num(), modulus_) * den_inv, modulus_));
    }
  }
  return value;
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::PrimeField) return Scalar(reduce_mod(a.get_num() + b.get_num(), modulus_));
  return a + b;
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::PrimeField) return Scalar(reduce_mod(a.get_num() - b.get_num(), modulus_));
  return a - b;
}

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::PrimeField) return Scalar(reduce_mod(a.get_num() * b.get_num(), modulus_));
  return a * b;
}

Scalar CoefficientRing::neg(const Scalar& a) const {
  if (kind_ == Kind::PrimeField) return Scalar(reduce_mod(-a.get_num(), modulus_));
  return -a;
}

Scalar CoefficientRing::inv(const Scalar& a) const {
  if (a == 0) throw DomainError("inverse of zero");
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(1) / a;
    case Kind::Integers:
      if (a == 1 || a == -1) return a;
      throw DomainError(format(a) + " is not a unit in Z");
    case Kind::PrimeField: {
      mpz_class m(static_cast<unsigned long>(modulus_));
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
      return Scalar(r);
    }
  }
  return a;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F" + std::to_string(modulus_);
  }
  return "?";
}

std::string CoefficientRing::format(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

CoefficientRing parse_coefficient_ring(const std::string& text) {
  if (text == "Z" || text == "ZZ") return CoefficientRing::integers();
  if (text == "Q" || text == "QQ") return CoefficientRing::rationals();
  std::string digits;
  if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
    if (digits.size() > 2 && digits.front() == '<' && digits.back() == '>') digits = digits.substr(1, digits.size() - 2);
  } else if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw DomainError("unknown coefficient ring '" + text + "'");
  }
  if (digits.empty() || digits.size() > 18) throw DomainError("bad prime field '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad prime field '" + text + "'");
  return CoefficientRing::prime_field(std::stoull(digits));
}

}  // namespace forge
