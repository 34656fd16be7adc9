#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace forge {

// Every coefficient is carried as an exact rational. Integer rings keep the
// denominator at 1 and prime fields keep the canonical representative in [0, p).
using Scalar = mpq_class;

class CoefficientRing {
public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  // Throws DomainError unless p is prime.
  static CoefficientRing prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::uint64_t characteristic() const { return modulus_; }

  // Maps a rational into the ring. Throws DomainError when the value has no
  // image (non-integer into Z, denominator divisible by p into F_p).
  Scalar from_rational(const Scalar& value) const;
  Scalar from_int(long value) const { return from_rational(Scalar(value)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Field inverse; throws DomainError for zero or when the ring is Z and a is not +-1.
  Scalar inv(const Scalar& a) const;

  // "Z", "Q" or "F<p>".
  std::string name() const;
  // Text form of an element: integers, "a/b" for rationals.
  static std::string format(const Scalar& value);

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
  CoefficientRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

// Parses "Z", "Q", "F<p>" (also "ZZ", "QQ", "GF(p)").
CoefficientRing parse_coefficient_ring(const std::string& text);

}  // namespace forge
