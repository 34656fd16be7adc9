#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/ideal.hpp"

namespace forge {

// A point given coordinate-wise in ring variable order.
using Point = std::vector<Scalar>;
// A point given by variable name.
using Assignment = std::map<std::string, Scalar>;

// Spec R[x]/I with an optional basepoint on it.
class AffinePresentation {
public:
  explicit AffinePresentation(Ideal ideal) : ideal_(std::move(ideal)) {}
  // Throws DomainError if the point has the wrong length or misses the scheme.
  AffinePresentation(Ideal ideal, Point basepoint);

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const std::optional<Point>& basepoint() const { return basepoint_; }
  bool is_pointed() const { return basepoint_.has_value(); }

  // Same scheme over another coefficient ring (Z -> F_p, Z -> Q, ...).
  AffinePresentation with_coefficients(const CoefficientRing& coefficients) const;

private:
  Ideal ideal_;
  std::optional<Point> basepoint_;
};

// ambient minus V(removed). Throws DomainError unless every ambient generator
// lies in `removed`.
class QuasiAffinePresentation {
public:
  QuasiAffinePresentation(AffinePresentation ambient, Ideal removed);

  const AffinePresentation& ambient() const { return ambient_; }
  const Ideal& removed() const { return removed_; }
  const RingPtr& ring() const { return ambient_.ring(); }

  QuasiAffinePresentation with_coefficients(const CoefficientRing& coefficients) const;

private:
  AffinePresentation ambient_;
  Ideal removed_;
};

struct CompleteIntersection {
  std::size_t codimension = 0;
  std::size_t generator_count = 0;
  bool is_ci = false;
};

// codimension = arity - dim. Throws DomainError for the unit ideal.
CompleteIntersection complete_intersection_check(const AffinePresentation& x);

struct Smoothness {
  bool smooth = false;
  std::size_t codimension = 0;
  // ideal + all c x c Jacobian minors; (1) when c = 0.
  Ideal singular_ideal;
};

// Jacobian criterion for a complete intersection over a field (Z is read as Q).
// Throws DomainError if the presentation is not a complete intersection.
Smoothness is_smooth_over_field(const AffinePresentation& x);

struct CharacteristicSmoothness {
  std::uint64_t characteristic = 0;  // 0 means Q
  bool smooth = false;
};

// Q plus each prime of the list. Only a finite surrogate for smoothness over
// Spec Z; see smoothness_caveat().
std::vector<CharacteristicSmoothness> smoothness_by_characteristic(const AffinePresentation& x,
                                                                   const std::vector<std::uint64_t>& primes);
std::string smoothness_caveat();

// 1 in (I, P, dP/dz) in k[x, z]. P lives in a ring whose variables are z plus
// possibly some of I's variables, with the same coefficients. Throws
// DomainError if z already belongs to I's ring, P is not monic in z, or P uses
// variables outside I's ring plus z.
bool etale_split_check(const Ideal& ideal, const Polynomial& p, const std::string& z = "z");

// Substitutes the point, drops those variables, prunes zero generators. A
// basepoint that agrees with the point is kept (restricted).
AffinePresentation fiber(const AffinePresentation& x, const Assignment& point);

// Throws DomainError on a point of the wrong length.
bool contains_point(const AffinePresentation& x, const Point& point);
bool contains_point(const QuasiAffinePresentation& x, const Point& point);
// Throws DomainError on missing assignments.
bool contains_point(const AffinePresentation& x, const Assignment& point);

Point to_point(const PolynomialRing& ring, const Assignment& assignment);

// "ring Z[x,y]; ideal (x*y - 1); point (1,1)", the point part only when pointed.
std::string to_text(const AffinePresentation& x);
// Ambient text followed by "; removed (...)".
std::string to_text(const QuasiAffinePresentation& x);
std::string point_to_string(const Point& point);

}  // namespace forge
