#include "forge/scheme.hpp"

#include <algorithm>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "forge/resultant.hpp"

namespace forge {

namespace {

bool vanishes_at(const Ideal& ideal, const Point& point) {
  for (const auto& g : ideal.generators())
    if (g.evaluate(point) != 0) return false;
  return true;
}

void require_length(const PolynomialRing& ring, const Point& point) {
  if (point.size() != ring.arity())
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, ring " + ring.to_string() +
                      " has " + std::to_string(ring.arity()) + " variables");
}

Point map_point(const Point& point, const CoefficientRing& k) {
  Point out;
  out.reserve(point.size());
  for (const auto& v : point) out.push_back(k.from_rational(v));
  return out;
}

}  // namespace

AffinePresentation::AffinePresentation(Ideal ideal, Point basepoint) : ideal_(std::move(ideal)) {
  require_length(*ideal_.ring(), basepoint);
  basepoint = map_point(basepoint, ideal_.ring()->coefficients());
  if (!vanishes_at(ideal_, basepoint)) throw DomainError("basepoint does not lie on " + ideal_.to_string());
  basepoint_ = std::move(basepoint);
}

AffinePresentation AffinePresentation::with_coefficients(const CoefficientRing& coefficients) const {
  RingPtr target = ring()->with_coefficients(coefficients);
  Ideal mapped = ideal_.in_ring(target);
  if (!basepoint_) return AffinePresentation(std::move(mapped));
  return AffinePresentation(std::move(mapped), map_point(*basepoint_, coefficients));
}

QuasiAffinePresentation::QuasiAffinePresentation(AffinePresentation ambient, Ideal removed)
    : ambient_(std::move(ambient)), removed_(std::move(removed)) {
  if (!same_ring(removed_.ring(), ambient_.ring()))
    throw RingMismatch("removed ideal lives in " + removed_.ring()->to_string() + ", ambient in " +
                       ambient_.ring()->to_string());
  for (const auto& g : ambient_.ideal().generators())
    if (!ideal_membership(g, removed_))
      throw DomainError("ambient relation " + g.to_string() + " is not in the removed ideal");
}

QuasiAffinePresentation QuasiAffinePresentation::with_coefficients(const CoefficientRing& coefficients) const {
  auto amb = ambient_.with_coefficients(coefficients);
  Ideal rem = removed_.in_ring(amb.ring());
  return QuasiAffinePresentation(std::move(amb), std::move(rem));
}

CompleteIntersection complete_intersection_check(const AffinePresentation& x) {
  auto dim = krull_dimension(x.ideal());
  if (!dim) throw DomainError("the unit ideal defines the empty scheme");
  CompleteIntersection ci;
  ci.codimension = x.ring()->arity() - *dim;
  ci.generator_count = x.ideal().size();
  ci.is_ci = ci.codimension == ci.generator_count;
  return ci;
}

Smoothness is_smooth_over_field(const AffinePresentation& x) {
  auto ci = complete_intersection_check(x);
  if (!ci.is_ci)
    throw DomainError("not a complete intersection: codimension " + std::to_string(ci.codimension) + " with " +
                      std::to_string(ci.generator_count) + " generators");
  Smoothness out{false, ci.codimension, Ideal(x.ring())};
  if (ci.codimension == 0) {
    out.smooth = true;
    out.singular_ideal = Ideal(x.ring(), {Polynomial::constant(x.ring(), Scalar(1))});
    return out;
  }
  auto minors = jacobian_minors_ideal(x.ideal().generators(), x.ring()->variables(), ci.codimension);
  auto gens = x.ideal().generators();
  for (const auto& m : minors.generators()) gens.push_back(m);
  out.singular_ideal = Ideal(x.ring(), std::move(gens));
  out.smooth = is_unit_ideal(out.singular_ideal);
  return out;
}

std::vector<CharacteristicSmoothness> smoothness_by_characteristic(const AffinePresentation& x,
                                                                   const std::vector<std::uint64_t>& primes) {
  const auto& k = x.ring()->coefficients();
  if (k.kind() == CoefficientRing::Kind::PrimeField) return {{k.characteristic(), is_smooth_over_field(x).smooth}};
  std::vector<CharacteristicSmoothness> out;
  out.push_back({0, is_smooth_over_field(x.with_coefficients(CoefficientRing::rationals())).smooth});
  for (auto p : primes)
    out.push_back({p, is_smooth_over_field(x.with_coefficients(CoefficientRing::prime_field(p))).smooth});
  return out;
}

std::string smoothness_caveat() {
  return "smoothness over Z is checked only over Q and the listed primes, not over every fiber of Spec Z";
}

bool etale_split_check(const Ideal& ideal, const Polynomial& p, const std::string& z) {
  const RingPtr& base = ideal.ring();
  if (base->index_of(z)) throw DomainError("variable " + z + " already belongs to " + base->to_string());
  if (!(p.ring()->coefficients() == base->coefficients()))
    throw RingMismatch("P has coefficients in " + p.ring()->coefficients().name() + ", I in " +
                       base->coefficients().name());
  auto zi = p.ring()->index_of(z);
  if (!zi) throw DomainError("P does not live in a ring with variable " + z);
  for (std::size_t v = 0; v < p.ring()->arity(); ++v)
    if (v != *zi && p.involves(v) && !base->index_of(p.ring()->variable(v)))
      throw DomainError("P uses variable " + p.ring()->variable(v) + " outside " + base->to_string());
  if (!is_monic_in(p, *zi)) throw DomainError("P is not monic in " + z);
  auto vars = base->variables();
  vars.push_back(z);
  RingPtr joint = PolynomialRing::make(base->coefficients(), vars, base->order());
  auto gens = ideal.in_ring(joint).generators();
  Polynomial pj = p.in_ring(joint);
  gens.push_back(pj);
  gens.push_back(pj.derivative(joint->arity() - 1));
  return is_unit_ideal(Ideal(joint, std::move(gens)));
}

AffinePresentation fiber(const AffinePresentation& x, const Assignment& point) {
  const RingPtr& ring = x.ring();
  const auto& k = ring->coefficients();
  std::vector<bool> fixed(ring->arity(), false);
  Assignment values;
  for (const auto& [name, value] : point) {
    fixed[ring->require_index(name)] = true;
    values.emplace(name, k.from_rational(value));
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (!fixed[i]) rest.push_back(ring->variable(i));
  RingPtr target = ring->with_variables(rest);
  std::map<std::string, Polynomial> assign;
  for (const auto& [name, value] : values) assign.emplace(name, Polynomial::constant(target, value));
  std::vector<Polynomial> gens;
  for (const auto& g : x.ideal().generators()) gens.push_back(substitute(g, assign, target));
  Ideal fiber_ideal(target, std::move(gens));
  if (x.basepoint()) {
    const auto& bp = *x.basepoint();
    bool agrees = true;
    Point restricted;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      if (fixed[i])
        agrees = agrees && bp[i] == values.at(ring->variable(i));
      else
        restricted.push_back(bp[i]);
    }
    if (agrees) return AffinePresentation(std::move(fiber_ideal), std::move(restricted));
  }
  return AffinePresentation(std::move(fiber_ideal));
}

bool contains_point(const AffinePresentation& x, const Point& point) {
  require_length(*x.ring(), point);
  return vanishes_at(x.ideal(), map_point(point, x.ring()->coefficients()));
}

bool contains_point(const QuasiAffinePresentation& x, const Point& point) {
  if (!contains_point(x.ambient(), point)) return false;
  Point mapped = map_point(point, x.ring()->coefficients());
  return std::any_of(x.removed().generators().begin(), x.removed().generators().end(),
                     [&](const Polynomial& g) { return g.evaluate(mapped) != 0; });
}

Point to_point(const PolynomialRing& ring, const Assignment& assignment) {
  Point out;
  for (const auto& v : ring.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw DomainError("no value assigned to " + v);
    out.push_back(it->second);
  }
  for (const auto& [name, value] : assignment) ring.require_index(name);
  return out;
}

bool contains_point(const AffinePresentation& x, const Assignment& point) {
  return contains_point(x, to_point(*x.ring(), point));
}

std::string point_to_string(const Point& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ",";
    s += CoefficientRing::format(point[i]);
  }
  return s + ")";
}

std::string to_text(const AffinePresentation& x) {
  std::string s = "ring " + x.ring()->to_string() + "; ideal " + x.ideal().to_string();
  if (x.basepoint()) s += "; point " + point_to_string(*x.basepoint());
  return s;
}

std::string to_text(const QuasiAffinePresentation& x) {
  return to_text(x.ambient()) + "; removed " + x.removed().to_string();
}

}  // namespace forge
