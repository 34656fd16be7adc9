#include "forge/deformation.hpp"

#include <algorithm>
#include <set>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "forge/resultant.hpp"

namespace forge {

namespace {

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_fresh(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw DomainError("variable name " + n + " is used twice");
}

Scalar scalar_of(const Polynomial& c) { return c.is_zero() ? Scalar(0) : c.constant_value(); }

// Dense coefficients, lowest degree first, of a univariate polynomial.
std::vector<Scalar> dense(const Polynomial& p) {
  std::vector<Scalar> out;
  for (const auto& c : p.coefficients_in(0)) out.push_back(scalar_of(c));
  return out;
}

// Divides by (z - a) when a is a root; returns false otherwise.
bool deflate(std::vector<Scalar>& c, const Scalar& a, const CoefficientRing& k) {
  std::size_t d = c.size() - 1;
  std::vector<Scalar> q(d);
  Scalar carry = c[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = k.add(c[i], k.mul(carry, a));
  }
  if (carry != 0) return false;
  c = std::move(q);
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

DeformationResult parameterized_deformation(const AffinePresentation& x, const Polynomial& g,
                                            const std::vector<std::string>& torsor_names) {
  if (g.is_zero()) throw DomainError("the divisor g is zero");
  const RingPtr& base = x.ring();
  if (!(g.ring()->coefficients() == base->coefficients()))
    throw RingMismatch("g has coefficients in " + g.ring()->coefficients().name() + ", X in " +
                       base->coefficients().name());
  const auto& gens = x.ideal().generators();
  if (torsor_names.size() != gens.size())
    throw DomainError("need one torsor variable per relation: " + std::to_string(gens.size()) + " relations, " +
                      std::to_string(torsor_names.size()) + " names");
  std::vector<std::string> params;
  for (const auto& v : g.ring()->variables())
    if (!base->index_of(v)) params.push_back(v);
  auto vars = concat(concat(base->variables(), params), torsor_names);
  require_fresh(vars);
  RingPtr ring = PolynomialRing::make(base->coefficients(), vars, base->order());

  Polynomial gr = g.in_ring(ring);
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < gens.size(); ++i)
    relations.push_back(gens[i].in_ring(ring) - Polynomial::variable(ring, torsor_names[i]) * gr);
  Ideal ideal(ring, std::move(relations));

  Provenance prov{"parameterized_deformation", to_text(x), {{"g", g.to_string()}}};
  if (!x.basepoint()) return {AffinePresentation(std::move(ideal)), x, gr, params, torsor_names, prov};
  Point bp = *x.basepoint();
  bp.resize(ring->arity(), Scalar(0));
  return {AffinePresentation(std::move(ideal), std::move(bp)), x, gr, params, torsor_names, prov};
}

DeformationResult suspension_model(const AffinePresentation& x) {
  if (!x.is_pointed()) throw DomainError("suspension needs a pointed presentation");
  auto ci = complete_intersection_check(x);
  if (!ci.is_ci) throw DomainError("suspension needs a complete intersection presentation");
  const RingPtr& base = x.ring();
  const std::size_t c = x.ideal().size();
  auto names_for = [&](unsigned k) {
    std::vector<std::string> t;
    if (c == 1) {
      t.push_back("y" + std::to_string(k));
    } else {
      for (std::size_t i = 1; i <= c; ++i) t.push_back("y" + std::to_string(k) + "_" + std::to_string(i));
    }
    return t;
  };
  unsigned k = 1;
  for (;; ++k) {
    bool free = !base->index_of("x" + std::to_string(k));
    for (const auto& n : names_for(k)) free = free && !base->index_of(n);
    if (free) break;
  }
  const std::string u = "x" + std::to_string(k);
  RingPtr with_u = PolynomialRing::make(base->coefficients(), concat(base->variables(), {u}), base->order());
  auto result = parameterized_deformation(x, Polynomial::variable(with_u, u), names_for(k));
  result.provenance = {"suspension_model", to_text(x), {{"step", std::to_string(k)}}};
  return result;
}

DeformationResult iterated_suspension(const AffinePresentation& x, unsigned n) {
  Provenance prov{"iterated_suspension", to_text(x), {{"times", std::to_string(n)}}};
  if (n == 0) return {x, x, Polynomial::constant(x.ring(), Scalar(1)), {}, {}, prov};
  DeformationResult cur = suspension_model(x);
  std::vector<std::string> params = cur.parameter_vars, torsors = cur.torsor_vars;
  for (unsigned i = 1; i < n; ++i) {
    cur = suspension_model(cur.space);
    params = concat(params, cur.parameter_vars);
    torsors = concat(torsors, cur.torsor_vars);
  }
  return {cur.space, x, cur.divisor, params, torsors, prov};
}

// ---- families

std::vector<std::string> FamilySpec::torsor_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= generators.size(); ++i) out.push_back(torsor_prefix + std::to_string(i));
  return out;
}

void FamilySpec::validate() const {
  if (!base) throw DomainError("family has no base ring");
  if (generators.empty()) throw DomainError("family needs at least one generator of I");
  if (roots.empty()) throw DomainError("family needs at least one root");
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), base)) throw RingMismatch("generator " + f.to_string() + " is not in the base ring");
    if (f.is_zero()) throw DomainError("zero generator in I");
  }
  for (const auto& a : roots)
    if (!same_ring(a.ring(), base)) throw RingMismatch("root " + a.to_string() + " is not in the base ring");
  require_fresh(concat(concat(base->variables(), torsor_names()), {z}));
}

bool FamilySpec::roots_are_constant() const {
  return std::all_of(roots.begin(), roots.end(), [](const Polynomial& a) { return a.is_constant(); });
}

FamilySpec FamilySpec::with_coefficients(const CoefficientRing& coefficients) const {
  FamilySpec out = *this;
  out.base = base->with_coefficients(coefficients);
  for (auto& f : out.generators) f = f.in_ring(out.base);
  for (auto& a : out.roots) a = a.in_ring(out.base);
  return out;
}

Polynomial FamilySpec::split_polynomial() const {
  RingPtr ring = PolynomialRing::make(base->coefficients(), concat(base->variables(), {z}), base->order());
  Polynomial zv = Polynomial::variable(ring, z);
  Polynomial p = Polynomial::constant(ring, Scalar(1));
  for (const auto& a : roots) p = p * (zv - a.in_ring(ring));
  return p;
}

AffinePresentation danielewski_family(const FamilySpec& spec) {
  spec.validate();
  auto ts = spec.torsor_names();
  RingPtr ring = PolynomialRing::make(spec.base->coefficients(), concat(concat(spec.base->variables(), ts), {spec.z}),
                                      spec.base->order());
  Polynomial rel(ring);
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    rel = rel + Polynomial::variable(ring, ts[i]) * spec.generators[i].in_ring(ring);
  rel = rel - spec.split_polynomial().in_ring(ring);
  return AffinePresentation(Ideal(ring, {rel}));
}

std::optional<std::vector<Scalar>> split_roots(const Polynomial& p) {
  const RingPtr& ring = p.ring();
  if (ring->arity() != 1) throw DomainError("expected a univariate polynomial, got one over " + ring->to_string());
  if (p.is_zero() || !is_monic_in(p, 0)) throw DomainError("polynomial " + p.to_string() + " is not monic");
  const auto& k = ring->coefficients();
  std::vector<Scalar> c = dense(p);
  std::vector<Scalar> roots;
  auto peel = [&](const Scalar& a) {
    while (c.size() > 1 && deflate(c, a, k)) roots.push_back(a);
  };
  if (k.kind() == CoefficientRing::Kind::PrimeField) {
    for (std::uint64_t a = 0; a < k.characteristic() && c.size() > 1; ++a) peel(Scalar(a));
  } else {
    // z = w / D turns D^d p(w / D) into a monic integer polynomial in w
    mpz_class den = 1;
    for (const auto& v : c) den = lcm(den, mpz_class(v.get_den()));
    peel(Scalar(0));
    while (c.size() > 1) {
      std::size_t d = c.size() - 1;
      mpz_class scale = 1, constant;
      for (std::size_t i = 0; i < d; ++i) scale *= den;
      Scalar w0 = c[0] * Scalar(scale);
      constant = w0.get_num();
      bool found = false;
      for (const auto& e : divisors(constant)) {
        for (int sign : {1, -1}) {
          Scalar a = Scalar(mpz_class(e * sign), den);
          a.canonicalize();
          std::size_t before = roots.size();
          peel(a);
          if (roots.size() > before) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) break;
    }
  }
  if (c.size() > 1) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

QFamily q_family(const std::vector<unsigned>& m, const Polynomial& p) {
  if (m.empty()) throw DomainError("q_family needs at least one exponent");
  if (p.ring()->arity() != 1) throw DomainError("P must be univariate, got a polynomial over " + p.ring()->to_string());
  const auto& k = p.ring()->coefficients();
  const std::string z = p.ring()->variable(0);
  auto roots = split_roots(p);
  if (!roots) throw DomainError("P = " + p.to_string() + " does not split into linear factors over " + k.name());

  std::vector<std::string> xs;
  for (std::size_t i = 1; i <= m.size(); ++i) xs.push_back("x" + std::to_string(i));
  FamilySpec spec;
  spec.base = PolynomialRing::make(k, xs);
  spec.z = z;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) throw DomainError("exponents must be positive");
    spec.generators.push_back(Polynomial::variable(spec.base, i).pow(m[i]));
  }
  for (const auto& a : *roots) spec.roots.push_back(Polynomial::constant(spec.base, a));

  QFamily out{danielewski_family(spec), spec, scalar_of(discriminant(p, z)), false};
  out.discriminant_is_unit =
      k.is_field() ? out.discriminant != 0 : (out.discriminant == 1 || out.discriminant == -1);
  return out;
}

QuasiAffinePresentation quasi_affine_contractible(const FamilySpec& spec, std::size_t j) {
  spec.validate();
  if (spec.generators.size() < 2) throw DomainError("quasi-affine construction needs at least two generators of I");
  if (!spec.roots_are_constant()) throw DomainError("quasi-affine construction needs constant roots");
  for (std::size_t a = 0; a < spec.roots.size(); ++a)
    for (std::size_t b = a + 1; b < spec.roots.size(); ++b)
      if (spec.roots[a] == spec.roots[b]) throw DomainError("roots must be pairwise distinct");
  if (j < 1 || j > spec.roots.size())
    throw DomainError("index j = " + std::to_string(j) + " out of range 1.." + std::to_string(spec.roots.size()));
  auto dim = krull_dimension(spec.ideal());
  if (dim && spec.base->arity() - *dim < 2)
    throw DomainError("I has height " + std::to_string(spec.base->arity() - *dim) + ", need at least 2");

  AffinePresentation ambient = danielewski_family(spec);
  const RingPtr& ring = ambient.ring();
  std::vector<Polynomial> removed;
  for (const auto& f : spec.generators) removed.push_back(f.in_ring(ring));
  Polynomial zv = Polynomial::variable(ring, spec.z);
  Polynomial prod = Polynomial::constant(ring, Scalar(1));
  for (std::size_t i = 0; i < spec.roots.size(); ++i)
    if (i + 1 != j) prod = prod * (zv - spec.roots[i].in_ring(ring));
  removed.push_back(prod);
  return QuasiAffinePresentation(std::move(ambient), Ideal(ring, std::move(removed)));
}

std::map<std::string, AffinePresentation> builtin_seeds() {
  const auto zz = CoefficientRing::integers();
  std::map<std::string, AffinePresentation> out;
  {
    RingPtr r = PolynomialRing::make(zz, {"t"});
    Polynomial t = Polynomial::variable(r, 0);
    out.emplace("S0", AffinePresentation(Ideal(r, {t - t * t}), Point{0}));
  }
  {
    RingPtr r = PolynomialRing::make(zz, {"t1", "t2"});
    Polynomial rel = Polynomial::variable(r, 0) * Polynomial::variable(r, 1) - Polynomial::constant(r, 1);
    out.emplace("Gm", AffinePresentation(Ideal(r, {rel}), Point{1, 1}));
  }
  {
    RingPtr r = PolynomialRing::make(zz, {"x", "y", "z"});
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
    out.emplace("Jouanolou_A1_doubled", AffinePresentation(Ideal(r, {x * y - z - z * z}), Point{0, 0, 0}));
  }
  return out;
}

AffinePresentation quadric(unsigned n) {
  std::vector<std::string> vars{"z"};
  for (unsigned k = 1; k <= n; ++k) {
    vars.push_back("x" + std::to_string(k));
    vars.push_back("y" + std::to_string(k));
  }
  RingPtr r = PolynomialRing::make(CoefficientRing::integers(), vars);
  Polynomial z = Polynomial::variable(r, 0);
  Polynomial rel = z - z * z;
  for (unsigned k = 1; k <= n; ++k) rel = rel - Polynomial::variable(r, 2 * k - 1) * Polynomial::variable(r, 2 * k);
  return AffinePresentation(Ideal(r, {rel}), Point(r->arity(), Scalar(0)));
}

Renaming suspension_to_quadric(unsigned) { return {{"t", {"z", false}}}; }

Renaming suspension_to_q_family(unsigned n) {
  Renaming r{{"t", {"z", false}}};
  for (unsigned k = 1; k <= n; ++k) r["y" + std::to_string(k)] = {"t" + std::to_string(k), true};
  return r;
}

Polynomial rename(const Polynomial& f, const Renaming& renaming, const RingPtr& target) {
  std::map<std::string, Polynomial> assign;
  for (const auto& [from, to] : renaming) {
    if (!f.ring()->index_of(from)) continue;
    Polynomial v = Polynomial::variable(target, to.name);
    assign.emplace(from, to.negate ? -v : v);
  }
  return substitute(f, assign, target);
}

Ideal rename(const Ideal& ideal, const Renaming& renaming, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rename(g, renaming, target));
  return Ideal(target, std::move(gens));
}

}  // namespace forge
