#include "forge/verification.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "forge/resultant.hpp"

namespace forge {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw DomainError("point count overflows 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) throw DomainError("point count overflows 64 bits");
  return a + b;
}

std::uint64_t ipow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

CoefficientRing field_of(std::uint64_t p) {
  if (p == 0) return CoefficientRing::rationals();
  return CoefficientRing::prime_field(p);
}

std::string label_of(std::uint64_t p) { return p == 0 ? "Q" : "F" + std::to_string(p); }

void require_characteristic(const CoefficientRing& k, std::uint64_t p) {
  if (k.kind() == CoefficientRing::Kind::PrimeField && k.characteristic() != p)
    throw DomainError("cannot count " + k.name() + "-points over F" + std::to_string(p));
}

// Generators reduced to machine integers mod p.
class CompiledIdeal {
public:
  CompiledIdeal(const Ideal& ideal, std::uint64_t p) : p_(p), arity_(ideal.ring()->arity()) {
    if (p >= (std::uint64_t{1} << 32)) throw DomainError("prime too large for enumeration");
    for (const auto& g : ideal.generators()) {
      std::vector<Mono> terms;
      for (const auto& t : g.terms()) {
        terms.push_back({t.coefficient.get_num().get_ui(), t.monomial.exponents()});
        for (auto e : t.monomial.exponents()) max_exp_ = std::max(max_exp_, e);
      }
      polys_.push_back(std::move(terms));
    }
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return polys_.size(); }
  std::uint32_t max_exponent() const { return max_exp_; }

  // powers[i][e] = point_i^e mod p
  std::uint64_t eval(std::size_t k, const std::vector<std::vector<std::uint64_t>>& powers) const {
    std::uint64_t total = 0;
    for (const auto& m : polys_[k]) {
      std::uint64_t v = m.coefficient;
      for (std::size_t i = 0; i < arity_ && v; ++i)
        if (m.exponents[i]) v = v * powers[i][m.exponents[i]] % p_;
      total = (total + v) % p_;
    }
    return total;
  }

private:
  struct Mono {
    std::uint64_t coefficient;
    std::vector<std::uint32_t> exponents;
  };
  std::uint64_t p_;
  std::size_t arity_;
  std::uint32_t max_exp_ = 0;
  std::vector<std::vector<Mono>> polys_;
};

// Calls `accept` on every point (as powers table), counts those it accepts.
std::uint64_t enumerate(std::size_t arity, std::uint64_t p, std::uint32_t max_exp, std::uint64_t budget,
                        const std::function<bool(const std::vector<std::vector<std::uint64_t>>&)>& accept) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (total > budget / p) {
      throw BudgetExceeded("enumerating F" + std::to_string(p) + "^" + std::to_string(arity) + " exceeds the budget of " +
                           std::to_string(budget) + " points");
    }
    total *= p;
  }
  if (total > budget)
    throw BudgetExceeded("enumerating F" + std::to_string(p) + "^" + std::to_string(arity) + " exceeds the budget of " +
                         std::to_string(budget) + " points");
  // table[v][e] = v^e mod p
  std::vector<std::vector<std::uint64_t>> table(p, std::vector<std::uint64_t>(max_exp + 1, 1));
  for (std::uint64_t v = 0; v < p; ++v)
    for (std::uint32_t e = 1; e <= max_exp; ++e) table[v][e] = table[v][e - 1] * v % p;
  std::vector<std::uint64_t> digits(arity, 0);
  std::vector<std::vector<std::uint64_t>> powers(arity, table[0]);
  std::uint64_t count = 0;
  for (;;) {
    if (accept(powers)) ++count;
    std::size_t i = 0;
    for (; i < arity; ++i) {
      if (++digits[i] < p) {
        powers[i] = table[digits[i]];
        break;
      }
      digits[i] = 0;
      powers[i] = table[0];
    }
    if (i == arity) break;
  }
  return count;
}

AffinePresentation mod_p(const AffinePresentation& x, std::uint64_t p) {
  require_characteristic(x.ring()->coefficients(), p);
  if (x.ring()->coefficients().kind() == CoefficientRing::Kind::PrimeField) return x;
  return AffinePresentation(x.ideal().in_ring(x.ring()->with_coefficients(CoefficientRing::prime_field(p))));
}

FamilySpec spec_over(const FamilySpec& spec, std::uint64_t p) {
  const auto& k = spec.base->coefficients();
  if (k.kind() == CoefficientRing::Kind::PrimeField) {
    require_characteristic(k, p);
    return spec;
  }
  if (p == 0 && k.kind() == CoefficientRing::Kind::Rationals) return spec;
  return spec.with_coefficients(field_of(p));
}

bool distinct_constants(const std::vector<Polynomial>& roots) {
  for (const auto& a : roots)
    if (!a.is_constant()) return false;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return false;
  return true;
}

CheckResult boolean_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

// Runs body; errors become a failed check named `name`.
void guarded(VerificationReport& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceeded& e) {
    report.budget_exceeded = true;
    report.add({name, Status::Fail, e.what()});
  } catch (const Error& e) {
    report.add({name, Status::Fail, e.what()});
  }
}

std::string list_text(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s + ")";
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

std::uint64_t count_points_bruteforce(const AffinePresentation& x, std::uint64_t p, std::uint64_t budget) {
  CompiledIdeal c(mod_p(x, p).ideal(), p);
  return enumerate(c.arity(), p, c.max_exponent(), budget, [&](const auto& powers) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c.eval(k, powers) != 0) return false;
    return true;
  });
}

std::uint64_t count_points_bruteforce(const QuasiAffinePresentation& x, std::uint64_t p, std::uint64_t budget) {
  auto amb = mod_p(x.ambient(), p);
  CompiledIdeal a(amb.ideal(), p);
  CompiledIdeal r(x.removed().in_ring(amb.ring()), p);
  return enumerate(a.arity(), p, std::max(a.max_exponent(), r.max_exponent()), budget, [&](const auto& powers) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a.eval(k, powers) != 0) return false;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r.eval(k, powers) != 0) return true;
    return false;
  });
}

std::uint64_t predicted_count_family(const FamilySpec& spec, std::uint64_t p, std::uint64_t budget) {
  if (p == 0) throw DomainError("point counts need a prime");
  FamilySpec s = spec_over(spec, p);
  s.validate();
  if (!distinct_constants(s.roots)) throw DomainError("roots are not distinct constants mod " + std::to_string(p));
  if (!etale_split_check(s.ideal(), s.split_polynomial(), s.z))
    throw DomainError("the split cover is not etale over F" + std::to_string(p));
  std::uint64_t y = count_points_bruteforce(AffinePresentation(s.ideal()), p, budget);
  const std::size_t n = s.base->arity(), r = s.generators.size(), roots = s.roots.size();
  return checked_add(ipow(p, n + r), checked_mul(checked_mul(roots - 1, y), ipow(p, r)));
}

std::uint64_t predicted_count_suspension(const DeformationResult& d, std::uint64_t p, std::uint64_t budget) {
  if (d.parameter_vars.size() != 1) throw DomainError("expected a single suspension step");
  std::uint64_t x = count_points_bruteforce(d.input, p, budget);
  const std::size_t n = d.input.ring()->arity(), c = d.input.ideal().size();
  return checked_add(checked_mul(p - 1, ipow(p, n)), checked_mul(x, ipow(p, c)));
}

CheckResult verify_generic_fiber(const DeformationResult& d, const Scalar& unit_value) {
  if (d.parameter_vars.size() != 1) throw DomainError("generic fiber check needs exactly one parameter variable");
  if (unit_value == 0) throw DomainError("the generic fiber needs a nonzero parameter value");
  RingPtr ring = field_ring(d.space.ring());
  const auto& k = ring->coefficients();
  Scalar c = k.from_rational(unit_value);
  if (c == 0) throw DomainError("parameter value vanishes in " + k.name());
  const std::string& u = d.parameter_vars[0];
  std::map<std::string, Polynomial> at_u{{u, Polynomial::constant(ring, c)}};
  Polynomial g = substitute(d.divisor.in_ring(ring), at_u);
  if (!g.is_constant() || g.is_zero()) throw DomainError("divisor is not a unit on the fiber");
  Scalar g_inv = k.inv(g.constant_value());
  std::map<std::string, Polynomial> graph = at_u;
  const auto& fs = d.input.ideal().generators();
  for (std::size_t i = 0; i < fs.size(); ++i) graph.emplace(d.torsor_vars[i], fs[i].in_ring(ring).scaled(g_inv));
  for (const auto& rel : d.space.ideal().generators()) {
    Polynomial r = substitute(rel.in_ring(ring), graph);
    if (!r.is_zero())
      return {"generic-fiber", Status::Fail, "relation " + rel.to_string() + " leaves " + r.to_string()};
  }
  return {"generic-fiber", Status::Pass,
          u + " = " + CoefficientRing::format(c) + ": every relation vanishes on the graph t_i = f_i/g"};
}

CheckResult verify_zero_fiber(const DeformationResult& d) {
  if (d.parameter_vars.empty()) return {"zero-fiber", Status::Skipped, "no parameter variable, no zero fiber"};
  if (d.parameter_vars.size() != 1) throw DomainError("zero fiber check needs exactly one parameter variable");
  auto f = fiber(d.space, {{d.parameter_vars[0], Scalar(0)}});
  Ideal expected = d.input.ideal().in_ring(f.ring());
  bool ok = ideals_equal(f.ideal(), expected);
  return {"zero-fiber", ok ? Status::Pass : Status::Fail,
          "fiber " + f.ideal().to_string() + (ok ? " equals " : " differs from ") + expected.to_string() +
              " with torsor variables free"};
}

CheckResult discriminant_unit_check(const Polynomial& p, const CoefficientRing& ring) {
  if (p.ring()->arity() != 1) throw DomainError("discriminant check needs a univariate polynomial");
  const std::string name = "discriminant-unit[" + ring.name() + "]";
  RingPtr target = p.ring()->with_coefficients(ring);
  // a leading coefficient of -1 is a unit everywhere: z(1-z) is read as -z(z-1)
  Polynomial q = !p.is_zero() && p.leading_coefficient() == -1 ? -p : p;
  if (!is_monic_in(q, 0)) throw DomainError("polynomial " + p.to_string() + " is not monic up to sign");
  Polynomial pk = q.in_ring(target);
  Polynomial disc = discriminant(pk, target->variable(0));
  Scalar d = disc.is_zero() ? Scalar(0) : disc.constant_value();
  bool ok = ring.is_field() ? d != 0 : (d == 1 || d == -1);
  return {name, ok ? Status::Pass : Status::Fail,
          "disc(" + pk.to_string() + ") = " + CoefficientRing::format(d) + (ok ? " is a unit" : " is not a unit")};
}

CheckResult z_degree3_obstruction(long bound) {
  if (bound < 2) throw DomainError("root bound must be at least 2");
  RingPtr ring = PolynomialRing::make(CoefficientRing::integers(), {"z"});
  Polynomial z = Polynomial::variable(ring, 0);
  auto lin = [&](long a) { return z - Polynomial::constant(ring, Scalar(a)); };
  std::uint64_t triples = 0;
  Scalar smallest = -1;
  for (long a = -bound; a <= bound; ++a)
    for (long b = a + 1; b <= bound; ++b)
      for (long c = b + 1; c <= bound; ++c) {
        Polynomial disc = discriminant(lin(a) * lin(b) * lin(c), "z");
        Scalar d = abs(disc.constant_value());
        ++triples;
        if (smallest < 0 || d < smallest) smallest = d;
        if (d < 2)
          return {"z-degree3-obstruction", Status::Fail,
                  "roots (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      ") give |disc| = " + CoefficientRing::format(d)};
      }
  return {"z-degree3-obstruction", Status::Pass,
          std::to_string(triples) + " root triples in [-" + std::to_string(bound) + "," + std::to_string(bound) +
              "], smallest |disc| = " + CoefficientRing::format(smallest)};
}

std::string describe(const FamilySpec& spec) {
  return "I = " + list_text(spec.generators) + ", roots = " + list_text(spec.roots) + " over " +
         spec.base->to_string();
}

VerificationReport verify_family(const FamilySpec& spec, const FamilyOptions& options) {
  VerificationReport report;
  report.subject = "family " + describe(spec);
  std::vector<std::uint64_t> chars;
  const auto& k = spec.base->coefficients();
  if (k.kind() == CoefficientRing::Kind::PrimeField) {
    chars.push_back(k.characteristic());
  } else {
    if (options.characteristic_zero) chars.push_back(0);
    for (auto p : options.primes) chars.push_back(p);
  }
  for (std::uint64_t p : chars) {
    const std::string tag = "[" + label_of(p) + "]";
    FamilySpec s;
    try {
      s = spec_over(spec, p);
      s.validate();
    } catch (const Error& e) {
      report.add({"family" + tag, Status::Fail, e.what()});
      continue;
    }
    guarded(report, "ci" + tag, [&] {
      auto ci = complete_intersection_check(AffinePresentation(s.ideal()));
      report.add(boolean_check("ci" + tag, ci.is_ci,
                               "codimension " + std::to_string(ci.codimension) + ", " +
                                   std::to_string(ci.generator_count) + " generators"));
    });
    std::optional<bool> etale, smooth;
    guarded(report, "etale" + tag, [&] {
      etale = etale_split_check(s.ideal(), s.split_polynomial(), s.z);
      report.add(boolean_check("etale" + tag, *etale, *etale ? "(I, P, dP/dz) is the unit ideal" : "(I, P, dP/dz) is proper"));
    });
    AffinePresentation x = danielewski_family(s);
    guarded(report, "smooth" + tag, [&] {
      auto sm = is_smooth_over_field(x);
      smooth = sm.smooth;
      report.add(boolean_check("smooth" + tag, sm.smooth,
                               sm.smooth ? "Jacobian criterion: singular ideal is (1)" : "singular ideal is proper"));
    });
    if (etale && smooth)
      report.add(boolean_check("smooth-iff-etale" + tag, *etale == *smooth,
                               std::string("smooth ") + (*smooth ? "yes" : "no") + ", etale " + (*etale ? "yes" : "no")));
    else
      report.add({"smooth-iff-etale" + tag, Status::Fail, "a side of the equivalence could not be computed"});
    if (p == 0) continue;

    bool countable = smooth.value_or(false) && etale.value_or(false) && distinct_constants(s.roots);
    if (!countable) {
      report.add({"count" + tag, Status::Skipped, "needs a smooth family with distinct constant roots"});
      continue;
    }
    const std::size_t n = s.base->arity(), r = s.generators.size();
    guarded(report, "count" + tag, [&] {
      std::uint64_t brute = count_points_bruteforce(x, p, options.budget);
      std::uint64_t predicted = predicted_count_family(s, p, options.budget);
      report.counts.push_back({"X", p, brute, predicted});
      report.add(boolean_check("count" + tag, brute == predicted,
                               "brute force " + std::to_string(brute) + ", predicted " + std::to_string(predicted)));
    });
    auto dim = krull_dimension(s.ideal());
    bool tall = r >= 2 && dim && n - *dim >= 2;
    if (!tall) continue;
    for (std::size_t j = 1; j <= s.roots.size(); ++j) {
      const std::string name = "quasi-affine-count[j=" + std::to_string(j) + "]" + tag;
      guarded(report, name, [&] {
        auto xj = quasi_affine_contractible(s, j);
        std::uint64_t brute = count_points_bruteforce(xj, p, options.budget);
        std::uint64_t expected = ipow(p, n + r);
        report.counts.push_back({"X_" + std::to_string(j), p, brute, expected});
        report.add(boolean_check(name, brute == expected,
                                 "brute force " + std::to_string(brute) + ", affine-space count " +
                                     std::to_string(expected) + " (necessary condition only)"));
      });
    }
  }
  return report;
}

VerificationReport verify_suspension(const DeformationResult& d, const std::vector<std::uint64_t>& primes,
                                     std::uint64_t budget) {
  VerificationReport report;
  report.subject = d.provenance.construction + " of " + d.provenance.input;
  guarded(report, "generic-fiber", [&] { report.add(verify_generic_fiber(d, Scalar(1))); });
  guarded(report, "zero-fiber", [&] { report.add(verify_zero_fiber(d)); });
  for (auto p : primes) {
    const std::string name = "suspension-count[" + label_of(p) + "]";
    guarded(report, name, [&] {
      std::uint64_t brute = count_points_bruteforce(d.space, p, budget);
      std::uint64_t predicted = predicted_count_suspension(d, p, budget);
      report.counts.push_back({"D", p, brute, predicted});
      report.add(boolean_check(name, brute == predicted,
                               "brute force " + std::to_string(brute) + ", predicted " + std::to_string(predicted)));
    });
  }
  return report;
}

}  // namespace forge
