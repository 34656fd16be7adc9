#include "forge/groebner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "forge/error.hpp"

namespace forge {

namespace {

RingPtr working_ring(const RingPtr& ring, MonomialOrder order) {
  RingPtr field = field_ring(ring);
  if (field->order() == order) return field;
  return field->with_order(order);
}

// Index of the first element whose leading monomial divides m, or npos.
std::size_t find_reducer(const std::vector<const Polynomial*>& reducers, const Monomial& m) {
  for (std::size_t i = 0; i < reducers.size(); ++i)
    if (reducers[i]->leading_monomial().divides(m)) return i;
  return static_cast<std::size_t>(-1);
}

// Full reduction. When quotients is non-null, records the multiples taken.
Polynomial reduce(Polynomial p, const std::vector<const Polynomial*>& reducers, std::vector<Polynomial>* quotients) {
  const RingPtr ring = p.ring();
  const auto& k = ring->coefficients();
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lead = p.leading_term();
    std::size_t i = find_reducer(reducers, lead.monomial);
    if (i == static_cast<std::size_t>(-1)) {
      remainder.push_back(lead);
      p = p.tail();
      continue;
    }
    const Polynomial& g = *reducers[i];
    Monomial shift = g.leading_monomial().quotient_of(lead.monomial);
    Scalar c = k.mul(lead.coefficient, k.inv(g.leading_coefficient()));
    if (quotients) (*quotients)[i] = (*quotients)[i] + Polynomial::monomial(ring, shift, c);
    p = Polynomial::sub_multiple(p, c, shift, g);
  }
  // Remainder terms were emitted in descending order.
  return Polynomial::from_terms(ring, std::move(remainder));
}

struct Pair {
  std::uint64_t degree;
  std::size_t first;
  std::size_t second;
  Monomial lcm;
};

// Grevlex: (deg lcm, i, j). Other orders are not degree compatible, and picking
// by degree there lets lex coefficients explode; they take the smallest lcm
// under the order itself, ties by (i, j).
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& order) {
  if (order.kind != MonomialOrder::Kind::Grevlex) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
  }
  return std::tie(a.degree, a.first, a.second) < std::tie(b.degree, b.first, b.second);
}

class Buchberger {
public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false as soon as a nonzero constant appears (unit ideal).
  bool run(const std::vector<Polynomial>& input) {
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      if (!insert(f.monic())) return false;
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const Pair& a, const Pair& b) { return pair_before(a, b, ring_->order()); });
      Pair pair = *best;
      pairs_.erase(best);
      Polynomial s = s_polynomial(basis_[pair.first], basis_[pair.second]);
      Polynomial h = reduce(std::move(s), active_reducers(), nullptr);
      if (h.is_zero()) continue;
      if (!insert(h.monic())) return false;
    }
    return true;
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(basis_[i]);
    return out;
  }

private:
  std::vector<const Polynomial*> active_reducers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(&basis_[i]);
    return out;
  }

  bool insert(Polynomial h) {
    if (h.is_constant()) return false;
    const std::size_t index = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    update(index);
    return true;
  }

  // Gebauer-Moeller installation of the new element `h`.
  void update(std::size_t h) {
    const Monomial& lh = basis_[h].leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      Monomial l = lh.lcm(basis_[g].leading_monomial());
      candidates.push_back({l.degree(), g, h, std::move(l)});
    }
    // Chain criterion among the new pairs, processed in index order: a pair
    // survives unless its lcm is a multiple of the lcm of a pair still pending
    // or already accepted. Coprime pairs survive here so they can still
    // discard others, and are dropped by the product criterion below.
    std::vector<bool> keep(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (basis_[candidates[a].first].leading_monomial().coprime(lh)) {
        keep[a] = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a || (b < a && !keep[b])) continue;
        dominated = candidates[b].lcm.divides(candidates[a].lcm);
      }
      keep[a] = !dominated;
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      if (basis_[candidates[a].first].leading_monomial().coprime(lh)) continue;  // product criterion
      fresh.push_back(std::move(candidates[a]));
    }
    // Old pairs made redundant by h.
    std::vector<Pair> retained;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lh.lcm(basis_[p.first].leading_monomial()) == p.lcm) &&
                  !(lh.lcm(basis_[p.second].leading_monomial()) == p.lcm);
      if (!drop) retained.push_back(std::move(p));
    }
    pairs_ = std::move(retained);
    for (auto& p : fresh) pairs_.push_back(std::move(p));
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens) {
  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's; among equal leading monomials keep the first.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = gens[i].leading_monomial();
      const auto& mj = gens[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    reduced.push_back(reduce(minimal[i], others, nullptr).monic());
  }
  if (!reduced.empty()) {
    const auto& order = reduced[0].ring()->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
  }
  return reduced;
}

// Maps eliminated/saturated generators back into the caller's ring.
std::vector<Polynomial> to_caller_ring(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial p = ring->coefficients().kind() == CoefficientRing::Kind::Integers ? g.primitive() : g;
    out.push_back(p.in_ring(ring));
  }
  return out;
}

std::string fresh_variable(const PolynomialRing& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const auto& k = f.ring()->coefficients();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(f.leading_monomial().quotient_of(l), k.inv(f.leading_coefficient()));
  return Polynomial::sub_multiple(a, k.inv(g.leading_coefficient()), g.leading_monomial().quotient_of(l), g);
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, MonomialOrder order) {
  RingPtr ring = working_ring(f.ring(), order);
  std::vector<Polynomial> ds;
  for (const auto& d : divisors) {
    require_same_ring(f, d);
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    ds.push_back(d.in_ring(ring));
  }
  std::vector<const Polynomial*> reducers;
  for (const auto& d : ds) reducers.push_back(&d);
  Division result{std::vector<Polynomial>(ds.size(), Polynomial(ring)), Polynomial(ring)};
  result.remainder = reduce(f.in_ring(ring), reducers, &result.quotients);
  return result;
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  RingPtr ring = working_ring(ideal.ring(), order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));
  Buchberger engine(ring);
  GroebnerBasis basis{ring, ring->order(), {}};
  if (!engine.run(gens)) {
    basis.elements = {Polynomial::constant(ring, Scalar(1))};
    return basis;
  }
  basis.elements = reduce_basis(engine.active());
  return basis;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  std::vector<const Polynomial*> reducers;
  for (const auto& g : basis.elements) reducers.push_back(&g);
  return reduce(f.in_ring(basis.ring), reducers, nullptr);
}

bool is_groebner_basis(const std::vector<Polynomial>& elements) {
  std::vector<const Polynomial*> reducers;
  for (const auto& g : elements) {
    if (g.is_zero()) return false;
    reducers.push_back(&g);
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!reduce(s_polynomial(elements[i], elements[j]), reducers, nullptr).is_zero()) return false;
  return true;
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring()))
    throw RingMismatch("membership test across rings " + f.ring()->to_string() + " and " +
                       ideal.ring()->to_string());
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(ideal)).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) { return groebner_basis(ideal).is_unit(); }

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_variables_and_coefficients(*b.ring()))
    throw RingMismatch("ideal comparison across rings " + a.ring()->to_string() + " and " + b.ring()->to_string());
  auto ga = groebner_basis(a);
  auto gb = groebner_basis(b.in_ring(a.ring()));
  return ga.elements == gb.elements;
}

Ideal eliminate(const Ideal& ideal, const std::set<std::string>& drop) {
  const auto& ring = *ideal.ring();
  for (const auto& v : drop) ring.require_index(v);
  if (drop.empty()) {
    auto basis = groebner_basis(ideal);
    return Ideal(ideal.ring(), to_caller_ring(basis.elements, ideal.ring()));
  }
  std::vector<std::string> reordered;
  for (const auto& v : ring.variables())
    if (drop.count(v)) reordered.push_back(v);
  for (const auto& v : ring.variables())
    if (!drop.count(v)) reordered.push_back(v);
  RingPtr block = field_ring(ideal.ring())->with_variables(reordered)->with_order(MonomialOrder::block(drop.size()));
  auto basis = groebner_basis(ideal.in_ring(block), block->order());
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements) {
    bool touches = false;
    for (std::size_t i = 0; i < drop.size(); ++i) touches = touches || g.involves(i);
    if (!touches) kept.push_back(g);
  }
  return Ideal(ideal.ring(), to_caller_ring(kept, ideal.ring()));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("saturation by a polynomial from another ring");
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const auto& ring = *ideal.ring();
  std::string w = fresh_variable(ring, "w");
  auto vars = ring.variables();
  vars.push_back(w);
  RingPtr extended = ideal.ring()->with_variables(vars);
  Ideal lifted = ideal.in_ring(extended);
  Polynomial one = Polynomial::constant(extended, Scalar(1));
  lifted = lifted.with(one - Polynomial::variable(extended, w) * f.in_ring(extended));
  Ideal eliminated = eliminate(lifted, {w});
  return eliminated.in_ring(ideal.ring());
}

std::optional<std::size_t> krull_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->arity();
  if (n > 30) throw DomainError("krull_dimension supports at most 30 variables");
  auto basis = groebner_basis(ideal, MonomialOrder::grevlex());
  if (basis.is_unit()) return std::nullopt;
  std::vector<std::uint64_t> supports;
  for (const auto& g : basis.elements) supports.push_back(g.leading_monomial().support());
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

Ideal jacobian_minors_ideal(const std::vector<Polynomial>& gens, const std::vector<std::string>& vars,
                            std::size_t size) {
  if (gens.empty()) throw DomainError("jacobian of an empty generator list");
  if (size == 0 || size > gens.size() || size > vars.size())
    throw DomainError("minor size " + std::to_string(size) + " out of range");
  const RingPtr& ring = gens[0].ring();
  for (const auto& g : gens) require_same_ring(gens[0], g);
  std::vector<std::vector<Polynomial>> jacobian;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (const auto& v : vars) row.push_back(g.derivative(ring->require_index(v)));
    jacobian.push_back(std::move(row));
  }
  auto combinations = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      out.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  };
  std::vector<Polynomial> minors;
  for (const auto& rows : combinations(gens.size(), size)) {
    for (const auto& cols : combinations(vars.size(), size)) {
      std::vector<std::vector<Polynomial>> sub;
      for (auto r : rows) {
        std::vector<Polynomial> line;
        for (auto c : cols) line.push_back(jacobian[r][c]);
        sub.push_back(std::move(line));
      }
      minors.push_back(determinant(sub, ring));
    }
  }
  return Ideal(ring, std::move(minors));
}

}  // namespace forge
