#include "forge/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "forge/error.hpp"

namespace forge {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw RingMismatch("ring mismatch: " + a.ring()->to_string() + " (" + a.ring()->order().name() + ") vs " +
                       b.ring()->to_string() + " (" + b.ring()->order().name() + ")");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& value) {
  Polynomial p(ring);
  Scalar c = ring->coefficients().from_rational(value);
  if (c != 0) p.terms_.push_back({Monomial(ring->arity()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::unit(ring->arity(), index), Scalar(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& coefficient) {
  if (m.arity() != ring->arity()) throw DomainError("monomial arity does not match ring");
  Polynomial p(ring);
  Scalar c = ring->coefficients().from_rational(coefficient);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& k = ring->coefficients();
  for (auto& t : terms) {
    if (t.monomial.arity() != ring->arity()) throw DomainError("monomial arity does not match ring");
    t.coefficient = k.from_rational(t.coefficient);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = k.add(p.terms_.back().coefficient, t.coefficient);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Scalar Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Scalar(0);
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  const auto& k = ring_->coefficients();
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, k.neg(t.coefficient)});
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const auto& k = ring_->coefficients();
  Scalar cc = k.from_rational(c);
  Polynomial p(ring_);
  if (cc == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, k.mul(t.coefficient, cc)});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  const auto& k = ring_->coefficients();
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, k.mul(t.coefficient, c)});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const auto& k = ring_->coefficients();
  if (!k.is_field()) throw DomainError("monic normalization needs a field");
  return scaled(k.inv(leading_coefficient()));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  const auto& k = ring_->coefficients();
  if (k.kind() == CoefficientRing::Kind::PrimeField) return monic();
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_coefficient() < 0) factor = -factor;
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coefficient * factor});
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const auto& order = a.ring_->order();
  const auto& k = a.ring_->coefficients();
  Polynomial r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = order.compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = k.add(a.terms_[i].coefficient, b.terms_[j].coefficient);
      if (s != 0) r.terms_.push_back({a.terms_[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial::sub_multiple(a, Scalar(1), Monomial(a.ring_->arity()), b);
}

Polynomial Polynomial::sub_multiple(const Polynomial& f, const Scalar& c, const Monomial& m, const Polynomial& g) {
  const auto& order = f.ring_->order();
  const auto& k = f.ring_->coefficients();
  Polynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  auto next_g = [&]() -> const Monomial& {
    if (!have_shifted) {
      shifted = g.terms_[j].monomial * m;
      have_shifted = true;
    }
    return shifted;
  };
  while (i < f.terms_.size() && j < g.terms_.size()) {
    const Monomial& gm = next_g();
    auto cmp = order.compare(f.terms_[i].monomial, gm);
    if (cmp > 0) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, k.neg(k.mul(c, g.terms_[j].coefficient))});
      ++j;
      have_shifted = false;
    } else {
      Scalar s = k.sub(f.terms_[i].coefficient, k.mul(c, g.terms_[j].coefficient));
      if (s != 0) r.terms_.push_back({f.terms_[i].monomial, s});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    r.terms_.push_back({next_g(), k.neg(k.mul(c, g.terms_[j].coefficient))});
    have_shifted = false;
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const auto& k = a.ring_->coefficients();
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coefficient);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, k.mul(s.coefficient, t.coefficient)});
  return Polynomial::from_terms(a.ring_, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->arity()) throw DomainError("point has wrong number of coordinates");
  const auto& k = ring_->coefficients();
  Scalar total(0);
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[i]);
      if (v == 0) break;
    }
    total = k.add(total, v);
  }
  return total;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->arity()) throw DomainError("variable index out of range");
  const auto& k = ring_->coefficients();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    auto exps = t.monomial.exponents();
    exps[var] -= 1;
    Scalar c = k.mul(t.coefficient, k.from_rational(Scalar(static_cast<unsigned long>(e))));
    if (c != 0) out.push_back({Monomial(std::move(exps)), c});
  }
  // Lowering one exponent can reorder terms (grevlex), so normalize.
  return from_terms(ring_, std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::uint32_t d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    auto exps = t.monomial.exponents();
    std::uint32_t e = exps[var];
    exps[var] = 0;
    buckets[e].push_back({Monomial(std::move(exps)), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return *this;
  std::vector<std::size_t> map(ring_->arity());
  std::vector<bool> present(ring_->arity(), false);
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    if (auto j = target->index_of(ring_->variable(i))) {
      map[i] = *j;
      present[i] = true;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> exps(target->arity(), 0);
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!present[i])
        throw DomainError("variable '" + ring_->variable(i) + "' does not exist in " + target->to_string());
      exps[map[i]] = t.monomial[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_->variable(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      s += CoefficientRing::format(c);
    } else if (c == 1) {
      s += factors;
    } else {
      s += CoefficientRing::format(c) + "*" + factors;
    }
  }
  return s;
}

Polynomial arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  return f;
}

Polynomial power(const Polynomial& f, unsigned exponent) { return f.pow(exponent); }

Scalar evaluate(const Polynomial& f, const std::map<std::string, Scalar>& point) {
  const auto& ring = *f.ring();
  std::vector<Scalar> coords(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    auto it = point.find(ring.variable(i));
    if (it == point.end()) throw DomainError("missing assignment for variable '" + ring.variable(i) + "'");
    coords[i] = ring.coefficients().from_rational(it->second);
  }
  return f.evaluate(coords);
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
  return f.derivative(f.ring()->require_index(var));
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment) {
  return substitute(f, assignment, f.ring());
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target) {
  const auto& source = *f.ring();
  if (!(source.coefficients() == target->coefficients()))
    throw RingMismatch("substitution between coefficient rings " + source.coefficients().name() + " and " +
                       target->coefficients().name());
  std::vector<Polynomial> images;
  images.reserve(source.arity());
  for (const auto& [name, value] : assignment) {
    if (!source.index_of(name)) throw DomainError("substitution for unknown variable '" + name + "'");
    if (!same_ring(value.ring(), target))
      throw RingMismatch("substituted polynomial for '" + name + "' is not in " + target->to_string());
  }
  for (std::size_t i = 0; i < source.arity(); ++i) {
    auto it = assignment.find(source.variable(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (target->index_of(source.variable(i))) {
      images.push_back(Polynomial::variable(target, source.variable(i)));
    } else {
      // Only an error if the variable actually occurs.
      images.push_back(Polynomial(target));
    }
  }
  std::vector<std::vector<Polynomial>> powers(source.arity());
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial total(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < source.arity(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (assignment.find(source.variable(i)) == assignment.end() && !target->index_of(source.variable(i)))
        throw DomainError("variable '" + source.variable(i) + "' has no image in " + target->to_string());
      term = term * power_of(i, e);
    }
    total = total + term;
  }
  return total;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix, const RingPtr& ring) {
  const std::size_t n = matrix.size();
  if (n == 0) return Polynomial::constant(ring, Scalar(1));
  for (const auto& row : matrix)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n > 24) throw DomainError("determinant too large for cofactor expansion");
  // Expansion along columns, memoized on the set of rows already used:
  // minor[mask] is the determinant of rows outside mask against the last
  // n - popcount(mask) columns.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto solve = [&](auto&& self, std::uint32_t used) -> Polynomial {
    const std::size_t col = static_cast<std::size_t>(std::popcount(used));
    if (col == n) return Polynomial::constant(ring, Scalar(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial total(ring);
    int position = 0;
    for (std::size_t row = 0; row < n; ++row) {
      if (used & (1u << row)) continue;
      const Polynomial& entry = matrix[row][col];
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, used | (1u << row));
        total = (position % 2 == 0) ? total + term : total - term;
      }
      ++position;
    }
    memo.emplace(used, total);
    return total;
  };
  return solve(solve, 0);
}

}  // namespace forge
