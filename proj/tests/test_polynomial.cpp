#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "forge/error.hpp"
#include "forge/resultant.hpp"
#include "support.hpp"

using namespace forge;
using forge::testing::poly;
using forge::testing::ring;

TEST_CASE("coefficient rings") {
  CHECK(parse_coefficient_ring("Z").kind() == CoefficientRing::Kind::Integers);
  CHECK(parse_coefficient_ring("QQ").kind() == CoefficientRing::Kind::Rationals);
  CHECK(parse_coefficient_ring("F<5>").characteristic() == 5);
  CHECK(parse_coefficient_ring("GF(7)").name() == "F7");
  CHECK_THROWS_AS(CoefficientRing::prime_field(4), DomainError);
  CHECK_THROWS_AS(CoefficientRing::prime_field(1), DomainError);
  auto f5 = CoefficientRing::prime_field(5);
  CHECK(f5.from_int(-1) == 4);
  CHECK(f5.from_rational(Scalar(1, 2)) == 3);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(f5.from_rational(Scalar(1, 5)), DomainError);
  CHECK_THROWS_AS(CoefficientRing::integers().from_rational(Scalar(1, 2)), DomainError);
  CHECK(CoefficientRing::rationals().from_rational(Scalar(6, 4)) == Scalar(3, 2));
}

TEST_CASE("ring construction validates names") {
  CHECK_THROWS_AS(ring("Q", {"x", "x"}), DomainError);
  CHECK_THROWS_AS(ring("Q", {"1x"}), DomainError);
  CHECK_THROWS_AS(ring("Q", {""}), DomainError);
  CHECK_THROWS_AS(ring("Q", {"x", "y"}, MonomialOrder::block(3)), DomainError);
  CHECK(ring("Z", {"x", "y_2"})->to_string() == "Z[x,y_2]");
}

TEST_CASE("parse examples") {
  auto q = ring("Q", {"x", "y", "z"});
  Polynomial f = poly(q, "x*y - z*(1-z)");
  CHECK(f == poly(q, "x*y - z + z^2"));
  CHECK(f.to_string() == "x*y + z^2 - z");

  auto zt = ring("Z", {"t"});
  CHECK(poly(zt, "t*(1-t)").to_string() == "-t^2 + t");
  CHECK(poly(zt, "t*(1-t)") == poly(zt, "t - t^2"));

  auto f3 = ring("F<3>", {"x"});
  CHECK(poly(f3, "x^2 + 3").to_string() == "x^2");
}

TEST_CASE("parse errors") {
  auto q = ring("Q", {"x", "y"});
  CHECK_THROWS_AS(poly(q, "x + w"), ParseError);
  CHECK_THROWS_AS(poly(q, "x +"), ParseError);
  CHECK_THROWS_AS(poly(q, "(x"), ParseError);
  CHECK_THROWS_AS(poly(q, "x / y"), ParseError);
  CHECK_THROWS_AS(poly(ring("F<3>", {"x"}), "x/2"), ParseError);
  CHECK_THROWS_AS(poly(ring("Z", {"x"}), "1/2*x"), ParseError);
  try {
    poly(q, "x + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK(poly(q, "1/2*x") == poly(q, "x").scaled(Scalar(1, 2)));
}

TEST_CASE("parse-print-parse round trip") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed);
  for (const char* coeffs : {"Z", "Q", "F<5>", "F<2>"}) {
    auto r = ring(coeffs, {"x", "y", "z"});
    for (int i = 0; i < 50; ++i) {
      Polynomial f = forge::testing::random_polynomial(rng, r, 4, 5, 9);
      if (r->coefficients().kind() == CoefficientRing::Kind::Rationals) f = f.scaled(Scalar(1, 1 + i % 4));
      std::string text = f.to_string();
      Polynomial g = poly(r, text);
      CHECK(g == f);
      CHECK(g.to_string() == text);
    }
  }
}

TEST_CASE("arith examples") {
  auto q = ring("Q", {"x", "y", "z"});
  CHECK(arith(ArithOp::Mul, poly(q, "x+y"), poly(q, "x-y")) == poly(q, "x^2 - y^2"));
  CHECK(arith(ArithOp::Add, poly(q, "z - z^2"), poly(q, "z^2")) == poly(q, "z"));
  CHECK(power(poly(q, "x"), 0) == poly(q, "1"));
  CHECK(power(poly(q, "x+1"), 3) == poly(q, "x^3 + 3*x^2 + 3*x + 1"));
  auto other = ring("Q", {"x", "y"});
  CHECK_THROWS_AS(poly(q, "x") + poly(other, "x"), RingMismatch);
  auto f2 = ring("F<2>", {"x"});
  CHECK((poly(f2, "x+1") * poly(f2, "x+1")) == poly(f2, "x^2+1"));
}

TEST_CASE("evaluate examples") {
  auto q = ring("Q", {"x", "y", "z"});
  Polynomial f = poly(q, "x*y - z*(1-z)");
  CHECK(evaluate(f, {{"x", 1}, {"y", 0}, {"z", 1}}) == 0);
  CHECK(evaluate(f, {{"x", 1}, {"y", 1}, {"z", 0}}) == 1);
  CHECK_THROWS_AS(evaluate(f, {{"x", 1}, {"y", 1}}), DomainError);
  auto zt = ring("Z", {"t"});
  CHECK(evaluate(poly(zt, "t - t^2"), {{"t", 1}}) == 0);
  auto f3 = ring("F<3>", {"x"});
  CHECK(evaluate(poly(f3, "x^2 + x"), {{"x", 2}}) == 0);
}

TEST_CASE("derivative examples") {
  auto q = ring("Q", {"x", "y", "z"});
  CHECK(partial_derivative(poly(q, "z*(1-z)"), "z") == poly(q, "1 - 2*z"));
  CHECK(partial_derivative(poly(q, "x^2*y"), "x") == poly(q, "2*x*y"));
  CHECK_THROWS_AS(partial_derivative(poly(q, "x"), "w"), DomainError);
  auto f2 = ring("F<2>", {"x"});
  CHECK(partial_derivative(poly(f2, "x^2"), "x").is_zero());
}

TEST_CASE("substitute examples") {
  auto q = ring("Q", {"s", "u", "z"});
  Polynomial f = poly(q, "z*(1-z) - s*u");
  CHECK(substitute(f, {{"u", poly(q, "1")}}) == poly(q, "z - z^2 - s"));
  CHECK(substitute(f, {{"u", poly(q, "0")}}) == poly(q, "z - z^2"));
  CHECK(substitute(f, {}) == f);
  // simultaneous, not sequential
  CHECK(substitute(poly(q, "s - u"), {{"s", poly(q, "u")}, {"u", poly(q, "s")}}) == poly(q, "u - s"));
  auto target = ring("Q", {"z"});
  CHECK(substitute(f, {{"s", poly(target, "0")}, {"u", poly(target, "1")}}, target) == poly(target, "z - z^2"));
  auto zr = ring("Z", {"s", "u", "z"});
  CHECK_THROWS_AS(substitute(f, {{"u", poly(zr, "1")}}), RingMismatch);
}

TEST_CASE("resultant examples") {
  auto q = ring("Q", {"a", "b", "z"});
  CHECK(resultant_univariate(poly(q, "z^2 - z"), poly(q, "2*z - 1"), "z") == poly(q, "-1"));
  CHECK(resultant_univariate(poly(q, "z"), poly(q, "z - 1"), "z") == poly(q, "1"));
  CHECK(resultant_univariate(poly(q, "z - a"), poly(q, "z - b"), "z") == poly(q, "b - a"));
  CHECK_THROWS_AS(resultant_univariate(Polynomial(q), poly(q, "z"), "z"), DomainError);
  CHECK_THROWS_AS(resultant_univariate(poly(q, "a"), poly(q, "b"), "z"), DomainError);

  // 3x3 Sylvester matrix of z^2 - z and 2z - 1, determinant by the rule of Sarrus
  auto s = sylvester_matrix(poly(q, "z^2 - z"), poly(q, "2*z - 1"), q->require_index("z"));
  REQUIRE(s.size() == 3);
  auto e = [&](int i, int j) { return s[i][j].constant_value(); };
  Scalar sarrus = e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) + e(0, 2) * e(1, 0) * e(2, 1) -
                  e(0, 2) * e(1, 1) * e(2, 0) - e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
  CHECK(sarrus == -1);
}

TEST_CASE("discriminant examples") {
  auto q = ring("Q", {"z"});
  CHECK(discriminant(poly(q, "z^2 - z"), "z") == poly(q, "1"));
  CHECK(discriminant(poly(q, "z*(z-1)*(z-2)"), "z") == poly(q, "4"));
  CHECK(discriminant(poly(q, "z^2"), "z").is_zero());
  CHECK_THROWS_AS(discriminant(poly(q, "2*z^2 - z"), "z"), DomainError);
  CHECK_THROWS_AS(discriminant(poly(q, "3"), "z"), DomainError);
  // b^2 - 4c for the generic monic quadratic
  auto g = ring("Q", {"b", "c", "z"});
  CHECK(discriminant(poly(g, "z^2 + b*z + c"), "z") == poly(g, "b^2 - 4*c"));
}

TEST_CASE("determinant") {
  auto q = ring("Q", {"x"});
  auto c = [&](long v) { return Polynomial::constant(q, Scalar(v)); };
  std::vector<std::vector<Polynomial>> m{{c(2), c(0), c(1)}, {c(1), c(3), c(2)}, {c(1), c(1), c(1)}};
  CHECK(determinant(m, q) == c(2 * (3 - 2) - 0 + 1 * (1 - 3)));
  CHECK(determinant({}, q) == c(1));
}

// ---- properties on seeded random inputs

namespace {

Scalar at(const Polynomial& f, const std::vector<Scalar>& pt) { return f.evaluate(pt); }

}  // namespace

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 1);
  for (const char* coeffs : {"Z", "Q", "F<3>", "F<7>"}) {
    auto r = ring(coeffs, {"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
      auto f = forge::testing::random_polynomial(rng, r, 3, 4);
      auto g = forge::testing::random_polynomial(rng, r, 3, 4);
      auto h = forge::testing::random_polynomial(rng, r, 3, 4);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(f - g == f + (-g));
    }
  }
}

TEST_CASE("canonical form invariants") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 2);
  for (const char* coeffs : {"Q", "F<5>"}) {
    auto r = ring(coeffs, {"x", "y"});
    for (int i = 0; i < 40; ++i) {
      auto f = forge::testing::random_polynomial(rng, r, 3, 5) * forge::testing::random_polynomial(rng, r, 2, 3);
      for (std::size_t k = 0; k < f.terms().size(); ++k) {
        const auto& c = f.terms()[k].coefficient;
        CHECK(c != 0);
        CHECK(c.get_den() == 1);
        if (r->coefficients().kind() == CoefficientRing::Kind::PrimeField) {
          CHECK(c >= 0);
          CHECK(c < 5);
        }
        if (k > 0) CHECK(r->order().compare(f.terms()[k - 1].monomial, f.terms()[k].monomial) > 0);
      }
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 3);
  for (const char* coeffs : {"Z", "Q", "F<5>"}) {
    auto r = ring(coeffs, {"x", "y", "z"});
    std::uniform_int_distribution<long> val(-6, 6);
    for (int i = 0; i < 60; ++i) {
      auto f = forge::testing::random_polynomial(rng, r, 3, 4);
      auto g = forge::testing::random_polynomial(rng, r, 3, 4);
      std::vector<Scalar> pt;
      for (int k = 0; k < 3; ++k) pt.push_back(r->coefficients().from_int(val(rng)));
      const auto& k = r->coefficients();
      CHECK(at(f * g, pt) == k.mul(at(f, pt), at(g, pt)));
      CHECK(at(f + g, pt) == k.add(at(f, pt), at(g, pt)));
      // agrees with substitution followed by constant extraction
      std::map<std::string, Polynomial> assign;
      for (int v = 0; v < 3; ++v) assign.emplace(r->variable(v), Polynomial::constant(r, pt[v]));
      auto s = substitute(f, assign);
      CHECK(s.is_constant());
      CHECK(s.constant_value() == at(f, pt));
    }
  }
}

TEST_CASE("Leibniz rule and linearity") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 4);
  for (const char* coeffs : {"Z", "F<2>", "F<3>"}) {
    auto r = ring(coeffs, {"x", "y"});
    for (int i = 0; i < 60; ++i) {
      auto f = forge::testing::random_polynomial(rng, r, 4, 4);
      auto g = forge::testing::random_polynomial(rng, r, 4, 4);
      for (const char* v : {"x", "y"}) {
        auto df = partial_derivative(f, v), dg = partial_derivative(g, v);
        CHECK(partial_derivative(f * g, v) == f * dg + g * df);
        CHECK(partial_derivative(f + g, v) == df + dg);
      }
    }
  }
}

TEST_CASE("resultant multiplicativity") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 5);
  auto r = ring("Q", {"z"});
  int checked = 0;
  while (checked < 40) {
    auto f = forge::testing::random_nonzero(rng, r, 3, 3);
    auto g = forge::testing::random_nonzero(rng, r, 3, 3);
    auto h = forge::testing::random_nonzero(rng, r, 3, 3);
    if (f.total_degree() == 0 || g.total_degree() == 0 || h.total_degree() == 0) continue;
    CHECK(resultant_univariate(f * g, h, "z") == resultant_univariate(f, h, "z") * resultant_univariate(g, h, "z"));
    ++checked;
  }
}

TEST_CASE("discriminant detects repeated roots") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 6);
  auto r = ring("Z", {"z"});
  std::uniform_int_distribution<long> root(-5, 5);
  std::uniform_int_distribution<int> degree(1, 4);
  for (int i = 0; i < 80; ++i) {
    std::vector<long> roots(degree(rng));
    for (auto& a : roots) a = root(rng);
    Polynomial p = Polynomial::constant(r, 1);
    for (long a : roots) p = p * (poly(r, "z") - Polynomial::constant(r, a));
    // product of squared differences as the oracle
    Scalar expected = 1;
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b) expected *= (roots[a] - roots[b]) * (roots[a] - roots[b]);
    auto d = discriminant(p, "z");
    CHECK(d == Polynomial::constant(r, expected));
    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    CHECK(d.is_zero() == !distinct);
  }
}
