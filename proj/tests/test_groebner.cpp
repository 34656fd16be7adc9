#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bitset>
#include <random>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "support.hpp"
#include "oracles.hpp"

using namespace forge;
using forge::testing::poly;
using forge::testing::ring;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> strings(const Ideal& I) { return strings(I.generators()); }

}  // namespace

TEST_CASE("divide examples") {
  auto q = ring("Q", {"x", "y"});
  auto d = divide(poly(q, "x^2*y"), {poly(q, "x*y - 1")});
  REQUIRE(d.quotients.size() == 1);
  CHECK(d.quotients[0] == poly(q, "x"));
  CHECK(d.remainder == poly(q, "x"));

  auto f = poly(q, "x^3 - 2*y + 7");
  auto self = divide(f, {f});
  CHECK(self.quotients[0] == poly(q, "1"));
  CHECK(self.remainder.is_zero());

  auto none = divide(poly(q, "x"), {poly(q, "y")});
  CHECK(none.quotients[0].is_zero());
  CHECK(none.remainder == poly(q, "x"));

  CHECK_THROWS_AS(divide(f, {Polynomial(q)}), DomainError);
}

TEST_CASE("groebner examples") {
  auto q = ring("Q", {"x", "y"});
  auto lex = groebner_basis(Ideal(q, {poly(q, "x*y - 1"), poly(q, "y^2 - 1")}), MonomialOrder::lex());
  CHECK(strings(lex.elements) == std::vector<std::string>{"x - y", "y^2 - 1"});
  auto permuted = groebner_basis(Ideal(q, {poly(q, "y^2 - 1"), poly(q, "x*y - 1")}), MonomialOrder::lex());
  CHECK(strings(permuted.elements) == strings(lex.elements));

  auto unit = groebner_basis(Ideal(q, {poly(q, "x"), poly(q, "x - 1")}));
  CHECK(unit.is_unit());
  CHECK(strings(unit.elements) == std::vector<std::string>{"1"});

  auto principal = groebner_basis(Ideal(q, {poly(q, "x^2")}));
  CHECK(strings(principal.elements) == std::vector<std::string>{"x^2"});

  // Z input is lifted to Q and made monic
  auto z = ring("Z", {"x"});
  auto lifted = groebner_basis(Ideal(z, {poly(z, "2*x - 1")}));
  CHECK(lifted.ring->coefficients().kind() == CoefficientRing::Kind::Rationals);
  CHECK(strings(lifted.elements) == std::vector<std::string>{"x - 1/2"});

  // zero ideal
  CHECK(groebner_basis(Ideal(q)).elements.empty());
}

TEST_CASE("membership examples") {
  auto q = ring("Q", {"x", "y", "z"});
  CHECK_FALSE(ideal_membership(poly(q, "z"), Ideal(q, {poly(q, "z^2")})));
  Ideal I(q, {poly(q, "x*y - 1"), poly(q, "y^2 - 1")});
  CHECK(ideal_membership(poly(q, "x - y"), I));
  CHECK(ideal_membership(Polynomial(q), I));
  CHECK(ideal_membership(Polynomial(q), Ideal(q)));
  auto other = ring("Q", {"x", "y"});
  CHECK_THROWS_AS(ideal_membership(poly(other, "x"), I), RingMismatch);
}

TEST_CASE("unit ideal examples") {
  auto q = ring("Q", {"x", "y", "z"});
  CHECK(is_unit_ideal(Ideal(q, {poly(q, "x"), poly(q, "x - 1")})));
  CHECK_FALSE(is_unit_ideal(Ideal(q, {poly(q, "x"), poly(q, "y")})));
  CHECK(is_unit_ideal(Ideal(q, {poly(q, "z^2 - z"), poly(q, "2*z - 1")})));
  // 2z - 1 is a unit multiple of z - 1/2 over Q, but over F_2 it is 1
  auto f2 = ring("F2", {"z"});
  CHECK(is_unit_ideal(Ideal(f2, {poly(f2, "2*z - 1")})));
  CHECK_FALSE(is_unit_ideal(Ideal(q)));
}

TEST_CASE("eliminate examples") {
  auto q = ring("Q", {"x", "y", "z"});
  CHECK(eliminate(Ideal(q, {poly(q, "x*y - 1")}), {"y"}).is_zero_ideal());
  auto e = eliminate(Ideal(q, {poly(q, "y - x^2"), poly(q, "y - z")}), {"y"});
  CHECK(ideals_equal(e, Ideal(q, {poly(q, "x^2 - z")})));
  CHECK(e.ring() == q);
  Ideal I(q, {poly(q, "x*y - 1"), poly(q, "y^2 - 1")});
  CHECK(ideals_equal(eliminate(I, {}), I));
  CHECK_THROWS_AS(eliminate(I, {"w"}), DomainError);

  // over Z the generators come back primitive with positive leading coefficient
  auto z = ring("Z", {"x", "y", "z"});
  auto ez = eliminate(Ideal(z, {poly(z, "2*y - x"), poly(z, "y - z")}), {"y"});
  CHECK(strings(ez) == std::vector<std::string>{"x - 2*z"});
}

TEST_CASE("saturate examples") {
  auto q = ring("Q", {"x", "y"});
  CHECK(ideals_equal(saturate(Ideal(q, {poly(q, "x*y")}), poly(q, "x")), Ideal(q, {poly(q, "y")})));
  CHECK(is_unit_ideal(saturate(Ideal(q, {poly(q, "x^2")}), poly(q, "x"))));
  Ideal I(q, {poly(q, "x^2*y - y"), poly(q, "y^3")});
  CHECK(ideals_equal(saturate(I, poly(q, "1")), I));
  CHECK_THROWS_AS(saturate(I, Polynomial(q)), DomainError);
  // a ring that already uses the name w
  auto qw = ring("Q", {"w", "x"});
  CHECK(ideals_equal(saturate(Ideal(qw, {poly(qw, "w*x")}), poly(qw, "x")), Ideal(qw, {poly(qw, "w")})));
}

TEST_CASE("krull dimension examples") {
  auto q3 = ring("Q", {"x", "y", "z"});
  CHECK(krull_dimension(Ideal(q3)) == 3);
  auto q = ring("Q", {"x", "y"});
  CHECK(krull_dimension(Ideal(q, {poly(q, "x*y - 1")})) == 1);
  CHECK(krull_dimension(Ideal(q, {poly(q, "x"), poly(q, "y")})) == 0);
  CHECK_FALSE(krull_dimension(Ideal(q, {poly(q, "x"), poly(q, "x - 1")})).has_value());
  CHECK(krull_dimension(Ideal(q3, {poly(q3, "x*y"), poly(q3, "x*z")})) == 2);
}

TEST_CASE("jacobian minors examples") {
  auto q = ring("Q", {"x", "y", "z"});
  auto j = jacobian_minors_ideal({poly(q, "x*y - z*(1-z)")}, {"x", "y", "z"}, 1);
  CHECK(strings(j) == std::vector<std::string>{"y", "x", "2*z - 1"});
  auto q2 = ring("Q", {"x", "y"});
  auto id = jacobian_minors_ideal({poly(q2, "x"), poly(q2, "y")}, {"x", "y"}, 2);
  CHECK(is_unit_ideal(id));
  CHECK(strings(id) == std::vector<std::string>{"1"});
  auto sq = jacobian_minors_ideal({poly(q2, "x^2")}, {"x", "y"}, 1);
  CHECK(ideals_equal(sq, Ideal(q2, {poly(q2, "2*x")})));
  CHECK_THROWS_AS(jacobian_minors_ideal({poly(q2, "x")}, {"x", "y"}, 2), DomainError);
  CHECK_THROWS_AS(jacobian_minors_ideal({poly(q2, "x")}, {"x"}, 0), DomainError);
}

// ---- properties

namespace {

struct Sample {
  RingPtr ring;
  Ideal ideal;
};

std::vector<Sample> random_ideals(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  const std::vector<std::vector<std::string>> var_sets{{"x"}, {"x", "y"}, {"x", "y", "z"}};
  for (int i = 0; i < count; ++i) {
    auto r = ring(i % 2 ? "F5" : "Q", var_sets[i % 3]);
    std::uniform_int_distribution<int> ngens(1, 3);
    std::vector<Polynomial> gens;
    int n = ngens(rng);
    for (int k = 0; k < n; ++k) gens.push_back(forge::testing::random_nonzero(rng, r, 3, 3, 3));
    out.push_back({r, Ideal(r, gens)});
  }
  return out;
}

}  // namespace

TEST_CASE("division reassembles the dividend") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 10);
  for (const char* coeffs : {"Q", "F5", "Z"}) {
    auto r = ring(coeffs, {"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
      auto f = forge::testing::random_polynomial(rng, r, 4, 6);
      std::vector<Polynomial> ds;
      for (int k = 0; k < 1 + i % 3; ++k) ds.push_back(forge::testing::random_nonzero(rng, r, 2, 3));
      for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        auto d = divide(f, ds, order);
        auto fr = d.remainder.ring();
        Polynomial sum = d.remainder;
        for (std::size_t k = 0; k < ds.size(); ++k) sum = sum + d.quotients[k] * ds[k].in_ring(fr);
        CHECK(sum == f.in_ring(fr));
        for (const auto& t : d.remainder.terms())
          for (const auto& dv : ds) CHECK_FALSE(dv.in_ring(fr).leading_monomial().divides(t.monomial));
      }
    }
  }
}

TEST_CASE("computed bases satisfy the Buchberger criterion and are reduced") {
  for (const auto& [r, I] : random_ideals(forge::testing::kDefaultSeed + 11, 80)) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = groebner_basis(I, order);
      CHECK(forge::testing::all_s_polynomials_reduce(gb.elements));
      CHECK(forge::testing::is_reduced(gb.elements));
      // generators reduce to zero, basis elements lie in the ideal
      for (const auto& g : I.generators()) CHECK(normal_form(g.in_ring(gb.ring), gb).is_zero());
      for (const auto& b : gb.elements) CHECK(ideal_membership(b.in_ring(r->with_order(order)).in_ring(r), I));
    }
  }
}

TEST_CASE("reduced bases do not depend on generator order") {
  std::mt19937_64 shuffle(forge::testing::kDefaultSeed + 12);
  for (const auto& [r, I] : random_ideals(forge::testing::kDefaultSeed + 13, 60)) {
    auto gens = I.generators();
    auto base = strings(groebner_basis(I).elements);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(gens.begin(), gens.end(), shuffle);
      CHECK(strings(groebner_basis(Ideal(r, gens)).elements) == base);
    }
    // padding with redundant combinations changes nothing either
    if (gens.size() >= 2) {
      auto padded = gens;
      padded.push_back(gens[0] * gens[1] + gens[1]);
      CHECK(strings(groebner_basis(Ideal(r, padded)).elements) == base);
    }
  }
}

TEST_CASE("elimination is sound") {
  for (const auto& [r, I] : random_ideals(forge::testing::kDefaultSeed + 14, 40)) {
    if (r->arity() < 2) continue;
    std::set<std::string> drop{r->variable(0)};
    auto e = eliminate(I, drop);
    for (const auto& g : e.generators()) {
      CHECK_FALSE(g.involves(0));
      CHECK(ideal_membership(g, I));
    }
  }
}

TEST_CASE("saturation removes a coprime factor") {
  auto q = ring("Q", {"x", "y"});
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"x", "y"}, {"x^2 + y", "y - 1"}, {"x*y - 1", "x + y"}, {"y^2 - x^3", "x - 2"}, {"x + y + 1", "x^2 + 1"}};
  for (const auto& [fs, gs] : pairs) {
    auto f = poly(q, fs), g = poly(q, gs);
    for (unsigned m = 1; m <= 3; ++m) {
      CAPTURE(fs);
      CAPTURE(gs);
      CAPTURE(m);
      CHECK(ideals_equal(saturate(Ideal(q, {f * g.pow(m)}), g), Ideal(q, {f})));
    }
  }
}

TEST_CASE("F2 membership agrees with the combination oracle") {
  std::mt19937_64 rng(forge::testing::kDefaultSeed + 15);
  auto r = ring("F2", {"x", "y"});
  int ideals = 0, agreements = 0, members = 0;
  for (int i = 0; i < 12; ++i) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> ngens(1, 2);
    int n = ngens(rng);
    for (int k = 0; k < n; ++k) gens.push_back(forge::testing::random_nonzero(rng, r, 2, 3, 1));
    Ideal I(r, gens);
    forge::testing::F2CombinationOracle oracle(gens, 3);
    ++ideals;
    // every polynomial of degree <= 2 in x, y (2^6 of them)
    for (unsigned mask = 0; mask < 64; ++mask) {
      Polynomial f = forge::testing::f2_polynomial_from_mask(r, mask, 2);
      bool gb = ideal_membership(f, I);
      bool brute = oracle.contains(f);
      CAPTURE(I.to_string());
      CAPTURE(f.to_string());
      CHECK(gb == brute);
      agreements += gb == brute;
      members += brute;
    }
  }
  CHECK(ideals == 12);
  MESSAGE("agreements " << agreements << ", oracle members " << members);
}
