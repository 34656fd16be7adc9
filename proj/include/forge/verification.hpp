#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/deformation.hpp"

namespace forge {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
};

struct CountEntry {
  std::string label;
  std::uint64_t prime = 0;
  std::uint64_t brute_force = 0;
  std::uint64_t predicted = 0;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;
  std::vector<CountEntry> counts;
  bool budget_exceeded = false;

  // Pass iff every non-skipped check passes.
  bool passed() const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
};

// Number of F_p-points by enumerating all p^arity tuples. The presentation is
// reduced mod p first (it must be over Z, Q or F_p itself). Throws
// BudgetExceeded when p^arity exceeds the budget.
std::uint64_t count_points_bruteforce(const AffinePresentation& x, std::uint64_t p,
                                      std::uint64_t budget = kDefaultBudget);
// Points of the ambient scheme at which some removed generator is nonzero.
std::uint64_t count_points_bruteforce(const QuasiAffinePresentation& x, std::uint64_t p,
                                      std::uint64_t budget = kDefaultBudget);

// p^(n+r) + (s-1) #Y(F_p) p^r with #Y counted by brute force. Throws
// DomainError unless the roots are constants, distinct mod p, and the cover
// is etale over F_p.
std::uint64_t predicted_count_family(const FamilySpec& spec, std::uint64_t p, std::uint64_t budget = kDefaultBudget);

// (p-1) p^N + #X(F_p) p^c for a single suspension step of X in N variables
// with c relations.
std::uint64_t predicted_count_suspension(const DeformationResult& d, std::uint64_t p,
                                         std::uint64_t budget = kDefaultBudget);

// Fiber over u = unit_value is the graph t_i = f_i / g. Needs exactly one
// parameter variable; throws DomainError for unit_value = 0.
CheckResult verify_generic_fiber(const DeformationResult& d, const Scalar& unit_value);
// Fiber over u = 0 equals X times affine space in the torsor variables.
// Skipped when there is no parameter variable (g in the old variables).
CheckResult verify_zero_fiber(const DeformationResult& d);

// Over a field: disc(P) != 0. Over Z: disc(P) = +-1. P univariate and monic.
CheckResult discriminant_unit_check(const Polynomial& p, const CoefficientRing& ring);

// Every monic integer cubic with distinct roots in [-bound, bound] has
// |disc| >= 2. Throws DomainError for bound < 2.
CheckResult z_degree3_obstruction(long bound);

struct FamilyOptions {
  std::vector<std::uint64_t> primes{2, 3, 5};
  bool characteristic_zero = true;
  std::uint64_t budget = kDefaultBudget;
};

// Per characteristic: CI check on I, etale check, smoothness of X_{I,a} and
// their agreement, point counts against the formula, and for height >= 2
// the X_j counts against p^(n+r). Sub-check errors become fail entries.
VerificationReport verify_family(const FamilySpec& spec, const FamilyOptions& options = {});

// Generic fiber, zero fiber and the suspension count identity for each prime.
VerificationReport verify_suspension(const DeformationResult& d, const std::vector<std::uint64_t>& primes,
                                     std::uint64_t budget = kDefaultBudget);

std::string describe(const FamilySpec& spec);

}  // namespace forge
