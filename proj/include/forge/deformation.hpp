#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/scheme.hpp"

namespace forge {

struct Provenance {
  std::string construction;
  std::string input;  // printed input presentation
  std::map<std::string, std::string> arguments;
};

struct DeformationResult {
  AffinePresentation space;
  AffinePresentation input;
  // Divisor g in the ring of `space`; relation i is f_i - torsor_vars[i] * g.
  Polynomial divisor;
  std::vector<std::string> parameter_vars;
  std::vector<std::string> torsor_vars;
  Provenance provenance;
};

// Relations f_i - t_i * g. g lives in a ring whose variables are X's plus any
// new parameter variables (same coefficients); the result ring is X's
// variables, then the new parameters, then torsor_names. The basepoint is
// extended by zeros. Throws DomainError on zero g, a torsor name count that
// differs from the generator count, or name collisions.
DeformationResult parameterized_deformation(const AffinePresentation& x, const Polynomial& g,
                                            const std::vector<std::string>& torsor_names);

// One step: fresh parameter x<k> and torsor y<k> (y<k>_<i> for several
// relations), k the least index whose names are free. Requires a pointed
// complete intersection. With no relations the result is X times a line.
DeformationResult suspension_model(const AffinePresentation& x);

// n steps of suspension_model; n = 0 returns X with no fresh variables.
DeformationResult iterated_suspension(const AffinePresentation& x, unsigned n);

struct FamilySpec {
  RingPtr base;                        // k[x_1..x_n]
  std::vector<Polynomial> generators;  // f_1..f_r
  std::vector<Polynomial> roots;       // a_1..a_s
  std::string torsor_prefix = "t";
  std::string z = "z";

  std::vector<std::string> torsor_names() const;  // t1..tr
  // Throws DomainError on empty lists, zero generators, foreign rings or
  // colliding names.
  void validate() const;
  bool roots_are_constant() const;
  FamilySpec with_coefficients(const CoefficientRing& coefficients) const;
  // prod (z - a_j) in base[z].
  Polynomial split_polynomial() const;
  Ideal ideal() const { return Ideal(base, generators); }
};

// sum t_i f_i - prod_j (z - a_j) in k[x, t_1..t_r, z].
AffinePresentation danielewski_family(const FamilySpec& spec);

struct QFamily {
  AffinePresentation space;
  FamilySpec spec;  // I = (x_i^{m_i}), roots of P
  Scalar discriminant;
  // disc(P) is +-1 over Z, nonzero over a field.
  bool discriminant_is_unit = false;
};

// sum x_i^{m_i} t_i = P(z). P must be monic in its single variable z and split
// into linear factors over its coefficient ring (DomainError otherwise).
QFamily q_family(const std::vector<unsigned>& m, const Polynomial& p);

// Roots of a monic univariate polynomial over Z, Q or F_p, with multiplicity,
// or nullopt if it does not split into linear factors.
std::optional<std::vector<Scalar>> split_roots(const Polynomial& p);

// X_{I,a} minus V(I, prod_{i != j} (z - a_i)), j in 1..s. Requires at least
// two generators, height of I at least 2 and pairwise distinct constant roots.
QuasiAffinePresentation quasi_affine_contractible(const FamilySpec& spec, std::size_t j);

// S0, Gm and Jouanolou_A1_doubled, all over Z.
std::map<std::string, AffinePresentation> builtin_seeds();

// Image of a variable under a renaming, possibly with a sign.
struct SignedVariable {
  std::string name;
  bool negate = false;
};
using Renaming = std::map<std::string, SignedVariable>;

// sum_k x<k> y<k> = z(1 - z) in Z[z, x1, y1, ..., xn, yn].
AffinePresentation quadric(unsigned n);
// iterated_suspension(S0, n) -> quadric(n): t -> z.
Renaming suspension_to_quadric(unsigned n);
// iterated_suspension(S0, n) -> q_family((1,..,1), z(z - 1)): t -> z,
// x<k> -> x<k>, y<k> -> -t<k>.
Renaming suspension_to_q_family(unsigned n);

// Applies a renaming into `target`; unmapped variables keep their names.
Polynomial rename(const Polynomial& f, const Renaming& renaming, const RingPtr& target);
Ideal rename(const Ideal& ideal, const Renaming& renaming, const RingPtr& target);

}  // namespace forge
