#include "forge/resultant.hpp"

#include "forge/error.hpp"

namespace forge {

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q, std::size_t var,
                                                     std::size_t formal_q_degree) {
  const auto& ring = p.ring();
  auto pc = p.coefficients_in(var);
  auto qc = q.coefficients_in(var);
  while (qc.size() < formal_q_degree + 1) qc.emplace_back(ring);
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> matrix(size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) matrix[row][row + k] = qc[n - k];
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) matrix[m + row][row + k] = pc[m - k];
  return matrix;
}

Polynomial resultant_univariate(const Polynomial& p, const Polynomial& q, const std::string& var) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  std::size_t v = p.ring()->require_index(var);
  if (!p.involves(v) && !q.involves(v)) throw DomainError("variable '" + var + "' occurs in neither polynomial");
  return determinant(sylvester_matrix(p, q, v), p.ring());
}

bool is_monic_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return false;
  auto coeffs = p.coefficients_in(var);
  const auto& lead = coeffs.back();
  return lead.is_constant() && lead.constant_value() == 1;
}

Polynomial discriminant(const Polynomial& p, const std::string& var) {
  std::size_t v = p.ring()->require_index(var);
  if (p.degree_in(v) < 1) throw DomainError("discriminant needs positive degree in '" + var + "'");
  if (!is_monic_in(p, v)) throw DomainError("discriminant input " + p.to_string() + " is not monic in '" + var + "'");
  const unsigned long d = p.degree_in(v);
  // The derivative keeps its formal degree d - 1 so the sign is right when the
  // characteristic divides a leading coefficient.
  Polynomial res = determinant(sylvester_matrix(p, p.derivative(v), v, d - 1), p.ring());
  return ((d * (d - 1) / 2) % 2 == 0) ? res : -res;
}

}  // namespace forge
