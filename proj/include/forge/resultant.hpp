#pragma once

#include <string>
#include <vector>

#include "forge/polynomial.hpp"

namespace forge {

// Sylvester matrix of p and q with respect to var, with the deg_var(p) rows of
// q's coefficients placed above the deg_var(q) rows of p's coefficients. Its
// determinant equals lc(q)^deg(p) times the product of p over the roots of q.
// A formal_q_degree above deg_var(q) pads q with leading zero coefficients.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q, std::size_t var,
                                                     std::size_t formal_q_degree = 0);

// Determinant of the Sylvester matrix: a polynomial in the remaining variables
// (in the same ring). Throws DomainError for zero input or when var occurs in
// neither polynomial.
Polynomial resultant_univariate(const Polynomial& p, const Polynomial& q, const std::string& var);

// (-1)^(d(d-1)/2) * Res(P, dP/dvar) for P monic in var of degree d >= 1.
// Non-monic input is rejected with DomainError.
Polynomial discriminant(const Polynomial& p, const std::string& var);

// True when P has leading coefficient exactly 1 as a polynomial in var.
bool is_monic_in(const Polynomial& p, std::size_t var);

}  // namespace forge
