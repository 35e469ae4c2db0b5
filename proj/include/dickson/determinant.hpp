#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dickson/poly.hpp"

namespace dickson {

// Determinant of the n x n matrix whose (k, j) entry is x_j^(p^exps[k]).
// exps must be strictly increasing; the bracket [e_0, ..., e_{n-1}] is only
// used in that canonical form.
Poly dickson_determinant(const PrimeField& f, std::size_t n, std::span<const uint32_t> exps);

// Same matrix, expanded as a signed sum over permutations with no ordering
// precondition. Exponential in n; kept for cross-checking the fast routine
// and for exercising the alternating property on repeated rows.
Poly determinant_leibniz(const PrimeField& f, std::size_t n, std::span<const uint32_t> exps);

// Determinant of a square matrix of polynomials by cofactor expansion,
// memoized on the set of surviving columns.
Poly matrix_determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace dickson
