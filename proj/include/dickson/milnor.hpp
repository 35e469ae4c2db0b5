#pragma once

#include <cstdint>

#include "dickson/poly.hpp"

namespace dickson {

// The primitive derivation on F_p[x_1..x_n] determined by x_j -> x_j^(p^i),
// i >= 1. On a monomial it acts term by term:
//   x^a -> sum_j (a_j mod p) x_j^(a_j - 1 + p^i) prod_{k != j} x_k^(a_k),
// raising total degree by p^i - 1 and killing p-th powers.
Poly st_delta(const Poly& g, uint32_t i);

// m-fold application of st_delta. Brute force on purpose: this is the
// reference the closed iterate formulas are checked against.
Poly st_iterate(const Poly& g, uint32_t i, uint32_t m);

}  // namespace dickson
