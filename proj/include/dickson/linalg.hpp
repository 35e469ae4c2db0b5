#pragma once

#include <cstdint>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

// Dense row-major matrix over F_p, sized for graded pieces of desk-scale
// rings (a few thousand rows at most).
struct MatFp {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint32_t> a;

    MatFp() = default;
    MatFp(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// In-place forward elimination; returns the rank.
size_t rank_mod_p(const PrimeField& f, MatFp m);

struct SolveOutcome {
    bool consistent = false;
    std::vector<uint32_t> x;  // one solution (free variables set to 0)
};

// Solve A x = b over F_p by Gaussian elimination with back-substitution.
SolveOutcome solve_mod_p(const PrimeField& f, MatFp A, std::vector<uint32_t> b);

}  // namespace dickson
