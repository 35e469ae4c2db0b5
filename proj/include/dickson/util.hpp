#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string_view>

#include "dickson/errors.hpp"
#include "dickson/field.hpp"

namespace dickson {

inline uint64_t checked_add(uint64_t a, uint64_t b) {
    if (a > std::numeric_limits<uint64_t>::max() - b)
        throw std::overflow_error("exponent overflow in addition");
    return a + b;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a)
        throw std::overflow_error("exponent overflow in multiplication");
    return a * b;
}

// p^e as an exponent value, overflow-checked.
inline uint64_t checked_pow(uint64_t base, uint32_t e) {
    uint64_t acc = 1;
    for (uint32_t k = 0; k < e; ++k)
        acc = checked_mul(acc, base);
    return acc;
}

// Number of monomials of total degree exactly `degree` in `nvars` variables,
// C(degree + nvars - 1, nvars - 1), saturating at uint64 max. Used as the
// dense upper bound by budget estimation.
inline uint64_t dense_term_estimate(uint64_t degree, size_t nvars) {
    if (nvars == 0)
        return degree == 0 ? 1 : 0;
    uint64_t acc = 1;
    for (size_t j = 1; j < nvars; ++j) {
        if (acc > std::numeric_limits<uint64_t>::max() / (degree + j))
            return std::numeric_limits<uint64_t>::max();
        acc = acc * (degree + j) / j;  // exact: product of j consecutive integers
    }
    return acc;
}

// Monomial-count budget guarding every potentially heavy computation.
struct Budget {
    uint64_t max_dense_terms = 10000;

    void check(const char* what, uint64_t estimate) const {
        if (estimate > max_dense_terms)
            throw BudgetError(std::string(what) + ": degree budget exceeded", estimate,
                              max_dense_terms);
    }
};

// Deterministic splitmix64 generator. The standard <random> distributions are
// implementation-defined, so reproducible reports roll their own draws.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    // Uniform nonzero coefficient in [1, p).
    uint32_t nonzero_coeff(const PrimeField& f) {
        return static_cast<uint32_t>(below(f.p() - 1)) + 1;
    }

private:
    uint64_t state_;
};

// Derive a stream seed from a base seed, numeric salts and a textual tag, so
// each check family draws from its own reproducible stream.
inline Rng derive_rng(uint64_t base, std::initializer_list<uint64_t> salts, std::string_view tag) {
    uint64_t h = base ^ 0x9e3779b97f4a7c15ull;
    for (uint64_t s : salts)
        h = (h ^ s) * 0x100000001b3ull;
    for (char c : tag)
        h = (h ^ static_cast<uint8_t>(c)) * 0x100000001b3ull;
    return Rng(h);
}

}  // namespace dickson
