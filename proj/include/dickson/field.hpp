#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dickson {

// Arithmetic in the prime field F_p. Coefficients are stored in [0, p).
// Intended for small p (single-digit primes up to 13 at working scale),
// so everything fits comfortably in 32-bit values.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(uint64_t v) const { return static_cast<uint32_t>(v % p_); }

    uint32_t reduce_signed(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + static_cast<int64_t>(p_) : r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        s -= p_ & (0u - static_cast<uint32_t>(s >= p_));
        return s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const {
        uint32_t d = a - b;
        d += p_ & (0u - static_cast<uint32_t>(a < b));
        return d;
    }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t base = a % p_;
        uint32_t acc = 1;
        while (e) {
            if (e & 1)
                acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0)
            throw std::domain_error("PrimeField: inverse of 0");
        return pow(a, p_ - 2);
    }

    // (-1)^k as an element of F_p.
    uint32_t sign(uint64_t k) const { return (k & 1) ? neg(1) : 1; }

    uint32_t factorial(uint32_t m) const {
        uint32_t acc = 1;
        for (uint32_t v = 2; v <= m; ++v)
            acc = mul(acc, v % p_);
        return acc;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    // Deterministic trial division; p is tiny here.
    static bool is_prime(uint32_t v) {
        if (v < 2)
            return false;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= v; ++d)
            if (v % d == 0)
                return false;
        return true;
    }

private:
    uint32_t p_;
};

}  // namespace dickson
