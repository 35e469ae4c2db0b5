#pragma once

#include <cstdint>
#include <vector>

#include "dickson/frame.hpp"
#include "dickson/milnor.hpp"

namespace dickson {

// Structural coefficients of the primitive derivation in generator
// coordinates: for each s,
//   St(Q_{n,s}) = (-1)^n Q_{n,0} (A_s + B Q_{n,s}),
// with A_0 = 0, and both B and every A_s a p-th power inside the Dickson
// algebra. extract() computes them and certifies each of those claims on the
// way; any failure throws Falsification with the offending polynomial.
struct SumCoefficients {
    FramePtr frame;
    uint32_t i;
    std::vector<DicksonPoly> A;      // A_s, s = 0..n-1 (A[0] is zero)
    DicksonPoly B;
    std::vector<DicksonPoly> Proot;  // Proot[s]^p = A_s
    DicksonPoly Rroot;               // Rroot^p = B

    static SumCoefficients extract(FramePtr frame, uint32_t i, const Budget& budget = {});

    // delta(Q_s) = A_s + B Q_s, the image of the generator under the
    // normalized derivation delta = (-1)^n Q_0^{-1} St.
    DicksonPoly delta_q(size_t s) const;
};

// The normalized derivation applied to any element of the Dickson algebra,
// computed natively in generator coordinates via the chain rule:
// delta(g) = sum_s d g / d Q_s * (A_s + B Q_s).
DicksonPoly normalized_delta(const SumCoefficients& sc, const DicksonPoly& g);

// Closed form for delta^m(Q_s): Q_s itself at m = 0, otherwise
// B^m Q_s + B^(m-1) A_s (with B^0 = 1 even when B is zero).
DicksonPoly delta_iterate_closed(const SumCoefficients& sc, size_t s, uint32_t m);

// Closed form for the m-fold primitive operation on a generator:
//   St^m(Q_s) = (-1)^(m n) m! Q_0^m (B^m Q_s + B^(m-1) A_s),
// which vanishes for m >= p through the factorial.
DicksonPoly st_iterate_closed(const SumCoefficients& sc, size_t s, uint32_t m);

// St applied to an expanded Dickson element through the chain rule in x
// coordinates: sum_s expand(d g / d Q_s) * St(Q_s). Equals St(expand(g)).
Poly chain_rule_st(const SumCoefficients& sc, const DicksonPoly& g, const Budget& budget = {});

// Unsigned Stirling numbers of the first kind c(m, j), built from
//   c(m+1, j) = c(m, j-1) + m c(m, j),
// exact in 64 bits. Row m sums to m!.
class StirlingTable {
public:
    explicit StirlingTable(uint32_t max_m);

    uint32_t max_m() const { return max_m_; }
    uint64_t exact(uint32_t m, uint32_t j) const;
    uint32_t mod_p(const PrimeField& f, uint32_t m, uint32_t j) const;

private:
    uint32_t max_m_;
    std::vector<std::vector<uint64_t>> rows_;
};

// Element num / Q_0^k of the localization of the Dickson algebra at Q_0.
class LocalizedElement {
public:
    LocalizedElement(DicksonPoly num, uint64_t k);

    const DicksonPoly& num() const { return num_; }
    uint64_t k() const { return k_; }

    // Cancels common Q_0 factors between numerator and denominator.
    LocalizedElement normalized() const;

    LocalizedElement operator+(const LocalizedElement& o) const;
    LocalizedElement operator-(const LocalizedElement& o) const;
    LocalizedElement operator*(const LocalizedElement& o) const;

    // Equality as fractions, by cross multiplication.
    bool operator==(const LocalizedElement& o) const;
    bool operator!=(const LocalizedElement& o) const { return !(*this == o); }

private:
    DicksonPoly num_;
    uint64_t k_;
};

}  // namespace dickson
