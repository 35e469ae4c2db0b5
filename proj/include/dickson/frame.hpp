#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dickson/poly.hpp"
#include "dickson/util.hpp"

namespace dickson {

class DicksonFrame;
using FramePtr = std::shared_ptr<const DicksonFrame>;

// Element of the Dickson algebra D_n in generator coordinates: a polynomial
// whose variable s stands for the generator Q_{n,s}. The frame pins down p,
// n and the generator expansions, so values from different frames never mix.
class DicksonPoly {
public:
    DicksonPoly(FramePtr frame, Poly rep);

    const FramePtr& frame() const { return frame_; }
    const Poly& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    // Total degree in the underlying x variables.
    uint64_t weighted_degree() const;

    DicksonPoly operator+(const DicksonPoly& o) const;
    DicksonPoly operator-(const DicksonPoly& o) const;
    DicksonPoly operator*(const DicksonPoly& o) const;
    DicksonPoly operator-() const;
    DicksonPoly scaled(uint32_t c) const;
    DicksonPoly pow(uint64_t k) const;

    bool operator==(const DicksonPoly& o) const;
    bool operator!=(const DicksonPoly& o) const { return !(*this == o); }

    // Renders in the generator names, e.g. "Q0^2*Q1 + 2*Q1". The output is
    // valid input for parse_q_expression.
    std::string str() const;

private:
    void require_same_frame(const DicksonPoly& o, const char* op) const;

    FramePtr frame_;
    Poly rep_;
};

// The Dickson frame for fixed (p, n): the determinants L_n and L_{n,s}, the
// generators Q_{n,s} as explicit polynomials in x_1..x_n, and the conversion
// between x coordinates and generator coordinates.
//
// Construction certifies itself: every quotient L_{n,s} / L_n is re-checked
// by multiplication and Q_{n,0} is compared against L_n^(p-1). A mismatch
// throws Falsification rather than producing a silently wrong frame.
class DicksonFrame : public std::enable_shared_from_this<DicksonFrame> {
public:
    static FramePtr build(const PrimeField& f, size_t n, const Budget& budget = {});

    const PrimeField& field() const { return f_; }
    size_t n() const { return n_; }

    // [0, 1, ..., n-1] as a polynomial in x_1..x_n.
    const Poly& L() const { return L_; }
    // [0, ..., s-hat, ..., n].
    const Poly& L_hat(size_t s) const { return L_hat_.at(s); }
    // Q_{n,s} = L_{n,s} / L_n for s > 0; Q_{n,0} = L_n^(p-1).
    const Poly& Q(size_t s) const { return Q_.at(s); }

    // Total degree of Q_{n,s}: p^n - p^s.
    uint64_t weight(size_t s) const { return weights_.at(s); }
    std::span<const uint64_t> weights() const { return weights_; }

    DicksonPoly zero() const;
    DicksonPoly one() const;
    DicksonPoly constant(uint32_t c) const;
    // The generator Q_{n,s} in generator coordinates.
    DicksonPoly generator(size_t s) const;
    DicksonPoly from_rep(Poly rep) const;

    // Expansion into x coordinates by substituting the generators.
    Poly expand(const DicksonPoly& a, const Budget& budget = {}) const;

    // Writes g in generator coordinates, or nullopt when g is not in the
    // Dickson subalgebra. Works degree by degree: candidate generator
    // products of matching total degree span a linear system over F_p.
    std::optional<DicksonPoly> express(const Poly& g, const Budget& budget = {}) const;

private:
    DicksonFrame(const PrimeField& f, size_t n) : f_(f), n_(n) {}

    const Poly& generator_product(const Monomial& m) const;
    const Poly& product_locked(const Monomial& m) const;

    PrimeField f_;
    size_t n_;
    Poly L_{f_, n_};
    std::vector<Poly> L_hat_;
    std::vector<Poly> Q_;
    std::vector<uint64_t> weights_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Monomial, Poly, GrlexLess> product_cache_;
};

}  // namespace dickson
