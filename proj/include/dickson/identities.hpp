#pragma once

#include <optional>
#include <span>
#include <string>

#include "dickson/sumnorm.hpp"

namespace dickson {

enum class CheckStatus { pass, fail, vacuous };

std::string to_string(CheckStatus s);

// The two sides that disagreed, plus their difference, rendered in the
// coordinate system the check ran in.
struct Witness {
    std::string lhs;
    std::string rhs;
    std::string diff;
};

struct VerificationResult {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::pass;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;
    std::string note;

    bool passed() const { return status != CheckStatus::fail; }
};

// St(Q_0^(p-1) F^p Q_s) = (-1)^n Q_0^p (F Proot_s)^p, and a second
// application of St annihilates the right side.
VerificationResult verify_kernel_family(const SumCoefficients& sc, const DicksonPoly& F, size_t s,
                                        const Budget& budget = {});

// Image containment: Q_0 divides St(expand f) for every sample; annihilated
// ideal: St(Q_0^p G^p) = 0 for every sample.
VerificationResult verify_global_properties(const SumCoefficients& sc,
                                            std::span<const DicksonPoly> samples,
                                            const Budget& budget = {});

// Denominator-cleared invariance of I_s = (Q_s + B^{-1}A_s)/Q_0: with
// V_s = B Q_s + A_s, checks delta(V_s) = B V_s, delta(Q_0) = B Q_0 and
// delta(B Q_s) = B (A_s + B Q_s). Vacuous when B = 0, where the localized
// statement has no content.
VerificationResult verify_invariant_ratios(const SumCoefficients& sc, size_t s,
                                           const Budget& budget = {});

// Constant-coefficient action on ratio coordinates, cleared of
// denominators. Checks St(Q_s) Q_0 - Q_s St(Q_0) = (-1)^n A_s Q_0^2, and
// for the given Phi in abstract ratio variables (nvars = n, variable t
// standing for Q_t/Q_0) compares both routes of
//   St(Phi(R)) = (-1)^n sum_t dPhi/dR_t A_t
// after multiplying through by Q_0^(deg Phi + 1).
VerificationResult verify_ratio_action(const SumCoefficients& sc, size_t s, const Poly& Phi,
                                       const Budget& budget = {});

// chain_rule_st(f) agrees with St applied to the expansion of f.
VerificationResult verify_chain_rule(const SumCoefficients& sc, const DicksonPoly& f,
                                     const Budget& budget = {});

}  // namespace dickson
