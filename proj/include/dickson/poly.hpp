#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dickson/field.hpp"

#include "json.hpp"

namespace dickson {

// Exponent vector of a monomial in n variables. Exponents are unsigned
// machine words; arithmetic on them is overflow-checked so degree blowups
// fail loudly instead of wrapping.
class Monomial {
public:
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<uint64_t> exps) : e_(std::move(exps)) {}

    size_t nvars() const { return e_.size(); }
    uint64_t operator[](size_t j) const { return e_[j]; }
    uint64_t& operator[](size_t j) { return e_[j]; }
    const std::vector<uint64_t>& exponents() const { return e_; }

    uint64_t degree() const;
    uint64_t weighted_degree(std::span<const uint64_t> weights) const;

    Monomial mul(const Monomial& o) const;
    // Componentwise quotient; nullopt when some exponent of o exceeds ours.
    std::optional<Monomial> div(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<uint64_t> e_;
};

// Graded-lexicographic order, fixed globally: total degree first, then
// lexicographic on exponent vectors. Exact division and basis enumeration
// depend on this being one deterministic order everywhere.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over F_p in a fixed number of variables.
// Canonical form: the term map never stores a zero coefficient, so equality
// of polynomials is equality of maps.
class Poly {
public:
    using TermMap = std::map<Monomial, uint32_t, GrlexLess>;

    Poly(const PrimeField& f, size_t nvars) : f_(f), nvars_(nvars) {}

    static Poly zero(const PrimeField& f, size_t nvars) { return Poly(f, nvars); }
    static Poly constant(const PrimeField& f, size_t nvars, uint32_t c);
    static Poly one(const PrimeField& f, size_t nvars) { return constant(f, nvars, 1); }
    // x_j with 0-based index j.
    static Poly variable(const PrimeField& f, size_t nvars, size_t j);
    static Poly monomial(const PrimeField& f, Monomial m, uint32_t c);

    const PrimeField& field() const { return f_; }
    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Maximum total degree over terms; 0 for the zero polynomial.
    uint64_t degree() const;
    uint64_t weighted_degree(std::span<const uint64_t> weights) const;
    bool is_homogeneous() const;
    // Nonzero homogeneous components keyed by total degree.
    std::map<uint64_t, Poly> homogeneous_components() const;

    // Accumulate c * m into the term map, evicting zero coefficients.
    void add_term(const Monomial& m, uint32_t c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;
    Poly operator-() const { return scaled(f_.neg(1)); }

    // a^k with a^0 = 1, including 0^0 = 1.
    Poly pow(uint64_t k) const;

    // Exact quotient, or nullopt when *this is not a multiple of b.
    // Repeated leading-term cancellation in graded-lex order; the leading
    // term of any nonzero multiple of b is divisible by the leading term of
    // b, so a failed cancellation certifies non-divisibility.
    std::optional<Poly> exact_div(const Poly& b) const;

    // r with r^p = *this, or nullopt when some exponent is not divisible by
    // p. Coefficients are fixed by Frobenius over F_p.
    std::optional<Poly> pth_root() const;

    // Formal partial derivative with respect to x_j (0-based), mod p.
    Poly partial(size_t j) const;

    // Composition: evaluate *this at the given images, one per variable.
    // All images must share a field and variable count.
    Poly substitute(std::span<const Poly> images) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Rendering with caller-supplied variable names, terms in descending
    // graded-lex order, e.g. "x1^2x2 + 2x2^3".
    std::string str(const std::vector<std::string>& names, std::string_view sep = "") const;
    // Default x1..xn naming.
    std::string str_x() const;

    // Serialization: "c:e1,e2,...,en" terms joined by " + "; "0" for zero.
    std::string term_form() const;
    static Poly parse_term_form(const PrimeField& f, size_t nvars, std::string_view text);

    // JSON array form [[c, [e1,...,en]], ...], descending graded-lex.
    nlohmann::json to_json() const;
    static Poly from_json(const PrimeField& f, size_t nvars, const nlohmann::json& j);

    // Leading (grlex-largest) term of a nonzero polynomial.
    const std::pair<const Monomial, uint32_t>& leading_term() const;

private:
    void require_compatible(const Poly& o, const char* op) const;

    PrimeField f_;
    size_t nvars_;
    TermMap terms_;
};

inline std::vector<std::string> default_var_names(std::string_view prefix, size_t n, size_t base) {
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t j = 0; j < n; ++j)
        names.push_back(std::string(prefix) + std::to_string(base + j));
    return names;
}

}  // namespace dickson
