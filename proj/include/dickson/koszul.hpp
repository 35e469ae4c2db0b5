#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dickson/poly.hpp"
#include "dickson/sumnorm.hpp"
#include "dickson/util.hpp"

#include "json.hpp"

namespace dickson {

// A graded polynomial ring F_p[v_1..v_k] with positive variable degrees.
struct AbstractRing {
    PrimeField f;
    size_t k = 0;
    std::vector<std::string> var_names;
    std::vector<uint64_t> var_degrees;

    AbstractRing(const PrimeField& field, std::vector<std::string> names,
                 std::vector<uint64_t> degrees);

    bool operator==(const AbstractRing& o) const {
        return f == o.f && k == o.k && var_degrees == o.var_degrees;
    }
};

// Koszul data: exterior generators xi_1..xi_m mapping to homogeneous ring
// elements c_1..c_m. A zero coefficient records degree 0 unless the caller
// supplies its intended degree explicitly.
struct KoszulInstance {
    AbstractRing ring;
    std::vector<Poly> c;
    std::vector<uint64_t> c_degrees;

    KoszulInstance(AbstractRing r, std::vector<Poly> coeffs,
                   std::optional<std::vector<uint64_t>> degrees = std::nullopt);

    size_t m() const { return c.size(); }
};

// Element of the Koszul complex: polynomial coefficients keyed by the
// bitmask of the exterior monomial xi_S. Zero coefficients are never stored.
class ChainElement {
public:
    explicit ChainElement(AbstractRing ring) : ring_(std::move(ring)) {}

    const AbstractRing& ring() const { return ring_; }
    const std::map<uint32_t, Poly>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void add(uint32_t mask, const Poly& g);

    ChainElement operator+(const ChainElement& o) const;
    ChainElement operator-(const ChainElement& o) const;
    bool operator==(const ChainElement& o) const;

    std::string str() const;

private:
    AbstractRing ring_;
    std::map<uint32_t, Poly> parts_;
};

// The differential: d(xi_S (x) g) = sum_{s in S} (-1)^pos(s,S) c_s xi_{S\s} (x) g,
// where pos counts the smaller elements of S.
ChainElement koszul_d(const KoszulInstance& inst, const ChainElement& x);

struct HomologyCell {
    uint32_t q = 0;       // exterior degree
    uint64_t d = 0;       // internal degree
    uint64_t dim_chains = 0;
    uint64_t dim_kernel = 0;
    uint64_t dim_image = 0;  // image landing here from exterior degree q+1
    uint64_t dim_h = 0;
};

struct GradedHomologyReport {
    std::string instance;  // short description of the ring and coefficients
    uint64_t D = 0;
    std::vector<HomologyCell> cells;            // every (q, d) with q <= m, d <= D
    std::vector<int64_t> expected_h0;           // Hilbert oracle, degrees 0..D
    bool h0_matches_expected = true;            // over all d <= D
    bool h_positive_vanishes = true;            // H_q(d) = 0 for q > 0, d <= D

    uint64_t h(uint32_t q, uint64_t d) const;
    nlohmann::json to_json() const;
};

// Graded homology of the truncated complex, degree by degree up to D.
GradedHomologyReport homology_dims(const KoszulInstance& inst, uint64_t D,
                                   const Budget& budget = {});

// F_p[y_1..y_n, V], every variable in degree 1, with c_s = y_s^(p^j).
KoszulInstance tuan_instance(const PrimeField& f, size_t n, uint32_t j);

// Coefficients of prod_s (1 - t^deg(c_s)) / prod_v (1 - t^deg(v)) up to
// degree D: the Hilbert series of the quotient when the sequence is regular.
std::vector<int64_t> expected_quotient_hilbert(const KoszulInstance& inst, uint64_t D);

// det of the Jacobian (dc_s/dv_t) when square, otherwise the product of all
// maximal minors.
Poly jacobian_det(const KoszulInstance& inst);

// Sparse triplet dump of the boundary matrix C_q(d) -> C_{q-1}(d) for
// external audit: header line "q d rows cols", then "r c value" lines.
std::string dump_boundary_matrix(const KoszulInstance& inst, uint32_t q, uint64_t d,
                                 const Budget& budget = {});

enum class MargolisPose { well_posed, zero_coefficient, encoding_failed };

std::string to_string(MargolisPose pose);

// Outcome of the Margolis-style application at one cell: the Koszul complex
// over abstract ratio variables on the re-encoded coefficients A_s, with the
// Jacobian criterion applied to their p-th roots.
struct MargolisReport {
    MargolisPose pose = MargolisPose::well_posed;
    std::vector<std::string> coeff_status;           // per s: encoded polynomial or failure text
    std::optional<GradedHomologyReport> full;        // homology on the encoded A_s
    std::optional<GradedHomologyReport> zero_witness;  // sub-instance on a zero coefficient
    std::optional<std::string> jacobian;             // on the encoded roots, when available
    GradedHomologyReport substitute;                 // mechanism demo: c_s = R_s^p
    std::string substitute_jacobian;                 // on the substitute roots R_s
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

// Re-encodes an element of the Dickson algebra as a polynomial in abstract
// ratio variables: possible exactly when the generator-coordinate form is
// homogeneous in total degree (the Q_0 powers then rescale uniformly).
// Returns nullopt otherwise.
std::optional<Poly> encode_in_ratio_variables(const DicksonPoly& g);

MargolisReport dickson_margolis_check(const SumCoefficients& sc, uint64_t D,
                                      const Budget& budget = {});

}  // namespace dickson
