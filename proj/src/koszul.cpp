#include "dickson/koszul.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <sstream>
#include <stdexcept>

#include "dickson/determinant.hpp"
#include "dickson/linalg.hpp"

namespace dickson {

namespace {

bool weighted_homogeneous(const Poly& g, std::span<const uint64_t> weights, uint64_t& deg_out) {
    deg_out = 0;
    bool first = true;
    for (const auto& [m, c] : g.terms()) {
        uint64_t d = m.weighted_degree(weights);
        if (first) {
            deg_out = d;
            first = false;
        } else if (d != deg_out) {
            return false;
        }
    }
    return true;
}

void enumerate_weighted_tuples(std::span<const uint64_t> w, uint64_t d, size_t s,
                               std::vector<uint64_t>& cur, std::vector<Monomial>& out) {
    if (s == w.size()) {
        if (d == 0)
            out.emplace_back(cur);
        return;
    }
    uint64_t max_e = d / w[s];
    for (uint64_t e = 0; e <= max_e; ++e) {
        cur[s] = e;
        enumerate_weighted_tuples(w, d - e * w[s], s + 1, cur, out);
    }
    cur[s] = 0;
}

std::vector<Monomial> degree_basis(const AbstractRing& ring, uint64_t d) {
    std::vector<Monomial> out;
    std::vector<uint64_t> cur(ring.k, 0);
    enumerate_weighted_tuples(ring.var_degrees, d, 0, cur, out);
    return out;
}

// Basis of C_q(d) for all q at internal degree d: pairs (mask, ring
// monomial), masks ascending, monomials in graded-lex order.
struct DegreeSlice {
    std::vector<std::vector<std::pair<uint32_t, Monomial>>> by_q;
    uint64_t total = 0;
};

DegreeSlice slice_basis(const KoszulInstance& inst, uint64_t d) {
    DegreeSlice slice;
    slice.by_q.resize(inst.m() + 1);
    for (uint32_t mask = 0; mask < (uint32_t{1} << inst.m()); ++mask) {
        uint64_t wt = 0;
        for (size_t s = 0; s < inst.m(); ++s)
            if (mask & (uint32_t{1} << s))
                wt += inst.c_degrees[s];
        if (wt > d)
            continue;
        uint32_t q = static_cast<uint32_t>(std::popcount(mask));
        for (Monomial& mono : degree_basis(inst.ring, d - wt)) {
            slice.by_q[q].emplace_back(mask, std::move(mono));
            ++slice.total;
        }
    }
    return slice;
}

// Matrix of d: C_q(d) -> C_{q-1}(d) over the slice bases.
MatFp boundary_matrix(const KoszulInstance& inst, const DegreeSlice& slice, uint32_t q) {
    const auto& cols = slice.by_q[q];
    const auto& rows = slice.by_q[q - 1];
    std::map<std::pair<uint32_t, std::vector<uint64_t>>, size_t> row_index;
    for (size_t r = 0; r < rows.size(); ++r)
        row_index.emplace(std::make_pair(rows[r].first, rows[r].second.exponents()), r);

    const PrimeField& f = inst.ring.f;
    MatFp M(rows.size(), cols.size());
    for (size_t col = 0; col < cols.size(); ++col) {
        auto [mask, mono] = cols[col];
        uint32_t pos = 0;
        for (size_t s = 0; s < inst.m(); ++s) {
            uint32_t bit = uint32_t{1} << s;
            if (!(mask & bit))
                continue;
            uint32_t sign = f.sign(pos);
            ++pos;
            for (const auto& [cm, cc] : inst.c[s].terms()) {
                Monomial target = mono.mul(cm);
                auto it = row_index.find(
                    std::make_pair(static_cast<uint32_t>(mask & ~bit), target.exponents()));
                if (it == row_index.end())
                    throw std::logic_error("koszul: boundary image leaves the graded slice");
                uint32_t& cell = M.at(it->second, col);
                cell = f.add(cell, f.mul(sign, cc));
            }
        }
    }
    return M;
}

std::string describe(const KoszulInstance& inst) {
    std::ostringstream os;
    os << "F_" << inst.ring.f.p() << "[";
    for (size_t v = 0; v < inst.ring.k; ++v) {
        if (v)
            os << ",";
        os << inst.ring.var_names[v];
        if (inst.ring.var_degrees[v] != 1)
            os << ":" << inst.ring.var_degrees[v];
    }
    os << "], c = (";
    for (size_t s = 0; s < inst.m(); ++s) {
        if (s)
            os << ", ";
        os << inst.c[s].str(inst.ring.var_names, "*");
    }
    os << ")";
    return os.str();
}

}  // namespace

AbstractRing::AbstractRing(const PrimeField& field, std::vector<std::string> names,
                           std::vector<uint64_t> degrees)
    : f(field), k(names.size()), var_names(std::move(names)), var_degrees(std::move(degrees)) {
    if (var_degrees.size() != k)
        throw std::invalid_argument("AbstractRing: name/degree length mismatch");
    if (k == 0)
        throw std::invalid_argument("AbstractRing: need at least one variable");
    for (uint64_t d : var_degrees)
        if (d == 0)
            throw std::invalid_argument("AbstractRing: variable degrees must be positive");
}

KoszulInstance::KoszulInstance(AbstractRing r, std::vector<Poly> coeffs,
                               std::optional<std::vector<uint64_t>> degrees)
    : ring(std::move(r)), c(std::move(coeffs)) {
    if (c.size() > 30)
        throw std::invalid_argument("KoszulInstance: too many coefficients");
    for (const Poly& g : c) {
        if (g.field() != ring.f || g.nvars() != ring.k)
            throw std::invalid_argument("KoszulInstance: coefficient outside the ring");
        uint64_t d = 0;
        if (!weighted_homogeneous(g, ring.var_degrees, d))
            throw std::invalid_argument("KoszulInstance: coefficients must be homogeneous");
    }
    if (degrees) {
        if (degrees->size() != c.size())
            throw std::invalid_argument("KoszulInstance: degree list length mismatch");
        for (size_t s = 0; s < c.size(); ++s) {
            uint64_t actual = 0;
            weighted_homogeneous(c[s], ring.var_degrees, actual);
            if (!c[s].is_zero() && (*degrees)[s] != actual)
                throw std::invalid_argument("KoszulInstance: declared degree mismatch");
        }
        c_degrees = std::move(*degrees);
    } else {
        for (const Poly& g : c) {
            uint64_t d = 0;
            weighted_homogeneous(g, ring.var_degrees, d);
            c_degrees.push_back(d);
        }
    }
}

void ChainElement::add(uint32_t mask, const Poly& g) {
    if (g.field() != ring_.f || g.nvars() != ring_.k)
        throw std::invalid_argument("ChainElement: polynomial outside the ring");
    if (g.is_zero())
        return;
    auto it = parts_.find(mask);
    if (it == parts_.end()) {
        parts_.emplace(mask, g);
        return;
    }
    it->second = it->second + g;
    if (it->second.is_zero())
        parts_.erase(it);
}

ChainElement ChainElement::operator+(const ChainElement& o) const {
    ChainElement r = *this;
    for (const auto& [mask, g] : o.parts_)
        r.add(mask, g);
    return r;
}

ChainElement ChainElement::operator-(const ChainElement& o) const {
    ChainElement r = *this;
    for (const auto& [mask, g] : o.parts_)
        r.add(mask, -g);
    return r;
}

bool ChainElement::operator==(const ChainElement& o) const {
    return ring_ == o.ring_ && parts_ == o.parts_;
}

std::string ChainElement::str() const {
    if (parts_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, g] : parts_) {
        if (!first)
            os << " + ";
        first = false;
        os << "xi{";
        bool fs = true;
        for (size_t s = 0; s < 30; ++s)
            if (mask & (uint32_t{1} << s)) {
                if (!fs)
                    os << ",";
                fs = false;
                os << s + 1;
            }
        os << "}(" << g.str(ring_.var_names, "*") << ")";
    }
    return os.str();
}

ChainElement koszul_d(const KoszulInstance& inst, const ChainElement& x) {
    if (!(x.ring() == inst.ring))
        throw std::invalid_argument("koszul_d: ring mismatch");
    ChainElement out(inst.ring);
    const PrimeField& f = inst.ring.f;
    for (const auto& [mask, g] : x.parts()) {
        if (mask >= (uint32_t{1} << inst.m()))
            throw std::invalid_argument("koszul_d: exterior index beyond the instance");
        uint32_t pos = 0;
        for (size_t s = 0; s < inst.m(); ++s) {
            uint32_t bit = uint32_t{1} << s;
            if (!(mask & bit))
                continue;
            out.add(mask & ~bit, (inst.c[s] * g).scaled(f.sign(pos)));
            ++pos;
        }
    }
    return out;
}

uint64_t GradedHomologyReport::h(uint32_t q, uint64_t d) const {
    for (const auto& cell : cells)
        if (cell.q == q && cell.d == d)
            return cell.dim_h;
    return 0;
}

nlohmann::json GradedHomologyReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cell : cells)
        rows.push_back({{"q", cell.q},
                        {"d", cell.d},
                        {"chains", cell.dim_chains},
                        {"kernel", cell.dim_kernel},
                        {"image", cell.dim_image},
                        {"h", cell.dim_h}});
    return {{"instance", instance},
            {"D", D},
            {"cells", rows},
            {"expected_h0", expected_h0},
            {"h0_matches_expected", h0_matches_expected},
            {"h_positive_vanishes", h_positive_vanishes}};
}

GradedHomologyReport homology_dims(const KoszulInstance& inst, uint64_t D, const Budget& budget) {
    GradedHomologyReport report;
    report.instance = describe(inst);
    report.D = D;
    report.expected_h0 = expected_quotient_hilbert(inst, D);

    auto compute_degree = [&inst, &budget](uint64_t d) {
        DegreeSlice slice = slice_basis(inst, d);
        budget.check("koszul slice", slice.total);
        std::vector<uint64_t> ranks(inst.m() + 2, 0);
        for (uint32_t q = 1; q <= inst.m(); ++q)
            if (!slice.by_q[q].empty() && !slice.by_q[q - 1].empty())
                ranks[q] = rank_mod_p(inst.ring.f, boundary_matrix(inst, slice, q));
        std::vector<HomologyCell> cells;
        for (uint32_t q = 0; q <= inst.m(); ++q) {
            HomologyCell cell;
            cell.q = q;
            cell.d = d;
            cell.dim_chains = slice.by_q[q].size();
            cell.dim_kernel = cell.dim_chains - ranks[q];
            cell.dim_image = ranks[q + 1];
            cell.dim_h = cell.dim_kernel - cell.dim_image;
            cells.push_back(cell);
        }
        return cells;
    };

    std::vector<std::future<std::vector<HomologyCell>>> futures;
    futures.reserve(D + 1);
    for (uint64_t d = 0; d <= D; ++d)
        futures.push_back(std::async(std::launch::deferred | std::launch::async, compute_degree, d));
    for (uint64_t d = 0; d <= D; ++d)
        for (const HomologyCell& cell : futures[d].get()) {
            if (cell.q == 0 &&
                static_cast<int64_t>(cell.dim_h) != report.expected_h0[cell.d])
                report.h0_matches_expected = false;
            if (cell.q > 0 && cell.dim_h != 0)
                report.h_positive_vanishes = false;
            report.cells.push_back(cell);
        }
    return report;
}

KoszulInstance tuan_instance(const PrimeField& f, size_t n, uint32_t j) {
    if (n == 0)
        throw std::invalid_argument("tuan_instance: n must be positive");
    std::vector<std::string> names;
    for (size_t s = 1; s <= n; ++s)
        names.push_back("y" + std::to_string(s));
    names.push_back("V");
    AbstractRing ring(f, std::move(names), std::vector<uint64_t>(n + 1, 1));
    uint64_t e = checked_pow(f.p(), j);
    std::vector<Poly> c;
    for (size_t s = 0; s < n; ++s)
        c.push_back(Poly::variable(f, n + 1, s).pow(e));
    return KoszulInstance(std::move(ring), std::move(c));
}

std::vector<int64_t> expected_quotient_hilbert(const KoszulInstance& inst, uint64_t D) {
    std::vector<int64_t> a(D + 1, 0);
    a[0] = 1;
    for (uint64_t w : inst.c_degrees) {
        if (w == 0) {
            // factor (1 - t^0) = 0: the oracle degenerates
            std::fill(a.begin(), a.end(), 0);
            return a;
        }
        for (uint64_t d = D + 1; d-- > w;)
            a[d] -= a[d - w];
    }
    for (uint64_t w : inst.ring.var_degrees)
        for (uint64_t d = w; d <= D; ++d)
            a[d] += a[d - w];
    return a;
}

Poly jacobian_det(const KoszulInstance& inst) {
    const PrimeField& f = inst.ring.f;
    size_t k = inst.ring.k;
    size_t m = inst.m();
    if (m == 0)
        return Poly::one(f, k);

    std::vector<std::vector<Poly>> J;
    for (size_t s = 0; s < m; ++s) {
        std::vector<Poly> row;
        for (size_t t = 0; t < k; ++t)
            row.push_back(inst.c[s].partial(t));
        J.push_back(std::move(row));
    }
    if (m == k)
        return matrix_determinant(J);

    size_t r = std::min(m, k);
    std::vector<std::vector<size_t>> row_sets, col_sets;
    std::vector<size_t> pick;
    auto combos = [](size_t total, size_t choose) {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> cur;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (cur.size() == choose) {
                out.push_back(cur);
                return;
            }
            for (size_t v = start; v < total; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    (void)pick;
    row_sets = combos(m, r);
    col_sets = combos(k, r);

    Poly product = Poly::one(f, k);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            std::vector<std::vector<Poly>> minor;
            for (size_t a = 0; a < r; ++a) {
                std::vector<Poly> row;
                for (size_t b = 0; b < r; ++b)
                    row.push_back(J[rs[a]][cs[b]]);
                minor.push_back(std::move(row));
            }
            product = product * matrix_determinant(minor);
        }
    return product;
}

std::string dump_boundary_matrix(const KoszulInstance& inst, uint32_t q, uint64_t d,
                                 const Budget& budget) {
    if (q == 0 || q > inst.m())
        throw std::invalid_argument("dump_boundary_matrix: exterior degree out of range");
    DegreeSlice slice = slice_basis(inst, d);
    budget.check("koszul slice", slice.total);
    MatFp M = boundary_matrix(inst, slice, q);
    std::ostringstream os;
    os << q << " " << d << " " << M.rows << " " << M.cols << "\n";
    for (size_t r = 0; r < M.rows; ++r)
        for (size_t c = 0; c < M.cols; ++c)
            if (M.at(r, c) != 0)
                os << r << " " << c << " " << M.at(r, c) << "\n";
    return os.str();
}

std::string to_string(MargolisPose pose) {
    switch (pose) {
        case MargolisPose::well_posed:
            return "well-posed";
        case MargolisPose::zero_coefficient:
            return "zero-coefficient";
        case MargolisPose::encoding_failed:
            return "encoding-failed";
    }
    return "unknown";
}

std::optional<Poly> encode_in_ratio_variables(const DicksonPoly& g) {
    if (!g.rep().is_homogeneous())
        return std::nullopt;
    return g.rep();
}

nlohmann::json MargolisReport::to_json() const {
    nlohmann::json j;
    j["pose"] = to_string(pose);
    j["coefficients"] = coeff_status;
    if (full)
        j["full"] = full->to_json();
    if (zero_witness)
        j["zero_witness"] = zero_witness->to_json();
    if (jacobian)
        j["jacobian_on_roots"] = *jacobian;
    j["substitute"] = substitute.to_json();
    j["substitute_jacobian_on_roots"] = substitute_jacobian;
    j["notes"] = notes;
    return j;
}

MargolisReport dickson_margolis_check(const SumCoefficients& sc, uint64_t D,
                                      const Budget& budget) {
    const auto& frame = *sc.frame;
    const PrimeField& f = frame.field();
    size_t n = frame.n();
    uint32_t p = f.p();

    AbstractRing ring(f, default_var_names("R", n, 0), std::vector<uint64_t>(n, 1));

    // the mechanism demo on an always-well-posed instance: c_s = R_s^p
    std::vector<Poly> subst;
    for (size_t s = 0; s < n; ++s)
        subst.push_back(Poly::variable(f, n, s).pow(p));
    KoszulInstance subst_inst(ring, std::move(subst));

    std::vector<Poly> subst_roots;
    for (size_t s = 0; s < n; ++s)
        subst_roots.push_back(Poly::variable(f, n, s));
    KoszulInstance subst_root_inst(ring, std::move(subst_roots));

    MargolisReport report{
        MargolisPose::well_posed, {}, std::nullopt, std::nullopt, std::nullopt,
        homology_dims(subst_inst, D, budget),
        jacobian_det(subst_root_inst).str(ring.var_names, "*"),
        {}};

    report.notes.push_back(
        "ratio variables are treated as abstract coordinates of degree 1; a Dickson element "
        "encodes only when its generator form is homogeneous, up to a uniform Q0 power");
    report.notes.push_back(
        "the Jacobian criterion is applied to the p-th roots of the coefficients: derivatives "
        "of p-th powers vanish identically, and the roots generate the same radical ideal");

    std::vector<Poly> encodedA;
    std::vector<Poly> encodedP;
    bool allA = true, allP = true, any_zero = false;
    for (size_t s = 0; s < n; ++s) {
        auto ea = encode_in_ratio_variables(sc.A[s]);
        auto ep = encode_in_ratio_variables(sc.Proot[s]);
        if (sc.A[s].is_zero())
            any_zero = true;
        if (ea) {
            report.coeff_status.push_back("A_" + std::to_string(s) + " = " +
                                          ea->str(ring.var_names, "*"));
            encodedA.push_back(*ea);
        } else {
            report.coeff_status.push_back("A_" + std::to_string(s) +
                                          ": encoding failed (inhomogeneous in the generators: " +
                                          sc.A[s].str() + ")");
            allA = false;
        }
        if (ep)
            encodedP.push_back(*ep);
        else
            allP = false;
    }

    if (!allA) {
        report.pose = MargolisPose::encoding_failed;
        report.notes.push_back(
            "some coefficient does not re-encode in the ratio variables; only the substitute "
            "instance is checked");
        return report;
    }

    KoszulInstance inst(ring, encodedA);
    report.full = homology_dims(inst, D, budget);
    if (allP) {
        KoszulInstance root_inst(ring, encodedP);
        report.jacobian = jacobian_det(root_inst).str(ring.var_names, "*");
    }

    if (any_zero) {
        report.pose = MargolisPose::zero_coefficient;
        report.notes.push_back("regularity fails: zero coefficient");

        bool exhibited = false;
        for (const auto& cell : report.full->cells)
            if (cell.q == 1 && cell.dim_h > 0) {
                report.notes.push_back("H_1 != 0 on the full instance at internal degree " +
                                       std::to_string(cell.d));
                exhibited = true;
                break;
            }
        if (!exhibited) {
            size_t zs = 0;
            while (!sc.A[zs].is_zero())
                ++zs;
            KoszulInstance sub(ring, {Poly::zero(f, n)});
            report.zero_witness = homology_dims(sub, std::min<uint64_t>(D, 2), budget);
            report.notes.push_back(
                "a unit coefficient makes the full complex acyclic; H_1 != 0 is exhibited on "
                "the subcomplex generated by the zero coefficient A_" + std::to_string(zs));
        }
    } else if (report.full->h_positive_vanishes) {
        report.notes.push_back("H_{>0} = 0 up to the bound: the encoded sequence acts regularly");
    }
    return report;
}

}  // namespace dickson
