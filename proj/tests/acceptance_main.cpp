// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dickson/identities.hpp"
#include "dickson/koszul.hpp"
#include "dickson/qexpr.hpp"
#include "dickson/report.hpp"

using namespace dickson;

namespace {

struct Cell {
    uint32_t p, n, i;
};

std::vector<Cell> acceptance_grid() {
    std::vector<Cell> cells;
    std::vector<std::pair<uint32_t, uint32_t>> pn = {{2, 1}, {2, 2}, {2, 3},
                                                     {3, 1}, {3, 2}, {5, 1}, {5, 2}};
    for (auto [p, n] : pn)
        for (uint32_t i = 1; i <= 3; ++i)
            cells.push_back({p, n, i});
    return cells;
}

struct Extracted {
    Cell cell;
    SumCoefficients sc;
    double elapsed_s;
};

Poly random_x_poly(Rng& rng, const PrimeField& f, size_t nvars, size_t max_terms,
                   uint64_t max_exp) {
    Poly g(f, nvars);
    size_t terms = 1 + rng.below(max_terms);
    for (size_t t = 0; t < terms; ++t) {
        std::vector<uint64_t> e(nvars);
        for (auto& v : e)
            v = rng.below(max_exp + 1);
        g.add_term(Monomial(std::move(e)), rng.nonzero_coeff(f));
    }
    return g;
}

DicksonPoly random_dickson(Rng& rng, const FramePtr& frame, size_t max_terms, uint64_t max_exp) {
    return frame->from_rep(random_x_poly(rng, frame->field(), frame->n(), max_terms, max_exp));
}

int failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << id << ". " << label;
    if (!detail.empty())
        std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok)
        ++failures;
}

void criterion(int id, const char* label, const std::function<std::string()>& body) {
    try {
        report(id, label, true, body());
    } catch (const std::exception& e) {
        report(id, label, false, e.what());
    }
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::runtime_error(what);
}

}  // namespace

int main() {
    std::vector<Extracted> cells;

    criterion(1, "structural identity: extraction on the full grid", [&] {
        for (const Cell& c : acceptance_grid()) {
            auto start = std::chrono::steady_clock::now();
            FramePtr frame = DicksonFrame::build(PrimeField(c.p), c.n);
            SumCoefficients sc = SumCoefficients::extract(frame, c.i);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                        start)
                              .count();
            require(secs < 30.0, "cell exceeded 30 s");
            require(sc.A[0].is_zero(), "A_0 != 0");
            cells.push_back({c, std::move(sc), secs});
        }
        std::ostringstream os;
        os << cells.size()
           << " cells incl. i=1 (below the usual range of the statement; verified as an "
              "extension) and i=3";
        return os.str();
    });
    if (failures)
        return 1;  // everything below consumes the extractions

    criterion(2, "iterate agreement: closed form vs brute force, zero at m >= p", [&] {
        for (const Extracted& e : cells) {
            const auto& frame = e.sc.frame;
            for (size_t s = 0; s < frame->n(); ++s) {
                Poly brute = frame->Q(s);
                for (uint32_t m = 1; m <= e.cell.p + 1; ++m) {
                    brute = st_delta(brute, e.cell.i);
                    DicksonPoly closed = st_iterate_closed(e.sc, s, m);
                    require(frame->expand(closed) == brute, "closed/brute mismatch");
                    if (m >= e.cell.p)
                        require(closed.is_zero() && brute.is_zero(), "nonzero at m >= p");
                }
            }
        }
        // at p = 5 the m = 3 prefactor 3! reduces to 1
        for (const Extracted& e : cells)
            if (e.cell.p == 5) {
                const PrimeField& f = e.sc.frame->field();
                require(f.factorial(3) == 1, "3! != 1 mod 5");
                DicksonPoly plain =
                    (e.sc.frame->generator(0).pow(3) * delta_iterate_closed(e.sc, 0, 3))
                        .scaled(f.sign(3 * e.sc.frame->n()));
                require(st_iterate_closed(e.sc, 0, 3) == plain, "m=3 prefactor not unit");
            }
        return std::string("m <= p+1 at every cell");
    });

    criterion(3, "operator identity: Stirling expansion, m <= 4, 20 samples per cell", [&] {
        StirlingTable table(12);
        uint64_t fact = 1;
        for (uint32_t m = 1; m <= 12; ++m) {
            fact *= m;
            uint64_t sum = 0;
            for (uint32_t jj = 0; jj <= m; ++jj)
                sum += table.exact(m, jj);
            require(sum == fact, "Stirling row sum != m!");
        }
        for (const Extracted& e : cells) {
            const auto& frame = e.sc.frame;
            const PrimeField& f = frame->field();
            Rng rng = derive_rng(42, {e.cell.p, e.cell.n, e.cell.i}, "acceptance-operator");
            for (int t = 0; t < 20; ++t) {
                DicksonPoly g = random_dickson(rng, frame, 2, 2);
                std::vector<DicksonPoly> deltas = {g};
                for (uint32_t m = 1; m <= 4; ++m)
                    deltas.push_back(normalized_delta(e.sc, deltas.back()));
                Poly stm = frame->expand(g);
                Poly q0m = Poly::one(f, frame->n());
                for (uint32_t m = 1; m <= 4; ++m) {
                    stm = st_delta(stm, e.cell.i);
                    q0m = q0m * frame->Q(0);
                    DicksonPoly sum = frame->zero();
                    for (uint32_t jj = 1; jj <= m; ++jj)
                        sum = sum +
                              (e.sc.B.pow(m - jj) * deltas[jj]).scaled(table.mod_p(f, m, jj));
                    Poly rhs = (q0m * frame->expand(sum))
                                   .scaled(f.sign(static_cast<uint64_t>(m) * frame->n()));
                    require(stm == rhs, "operator identity failed");
                }
            }
        }
        return std::string("rows sum to m! exactly for m <= 12");
    });

    criterion(4, "derivation laws: Leibniz and Frobenius kernel, 100 samples per cell", [&] {
        for (const Extracted& e : cells) {
            const auto& frame = e.sc.frame;
            const PrimeField& f = frame->field();
            size_t n = frame->n();
            Rng rng = derive_rng(42, {e.cell.p, e.cell.n, e.cell.i}, "acceptance-derivation");
            for (int t = 0; t < 100; ++t) {
                Poly a = random_x_poly(rng, f, n, 4, e.cell.p);
                Poly b = random_x_poly(rng, f, n, 4, e.cell.p);
                require(st_delta(a * b, e.cell.i) ==
                            st_delta(a, e.cell.i) * b + a * st_delta(b, e.cell.i),
                        "Leibniz failed");
            }
            for (int t = 0; t < 100; ++t) {
                DicksonPoly F = random_dickson(rng, frame, 3, 2);
                require(normalized_delta(e.sc, F.pow(e.cell.p)).is_zero(),
                        "delta(F^p) != 0");
                Poly xf = random_x_poly(rng, f, n, 4, e.cell.p);
                require(st_delta(xf.pow(e.cell.p), e.cell.i).is_zero(), "St(f^p) != 0");
            }
        }
        return std::string();
    });

    criterion(5, "kernel family and global properties, 60 samples per cell", [&] {
        for (const Extracted& e : cells) {
            const auto& frame = e.sc.frame;
            Rng rng = derive_rng(42, {e.cell.p, e.cell.n, e.cell.i}, "acceptance-kernel");
            for (int t = 0; t < 60; ++t) {
                DicksonPoly F = random_dickson(rng, frame, 2, 2);
                auto r = verify_kernel_family(e.sc, F, rng.below(frame->n()));
                require(r.status == CheckStatus::pass, "kernel family failed: " + r.params);
            }
            std::vector<DicksonPoly> samples;
            for (int t = 0; t < 60; ++t)
                samples.push_back(random_dickson(rng, frame, 2, 2));
            auto r = verify_global_properties(e.sc, samples);
            require(r.status == CheckStatus::pass, "global properties failed: " + r.params);
        }
        return std::string("second application lands on exact zero");
    });

    criterion(6, "ratio framework: cleared identities for all s, vacuous iff B = 0", [&] {
        size_t vacuous = 0;
        for (const Extracted& e : cells) {
            const auto& frame = e.sc.frame;
            const PrimeField& f = frame->field();
            for (size_t s = 0; s < frame->n(); ++s) {
                auto inv = verify_invariant_ratios(e.sc, s);
                if (e.sc.B.is_zero()) {
                    require(inv.status == CheckStatus::vacuous, "B = 0 not reported vacuous");
                    ++vacuous;
                } else {
                    require(inv.status == CheckStatus::pass, "invariant ratio failed");
                }
                auto act = verify_ratio_action(e.sc, s, Poly::variable(f, frame->n(), s));
                require(act.status == CheckStatus::pass, "ratio action failed");
            }
        }
        require(vacuous > 0, "expected at least one B = 0 cell on this grid");
        return "vacuous cells: " + std::to_string(vacuous);
    });

    criterion(7, "quotient homology reproduction at D = 4 p^j", [&] {
        std::vector<std::tuple<uint32_t, size_t, uint32_t>> instances = {
            {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}};
        for (auto [p, n, j] : instances) {
            auto start = std::chrono::steady_clock::now();
            uint64_t D = 4 * checked_pow(p, j);
            auto rep = homology_dims(tuan_instance(PrimeField(p), n, j), D);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            require(rep.h0_matches_expected, "H_0 mismatch");
            require(rep.h_positive_vanishes, "H_{>0} != 0");
            require(secs < 60.0, "instance exceeded 60 s");
        }
        return std::string("4 instances, exact in every degree");
    });

    criterion(8, "Koszul engine: d^2 = 0, Hilbert oracle, non-regular detection", [&] {
        Rng rng(4242);
        std::vector<KoszulInstance> instances;
        for (auto [p, n, j] : std::vector<std::tuple<uint32_t, size_t, uint32_t>>{
                 {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}})
            instances.push_back(tuan_instance(PrimeField(p), n, j));

        // seeded regular sequences: powers of distinct variables
        std::vector<uint32_t> primes = {2, 3, 5};
        for (int t = 0; t < 8; ++t) {
            PrimeField f(primes[rng.below(primes.size())]);
            size_t k = 1 + rng.below(3);
            std::vector<Poly> c;
            for (size_t v = 0; v < k; ++v)
                if (rng.below(2) == 0 || c.empty())
                    c.push_back(Poly::variable(f, k, v).pow(1 + rng.below(4)));
            AbstractRing ring(f, default_var_names("v", k, 1),
                              std::vector<uint64_t>(k, 1));
            KoszulInstance inst(ring, c);
            uint64_t D = std::min<uint64_t>(12, 3 * *std::max_element(inst.c_degrees.begin(),
                                                                      inst.c_degrees.end()));
            auto rep = homology_dims(inst, D);
            require(rep.h0_matches_expected && rep.h_positive_vanishes,
                    "regular instance disagreed with the Hilbert oracle");
            instances.push_back(std::move(inst));
        }

        int chains = 0;
        for (const auto& inst : instances)
            for (int t = 0; t < 12; ++t) {
                ChainElement x(inst.ring);
                for (int part = 0; part < 3; ++part)
                    x.add(static_cast<uint32_t>(rng.below(uint64_t{1} << inst.m())),
                          random_x_poly(rng, inst.ring.f, inst.ring.k, 4, 3));
                require(koszul_d(inst, koszul_d(inst, x)).is_zero(), "d^2 != 0");
                ++chains;
            }
        require(chains >= 100, "not enough chains sampled");

        PrimeField f2(2);
        AbstractRing ring2(f2, {"v1", "v2"}, {1, 1});
        Poly sq = Poly::variable(f2, 2, 0).pow(2);
        auto repeated = homology_dims(KoszulInstance(ring2, {sq, sq}), 4);
        require(repeated.h(1, 2) > 0, "repeated coefficient: H_1 not exhibited");
        auto zero = homology_dims(KoszulInstance(ring2, {Poly::zero(f2, 2)}), 2);
        require(zero.h(1, 0) > 0, "zero coefficient: H_1 not exhibited");
        return std::to_string(chains) + " chains, 8 seeded regular instances";
    });

    criterion(9, "localized statements accepted through labeled surrogates", [&] {
        // no external numeric tables exist at this scale; the fraction-level
        // claims are certified by their cleared forms, and the report must
        // say so explicitly
        FramePtr frame = DicksonFrame::build(PrimeField(3), 1);
        SumCoefficients sc = SumCoefficients::extract(frame, 1);
        auto inv = verify_invariant_ratios(sc, 0);
        require(inv.status == CheckStatus::pass &&
                    inv.note.find("cleared-numerator") != std::string::npos,
                "cleared-numerator label missing");
        auto margolis = dickson_margolis_check(sc, 3);
        bool justified = false;
        for (const auto& note : margolis.notes)
            if (note.find("p-th roots") != std::string::npos)
                justified = true;
        require(justified, "Jacobian-on-roots justification missing");
        return std::string("surrogate labeling present in results and notes");
    });

    std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << 9 - failures
              << "/9)\n";
    return failures ? 1 : 0;
}
