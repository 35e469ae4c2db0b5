#include "dickson/sumnorm.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "dickson/errors.hpp"

namespace dickson {

namespace {

std::string cell_tag(const PrimeField& f, size_t n, uint32_t i) {
    return "p=" + std::to_string(f.p()) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
}

}  // namespace

SumCoefficients SumCoefficients::extract(FramePtr frame, uint32_t i, const Budget& budget) {
    if (!frame)
        throw std::invalid_argument("SumCoefficients::extract: null frame");
    if (i == 0)
        throw std::invalid_argument("SumCoefficients::extract: i must be at least 1");
    const PrimeField f = frame->field();
    const size_t n = frame->n();
    const std::string where = cell_tag(f, n, i);

    uint64_t shift = checked_pow(f.p(), i) - 1;
    budget.check("extract", dense_term_estimate(checked_add(frame->weight(0), shift), n));

    std::vector<DicksonPoly> T;
    T.reserve(n);
    for (size_t s = 0; s < n; ++s) {
        Poly st = st_delta(frame->Q(s), i).scaled(f.sign(n));
        auto t = st.exact_div(frame->Q(0));
        if (!t)
            throw Falsification("coefficient extraction",
                                "St(Q_" + std::to_string(s) + ") is not divisible by Q_0 at " +
                                    where);
        auto td = frame->express(*t, budget);
        if (!td)
            throw Falsification("coefficient extraction",
                                "St(Q_" + std::to_string(s) +
                                    ")/Q_0 lies outside the Dickson algebra at " + where +
                                    ": " + t->term_form());
        T.push_back(std::move(*td));
    }

    // A_0 = 0, so T_0 = B Q_0 determines B by exact division in generator
    // coordinates. A failed division falsifies the vanishing of A_0.
    auto brep = T[0].rep().exact_div(Poly::variable(f, n, 0));
    if (!brep)
        throw Falsification("coefficient extraction",
                            "T_0 = " + T[0].str() + " is not a multiple of Q_0 at " + where);
    DicksonPoly B = frame->from_rep(std::move(*brep));

    std::vector<DicksonPoly> A;
    A.reserve(n);
    for (size_t s = 0; s < n; ++s)
        A.push_back(T[s] - B * frame->generator(s));

    std::vector<DicksonPoly> Proot;
    Proot.reserve(n);
    for (size_t s = 0; s < n; ++s) {
        auto r = A[s].rep().pth_root();
        if (!r)
            throw Falsification("coefficient extraction",
                                "A_" + std::to_string(s) +
                                    " is not a p-th power in the Dickson algebra at " + where +
                                    ": " + A[s].str());
        Proot.push_back(frame->from_rep(std::move(*r)));
    }
    auto rr = B.rep().pth_root();
    if (!rr)
        throw Falsification("coefficient extraction",
                            "B is not a p-th power in the Dickson algebra at " + where + ": " +
                                B.str());
    DicksonPoly Rroot = frame->from_rep(std::move(*rr));

    return SumCoefficients{std::move(frame), i,           std::move(A),
                           std::move(B),     std::move(Proot), std::move(Rroot)};
}

DicksonPoly SumCoefficients::delta_q(size_t s) const {
    return A.at(s) + B * frame->generator(s);
}

DicksonPoly normalized_delta(const SumCoefficients& sc, const DicksonPoly& g) {
    DicksonPoly acc = sc.frame->zero();
    for (size_t s = 0; s < sc.frame->n(); ++s) {
        Poly part = g.rep().partial(s);
        if (part.is_zero())
            continue;
        acc = acc + sc.frame->from_rep(std::move(part)) * sc.delta_q(s);
    }
    return acc;
}

DicksonPoly delta_iterate_closed(const SumCoefficients& sc, size_t s, uint32_t m) {
    if (m == 0)
        return sc.frame->generator(s);
    return sc.B.pow(m) * sc.frame->generator(s) + sc.B.pow(m - 1) * sc.A.at(s);
}

DicksonPoly st_iterate_closed(const SumCoefficients& sc, size_t s, uint32_t m) {
    if (m == 0)
        return sc.frame->generator(s);
    const PrimeField& f = sc.frame->field();
    uint32_t scalar = f.mul(f.sign(static_cast<uint64_t>(m) * sc.frame->n()), f.factorial(m));
    DicksonPoly core = sc.B.pow(m) * sc.frame->generator(s) + sc.B.pow(m - 1) * sc.A.at(s);
    return (sc.frame->generator(0).pow(m) * core).scaled(scalar);
}

Poly chain_rule_st(const SumCoefficients& sc, const DicksonPoly& g, const Budget& budget) {
    const DicksonFrame& frame = *sc.frame;
    Poly acc(frame.field(), frame.n());
    for (size_t s = 0; s < frame.n(); ++s) {
        Poly part = g.rep().partial(s);
        if (part.is_zero())
            continue;
        acc = acc + frame.expand(frame.from_rep(std::move(part)), budget) *
                        st_delta(frame.Q(s), sc.i);
    }
    return acc;
}

StirlingTable::StirlingTable(uint32_t max_m) : max_m_(max_m) {
    if (max_m > 20)
        throw std::invalid_argument("StirlingTable: rows beyond 20 do not fit in 64 bits");
    rows_.resize(max_m + 1);
    rows_[0] = {1};
    for (uint32_t m = 1; m <= max_m; ++m) {
        rows_[m].assign(m + 1, 0);
        for (uint32_t j = 1; j <= m; ++j) {
            uint64_t carry = (j <= m - 1) ? checked_mul(m - 1, rows_[m - 1][j]) : 0;
            rows_[m][j] = checked_add(rows_[m - 1][j - 1], carry);
        }
    }
}

uint64_t StirlingTable::exact(uint32_t m, uint32_t j) const {
    if (m > max_m_)
        throw std::out_of_range("StirlingTable: row beyond table size");
    if (j >= rows_[m].size())
        return 0;
    return rows_[m][j];
}

uint32_t StirlingTable::mod_p(const PrimeField& f, uint32_t m, uint32_t j) const {
    return f.reduce(exact(m, j));
}

LocalizedElement::LocalizedElement(DicksonPoly num, uint64_t k) : num_(std::move(num)), k_(k) {}

LocalizedElement LocalizedElement::normalized() const {
    if (num_.is_zero())
        return LocalizedElement(num_, 0);
    if (k_ == 0)
        return *this;
    uint64_t common = std::numeric_limits<uint64_t>::max();
    for (const auto& [m, c] : num_.rep().terms())
        common = std::min(common, m[0]);
    uint64_t cancel = std::min(common, k_);
    if (cancel == 0)
        return *this;
    const auto& frame = num_.frame();
    Poly divisor = Poly::variable(frame->field(), frame->n(), 0).pow(cancel);
    return LocalizedElement(frame->from_rep(*num_.rep().exact_div(divisor)), k_ - cancel);
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
    const auto& frame = num_.frame();
    uint64_t k = std::max(k_, o.k_);
    DicksonPoly q0 = frame->generator(0);
    DicksonPoly lhs = num_ * q0.pow(k - k_);
    DicksonPoly rhs = o.num_ * q0.pow(k - o.k_);
    return LocalizedElement(lhs + rhs, k).normalized();
}

LocalizedElement LocalizedElement::operator-(const LocalizedElement& o) const {
    const auto& frame = num_.frame();
    uint64_t k = std::max(k_, o.k_);
    DicksonPoly q0 = frame->generator(0);
    DicksonPoly lhs = num_ * q0.pow(k - k_);
    DicksonPoly rhs = o.num_ * q0.pow(k - o.k_);
    return LocalizedElement(lhs - rhs, k).normalized();
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
    return LocalizedElement(num_ * o.num_, checked_add(k_, o.k_)).normalized();
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
    DicksonPoly q0 = num_.frame()->generator(0);
    return num_ * q0.pow(o.k_) == o.num_ * q0.pow(k_);
}

}  // namespace dickson
