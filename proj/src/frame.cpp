#include "dickson/frame.hpp"

#include <stdexcept>
#include <utility>

#include "dickson/determinant.hpp"
#include "dickson/errors.hpp"
#include "dickson/linalg.hpp"

namespace dickson {

DicksonPoly::DicksonPoly(FramePtr frame, Poly rep) : frame_(std::move(frame)), rep_(std::move(rep)) {
    if (!frame_)
        throw std::invalid_argument("DicksonPoly: null frame");
    if (rep_.field() != frame_->field() || rep_.nvars() != frame_->n())
        throw std::invalid_argument("DicksonPoly: representation does not match frame");
}

uint64_t DicksonPoly::weighted_degree() const { return rep_.weighted_degree(frame_->weights()); }

void DicksonPoly::require_same_frame(const DicksonPoly& o, const char* op) const {
    if (frame_ == o.frame_)
        return;
    if (frame_->field() != o.frame_->field() || frame_->n() != o.frame_->n())
        throw std::invalid_argument(std::string("DicksonPoly: frame mismatch in ") + op);
}

DicksonPoly DicksonPoly::operator+(const DicksonPoly& o) const {
    require_same_frame(o, "add");
    return DicksonPoly(frame_, rep_ + o.rep_);
}

DicksonPoly DicksonPoly::operator-(const DicksonPoly& o) const {
    require_same_frame(o, "sub");
    return DicksonPoly(frame_, rep_ - o.rep_);
}

DicksonPoly DicksonPoly::operator*(const DicksonPoly& o) const {
    require_same_frame(o, "mul");
    return DicksonPoly(frame_, rep_ * o.rep_);
}

DicksonPoly DicksonPoly::operator-() const { return DicksonPoly(frame_, -rep_); }

DicksonPoly DicksonPoly::scaled(uint32_t c) const { return DicksonPoly(frame_, rep_.scaled(c)); }

DicksonPoly DicksonPoly::pow(uint64_t k) const { return DicksonPoly(frame_, rep_.pow(k)); }

bool DicksonPoly::operator==(const DicksonPoly& o) const {
    require_same_frame(o, "compare");
    return rep_ == o.rep_;
}

std::string DicksonPoly::str() const {
    return rep_.str(default_var_names("Q", frame_->n(), 0), "*");
}

FramePtr DicksonFrame::build(const PrimeField& f, size_t n, const Budget& budget) {
    if (n == 0)
        throw std::invalid_argument("DicksonFrame: n must be positive");
    uint64_t top = checked_pow(f.p(), static_cast<uint32_t>(n)) - 1;
    budget.check("dickson frame", dense_term_estimate(top, n));

    std::shared_ptr<DicksonFrame> fr(new DicksonFrame(f, n));

    std::vector<uint32_t> exps;
    for (uint32_t e = 0; e < n; ++e)
        exps.push_back(e);
    fr->L_ = dickson_determinant(f, n, exps);

    for (uint32_t s = 0; s < n; ++s) {
        std::vector<uint32_t> hat;
        for (uint32_t e = 0; e <= n; ++e)
            if (e != s)
                hat.push_back(e);
        fr->L_hat_.push_back(dickson_determinant(f, n, hat));
    }

    for (size_t s = 0; s < n; ++s) {
        auto q = fr->L_hat_[s].exact_div(fr->L_);
        std::string where = "p=" + std::to_string(f.p()) + " n=" + std::to_string(n) +
                            " s=" + std::to_string(s);
        if (!q)
            throw Falsification("dickson construction",
                                "bracket quotient does not divide exactly at " + where);
        if (*q * fr->L_ != fr->L_hat_[s])
            throw Falsification("dickson construction",
                                "quotient re-multiplication mismatch at " + where);
        fr->Q_.push_back(std::move(*q));
    }

    if (fr->Q_[0] != fr->L_.pow(f.p() - 1))
        throw Falsification("dickson construction",
                            "Q_{n,0} differs from L_n^(p-1) at p=" + std::to_string(f.p()) +
                                " n=" + std::to_string(n));

    for (uint32_t s = 0; s < n; ++s) {
        uint64_t w = checked_pow(f.p(), static_cast<uint32_t>(n)) - checked_pow(f.p(), s);
        if (fr->Q_[s].degree() != w)
            throw Falsification("dickson construction",
                                "Q_{n,s} has unexpected degree at s=" + std::to_string(s));
        fr->weights_.push_back(w);
    }

    return fr;
}

DicksonPoly DicksonFrame::zero() const { return DicksonPoly(shared_from_this(), Poly(f_, n_)); }

DicksonPoly DicksonFrame::one() const {
    return DicksonPoly(shared_from_this(), Poly::one(f_, n_));
}

DicksonPoly DicksonFrame::constant(uint32_t c) const {
    return DicksonPoly(shared_from_this(), Poly::constant(f_, n_, c));
}

DicksonPoly DicksonFrame::generator(size_t s) const {
    if (s >= n_)
        throw std::out_of_range("DicksonFrame::generator: index out of range");
    return DicksonPoly(shared_from_this(), Poly::variable(f_, n_, s));
}

DicksonPoly DicksonFrame::from_rep(Poly rep) const {
    return DicksonPoly(shared_from_this(), std::move(rep));
}

const Poly& DicksonFrame::product_locked(const Monomial& m) const {
    auto it = product_cache_.find(m);
    if (it != product_cache_.end())
        return it->second;
    Poly val(f_, n_);
    if (m.degree() == 0) {
        val = Poly::one(f_, n_);
    } else {
        size_t s = 0;
        while (m[s] == 0)
            ++s;
        Monomial prev = m;
        prev[s] -= 1;
        val = product_locked(prev) * Q_[s];
    }
    auto [ins, fresh] = product_cache_.emplace(m, std::move(val));
    return ins->second;
}

const Poly& DicksonFrame::generator_product(const Monomial& m) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return product_locked(m);
}

Poly DicksonFrame::expand(const DicksonPoly& a, const Budget& budget) const {
    if (a.frame()->field() != f_ || a.frame()->n() != n_)
        throw std::invalid_argument("DicksonFrame::expand: frame mismatch");
    budget.check("expand", dense_term_estimate(a.weighted_degree(), n_));
    return a.rep().substitute(std::span<const Poly>(Q_.data(), Q_.size()));
}

namespace {

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

}  // namespace

std::optional<DicksonPoly> DicksonFrame::express(const Poly& g, const Budget& budget) const {
    if (g.field() != f_ || g.nvars() != n_)
        throw std::invalid_argument("DicksonFrame::express: (p, n) mismatch");

    Poly rep(f_, n_);
    for (const auto& [d, comp] : g.homogeneous_components()) {
        std::vector<Monomial> tuples;
        std::vector<uint64_t> cur(n_, 0);
        enumerate_weighted_tuples(weights(), d, 0, cur, tuples);
        if (tuples.empty())
            return std::nullopt;

        budget.check("express", dense_term_estimate(d, n_));

        std::map<Monomial, size_t, GrlexLess> rowidx;
        auto intern = [&rowidx](const Monomial& m) { rowidx.try_emplace(m, rowidx.size()); };
        for (const auto& [m, c] : comp.terms())
            intern(m);
        std::vector<const Poly*> cols;
        cols.reserve(tuples.size());
        for (const Monomial& t : tuples) {
            const Poly& prod = generator_product(t);
            cols.push_back(&prod);
            for (const auto& [m, c] : prod.terms())
                intern(m);
        }

        MatFp A(rowidx.size(), tuples.size());
        std::vector<uint32_t> b(rowidx.size(), 0);
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [m, c] : cols[j]->terms())
                A.at(rowidx.at(m), j) = c;
        for (const auto& [m, c] : comp.terms())
            b[rowidx.at(m)] = c;

        auto sol = solve_mod_p(f_, std::move(A), std::move(b));
        if (!sol.consistent)
            return std::nullopt;
        for (size_t j = 0; j < tuples.size(); ++j)
            if (sol.x[j] != 0)
                rep.add_term(tuples[j], sol.x[j]);
    }
    return from_rep(std::move(rep));
}

}  // namespace dickson
