#include "dickson/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "dickson/util.hpp"

namespace dickson {

uint64_t Monomial::degree() const {
    uint64_t d = 0;
    for (uint64_t e : e_)
        d = checked_add(d, e);
    return d;
}

uint64_t Monomial::weighted_degree(std::span<const uint64_t> weights) const {
    if (weights.size() != e_.size())
        throw std::invalid_argument("Monomial: weight vector length mismatch");
    uint64_t d = 0;
    for (size_t j = 0; j < e_.size(); ++j)
        d = checked_add(d, checked_mul(e_[j], weights[j]));
    return d;
}

Monomial Monomial::mul(const Monomial& o) const {
    if (o.nvars() != nvars())
        throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r(nvars());
    for (size_t j = 0; j < nvars(); ++j)
        r.e_[j] = checked_add(e_[j], o.e_[j]);
    return r;
}

std::optional<Monomial> Monomial::div(const Monomial& o) const {
    if (o.nvars() != nvars())
        throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r(nvars());
    for (size_t j = 0; j < nvars(); ++j) {
        if (e_[j] < o.e_[j])
            return std::nullopt;
        r.e_[j] = e_[j] - o.e_[j];
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (size_t j = 0; j < nvars(); ++j)
        if (e_[j] < o.e_[j])
            return false;
    return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return a.exponents() < b.exponents();
}

Poly Poly::constant(const PrimeField& f, size_t nvars, uint32_t c) {
    Poly r(f, nvars);
    r.add_term(Monomial(nvars), f.reduce(c));
    return r;
}

Poly Poly::variable(const PrimeField& f, size_t nvars, size_t j) {
    if (j >= nvars)
        throw std::out_of_range("Poly::variable: index out of range");
    Monomial m(nvars);
    m[j] = 1;
    return monomial(f, m, 1);
}

Poly Poly::monomial(const PrimeField& f, Monomial m, uint32_t c) {
    Poly r(f, m.nvars());
    r.add_term(m, f.reduce(c));
    return r;
}

uint64_t Poly::degree() const {
    // Grlex order is degree-first, so the map maximum carries the degree.
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

uint64_t Poly::weighted_degree(std::span<const uint64_t> weights) const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.weighted_degree(weights));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

std::map<uint64_t, Poly> Poly::homogeneous_components() const {
    std::map<uint64_t, Poly> comps;
    for (const auto& [m, c] : terms_) {
        auto [it, fresh] = comps.try_emplace(m.degree(), Poly(f_, nvars_));
        it->second.add_term(m, c);
    }
    return comps;
}

void Poly::add_term(const Monomial& m, uint32_t c) {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("Poly::add_term: variable count mismatch");
    c = f_.reduce(c);
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second = f_.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Poly::require_compatible(const Poly& o, const char* op) const {
    if (f_ != o.f_ || nvars_ != o.nvars_)
        throw std::invalid_argument(std::string("Poly: operand (p, n) mismatch in ") + op);
}

Poly Poly::operator+(const Poly& o) const {
    require_compatible(o, "add");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_compatible(o, "sub");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, f_.neg(c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_compatible(o, "mul");
    Poly r(f_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma.mul(mb), f_.mul(ca, cb));
    return r;
}

Poly Poly::scaled(uint32_t c) const {
    c = f_.reduce(c);
    Poly r(f_, nvars_);
    if (c == 0)
        return r;
    for (const auto& [m, a] : terms_)
        r.add_term(m, f_.mul(a, c));
    return r;
}

Poly Poly::pow(uint64_t k) const {
    Poly acc = one(f_, nvars_);
    if (k == 0)
        return acc;  // 0^0 = 1 by convention
    Poly base = *this;
    while (k) {
        if (k & 1)
            acc = acc * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return acc;
}

const std::pair<const Monomial, uint32_t>& Poly::leading_term() const {
    if (terms_.empty())
        throw std::domain_error("Poly: leading term of zero");
    return *terms_.rbegin();
}

std::optional<Poly> Poly::exact_div(const Poly& b) const {
    require_compatible(b, "exact_div");
    if (b.is_zero())
        throw std::domain_error("Poly::exact_div: division by zero");
    Poly q(f_, nvars_);
    Poly r = *this;
    const auto& [lm_b, lc_b] = b.leading_term();
    uint32_t lc_b_inv = f_.inv(lc_b);
    while (!r.is_zero()) {
        const auto& [lm_r, lc_r] = r.leading_term();
        auto t = lm_r.div(lm_b);
        if (!t)
            return std::nullopt;
        uint32_t c = f_.mul(lc_r, lc_b_inv);
        Poly step = monomial(f_, *t, c);
        q = q + step;
        r = r - step * b;
    }
    return q;
}

std::optional<Poly> Poly::pth_root() const {
    const uint32_t p = f_.p();
    Poly r(f_, nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial root(nvars_);
        for (size_t j = 0; j < nvars_; ++j) {
            if (m[j] % p != 0)
                return std::nullopt;
            root[j] = m[j] / p;
        }
        r.add_term(root, c);  // c^p = c in F_p
    }
    return r;
}

Poly Poly::partial(size_t j) const {
    if (j >= nvars_)
        throw std::out_of_range("Poly::partial: variable index out of range");
    Poly r(f_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[j] == 0)
            continue;
        uint32_t factor = f_.reduce(m[j]);
        if (factor == 0)
            continue;
        Monomial d = m;
        d[j] -= 1;
        r.add_term(d, f_.mul(c, factor));
    }
    return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("Poly::substitute: arity mismatch");
    if (nvars_ == 0)
        throw std::invalid_argument("Poly::substitute: no variables");
    const PrimeField& tf = images[0].field();
    size_t tn = images[0].nvars();
    for (const Poly& g : images)
        if (g.field() != tf || g.nvars() != tn)
            throw std::invalid_argument("Poly::substitute: images disagree on (p, n)");
    if (tf != f_)
        throw std::invalid_argument("Poly::substitute: field mismatch");

    // Incremental power tables per variable, grown on demand.
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power_of = [&](size_t j, uint64_t e) -> const Poly& {
        auto& tab = powers[j];
        if (tab.empty())
            tab.push_back(Poly::one(tf, tn));
        while (tab.size() <= e)
            tab.push_back(tab.back() * images[j]);
        return tab[e];
    };

    Poly acc(tf, tn);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(tf, tn, c);
        for (size_t j = 0; j < nvars_; ++j)
            if (m[j] > 0)
                term = term * power_of(j, m[j]);
        acc = acc + term;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return f_ == o.f_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string Poly::str(const std::vector<std::string>& names, std::string_view sep) const {
    if (names.size() != nvars_)
        throw std::invalid_argument("Poly::str: name list length mismatch");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first)
            os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || m.degree() == 0) {
            os << c;
            printed = true;
        }
        for (size_t j = 0; j < nvars_; ++j) {
            if (m[j] == 0)
                continue;
            if (printed)
                os << sep;
            printed = true;
            os << names[j];
            if (m[j] > 1)
                os << "^" << m[j];
        }
    }
    return os.str();
}

std::string Poly::str_x() const { return str(default_var_names("x", nvars_, 1)); }

std::string Poly::term_form() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first)
            os << " + ";
        first = false;
        os << c << ":";
        for (size_t j = 0; j < nvars_; ++j) {
            if (j)
                os << ",";
            os << m[j];
        }
    }
    return os.str();
}

namespace {

void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
        ++pos;
}

uint64_t parse_uint(std::string_view s, size_t& pos, const char* what) {
    skip_ws(s, pos);
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + pos)
        throw std::invalid_argument(std::string("Poly::parse_term_form: expected ") + what +
                                    " at offset " + std::to_string(pos));
    pos = static_cast<size_t>(ptr - s.data());
    return v;
}

}  // namespace

Poly Poly::parse_term_form(const PrimeField& f, size_t nvars, std::string_view text) {
    Poly r(f, nvars);
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '0') {
        size_t save = pos;
        ++pos;
        skip_ws(text, pos);
        if (pos == text.size())
            return r;
        pos = save;
    }
    while (true) {
        uint64_t c = parse_uint(text, pos, "coefficient");
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ':')
            throw std::invalid_argument("Poly::parse_term_form: expected ':' at offset " +
                                        std::to_string(pos));
        ++pos;
        Monomial m(nvars);
        for (size_t j = 0; j < nvars; ++j) {
            if (j) {
                skip_ws(text, pos);
                if (pos >= text.size() || text[pos] != ',')
                    throw std::invalid_argument(
                        "Poly::parse_term_form: expected ',' at offset " + std::to_string(pos));
                ++pos;
            }
            m[j] = parse_uint(text, pos, "exponent");
        }
        r.add_term(m, f.reduce(c));
        skip_ws(text, pos);
        if (pos == text.size())
            break;
        if (text[pos] != '+')
            throw std::invalid_argument("Poly::parse_term_form: expected '+' at offset " +
                                        std::to_string(pos));
        ++pos;
    }
    return r;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        arr.push_back({c, m.exponents()});
    }
    return arr;
}

Poly Poly::from_json(const PrimeField& f, size_t nvars, const nlohmann::json& j) {
    Poly r(f, nvars);
    for (const auto& entry : j) {
        uint32_t c = f.reduce(entry.at(0).get<uint64_t>());
        std::vector<uint64_t> exps = entry.at(1).get<std::vector<uint64_t>>();
        if (exps.size() != nvars)
            throw std::invalid_argument("Poly::from_json: exponent tuple length mismatch");
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

}  // namespace dickson
