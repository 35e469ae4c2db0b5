#include "dickson/milnor.hpp"

#include <stdexcept>

#include "dickson/util.hpp"

namespace dickson {

Poly st_delta(const Poly& g, uint32_t i) {
    if (i == 0)
        throw std::invalid_argument("st_delta: i must be at least 1");
    const PrimeField& f = g.field();
    uint64_t pi = checked_pow(f.p(), i);
    Poly r(f, g.nvars());
    for (const auto& [m, c] : g.terms()) {
        for (size_t j = 0; j < g.nvars(); ++j) {
            if (m[j] == 0)
                continue;
            uint32_t factor = f.reduce(m[j]);
            if (factor == 0)
                continue;
            Monomial t = m;
            t[j] = checked_add(t[j] - 1, pi);
            r.add_term(t, f.mul(c, factor));
        }
    }
    return r;
}

Poly st_iterate(const Poly& g, uint32_t i, uint32_t m) {
    Poly r = g;
    for (uint32_t k = 0; k < m; ++k)
        r = st_delta(r, i);
    return r;
}

}  // namespace dickson
