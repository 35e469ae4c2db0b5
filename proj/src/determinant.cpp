#include "dickson/determinant.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dickson/util.hpp"

namespace dickson {

namespace {

// det over the columns named by mask, expanding along row r = n - popcount(mask).
Poly cofactor(const std::vector<std::vector<Poly>>& m, uint64_t mask,
              std::unordered_map<uint64_t, Poly>& memo, const Poly& one) {
    if (mask == 0)
        return one;
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;

    std::size_t n = m.size();
    std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Poly acc(one.field(), one.nvars());
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        uint64_t bit = uint64_t{1} << col;
        if (!(mask & bit))
            continue;
        const Poly& entry = m[row][col];
        if (!entry.is_zero()) {
            Poly sub = cofactor(m, mask & ~bit, memo, one);
            Poly contrib = entry * sub;
            acc = negate ? acc - contrib : acc + contrib;
        }
        negate = !negate;
    }
    memo.emplace(mask, acc);
    return acc;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

Poly matrix_determinant(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 0)
        throw std::invalid_argument("matrix_determinant: empty matrix");
    if (n > 63)
        throw std::invalid_argument("matrix_determinant: dimension too large");
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("matrix_determinant: matrix not square");

    Poly one = Poly::one(m[0][0].field(), m[0][0].nvars());
    std::unordered_map<uint64_t, Poly> memo;
    uint64_t full = (n == 63) ? ~uint64_t{0} >> 1 : (uint64_t{1} << n) - 1;
    return cofactor(m, full, memo, one);
}

Poly dickson_determinant(const PrimeField& f, std::size_t n, std::span<const uint32_t> exps) {
    if (exps.size() != n)
        throw std::invalid_argument("dickson_determinant: need n row exponents");
    for (std::size_t k = 1; k < n; ++k)
        if (exps[k] <= exps[k - 1])
            throw std::invalid_argument("dickson_determinant: exponents must be strictly increasing");
    if (n == 0)
        throw std::invalid_argument("dickson_determinant: n must be positive");

    std::vector<std::vector<Poly>> m(n, std::vector<Poly>());
    for (std::size_t k = 0; k < n; ++k) {
        uint64_t q = checked_pow(f.p(), exps[k]);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<uint64_t> e(n, 0);
            e[j] = q;
            m[k].push_back(Poly::monomial(f, Monomial(std::move(e)), 1));
        }
    }
    return matrix_determinant(m);
}

Poly determinant_leibniz(const PrimeField& f, std::size_t n, std::span<const uint32_t> exps) {
    if (exps.size() != n)
        throw std::invalid_argument("determinant_leibniz: need n row exponents");
    if (n == 0)
        throw std::invalid_argument("determinant_leibniz: n must be positive");

    std::vector<uint64_t> rowpow(n);
    for (std::size_t k = 0; k < n; ++k)
        rowpow[k] = checked_pow(f.p(), exps[k]);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    Poly acc(f, n);
    do {
        std::vector<uint64_t> e(n, 0);
        for (std::size_t k = 0; k < n; ++k)
            e[perm[k]] += rowpow[k];
        uint32_t c = permutation_sign(perm) == 1 ? 1 : f.neg(1);
        acc.add_term(Monomial(std::move(e)), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace dickson
