#include "dickson/linalg.hpp"

#include <stdexcept>

namespace dickson {

namespace {

// Eliminate below pivots, recording pivot columns. Returns pivot rows/cols.
std::vector<std::pair<size_t, size_t>> forward_eliminate(const PrimeField& f, MatFp& m,
                                                         std::vector<uint32_t>* rhs) {
    std::vector<std::pair<size_t, size_t>> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows)
            continue;
        if (sel != row) {
            for (size_t c = col; c < m.cols; ++c)
                std::swap(m.at(sel, c), m.at(row, c));
            if (rhs)
                std::swap((*rhs)[sel], (*rhs)[row]);
        }
        uint32_t inv = f.inv(m.at(row, col));
        for (size_t c = col; c < m.cols; ++c)
            m.at(row, c) = f.mul(m.at(row, c), inv);
        if (rhs)
            (*rhs)[row] = f.mul((*rhs)[row], inv);
        for (size_t r = row + 1; r < m.rows; ++r) {
            uint32_t factor = m.at(r, col);
            if (factor == 0)
                continue;
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
            if (rhs)
                (*rhs)[r] = f.sub((*rhs)[r], f.mul(factor, (*rhs)[row]));
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank_mod_p(const PrimeField& f, MatFp m) {
    return forward_eliminate(f, m, nullptr).size();
}

SolveOutcome solve_mod_p(const PrimeField& f, MatFp A, std::vector<uint32_t> b) {
    if (b.size() != A.rows)
        throw std::invalid_argument("solve_mod_p: rhs length mismatch");
    auto pivots = forward_eliminate(f, A, &b);

    SolveOutcome out;
    // Zero rows with nonzero rhs mean the system is inconsistent.
    for (size_t r = pivots.size(); r < A.rows; ++r)
        if (b[r] != 0)
            return out;

    out.consistent = true;
    out.x.assign(A.cols, 0);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [row, col] = *it;
        uint32_t v = b[row];
        for (size_t c = col + 1; c < A.cols; ++c)
            if (A.at(row, c) != 0)
                v = f.sub(v, f.mul(A.at(row, c), out.x[c]));
        out.x[col] = v;
    }
    return out;
}

}  // namespace dickson
