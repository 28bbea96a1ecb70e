#pragma once

// Small brute-force reference computations used to fix expected values
// independently of the library's sparse elimination code.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;

// Plain Gaussian elimination on a dense copy.
inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

// Exponent pairs (i, j) with i + j < n, for k[x, y].
inline std::vector<std::pair<unsigned, unsigned>> monomials_below(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned d = 0; d < n; ++d)
        for (unsigned i = 0; i <= d; ++i) out.emplace_back(i, d - i);
    return out;
}

// Numerical semigroup membership by dynamic programming over [0, limit].
inline std::vector<bool> semigroup_members(unsigned a, unsigned b, unsigned limit) {
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (unsigned s = 1; s <= limit; ++s) in[s] = (s >= a && in[s - a]) || (s >= b && in[s - b]);
    return in;
}

inline std::vector<unsigned> semigroup_gaps(unsigned a, unsigned b) {
    unsigned limit = a * b;
    auto in = semigroup_members(a, b, limit);
    std::vector<unsigned> gaps;
    for (unsigned s = 0; s <= limit; ++s)
        if (!in[s]) gaps.push_back(s);
    return gaps;
}

}  // namespace oracle
