#ifndef REEBCERT_TESTS_ORACLES_HPP
#define REEBCERT_TESTS_ORACLES_HPP

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#include <vector>

#include "reebcert/matrix.hpp"

namespace reebcert::oracles {

// Plain cofactor expansion along the first row.
inline Int det_cofactor(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * det_cofactor(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

inline void subsets_of(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        out.push_back(pick);
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < n) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
        }
        if (i == static_cast<std::size_t>(-1)) return;
    }
}

// Invariant factors via determinantal divisors: d_i = gcd(i-minors) /
// gcd((i-1)-minors), with zeros once the minors vanish. Exponential, test
// sizes only.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t rmax = std::min(m, n);
    std::vector<Int> divisors;  // gcd of all i x i minors, i = 1..
    for (std::size_t i = 1; i <= rmax; ++i) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets_of(m, i, row_sets);
        subsets_of(n, i, col_sets);
        Int g = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                IntMatrix sub(i, i);
                for (std::size_t r = 0; r < i; ++r)
                    for (std::size_t c = 0; c < i; ++c) sub.at(r, c) = a.at(rs[r], cs[c]);
                g = gcd(g, det_cofactor(sub));
            }
        divisors.push_back(abs(g));
        if (g == 0) break;
    }
    std::vector<Int> factors;
    Int prev = 1;
    for (const Int& d : divisors) {
        if (d == 0) break;
        factors.push_back(d / prev);
        prev = d;
    }
    while (factors.size() < rmax) factors.push_back(0);
    return factors;
}

}  // namespace reebcert::oracles

#endif
