#pragma once

// Shared test helpers: seeded generators and small independent oracles.
// Oracles here deliberately avoid the library's elimination code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "reflex/families.hpp"

namespace reflex::testkit {

using Q = Rational;

inline Q rand_q(std::mt19937_64& rng, long lo = -4, long hi = 4, long max_den = 3) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
    return Q(num(rng), den(rng));
}

inline Matrix<Q> rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Matrix<Q> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_q(rng);
    return m;
}

inline Vector<Q> rand_vector(std::mt19937_64& rng, std::size_t n) {
    Vector<Q> v(n);
    for (auto& x : v) x = rand_q(rng);
    return v;
}

/// Random rank-deficient matrix: product of r x k and k x c factors.
inline Matrix<Q> rand_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return rand_matrix(rng, r, k) * rand_matrix(rng, k, c);
}

/// Determinant by the Leibniz permutation expansion.
template <class F>
F leibniz_det(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    F total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (p[a] > p[b]) ++inversions;
        F term(1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Pascal-triangle binomial, independent of the library's multiplicative formula.
inline std::uint64_t pascal(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::vector<std::vector<std::uint64_t>> rows{{1}};
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<std::uint64_t> next(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Naive subset enumeration via bitmasks, sorted lexicographically.
inline std::vector<Subset> mask_subsets(std::size_t n, std::size_t d) {
    std::vector<Subset> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) continue;
        Subset s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
Matrix<F> power(const Matrix<F>& m, int e) {
    auto r = Matrix<F>::identity(m.rows());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

/// Smallest e >= 1 with m^e = I, or 0 if none up to `cap`.
template <class F>
int matrix_order(const Matrix<F>& m, int cap = 64) {
    auto p = m;
    const auto id = Matrix<F>::identity(m.rows());
    for (int e = 1; e <= cap; ++e) {
        if (p == id) return e;
        p = p * m;
    }
    return 0;
}

}  // namespace reflex::testkit
