#ifndef REFLEX_EXTERIOR_HPP
#define REFLEX_EXTERIOR_HPP

// Exterior powers as compound matrices. The basis of the d-th power is
// e_{i_1} ^ ... ^ e_{i_d}, i_1 < ... < i_d, in lexicographic order; every
// coordinate is a d x d minor, so no separate sign convention exists.

#include <cstdint>
#include <utility>
#include <vector>

#include "reflex/reflection.hpp"

namespace reflex {

/// C(n, k); zero outside 0 <= k <= n.
inline std::uint64_t binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

using Subset = std::vector<std::size_t>;

/// All d-subsets of {0..n-1} as increasing tuples, lexicographic order.
inline std::vector<Subset> subsets(std::size_t n, std::size_t d) {
    std::vector<Subset> out;
    if (d > n) return out;
    Subset s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        std::size_t i = d;
        while (i > 0 && s[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < d; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

/// Position of an increasing tuple among all d-subsets of {0..n-1}.
inline std::size_t subset_rank(const Subset& s, std::size_t n) {
    const std::size_t d = s.size();
    std::size_t r = 0;
    std::size_t prev = 0;
    for (std::size_t pos = 0; pos < d; ++pos) {
        if (s[pos] >= n || (pos > 0 && s[pos] <= s[pos - 1]))
            throw InputError("subset is not strictly increasing within range");
        for (std::size_t v = (pos == 0 ? 0 : prev + 1); v < s[pos]; ++v)
            r += binomial(static_cast<long>(n - v - 1), static_cast<long>(d - pos - 1));
        prev = s[pos];
    }
    return r;
}

inline Subset subset_unrank(std::size_t r, std::size_t n, std::size_t d) {
    if (r >= binomial(static_cast<long>(n), static_cast<long>(d))) throw InputError("subset rank out of range");
    Subset s;
    std::size_t v = 0;
    for (std::size_t pos = 0; pos < d; ++pos) {
        while (true) {
            const auto block = binomial(static_cast<long>(n - v - 1), static_cast<long>(d - pos - 1));
            if (r < block) break;
            r -= block;
            ++v;
        }
        s.push_back(v++);
    }
    return s;
}

/// The d-th compound: entry (R, C) is the minor on rows R and columns C.
template <ExactField F>
Matrix<F> compound_matrix(const Matrix<F>& m, std::size_t d) {
    if (!m.is_square()) throw InputError("compound of a non-square matrix");
    const std::size_t n = m.rows();
    if (d > n) throw InputError("compound degree exceeds dimension");
    const auto subs = subsets(n, d);
    Matrix<F> out(subs.size(), subs.size());
    Matrix<F> minor(d, d);
    for (std::size_t r = 0; r < subs.size(); ++r)
        for (std::size_t c = 0; c < subs.size(); ++c) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) minor(i, j) = m(subs[r][i], subs[c][j]);
            out(r, c) = d == 0 ? F(1) : determinant(minor);
        }
    return out;
}

/// Coordinates of v_1 ^ ... ^ v_d in the subset basis.
template <ExactField F>
Vector<F> wedge_vector(const std::vector<Vector<F>>& vectors, std::size_t n) {
    for (const auto& v : vectors)
        if (v.size() != n) throw InputError("wedge: vector length mismatch");
    const std::size_t d = vectors.size();
    if (d > n) return {};
    const auto subs = subsets(n, d);
    Vector<F> out(subs.size(), F(0));
    Matrix<F> minor(d, d);
    for (std::size_t r = 0; r < subs.size(); ++r) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) minor(i, j) = vectors[j][subs[r][i]];
        out[r] = d == 0 ? F(1) : determinant(minor);
    }
    return out;
}

/// The representation on the d-th exterior power of a reflection representation.
template <ExactField F>
class ExteriorRep {
public:
    ExteriorRep(ReflectionRep<F> base, std::size_t d) : base_(std::move(base)), d_(d) {
        if (d_ > base_.dim()) throw InputError("exterior degree exceeds dimension");
        for (const auto& g : base_.generators()) matrices_.push_back(compound_matrix(g.matrix, d_));
    }

    const ReflectionRep<F>& base() const noexcept { return base_; }
    std::size_t degree() const noexcept { return d_; }
    std::size_t dim() const noexcept { return binomial(static_cast<long>(base_.dim()), static_cast<long>(d_)); }
    std::size_t size() const noexcept { return matrices_.size(); }
    const std::vector<Matrix<F>>& matrices() const noexcept { return matrices_; }
    const Matrix<F>& matrix(std::size_t i) const { return matrices_.at(i); }
    std::vector<Subset> basis_labels() const { return subsets(base_.dim(), d_); }

private:
    ReflectionRep<F> base_;
    std::size_t d_;
    std::vector<Matrix<F>> matrices_;
};

template <ExactField F>
ExteriorRep<F> exterior_power(const ReflectionRep<F>& rep, std::size_t d) {
    return ExteriorRep<F>(rep, d);
}

/// Fixed space of generator i on the exterior power; dimension C(n-1, d).
template <ExactField F>
std::vector<Vector<F>> eigenspace_plus(const ExteriorRep<F>& ext, std::size_t i) {
    return eigenspace(ext.matrix(i), F(1));
}

/// lambda_i-eigenspace of generator i on the exterior power; dimension C(n-1, d-1).
template <ExactField F>
std::vector<Vector<F>> eigenspace_minus(const ExteriorRep<F>& ext, std::size_t i) {
    return eigenspace(ext.matrix(i), ext.base().generator(i).lambda);
}

/// Intersection of the lambda-eigenspaces of the listed generators.
template <ExactField F>
std::vector<Vector<F>> intersect_minus(const ExteriorRep<F>& ext, const std::vector<std::size_t>& indices) {
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (indices[a] == indices[b]) throw InputError("intersect_minus: repeated generator index");
    const std::size_t dim = ext.dim();
    std::vector<Vector<F>> acc;
    for (std::size_t j = 0; j < dim; ++j) acc.push_back(unit_vector<F>(dim, j));
    for (auto i : indices) {
        if (acc.empty()) break;
        acc = intersect_spans(acc, eigenspace_minus(ext, i), dim);
    }
    return acc;
}

// ---- binomial rigidity ---------------------------------------------------

/// True iff C(n1-1, d1) = C(n2-1, d2) and C(n1-1, d1-1) = C(n2-1, d2-1).
/// Requires 1 <= d <= n - 1 on both sides.
inline bool binom_rigidity(long n1, long d1, long n2, long d2) {
    if (d1 < 1 || d1 > n1 - 1 || d2 < 1 || d2 > n2 - 1)
        throw InputError("binom_rigidity requires 1 <= d <= n - 1");
    return binomial(n1 - 1, d1) == binomial(n2 - 1, d2) && binomial(n1 - 1, d1 - 1) == binomial(n2 - 1, d2 - 1);
}

struct RigiditySolutions {
    std::vector<std::pair<long, long>> plus_matches;   // C(n2-1, d2) = C(n-1, d)
    std::vector<std::pair<long, long>> minus_matches;  // C(n2-1, d2-1) = C(n-1, d-1)
};

/// All (n2, d2) with 2 <= n2 <= n_max, 1 <= d2 <= n2 - 1 solving each equality on its own.
inline RigiditySolutions binom_rigidity_search(long n, long d, long n_max) {
    if (d < 1 || d > n - 1) throw InputError("binom_rigidity_search requires 1 <= d <= n - 1");
    RigiditySolutions out;
    const auto plus = binomial(n - 1, d);
    const auto minus = binomial(n - 1, d - 1);
    for (long n2 = 2; n2 <= n_max; ++n2)
        for (long d2 = 1; d2 <= n2 - 1; ++d2) {
            if (binomial(n2 - 1, d2) == plus) out.plus_matches.emplace_back(n2, d2);
            if (binomial(n2 - 1, d2 - 1) == minus) out.minus_matches.emplace_back(n2, d2);
        }
    return out;
}

/// Checks C(n-1, d) - C(n-1, d-1) = C(n, d) (1 - 2d/n) exactly over Q.
inline bool binom_difference_identity(long n, long d) {
    if (n < 1 || d < 0 || d > n) throw InputError("binom_difference_identity requires 0 <= d <= n, n >= 1");
    auto q = [](std::uint64_t v) { return Rational(mpq_class(mpz_class(std::to_string(v)))); };
    const Rational lhs = q(binomial(n - 1, d)) - q(binomial(n - 1, d - 1));
    const Rational rhs = q(binomial(n, d)) * (Rational(1) - Rational(2 * d, n));
    return lhs == rhs;
}

}  // namespace reflex

#endif
