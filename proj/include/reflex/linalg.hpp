#ifndef REFLEX_LINALG_HPP
#define REFLEX_LINALG_HPP

// Dense exact linear algebra: row reduction and everything built on it.
// Kernel and eigenspace bases are not canonical; compare spans with
// span_equal / canonical_basis, never raw vectors.

#include <optional>
#include <utility>
#include <vector>

#include "reflex/matrix.hpp"

namespace reflex {

template <ExactField F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form via Gauss-Jordan elimination.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const F inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Basis of {x : m x = 0}; size is cols - rank.
template <ExactField F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
    const auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<F> x(m.cols(), F(0));
        x[f] = F(1);
        for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = -rr.reduced(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// One solution of a x = b, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
    if (a.rows() != b.size()) throw InputError("solve: right-hand side length mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vector<F> x(a.cols(), F(0));
    for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, a.cols());
    return x;
}

/// Basis of ker(m - lambda I).
template <ExactField F>
std::vector<Vector<F>> eigenspace(const Matrix<F>& m, const F& lambda) {
    if (!m.is_square()) throw InputError("eigenspace of a non-square matrix");
    Matrix<F> shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    return kernel_basis(shifted);
}

template <ExactField F>
F determinant(Matrix<F> m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        const F inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const F factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

template <ExactField F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    const auto rr = rref(std::move(aug));
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw InputError("matrix is singular");
    return *std::move(inv);
}

// ---- subspaces given by spanning vectors -------------------------------

template <ExactField F>
std::size_t rank_of(const std::vector<Vector<F>>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(Matrix<F>::from_rows(vectors, dim));
}

/// Reduced echelon basis of the span; equal spans give equal bases.
template <ExactField F>
std::vector<Vector<F>> canonical_basis(const std::vector<Vector<F>>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    const auto rr = rref(Matrix<F>::from_rows(vectors, dim));
    std::vector<Vector<F>> out;
    for (std::size_t r = 0; r < rr.rank; ++r) out.push_back(rr.reduced.row(r));
    return out;
}

template <ExactField F>
bool span_equal(const std::vector<Vector<F>>& u, const std::vector<Vector<F>>& w, std::size_t dim) {
    return canonical_basis(u, dim) == canonical_basis(w, dim);
}

template <ExactField F>
bool in_span(const std::vector<Vector<F>>& basis, const Vector<F>& v) {
    if (is_zero_vector<F>(v)) return true;
    if (basis.empty()) return false;
    return solve(Matrix<F>::from_columns(basis, v.size()), v).has_value();
}

/// Basis of span(u) ∩ span(w).
template <ExactField F>
std::vector<Vector<F>> intersect_spans(const std::vector<Vector<F>>& u, const std::vector<Vector<F>>& w,
                                       std::size_t dim) {
    if (u.empty() || w.empty()) return {};
    Matrix<F> m(dim, u.size() + w.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = u[j][i];
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, u.size() + j) = -w[j][i];
    std::vector<Vector<F>> pieces;
    for (const auto& k : kernel_basis(m)) {
        Vector<F> v(dim, F(0));
        for (std::size_t j = 0; j < u.size(); ++j)
            if (!k[j].is_zero())
                for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * u[j][i];
        pieces.push_back(std::move(v));
    }
    return canonical_basis(pieces, dim);
}

/// Coordinates of v in the (independent) basis, or nullopt if v is outside the span.
template <ExactField F>
std::optional<Vector<F>> coordinates(const std::vector<Vector<F>>& basis, const Vector<F>& v) {
    if (basis.empty()) return is_zero_vector<F>(v) ? std::optional<Vector<F>>(Vector<F>{}) : std::nullopt;
    return solve(Matrix<F>::from_columns(basis, v.size()), v);
}

/// Extends an independent set to a basis of F^dim using standard vectors.
template <ExactField F>
std::vector<Vector<F>> complete_basis(std::vector<Vector<F>> independent, std::size_t dim) {
    for (std::size_t i = 0; i < dim && independent.size() < dim; ++i) {
        auto e = unit_vector<F>(dim, i);
        auto trial = independent;
        trial.push_back(e);
        if (rank_of(trial, dim) == trial.size()) independent = std::move(trial);
    }
    return independent;
}

/// c with v = c * w, if one exists (w must be nonzero).
template <ExactField F>
std::optional<F> proportionality(const Vector<F>& v, const Vector<F>& w) {
    if (v.size() != w.size()) throw InputError("proportionality: length mismatch");
    std::optional<F> ratio;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) {
            if (!v[i].is_zero()) return std::nullopt;
            continue;
        }
        F r = v[i] / w[i];
        if (!ratio) ratio = r;
        else if (!(*ratio == r)) return std::nullopt;
    }
    return ratio;
}

/// c with a = c * b for matrices (b nonzero).
template <ExactField F>
std::optional<F> matrix_proportionality(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    return proportionality<F>(a.data(), b.data());
}

/// Growing linearly independent set with fast membership tests.
/// Rows are kept normalized at their pivot and reduced in insertion order.
template <ExactField F>
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Vector<F>>& originals() const noexcept { return originals_; }

    Vector<F> reduce(Vector<F> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
        }
        return v;
    }

    bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

    /// Adds v if it is independent of the current set; returns whether it was added.
    bool insert(const Vector<F>& v) {
        if (v.size() != dim_) throw InputError("IncrementalBasis: length mismatch");
        Vector<F> red = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && red[p].is_zero()) ++p;
        if (p == dim_) return false;
        red = scaled(std::move(red), red[p].inverse());
        rows_.push_back(std::move(red));
        pivots_.push_back(p);
        originals_.push_back(v);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Vector<F>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Vector<F>> originals_;
};

}  // namespace reflex

#endif
