#ifndef REFLEX_REFLECTION_HPP
#define REFLEX_REFLECTION_HPP

#include <string>
#include <vector>

#include "reflex/linalg.hpp"

namespace reflex {

/// A generalized reflection s together with its extracted data:
/// s v = v + f(v) alpha, s alpha = lambda alpha, lambda != 1.
template <ExactField F>
struct ReflectionGenerator {
    std::string name;
    Matrix<F> matrix;
    Vector<F> alpha;
    F lambda;
    Vector<F> functional;  // f as a row of coefficients: f(v) = sum functional[j] * v[j]
    std::vector<Vector<F>> hyperplane;

    std::size_t dim() const noexcept { return matrix.rows(); }

    F apply_functional(const Vector<F>& v) const {
        F s(0);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!functional[j].is_zero()) s += functional[j] * v[j];
        return s;
    }
};

template <ExactField F>
Vector<F> normalize_leading(Vector<F> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return scaled(std::move(v), x.inverse());
    return v;
}

/// Checks that m is an invertible generalized reflection and extracts its
/// data. alpha is normalized so its first nonzero entry is 1.
template <ExactField F>
ReflectionGenerator<F> validate_reflection(const Matrix<F>& m, std::string name = "s") {
    using Kind = ReflectionError::Kind;
    if (!m.is_square())
        throw ReflectionError(Kind::NotSquare, name + ": generator matrix is not square");
    const std::size_t n = m.rows();
    if (determinant(m).is_zero())
        throw ReflectionError(Kind::NotInvertible, name + ": generator matrix is singular");
    const Matrix<F> shifted = m - Matrix<F>::identity(n);
    const std::size_t r = rank(shifted);
    if (r != 1)
        throw ReflectionError(Kind::NotRankOne,
                              name + ": rank(s - I) = " + std::to_string(r) + ", expected 1");

    ReflectionGenerator<F> g;
    g.name = std::move(name);
    g.matrix = m;
    for (std::size_t j = 0; j < n; ++j) {
        auto col = shifted.column(j);
        if (!is_zero_vector<F>(col)) {
            g.alpha = normalize_leading(std::move(col));
            break;
        }
    }
    std::size_t lead = 0;
    while (g.alpha[lead].is_zero()) ++lead;
    // shifted = alpha * f^T and alpha[lead] == 1
    g.functional = shifted.row(lead);
    const F f_alpha = g.apply_functional(g.alpha);
    if (f_alpha.is_zero())
        throw ReflectionError(Kind::NotDiagonalizable,
                              g.name + ": transvection (f(alpha) = 0), not diagonalizable");
    g.lambda = F(1) + f_alpha;
    g.hyperplane = kernel_basis(Matrix<F>(1, n, g.functional));
    return g;
}

/// Same reflection with alpha' = c alpha and f' = f / c.
template <ExactField F>
ReflectionGenerator<F> rescale_reflection_vector(ReflectionGenerator<F> g, const F& c) {
    if (c.is_zero()) throw InputError("cannot rescale a reflection vector by zero");
    g.alpha = scaled(std::move(g.alpha), c);
    g.functional = scaled(std::move(g.functional), c.inverse());
    return g;
}

/// Replaces alpha by v, which must be a nonzero multiple of it.
template <ExactField F>
ReflectionGenerator<F> with_reflection_vector(ReflectionGenerator<F> g, const Vector<F>& v) {
    auto c = proportionality(v, g.alpha);
    if (!c || c->is_zero())
        throw InputError(g.name + ": vector is not a reflection vector of this generator");
    return rescale_reflection_vector(std::move(g), *c);
}

/// A finite generating set acting by reflections on F^n.
/// Relations of the group are never recorded; only the matrices matter.
template <ExactField F>
class ReflectionRep {
public:
    ReflectionRep() = default;

    ReflectionRep(FieldContext field, std::vector<ReflectionGenerator<F>> gens)
        : field_(field), gens_(std::move(gens)) {
        if (gens_.empty()) throw InputError("a reflection representation needs at least one generator");
        dim_ = gens_.front().dim();
        for (const auto& g : gens_)
            if (g.dim() != dim_) throw InputError("generators act on spaces of different dimension");
    }

    /// Validates every matrix as a reflection.
    static ReflectionRep from_matrices(FieldContext field, const std::vector<Matrix<F>>& matrices,
                                       std::vector<std::string> names = {}) {
        std::vector<ReflectionGenerator<F>> gens;
        for (std::size_t i = 0; i < matrices.size(); ++i) {
            std::string name = i < names.size() ? names[i] : "s" + std::to_string(i);
            gens.push_back(validate_reflection(matrices[i], std::move(name)));
        }
        return ReflectionRep(field, std::move(gens));
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const FieldContext& field() const noexcept { return field_; }
    const std::vector<ReflectionGenerator<F>>& generators() const noexcept { return gens_; }
    const ReflectionGenerator<F>& generator(std::size_t i) const { return gens_.at(i); }

    std::vector<Matrix<F>> matrices() const {
        std::vector<Matrix<F>> out;
        for (const auto& g : gens_) out.push_back(g.matrix);
        return out;
    }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(g.name);
        return out;
    }
    std::vector<Vector<F>> alphas() const {
        std::vector<Vector<F>> out;
        for (const auto& g : gens_) out.push_back(g.alpha);
        return out;
    }

    ReflectionRep with_generator(std::size_t i, ReflectionGenerator<F> g) const {
        ReflectionRep copy = *this;
        copy.gens_.at(i) = std::move(g);
        return copy;
    }

private:
    FieldContext field_;
    std::size_t dim_ = 0;
    std::vector<ReflectionGenerator<F>> gens_;
};

/// x_{ji} = f_i(alpha_j): the coefficient in s_i alpha_j = alpha_j + x_{ji} alpha_i.
template <ExactField F>
F interaction_coefficient(const ReflectionRep<F>& rep, std::size_t j, std::size_t i) {
    if (i == j) throw InputError("interaction coefficient needs distinct indices");
    return rep.generator(i).apply_functional(rep.generator(j).alpha);
}

/// Table t[j][i] = x_{ji}; diagonal entries are left zero.
template <ExactField F>
std::vector<std::vector<F>> interaction_table(const ReflectionRep<F>& rep) {
    const std::size_t k = rep.size();
    std::vector<std::vector<F>> t(k, std::vector<F>(k, F(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            if (i != j) t[j][i] = interaction_coefficient(rep, j, i);
    return t;
}

template <ExactField F>
std::size_t reflection_vector_rank(const ReflectionRep<F>& rep) {
    return rank_of(rep.alphas(), rep.dim());
}

}  // namespace reflex

#endif
