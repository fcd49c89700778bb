#ifndef REFLEX_MODTHEORY_HPP
#define REFLEX_MODTHEORY_HPP

// Module-theoretic machinery over a matrix representation: enveloping
// algebras, spin-up, simplicity certificates, hom-spaces and a character
// oracle for finite groups.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflex/exterior.hpp"
#include "reflex/reflection.hpp"

namespace reflex {

/// A representation given only by generator matrices.
template <ExactField F>
struct MatrixRep {
    std::size_t dim = 0;
    std::vector<Matrix<F>> gens;

    std::size_t size() const noexcept { return gens.size(); }

    MatrixRep transposed() const {
        MatrixRep t{dim, {}};
        for (const auto& g : gens) t.gens.push_back(g.transpose());
        return t;
    }
};

template <ExactField F>
MatrixRep<F> as_matrix_rep(const ReflectionRep<F>& rep) {
    return {rep.dim(), rep.matrices()};
}

template <ExactField F>
MatrixRep<F> as_matrix_rep(const ExteriorRep<F>& ext) {
    return {ext.dim(), ext.matrices()};
}

namespace detail {

template <ExactField F>
Vector<F> vectorize(const Matrix<F>& m) {
    return m.data();
}

template <ExactField F>
Matrix<F> unvectorize(const Vector<F>& v, std::size_t rows, std::size_t cols) {
    return Matrix<F>(rows, cols, v);
}

}  // namespace detail

/// Spanning basis of the algebra generated by I and the generators.
template <ExactField F>
std::vector<Matrix<F>> enveloping_algebra(const MatrixRep<F>& rep) {
    const std::size_t n = rep.dim;
    IncrementalBasis<F> basis(n * n);
    std::vector<Matrix<F>> elements;
    auto id = Matrix<F>::identity(n);
    basis.insert(detail::vectorize(id));
    elements.push_back(id);
    for (std::size_t next = 0; next < elements.size(); ++next) {
        for (const auto& g : rep.gens) {
            Matrix<F> p = g * elements[next];
            if (basis.insert(detail::vectorize(p))) elements.push_back(std::move(p));
        }
    }
    return elements;
}

/// Smallest invariant subspace containing v.
template <ExactField F>
std::vector<Vector<F>> spin_up(const MatrixRep<F>& rep, const Vector<F>& v) {
    if (v.size() != rep.dim) throw InputError("spin_up: vector length mismatch");
    if (is_zero_vector<F>(v)) throw InputError("spin_up: zero vector");
    IncrementalBasis<F> basis(rep.dim);
    std::vector<Vector<F>> out{v};
    basis.insert(v);
    for (std::size_t next = 0; next < out.size(); ++next)
        for (const auto& g : rep.gens) {
            auto w = g * out[next];
            if (basis.insert(w)) out.push_back(std::move(w));
        }
    return out;
}

template <ExactField F>
bool is_invariant_subspace(const MatrixRep<F>& rep, const std::vector<Vector<F>>& basis) {
    for (const auto& g : rep.gens)
        for (const auto& v : basis)
            if (!in_span(basis, g * v)) return false;
    return true;
}

/// Hom-space of intertwiners X with X rho1(s) = rho2(s) X for every generator.
template <ExactField F>
struct HomSpace {
    std::size_t rows = 0;  // dim of target
    std::size_t cols = 0;  // dim of source
    std::vector<Matrix<F>> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

template <ExactField F>
HomSpace<F> hom_space(const MatrixRep<F>& source, const MatrixRep<F>& target) {
    if (source.size() != target.size()) throw InputError("hom_space: generator counts differ");
    const std::size_t p = target.dim;
    const std::size_t q = source.dim;
    const std::size_t unknowns = p * q;
    // Unknown X(a, b) sits at a * q + b.
    std::vector<Vector<F>> equations;
    IncrementalBasis<F> independent(unknowns);
    for (std::size_t s = 0; s < source.size(); ++s) {
        const auto& r1 = source.gens[s];
        const auto& r2 = target.gens[s];
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t c = 0; c < q; ++c) {
                Vector<F> eq(unknowns, F(0));
                for (std::size_t b = 0; b < q; ++b)
                    if (!r1(b, c).is_zero()) eq[a * q + b] += r1(b, c);
                for (std::size_t e = 0; e < p; ++e)
                    if (!r2(a, e).is_zero()) eq[e * q + c] -= r2(a, e);
                if (is_zero_vector<F>(eq)) continue;
                if (independent.insert(eq)) equations.push_back(std::move(eq));
            }
    }
    HomSpace<F> out{p, q, {}};
    if (equations.empty()) {
        for (std::size_t u = 0; u < unknowns; ++u)
            out.basis.push_back(detail::unvectorize(unit_vector<F>(unknowns, u), p, q));
        return out;
    }
    for (const auto& k : kernel_basis(Matrix<F>::from_rows(equations, unknowns)))
        out.basis.push_back(detail::unvectorize(k, p, q));
    return out;
}

template <ExactField F>
bool intertwines(const Matrix<F>& x, const MatrixRep<F>& source, const MatrixRep<F>& target) {
    for (std::size_t s = 0; s < source.size(); ++s)
        if (!(x * source.gens[s] == target.gens[s] * x)) return false;
    return true;
}

// ---- simplicity ------------------------------------------------------------

enum class Simplicity { Simple, NotSimple, Undetermined };

inline const char* to_string(Simplicity s) {
    switch (s) {
    case Simplicity::Simple: return "Simple";
    case Simplicity::NotSimple: return "NotSimple";
    case Simplicity::Undetermined: return "Undetermined";
    }
    return "?";
}

template <ExactField F>
struct SimplicityCertificate {
    Simplicity verdict = Simplicity::Undetermined;
    std::size_t dim = 0;
    std::size_t enveloping_dim = 0;
    std::size_t endomorphism_dim = 0;
    std::size_t radical_dim = 0;
    std::vector<Vector<F>> invariant_subspace;  // NotSimple only
    std::string method;

    bool simple() const noexcept { return verdict == Simplicity::Simple; }
};

/// Re-checks a NotSimple certificate: nonzero, proper and invariant.
template <ExactField F>
bool certificate_valid(const MatrixRep<F>& rep, const SimplicityCertificate<F>& cert) {
    if (cert.verdict != Simplicity::NotSimple) return true;
    const auto r = rank_of(cert.invariant_subspace, rep.dim);
    return r > 0 && r < rep.dim && is_invariant_subspace(rep, cert.invariant_subspace);
}

namespace detail {

/// Annihilator in F^n of a subspace of the dual (given as coordinate rows).
template <ExactField F>
std::vector<Vector<F>> annihilator(const std::vector<Vector<F>>& dual_basis, std::size_t n) {
    return kernel_basis(Matrix<F>::from_rows(dual_basis, n));
}

template <ExactField F>
std::optional<std::vector<Vector<F>>> proper_spin(const MatrixRep<F>& rep, const std::vector<Vector<F>>& seeds) {
    for (const auto& v : seeds) {
        auto w = spin_up(rep, v);
        if (w.size() < rep.dim) return canonical_basis(w, rep.dim);
    }
    return std::nullopt;
}

/// Kernel vectors of x spun under rep, and of x^T spun under the dual.
template <ExactField F>
std::optional<std::vector<Vector<F>>> search_with(const MatrixRep<F>& rep, const MatrixRep<F>& dual,
                                                  const Matrix<F>& x) {
    auto ker = kernel_basis(x);
    if (ker.empty() || ker.size() == rep.dim) return std::nullopt;
    if (auto w = proper_spin(rep, ker)) return w;
    if (auto w = proper_spin(dual, kernel_basis(x.transpose()))) return canonical_basis(annihilator(*w, rep.dim), rep.dim);
    return std::nullopt;
}

}  // namespace detail

/// Decides whether the representation is simple.
///
/// Full enveloping algebra means absolutely irreducible. Otherwise a nonzero
/// Jacobson radical (radical of the trace form, valid in characteristic 0)
/// yields an invariant subspace; failing that, kernels of algebra and
/// commutant elements are spun up on the module and its dual. A semisimple
/// module whose commutant is larger than the scalars but exposes no
/// submodule this way is reported as Undetermined.
template <ExactField F>
SimplicityCertificate<F> is_simple(const MatrixRep<F>& rep) {
    SimplicityCertificate<F> cert;
    const std::size_t n = rep.dim;
    cert.dim = n;
    const auto algebra = enveloping_algebra(rep);
    cert.enveloping_dim = algebra.size();
    const auto endo = hom_space(rep, rep);
    cert.endomorphism_dim = endo.dim();
    if (algebra.size() == n * n) {
        cert.verdict = Simplicity::Simple;
        cert.method = "enveloping algebra is the full matrix algebra";
        return cert;
    }

    // Jacobson radical = radical of (a, b) -> tr(ab) on the algebra.
    const std::size_t m = algebra.size();
    Matrix<F> gram(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) gram(a, b) = gram(b, a) = (algebra[a] * algebra[b]).trace();
    const auto rad = kernel_basis(gram);
    cert.radical_dim = rad.size();
    if (!rad.empty()) {
        std::vector<Vector<F>> image;
        for (const auto& c : rad) {
            Matrix<F> j(n, n);
            for (std::size_t a = 0; a < m; ++a)
                if (!c[a].is_zero()) j += algebra[a] * c[a];
            for (auto& col : j.columns())
                if (!is_zero_vector<F>(col)) image.push_back(std::move(col));
        }
        cert.verdict = Simplicity::NotSimple;
        cert.invariant_subspace = canonical_basis(image, n);
        cert.method = "image of the Jacobson radical";
        return cert;
    }

    const auto dual = rep.transposed();
    auto try_elements = [&](const std::vector<Matrix<F>>& elements, const char* method) {
        for (const auto& x : elements)
            if (auto w = detail::search_with(rep, dual, x)) {
                cert.verdict = Simplicity::NotSimple;
                cert.invariant_subspace = *w;
                cert.method = method;
                return true;
            }
        return false;
    };
    if (try_elements(endo.basis, "kernel of an endomorphism")) return cert;
    if (try_elements(algebra, "spin-up of kernels of algebra elements")) return cert;
    for (std::size_t a = 0; a + 1 < m; ++a)
        if (try_elements({algebra[a] - algebra[a + 1]}, "spin-up of kernels of algebra elements")) return cert;

    if (endo.dim() == 1) {
        // Semisimple with scalar commutant forces the full matrix algebra; unreachable.
        cert.verdict = Simplicity::Simple;
        cert.method = "semisimple with scalar endomorphisms";
        return cert;
    }
    cert.verdict = Simplicity::Undetermined;
    cert.method = "semisimple, endomorphism algebra of dimension " + std::to_string(endo.dim()) +
                  " without an exposed submodule";
    return cert;
}

template <ExactField F>
SimplicityCertificate<F> is_simple(const ReflectionRep<F>& rep) {
    return is_simple(as_matrix_rep(rep));
}

// ---- finite-group character oracle ---------------------------------------

struct CharacterOracleReport {
    bool closed = false;       // false: cap exceeded, inconclusive
    std::size_t order = 0;
    std::size_t cap = 0;
    std::vector<std::string> norms;                 // <chi_d, chi_d> per degree
    std::vector<std::vector<std::string>> inner;    // <chi_d, chi_e>
    std::vector<bool> irreducible;                  // <chi_d, chi_d> == 1
    std::vector<bool> algebra_simple;               // is_simple verdicts for the same degrees
    std::vector<std::vector<std::size_t>> hom_dims; // linear-algebra hom dimensions
    bool agrees = false;
};

/// Enumerates the group generated by the matrices, up to `cap` elements.
template <ExactField F>
std::optional<std::vector<Matrix<F>>> enumerate_group(const MatrixRep<F>& rep, std::size_t cap,
                                                      const FieldContext& field = {}) {
    auto key = [&](const Matrix<F>& m) {
        std::string s;
        for (const auto& x : m.data()) s += format_scalar(x, field) + ';';
        return s;
    };
    std::vector<Matrix<F>> elements{Matrix<F>::identity(rep.dim)};
    std::map<std::string, std::size_t> seen{{key(elements[0]), 0}};
    for (std::size_t next = 0; next < elements.size(); ++next)
        for (const auto& g : rep.gens) {
            Matrix<F> p = g * elements[next];
            auto k = key(p);
            if (seen.count(k)) continue;
            if (elements.size() >= cap) return std::nullopt;
            seen.emplace(std::move(k), elements.size());
            elements.push_back(std::move(p));
        }
    return elements;
}

/// Character inner products of all exterior powers, compared against
/// the linear-algebra verdicts (is_simple, hom_space).
template <ExactField F>
CharacterOracleReport finite_group_character_oracle(const ReflectionRep<F>& rep, std::size_t cap) {
    CharacterOracleReport out;
    out.cap = cap;
    const auto group = enumerate_group(as_matrix_rep(rep), cap, rep.field());
    if (!group) return out;
    out.closed = true;
    out.order = group->size();
    const std::size_t n = rep.dim();
    std::vector<std::vector<F>> chi(n + 1), chi_inv(n + 1);
    for (const auto& g : *group) {
        const auto ginv = inverse(g);
        for (std::size_t d = 0; d <= n; ++d) {
            chi[d].push_back(compound_matrix(g, d).trace());
            chi_inv[d].push_back(compound_matrix(ginv, d).trace());
        }
    }
    const F inv_order = F(Rational(1, static_cast<long>(out.order)));
    std::vector<std::vector<F>> ip(n + 1, std::vector<F>(n + 1, F(0)));
    for (std::size_t d = 0; d <= n; ++d)
        for (std::size_t e = 0; e <= n; ++e) {
            F s(0);
            for (std::size_t t = 0; t < out.order; ++t) s += chi[d][t] * chi_inv[e][t];
            ip[d][e] = s * inv_order;
        }
    std::vector<MatrixRep<F>> powers;
    for (std::size_t d = 0; d <= n; ++d) powers.push_back(as_matrix_rep(exterior_power(rep, d)));
    out.agrees = true;
    out.inner.assign(n + 1, std::vector<std::string>(n + 1));
    out.hom_dims.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t d = 0; d <= n; ++d) {
        out.norms.push_back(format_scalar(ip[d][d], rep.field()));
        const bool irr = ip[d][d] == F(1);
        out.irreducible.push_back(irr);
        const bool simple = is_simple(powers[d]).simple();
        out.algebra_simple.push_back(simple);
        if (irr != simple) out.agrees = false;
        for (std::size_t e = 0; e <= n; ++e) {
            out.inner[d][e] = format_scalar(ip[d][e], rep.field());
            if (e < d) {
                out.hom_dims[d][e] = out.hom_dims[e][d];
                continue;
            }
            out.hom_dims[d][e] = hom_space(powers[d], powers[e]).dim();
            // For irreducible constituents <chi_d, chi_e> = dim Hom in characteristic 0.
            if (irr && !(ip[d][e] == F(Rational(static_cast<long>(out.hom_dims[d][e]))))) out.agrees = false;
        }
    }
    return out;
}

}  // namespace reflex

#endif
