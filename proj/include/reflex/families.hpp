#ifndef REFLEX_FAMILIES_HPP
#define REFLEX_FAMILIES_HPP

// Built-in reflection representations and synthetic conjugated copies.
// All families are written in the basis of their reflection vectors:
// generator i is I + e_i f_i^T with f_i given row by row.

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "reflex/modtheory.hpp"
#include "reflex/rep_io.hpp"

namespace reflex {

namespace detail {

/// Generators I + e_i row_i^T from the rows of a (generalized) Cartan matrix.
template <ExactField F>
ReflectionRep<F> from_functionals(const FieldContext& field, const std::vector<Vector<F>>& rows,
                                  const std::vector<std::string>& names) {
    const std::size_t n = rows.size();
    std::vector<Matrix<F>> mats;
    for (std::size_t i = 0; i < n; ++i) {
        auto m = Matrix<F>::identity(n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) += rows[i][j];
        mats.push_back(std::move(m));
    }
    return ReflectionRep<F>::from_matrices(field, mats, names);
}

}  // namespace detail

/// The (n+1)-dimensional representation V_x of the affine Weyl group of type
/// A~_n in the basis alpha_0..alpha_n.
template <ExactField F = Rational>
ReflectionRep<F> affine_An_Vx(std::size_t n, const F& x, FieldContext field = {}) {
    if (n < 2) throw InputError("affine family needs n >= 2");
    if (x.is_zero()) throw InputError("affine family parameter x must be nonzero");
    const std::size_t dim = n + 1;
    std::vector<Vector<F>> rows(dim, Vector<F>(dim, F(0)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) {
        rows[i][i] = F(-2);
        if (i > 0) rows[i][i - 1] = F(1);
        if (i + 1 < dim) rows[i][i + 1] = F(1);
        names.push_back("s" + std::to_string(i));
    }
    rows[0][n] = x;            // s_0 alpha_n = alpha_n + x alpha_0
    rows[n][0] = x.inverse();  // s_n alpha_0 = alpha_0 + (1/x) alpha_n
    return detail::from_functionals(field, rows, names);
}

/// Standard (n-1)-dimensional representation of S_n on simple roots.
template <ExactField F = Rational>
ReflectionRep<F> symmetric_group_standard(std::size_t n, FieldContext field = {}) {
    if (n < 2) throw InputError("symmetric group needs n >= 2");
    const std::size_t dim = n - 1;
    std::vector<Vector<F>> rows(dim, Vector<F>(dim, F(0)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) {
        rows[i][i] = F(-2);
        if (i > 0) rows[i][i - 1] = F(1);
        if (i + 1 < dim) rows[i][i + 1] = F(1);
        names.push_back("s" + std::to_string(i + 1));
    }
    return detail::from_functionals(field, rows, names);
}

/// Two-dimensional reflection representation of the dihedral group of
/// order 2m: s1 alpha2 = alpha2 + alpha1, s2 alpha1 = alpha1 + 4cos^2(pi/m) alpha2.
/// Rational for m in {3, 4, 6}; m = 5 lives in Q(sqrt 5).
template <ExactField F = Rational>
ReflectionRep<F> dihedral(long m) {
    F b(0);
    FieldContext field;
    if constexpr (std::is_same_v<F, Rational>) {
        if (m == 3) b = F(1);
        else if (m == 4) b = F(2);
        else if (m == 6) b = F(3);
        else throw InputError("rational dihedral representation needs m in {3, 4, 6}");
    } else {
        if (m != 5) throw InputError("quadratic dihedral representation is provided for m = 5 only");
        field = FieldContext::quadratic(5);
        b = F(Rational(3, 2), Rational(1, 2), 5);  // (3 + sqrt 5) / 2
    }
    std::vector<Vector<F>> rows{{F(-2), F(1)}, {b, F(-2)}};
    return detail::from_functionals(field, rows, {"s1", "s2"});
}

/// Two-dimensional example with three reflections whose associated digraph
/// is a directed 3-cycle (weakly but not strongly connected on any two vertices).
inline ReflectionRep<Rational> three_cycle_example() {
    using Q = Rational;
    std::vector<Matrix<Q>> mats{
        {{Q(-1), Q(0)}, {Q(0), Q(1)}},
        {{Q(1), Q(0)}, {Q(2), Q(-1)}},
        {{Q(1), Q(-2)}, {Q(0), Q(-1)}},
    };
    auto rep = ReflectionRep<Q>::from_matrices(FieldContext::rational(), mats, {"s1", "s2", "s3"});
    return rep.with_generator(2, with_reflection_vector(rep.generator(2), Vector<Q>{Q(-1), Q(-1)}));
}

/// Induced representation on V / U, in coordinates of a complement of U.
/// Generators are re-validated; a generator that stops being a reflection
/// raises ReflectionError naming it.
template <ExactField F>
ReflectionRep<F> quotient_rep(const ReflectionRep<F>& rep, const std::vector<Vector<F>>& subspace) {
    const std::size_t n = rep.dim();
    const auto u = canonical_basis(subspace, n);
    if (u.empty()) return rep;
    if (!is_invariant_subspace(as_matrix_rep(rep), u)) throw InputError("quotient: subspace is not invariant");
    if (u.size() == n) throw InputError("quotient by the whole space");
    const auto full = complete_basis(u, n);
    const auto p = Matrix<F>::from_columns(full, n);
    const auto p_inv = inverse(p);
    const std::size_t m = u.size();
    const std::size_t q = n - m;
    std::vector<Matrix<F>> mats;
    for (const auto& g : rep.generators()) {
        const auto c = p_inv * g.matrix * p;
        Matrix<F> block(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) block(i, j) = c(m + i, m + j);
        mats.push_back(std::move(block));
    }
    return ReflectionRep<F>::from_matrices(rep.field(), mats, rep.names());
}

/// Generators T s T^-1 with reflection vectors scalings_i * T alpha_i.
template <ExactField F>
ReflectionRep<F> conjugated_copy(const ReflectionRep<F>& rep, const Matrix<F>& t, const std::vector<F>& scalings) {
    if (!t.is_square() || t.rows() != rep.dim()) throw InputError("conjugating matrix has the wrong shape");
    if (scalings.size() != rep.size()) throw InputError("one scaling per generator is required");
    auto t_inv = try_inverse(t);
    if (!t_inv) throw InputError("conjugating matrix is singular");
    std::vector<ReflectionGenerator<F>> gens;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        const auto& g = rep.generator(i);
        if (scalings[i].is_zero()) throw InputError("scalings must be nonzero");
        auto h = validate_reflection(t * g.matrix * *t_inv, g.name);
        gens.push_back(with_reflection_vector(std::move(h), scaled(t * g.alpha, scalings[i])));
    }
    return ReflectionRep<F>(rep.field(), std::move(gens));
}

/// Multiplies each reflection vector by the matching scaling; matrices unchanged.
template <ExactField F>
ReflectionRep<F> rescale_reflection_vectors(const ReflectionRep<F>& rep, const std::vector<F>& scalings) {
    if (scalings.size() != rep.size()) throw InputError("one scaling per generator is required");
    ReflectionRep<F> out = rep;
    for (std::size_t i = 0; i < rep.size(); ++i)
        out = out.with_generator(i, rescale_reflection_vector(rep.generator(i), scalings[i]));
    return out;
}

// ---- seeded randomness -----------------------------------------------------

/// Nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
inline Rational random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 5), den(1, 4), sign(0, 1);
    return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

/// Random invertible matrix with small integer entries (rejection sampling).
template <ExactField F = Rational>
Matrix<F> random_invertible_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Matrix<F> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = F(Rational(entry(rng)));
        if (!determinant(m).is_zero()) return m;
    }
}

template <ExactField F = Rational>
std::vector<F> random_scalings(std::size_t k, std::mt19937_64& rng) {
    std::vector<F> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(F(random_nonzero_rational(rng)));
    return out;
}

template <ExactField F>
struct ConjugatedPair {
    ReflectionRep<F> copy;
    Matrix<F> t;
    std::vector<F> scalings;
};

template <ExactField F>
ConjugatedPair<F> random_conjugated_copy(const ReflectionRep<F>& rep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto t = random_invertible_matrix<F>(rep.dim(), rng);
    auto s = random_scalings<F>(rep.size(), rng);
    return {conjugated_copy(rep, t, s), std::move(t), std::move(s)};
}

// ---- family descriptions ---------------------------------------------------------

inline constexpr const char* kFamilyHeader = "reflex-family v1";

/// Parameters naming a built-in representation.
/// family: affineA | symmetric | dihedral | three-cycle | custom-file | conjugate
/// (conjugate applies a seeded random conjugation to `base`).
struct FamilySpec {
    std::string family;
    std::string base;        // conjugate only
    long n = 2;
    long m = 4;
    Rational x{2};
    std::uint64_t seed = 1;
    std::vector<Rational> scalings;  // optional reflection-vector rescaling
    std::string path;        // custom-file

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline bool family_is_quadratic(const FamilySpec& spec) {
    const auto& tag = spec.family == "conjugate" ? spec.base : spec.family;
    return tag == "dihedral" && spec.m == 5;
}

inline FamilySpec parse_family_spec(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty() || lines[0].second != kFamilyHeader)
        throw ParseError("missing header '" + std::string(kFamilyHeader) + "'");
    FamilySpec spec;
    auto to_long = [](const std::string& s, std::size_t no) {
        try {
            std::size_t used = 0;
            const long v = std::stol(s, &used);
            if (used != s.size()) throw ParseError("");
            return v;
        } catch (const std::exception&) {
            throw detail::line_error(no, "expected an integer, got '" + s + "'");
        }
    };
    for (std::size_t p = 1; p < lines.size(); ++p) {
        const auto& [no, line] = lines[p];
        const auto toks = detail::split_ws(line);
        if (toks.size() < 2) throw detail::line_error(no, "expected 'key value'");
        const auto& key = toks[0];
        if (key != "scalings" && toks.size() != 2) throw detail::line_error(no, "expected 'key value'");
        try {
            if (key == "family") spec.family = toks[1];
            else if (key == "base") spec.base = toks[1];
            else if (key == "n") spec.n = to_long(toks[1], no);
            else if (key == "m") spec.m = to_long(toks[1], no);
            else if (key == "x") spec.x = Rational::parse(toks[1]);
            else if (key == "seed") spec.seed = static_cast<std::uint64_t>(to_long(toks[1], no));
            else if (key == "path") spec.path = toks[1];
            else if (key == "scalings")
                for (std::size_t i = 1; i < toks.size(); ++i) spec.scalings.push_back(Rational::parse(toks[i]));
            else throw detail::line_error(no, "unknown key '" + key + "'");
        } catch (const InputError& e) {
            throw detail::line_error(no, e.what());
        }
    }
    if (spec.family.empty()) throw ParseError("family spec has no 'family' line");
    return spec;
}

inline std::string serialize_family_spec(const FamilySpec& spec) {
    std::string out = std::string(kFamilyHeader) + "\nfamily " + spec.family + "\n";
    if (!spec.base.empty()) out += "base " + spec.base + "\n";
    out += "n " + std::to_string(spec.n) + "\nm " + std::to_string(spec.m) + "\nx " + spec.x.str() + "\nseed " +
           std::to_string(spec.seed) + "\n";
    if (!spec.path.empty()) out += "path " + spec.path + "\n";
    if (!spec.scalings.empty()) {
        out += "scalings";
        for (const auto& s : spec.scalings) out += " " + s.str();
        out += "\n";
    }
    return out;
}

/// Builds the representation a family description names over the scalar type F.
template <ExactField F>
ReflectionRep<F> build_family(const FamilySpec& spec) {
    ReflectionRep<F> rep;
    const std::string& tag = spec.family == "conjugate" ? spec.base : spec.family;
    auto positive = [](long v, const char* what) {
        if (v < 2) throw InputError(std::string(what) + " must be at least 2");
        return static_cast<std::size_t>(v);
    };
    if (tag == "affineA") {
        rep = affine_An_Vx<F>(positive(spec.n, "n"), F(spec.x));
    } else if (tag == "symmetric") {
        rep = symmetric_group_standard<F>(positive(spec.n, "n"));
    } else if (tag == "dihedral") {
        rep = dihedral<F>(spec.m);
    } else if (tag == "three-cycle") {
        if constexpr (std::is_same_v<F, Rational>) rep = three_cycle_example();
        else throw InputError("three-cycle example is rational");
    } else if (tag == "custom-file") {
        if (spec.path.empty()) throw InputError("custom-file family needs a path");
        rep = parse_rep<F>(read_text_file(spec.path));
    } else if (spec.family == "conjugate" && tag.empty()) {
        throw InputError("conjugate family needs a base family");
    } else {
        throw InputError("unknown family '" + tag + "'");
    }
    if (spec.family == "conjugate") rep = random_conjugated_copy(rep, spec.seed).copy;
    if (!spec.scalings.empty()) {
        std::vector<F> s;
        for (const auto& c : spec.scalings) s.push_back(F(c));
        rep = rescale_reflection_vectors(rep, s);
    }
    return rep;
}

}  // namespace reflex

#endif
