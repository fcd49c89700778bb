#ifndef REFLEX_LIFTING_HPP
#define REFLEX_LIFTING_HPP

// Reconstruction of a degree-one isomorphism f: V1 -> V2 from an
// isomorphism psi between exterior powers of two reflection
// representations. Every identity the construction relies on is checked
// at runtime; a failed check raises StructureViolation.

#include <deque>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reflex/digraph.hpp"
#include "reflex/modtheory.hpp"

namespace reflex {

struct CheckRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LiftDims {
    std::size_t d = 0;
    std::size_t n = 0;
};

template <ExactField F>
struct LiftingContext {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> subset;  // I, ascending
    std::size_t base_vertex = 0;      // i0
    Digraph digraph;                  // G_I
    std::map<Subset, F> zeta;         // over all d-subsets of [k]
    std::vector<std::vector<F>> x;    // x[i][j]: s_j alpha_i = alpha_i + x[i][j] alpha_j
    std::vector<std::vector<F>> y;
    std::map<Arrow, F> z_edge;        // both orientations of every adjacent pair of G_I
    std::map<std::size_t, F> z_vertex;
    std::map<std::size_t, std::vector<std::size_t>> walks;  // BFS walk i0 -> i
    std::map<std::size_t, Vector<F>> a_coords;  // alpha_h in the alpha_I basis, h outside I
    std::map<std::size_t, Vector<F>> b_coords;
};

template <ExactField F>
struct LiftResult {
    bool short_circuit = false;  // d = 1
    LiftingContext<F> context;
    Matrix<F> f;
    F psi_ratio;                 // compound(f, d) = psi_ratio * psi
    std::vector<CheckRecord> transcript;
};

namespace detail {

inline std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw StructureViolation(what);
}

}  // namespace detail

/// Validates psi and derives d1 = d2, n1 = n2 and lambda_i = mu_i.
template <ExactField F>
LiftDims precheck(const ReflectionRep<F>& rep1, std::size_t d1, const ReflectionRep<F>& rep2, std::size_t d2,
                  const Matrix<F>& psi) {
    const std::size_t n1 = rep1.dim();
    const std::size_t n2 = rep2.dim();
    if (rep1.size() != rep2.size()) throw InputError("representations have different generator counts");
    if (d1 < 1 || d1 + 1 > n1 || d2 < 1 || d2 + 1 > n2) throw InputError("degrees must satisfy 1 <= d <= n - 1");
    const ExteriorRep<F> e1(rep1, d1);
    const ExteriorRep<F> e2(rep2, d2);
    if (psi.rows() != e2.dim() || psi.cols() != e1.dim()) throw PsiNotIntertwining("psi has the wrong shape");
    if (!intertwines(psi, as_matrix_rep(e1), as_matrix_rep(e2)))
        throw PsiNotIntertwining("psi does not intertwine the exterior powers");
    if (!psi.is_square() || determinant(psi).is_zero()) throw PsiNotIntertwining("psi is not invertible");

    for (std::size_t i = 0; i < rep1.size(); ++i) {
        const auto p1 = eigenspace_plus(e1, i).size();
        const auto p2 = eigenspace_plus(e2, i).size();
        const auto m1 = eigenspace_minus(e1, i).size();
        if (p1 != p2) throw PsiNotIntertwining("fixed spaces of generator " + std::to_string(i) + " differ in dimension");
        // psi carries the lambda_i-eigenspace of side 1 onto the lambda_i-eigenspace of side 2.
        const auto m2 = eigenspace(e2.matrix(i), rep1.generator(i).lambda).size();
        if (m1 != m2 || m1 == 0)
            throw PsiNotIntertwining("eigenspaces of generator " + std::to_string(i) + " do not correspond");
    }
    if (!binom_rigidity(static_cast<long>(n1), static_cast<long>(d1), static_cast<long>(n2), static_cast<long>(d2)))
        throw PsiNotIntertwining("eigenspace dimensions violate binomial rigidity");
    if (n1 != n2 || d1 != d2) throw PsiNotIntertwining("binomial rigidity passed with distinct (n, d)");
    for (std::size_t i = 0; i < rep1.size(); ++i)
        if (!(rep1.generator(i).lambda == rep2.generator(i).lambda))
            throw PsiNotIntertwining("eigenvalues of generator " + std::to_string(i) + " differ");
    return {d1, n1};
}

/// zeta_S with psi(wedge alpha_S) = zeta_S wedge beta_S; zero when alpha_S is dependent.
template <ExactField F>
std::map<Subset, F> zeta_coefficients(const ReflectionRep<F>& rep1, const ReflectionRep<F>& rep2, std::size_t d,
                                      const Matrix<F>& psi) {
    const std::size_t n = rep1.dim();
    std::map<Subset, F> zeta;
    for (const auto& s : subsets(rep1.size(), d)) {
        std::vector<Vector<F>> a, b;
        for (auto i : s) {
            a.push_back(rep1.generator(i).alpha);
            b.push_back(rep2.generator(i).alpha);
        }
        const auto wa = wedge_vector(a, n);
        const auto wb = wedge_vector(b, n);
        const bool dep_a = is_zero_vector<F>(wa);
        const bool dep_b = is_zero_vector<F>(wb);
        if (dep_a != dep_b)
            throw StructureViolation("independence of " + detail::join_indices(s) + " differs between the sides");
        if (dep_a) {
            zeta.emplace(s, F(0));
            continue;
        }
        auto c = proportionality<F>(psi * wa, wb);
        if (!c || c->is_zero())
            throw StructureViolation("psi(wedge alpha" + detail::join_indices(s) +
                                     ") is not a nonzero multiple of wedge beta");
        zeta.emplace(s, *c);
    }
    return zeta;
}

/// z_ij from the interaction tables; the two formulas are compared when both arrows exist.
template <ExactField F>
F z_edge_value(const std::vector<std::vector<F>>& x, const std::vector<std::vector<F>>& y, std::size_t i,
               std::size_t j) {
    const bool fwd = !x[i][j].is_zero();
    const bool bwd = !x[j][i].is_zero();
    if (fwd != !y[i][j].is_zero() || bwd != !y[j][i].is_zero())
        throw StructureViolation("zero patterns of x and y differ at (" + std::to_string(i) + "," + std::to_string(j) +
                                 ")");
    if (!fwd && !bwd) throw InputError("z_edge: vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                       " are not adjacent");
    if (fwd && bwd) {
        const F a = y[i][j] / x[i][j];
        const F b = x[j][i] / y[j][i];
        if (!(a == b))
            throw StructureViolation("y_ij/x_ij != x_ji/y_ji at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return a;
    }
    return fwd ? y[i][j] / x[i][j] : x[j][i] / y[j][i];
}

template <ExactField F>
F z_edge(const LiftingContext<F>& ctx, std::size_t i, std::size_t j) {
    auto it = ctx.z_edge.find({i, j});
    if (it == ctx.z_edge.end()) throw InputError("z_edge: pair is not adjacent in G_I");
    return it->second;
}

template <ExactField F>
F z_vertex(const LiftingContext<F>& ctx, std::size_t i) {
    auto it = ctx.z_vertex.find(i);
    if (it == ctx.z_vertex.end()) throw InputError("z_vertex: index not in I");
    return it->second;
}

/// Product of z_edge along an undirected walk of G_I.
template <ExactField F>
F walk_product(const LiftingContext<F>& ctx, const std::vector<std::size_t>& walk) {
    F p(1);
    for (std::size_t t = 1; t < walk.size(); ++t) p *= z_edge(ctx, walk[t - 1], walk[t]);
    return p;
}

/// Associated digraphs on [k] agree (zero patterns of the two interaction tables).
template <ExactField F>
bool digraph_coincidence(const ReflectionRep<F>& rep1, const ReflectionRep<F>& rep2) {
    if (!(associated_digraph(rep1) == associated_digraph(rep2)))
        throw StructureViolation("associated digraphs differ");
    return true;
}

/// Builds I, zeta, the tables and the z values for base vertex `i0` (an element of I).
template <ExactField F>
LiftingContext<F> build_lifting_context(const ReflectionRep<F>& rep1, const ReflectionRep<F>& rep2, std::size_t d,
                                        const Matrix<F>& psi, std::optional<std::size_t> i0 = std::nullopt) {
    LiftingContext<F> ctx;
    ctx.d = d;
    ctx.n = rep1.dim();
    ctx.k = rep1.size();
    const auto basis = connected_basis_subset(rep1);
    if (!basis.found) throw TheoremInapplicable("reflection vectors of the source do not yield a connected basis");
    ctx.subset = basis.subset;
    ctx.base_vertex = i0.value_or(ctx.subset.front());
    if (std::find(ctx.subset.begin(), ctx.subset.end(), ctx.base_vertex) == ctx.subset.end())
        throw InputError("base vertex is not in I");
    ctx.digraph = associated_digraph(rep1, ctx.subset);
    ctx.x = interaction_table(rep1);
    ctx.y = interaction_table(rep2);
    // t[i][j] = f_j(alpha_i) = x_ij
    ctx.zeta = zeta_coefficients(rep1, rep2, d, psi);

    for (auto i : ctx.subset)
        for (auto j : ctx.subset)
            if (i != j && ctx.digraph.adjacent(i, j)) ctx.z_edge.emplace(Arrow{i, j}, z_edge_value(ctx.x, ctx.y, i, j));
    for (const auto& [e, v] : ctx.z_edge)
        detail::require(v * z_edge(ctx, e.second, e.first) == F(1), "z_ij z_ji != 1");

    // BFS tree from i0.
    ctx.z_vertex.emplace(ctx.base_vertex, F(1));
    ctx.walks[ctx.base_vertex] = {ctx.base_vertex};
    std::deque<std::size_t> queue{ctx.base_vertex};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : ctx.digraph.neighbours(v)) {
            if (ctx.z_vertex.count(w)) continue;
            ctx.z_vertex.emplace(w, ctx.z_vertex.at(v) * z_edge(ctx, v, w));
            auto walk = ctx.walks.at(v);
            walk.push_back(w);
            ctx.walks[w] = std::move(walk);
            queue.push_back(w);
        }
    }
    if (ctx.z_vertex.size() != ctx.subset.size()) throw StructureViolation("G_I is not weakly connected");

    std::vector<Vector<F>> a_basis, b_basis;
    for (auto i : ctx.subset) {
        a_basis.push_back(rep1.generator(i).alpha);
        b_basis.push_back(rep2.generator(i).alpha);
    }
    for (std::size_t h = 0; h < ctx.k; ++h) {
        if (std::binary_search(ctx.subset.begin(), ctx.subset.end(), h)) continue;
        auto a = coordinates(a_basis, rep1.generator(h).alpha);
        auto b = coordinates(b_basis, rep2.generator(h).alpha);
        if (!b) throw StructureViolation("beta_I is not a basis");
        ctx.a_coords.emplace(h, *a);
        ctx.b_coords.emplace(h, *b);
    }
    return ctx;
}

/// f with f(alpha_i) = z_i beta_i for i in I.
template <ExactField F>
Matrix<F> assemble_lift(const ReflectionRep<F>& rep1, const ReflectionRep<F>& rep2, const LiftingContext<F>& ctx) {
    std::vector<Vector<F>> a_cols, b_cols;
    for (auto i : ctx.subset) {
        a_cols.push_back(rep1.generator(i).alpha);
        b_cols.push_back(scaled(rep2.generator(i).alpha, z_vertex(ctx, i)));
    }
    const auto a = Matrix<F>::from_columns(a_cols, ctx.n);
    const auto b = Matrix<F>::from_columns(b_cols, ctx.n);
    auto a_inv = try_inverse(a);
    if (!a_inv) throw StructureViolation("alpha_I is not a basis");
    return b * *a_inv;
}

template <ExactField F>
struct LiftOptions {
    std::uint64_t seed = 1;
    std::size_t random_walks = 8;
    std::size_t max_independence_subsets = 5000;
};

/// Runs the whole reconstruction and its verification transcript.
template <ExactField F>
LiftResult<F> lift_isomorphism(const ReflectionRep<F>& rep1, const ReflectionRep<F>& rep2, std::size_t d1,
                               std::size_t d2, const Matrix<F>& psi, const LiftOptions<F>& opts = {}) {
    LiftResult<F> out;
    auto record = [&](std::string name, bool ok, std::string detail = {}) {
        out.transcript.push_back({name, ok, detail});
        if (!ok) throw StructureViolation(name + (detail.empty() ? "" : ": " + detail));
    };
    const auto dims = precheck(rep1, d1, rep2, d2, psi);
    record("precheck", true, "d = " + std::to_string(dims.d) + ", n = " + std::to_string(dims.n));
    const auto m1 = as_matrix_rep(rep1);
    const auto m2 = as_matrix_rep(rep2);

    if (dims.d == 1) {
        out.short_circuit = true;
        out.f = psi;
        out.psi_ratio = F(1);
        out.context.d = 1;
        out.context.n = dims.n;
        out.context.k = rep1.size();
        record("intertwines all generators", intertwines(out.f, m1, m2));
        return out;
    }

    digraph_coincidence(rep1, rep2);
    record("digraphs coincide", true);
    out.context = build_lifting_context(rep1, rep2, dims.d, psi);
    auto& ctx = out.context;
    const auto& I = ctx.subset;

    {
        std::size_t tried = 0;
        bool ok = true;
        for (const auto& s : subsets(ctx.k, ctx.n)) {
            if (++tried > opts.max_independence_subsets) break;
            std::vector<Vector<F>> a, b;
            for (auto i : s) {
                a.push_back(rep1.generator(i).alpha);
                b.push_back(rep2.generator(i).alpha);
            }
            if ((rank_of(a, ctx.n) == ctx.n) != (rank_of(b, ctx.n) == ctx.n)) ok = false;
        }
        record("independence transfer on n-subsets", ok);
    }

    {
        const ExteriorRep<F> e2(rep2, ctx.d);
        std::vector<Vector<F>> pieces;
        bool lines = true;
        for (const auto& s : subsets(I.size(), ctx.d)) {
            std::vector<std::size_t> idx;
            for (auto p : s) idx.push_back(I[p]);
            auto w = intersect_minus(e2, idx);
            if (w.size() != 1) lines = false;
            pieces.insert(pieces.end(), w.begin(), w.end());
        }
        record("eigenspace intersections are lines spanning the exterior power",
               lines && rank_of(pieces, e2.dim()) == e2.dim());
    }

    for (const auto& s : subsets(I.size(), ctx.d)) {
        Subset t;
        for (auto p : s) t.push_back(I[p]);
        detail::require(!ctx.zeta.at(t).is_zero(), "zeta vanishes on a subset of I");
    }
    record("zeta nonzero on d-subsets of I", true);

    // Consistency of z_vertex on every edge: independence of the walk.
    for (const auto& [e, v] : ctx.z_edge)
        detail::require(z_vertex(ctx, e.first) * v == z_vertex(ctx, e.second),
                        "z_vertex depends on the walk at edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    record("z_vertex independent of the walk", true);

    // Walk-product identity along BFS walks and seeded random walks.
    std::mt19937_64 rng(opts.seed);
    auto check_walk = [&](const std::vector<std::size_t>& walk) {
        const auto start = walk.front();
        const auto end = walk.back();
        const F prod = walk_product(ctx, walk);
        std::vector<std::size_t> rest;
        for (auto v : I)
            if (v != start && v != end) rest.push_back(v);
        for (const auto& js : subsets(rest.size(), ctx.d - 1)) {
            Subset a{start}, b{end};
            for (auto p : js) {
                a.push_back(rest[p]);
                b.push_back(rest[p]);
            }
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            detail::require(prod * ctx.zeta.at(a) == ctx.zeta.at(b),
                            "walk product " + detail::join_indices(walk) + " disagrees with zeta ratio");
        }
    };
    for (const auto& [v, walk] : ctx.walks) check_walk(walk);
    for (std::size_t r = 0; r < opts.random_walks && I.size() > 1; ++r) {
        std::vector<std::size_t> walk{I[rng() % I.size()]};
        const std::size_t len = 1 + rng() % (2 * I.size());
        for (std::size_t t = 0; t < len; ++t) {
            const auto nb = ctx.digraph.neighbours(walk.back());
            walk.push_back(nb[rng() % nb.size()]);
        }
        check_walk(walk);
    }
    record("walk products match zeta ratios", true);

    out.f = assemble_lift(rep1, rep2, ctx);

    for (auto h : I)
        for (auto i : I)
            if (i != h)
                detail::require(ctx.x[i][h] * z_vertex(ctx, h) == z_vertex(ctx, i) * ctx.y[i][h],
                                "x_ih z_h != z_i y_ih");
    record("generators in I commute with f", true);
    for (const auto& [h, a] : ctx.a_coords) {
        const auto& b = ctx.b_coords.at(h);
        for (std::size_t p = 0; p < I.size(); ++p)
            for (auto i : I)
                detail::require(ctx.x[i][h] * a[p] * z_vertex(ctx, I[p]) == ctx.y[i][h] * b[p] * z_vertex(ctx, i),
                                "x_ih a_j z_j != y_ih b_j z_i for h = " + std::to_string(h));
    }
    record("generators outside I commute with f", true);

    record("intertwines all generators", intertwines(out.f, m1, m2));
    record("f invertible", !determinant(out.f).is_zero());
    auto ratio = matrix_proportionality(compound_matrix(out.f, ctx.d), psi);
    record("compound(f, d) proportional to psi", ratio.has_value() && !ratio->is_zero());
    out.psi_ratio = *ratio;

    if (I.size() > 1) {
        const auto other = build_lifting_context(rep1, rep2, ctx.d, psi, I[1]);
        auto c = matrix_proportionality(assemble_lift(rep1, rep2, other), out.f);
        record("f independent of the base vertex up to a scalar", c.has_value() && !c->is_zero());
    }
    return out;
}

}  // namespace reflex

#endif
