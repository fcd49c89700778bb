#include <gtest/gtest.h>

#include <random>

#include "reflex/lifting.hpp"
#include "support.hpp"

using namespace reflex;
using reflex::testkit::Q;

namespace {

struct Setup {
    ReflectionRep<Q> rep;
    ReflectionRep<Q> copy;
    Matrix<Q> t;
    std::vector<Q> scalings;
};

Setup conjugate_of(const ReflectionRep<Q>& rep, std::uint64_t seed, bool unit_scalings = false) {
    auto pair = random_conjugated_copy(rep, seed);
    if (unit_scalings) {
        pair.scalings.assign(rep.size(), Q(1));
        pair.copy = conjugated_copy(rep, pair.t, pair.scalings);
    }
    return {rep, pair.copy, pair.t, pair.scalings};
}

}  // namespace

TEST(Precheck, AcceptsTheCompoundOfTheConjugator) {
    const auto s = conjugate_of(affine_An_Vx<Q>(3, Q(2)), 5);
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto dims = precheck(s.rep, d, s.copy, d, compound_matrix(s.t, d));
        EXPECT_EQ(dims.d, d);
        EXPECT_EQ(dims.n, 4u);
    }
}

TEST(Precheck, RejectsBrokenPsi) {
    const auto s = conjugate_of(affine_An_Vx<Q>(2, Q(2)), 6);
    auto psi = compound_matrix(s.t, 2);
    psi(0, 0) += Q(1);
    EXPECT_THROW(precheck(s.rep, 2, s.copy, 2, psi), PsiNotIntertwining);
    EXPECT_THROW(precheck(s.rep, 2, s.copy, 2, Matrix<Q>(3, 3)), PsiNotIntertwining);
    EXPECT_THROW(precheck(s.rep, 2, s.copy, 2, Matrix<Q>(2, 3)), PsiNotIntertwining);
    EXPECT_THROW(precheck(s.rep, 3, s.copy, 2, compound_matrix(s.t, 2)), InputError);
}

TEST(Zeta, OneForUnitScalingsAndProductsOtherwise) {
    const auto rep = affine_An_Vx<Q>(3, Q(-3));
    const auto unit = conjugate_of(rep, 7, true);
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto zeta = zeta_coefficients(unit.rep, unit.copy, d, compound_matrix(unit.t, d));
        for (const auto& [s, z] : zeta) {
            std::vector<Vector<Q>> a;
            for (auto i : s) a.push_back(rep.generator(i).alpha);
            EXPECT_EQ(z, rank_of(a, 4) == d ? Q(1) : Q(0));
        }
    }
    const auto scaled_pair = conjugate_of(rep, 8);
    const auto zeta = zeta_coefficients(scaled_pair.rep, scaled_pair.copy, 2, compound_matrix(scaled_pair.t, 2));
    for (const auto& [s, z] : zeta) {
        Q prod(1);
        for (auto i : s) prod *= scaled_pair.scalings[i];
        EXPECT_EQ(z * prod, Q(1));
    }
}

TEST(ZValues, InverseRatiosOfScalings) {
    const auto s = conjugate_of(affine_An_Vx<Q>(3, Q(2)), 11);
    const auto ctx = build_lifting_context(s.rep, s.copy, 2, compound_matrix(s.t, 2));
    const auto i0 = ctx.base_vertex;
    for (auto i : ctx.subset) EXPECT_EQ(z_vertex(ctx, i), s.scalings[i0] / s.scalings[i]);
    for (const auto& [e, v] : ctx.z_edge) EXPECT_EQ(v * z_edge(ctx, e.second, e.first), Q(1));
    EXPECT_THROW(z_vertex(ctx, 99), InputError);
}

TEST(ZValues, WalkProductIsTheEndpointRatio) {
    std::mt19937_64 rng(71);
    const auto s = conjugate_of(affine_An_Vx<Q>(4, Q(5, 2)), 12);
    const auto ctx = build_lifting_context(s.rep, s.copy, 2, compound_matrix(s.t, 2));
    for (int t = 0; t < 50; ++t) {
        std::vector<std::size_t> walk{ctx.subset[rng() % ctx.subset.size()]};
        for (std::size_t len = rng() % 9; len > 0; --len) {
            const auto nb = ctx.digraph.neighbours(walk.back());
            walk.push_back(nb[rng() % nb.size()]);
        }
        EXPECT_EQ(walk_product(ctx, walk) * z_vertex(ctx, walk.front()), z_vertex(ctx, walk.back()));
    }
}

TEST(ZValues, EdgeFormulasMustAgree) {
    std::vector<std::vector<Q>> x{{Q(0), Q(2)}, {Q(3), Q(0)}};
    std::vector<std::vector<Q>> y{{Q(0), Q(4)}, {Q(3), Q(0)}};
    // y01/x01 = 2 but x10/y10 = 1
    EXPECT_THROW(z_edge_value(x, y, 0, 1), StructureViolation);
    y[1][0] = Q(3, 2);
    EXPECT_EQ(z_edge_value(x, y, 0, 1), Q(2));
    y[1][0] = Q(0);
    EXPECT_THROW(z_edge_value(x, y, 0, 1), StructureViolation);
}

TEST(Lift, BaseVertexChangesOnlyAScalar) {
    const auto s = conjugate_of(affine_An_Vx<Q>(3, Q(3)), 13);
    const auto psi = compound_matrix(s.t, 2);
    const auto first = build_lifting_context(s.rep, s.copy, 2, psi);
    const auto f0 = assemble_lift(s.rep, s.copy, first);
    for (auto i0 : first.subset) {
        const auto ctx = build_lifting_context(s.rep, s.copy, 2, psi, i0);
        EXPECT_TRUE(matrix_proportionality(assemble_lift(s.rep, s.copy, ctx), f0).has_value());
    }
    EXPECT_THROW(build_lifting_context(s.rep, s.copy, 2, psi, 99), InputError);
}

TEST(Lift, RecoversTheConjugator) {
    for (std::uint64_t seed = 20; seed < 26; ++seed)
        for (const auto& rep : {affine_An_Vx<Q>(2, Q(2)), affine_An_Vx<Q>(3, Q(-1, 2)), symmetric_group_standard<Q>(4)}) {
            const auto s = conjugate_of(rep, seed);
            for (std::size_t d = 1; d < rep.dim(); ++d) {
                const auto res = lift_isomorphism(s.rep, s.copy, d, d, compound_matrix(s.t, d));
                EXPECT_TRUE(matrix_proportionality(res.f, s.t).has_value()) << seed << " d=" << d;
                EXPECT_EQ(res.short_circuit, d == 1);
                for (const auto& c : res.transcript) EXPECT_TRUE(c.passed) << c.name;
            }
        }
}

TEST(Lift, IdentityPsiGivesAScalarMatrix) {
    const auto rep = affine_An_Vx<Q>(3, Q(7));
    const auto res = lift_isomorphism(rep, rep, 2, 2, Matrix<Q>::identity(6));
    ASSERT_TRUE(matrix_proportionality(res.f, Matrix<Q>::identity(4)).has_value());
    const Q c = res.f(0, 0);
    EXPECT_EQ(res.psi_ratio, c * c);
}

TEST(Lift, ScaledPsiScalesTheRatio) {
    const auto s = conjugate_of(three_cycle_example(), 31);
    const auto res = lift_isomorphism(s.rep, s.copy, 1, 1, s.t * Q(3));
    EXPECT_TRUE(res.short_circuit);
    EXPECT_EQ(res.f, s.t * Q(3));
}

TEST(Lift, NoConnectedBasisIsInapplicable) {
    const auto rep = ReflectionRep<Q>::from_matrices({}, {Matrix<Q>{{Q(-1), Q(0)}, {Q(0), Q(1)}}});
    EXPECT_THROW(build_lifting_context(rep, rep, 1, Matrix<Q>::identity(2)), TheoremInapplicable);
}

TEST(Lift, DigraphsMustCoincide) {
    const auto a = three_cycle_example();
    const auto b = affine_An_Vx<Q>(2, Q(2));
    EXPECT_THROW(digraph_coincidence(a, a.with_generator(0, a.generator(1))), StructureViolation);
    EXPECT_TRUE(digraph_coincidence(b, conjugate_of(b, 3).copy));
}
