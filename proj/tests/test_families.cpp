#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace reflex;
using reflex::testkit::Q;

TEST(AffineFamily, GeneratorsActOnSimpleRootsAsStated) {
    for (std::size_t n : {2u, 3u, 5u})
        for (const auto& x : {Q(2), Q(-3, 4)}) {
            const auto rep = affine_An_Vx<Q>(n, x);
            ASSERT_EQ(rep.dim(), n + 1);
            ASSERT_EQ(rep.size(), n + 1);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j) {
                    const auto e = unit_vector<Q>(n + 1, j);
                    Q coef(0);  // s_i e_j = e_j + coef e_i
                    if (i == j) coef = Q(-2);
                    else if (i == 0 && j == n) coef = x;
                    else if (i == n && j == 0) coef = x.inverse();
                    else if (i + 1 == j || j + 1 == i) coef = Q(1);
                    EXPECT_EQ(rep.generator(i).matrix * e, e + scaled(unit_vector<Q>(n + 1, i), coef));
                }
            for (const auto& g : rep.generators()) EXPECT_EQ(g.lambda, Q(-1));
        }
    EXPECT_THROW(affine_An_Vx<Q>(1, Q(2)), InputError);
    EXPECT_THROW(affine_An_Vx<Q>(2, Q(0)), InputError);
}

TEST(AffineFamily, NeighbouringProductsHaveOrderThree) {
    // Every pair in the rank-two cycle is joined, and x * (1/x) = 1 keeps the order at three.
    for (const auto& x : {Q(2), Q(5), Q(-1)}) {
        const auto rep = affine_An_Vx<Q>(2, x);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto p = rep.generator(i).matrix * rep.generator((i + 1) % 3).matrix;
            EXPECT_EQ(testkit::matrix_order(p), 3);
        }
    }
    const auto rep = affine_An_Vx<Q>(3, Q(2));
    EXPECT_EQ(testkit::matrix_order(rep.generator(0).matrix * rep.generator(2).matrix), 2);
}

TEST(AffineFamily, QuotientOfTheReducibleMember) {
    const auto rep = affine_An_Vx<Q>(2, Q(1));
    const std::vector<Vector<Q>> line{{Q(1), Q(1), Q(1)}};
    ASSERT_TRUE(is_invariant_subspace(as_matrix_rep(rep), line));
    const auto q = quotient_rep(rep, line);
    EXPECT_EQ(q.dim(), 2u);
    EXPECT_EQ(is_simple(q).verdict, Simplicity::Simple);
    EXPECT_THROW(quotient_rep(affine_An_Vx<Q>(2, Q(2)), line), InputError);
}

TEST(SymmetricGroup, CoxeterRelationsAndOrder) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto rep = symmetric_group_standard<Q>(n);
        for (std::size_t i = 0; i < rep.size(); ++i) {
            EXPECT_EQ(testkit::matrix_order(rep.generator(i).matrix), 2);
            for (std::size_t j = i + 1; j < rep.size(); ++j)
                EXPECT_EQ(testkit::matrix_order(rep.generator(i).matrix * rep.generator(j).matrix), j == i + 1 ? 3 : 2);
        }
        std::size_t fact = 1;
        for (std::size_t k = 2; k <= n; ++k) fact *= k;
        const auto g = enumerate_group(as_matrix_rep(rep), 1000);
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(g->size(), fact);
    }
}

TEST(Dihedral, ProductHasOrderM) {
    for (long m : {3L, 4L, 6L}) {
        const auto rep = dihedral<Q>(m);
        EXPECT_EQ(testkit::matrix_order(rep.generator(0).matrix * rep.generator(1).matrix), m);
        EXPECT_EQ(enumerate_group(as_matrix_rep(rep), 100)->size(), static_cast<std::size_t>(2 * m));
    }
    const auto d5 = dihedral<QuadraticNumber>(5);
    EXPECT_EQ(testkit::matrix_order(d5.generator(0).matrix * d5.generator(1).matrix), 5);
    EXPECT_THROW(dihedral<Q>(5), InputError);
    EXPECT_THROW(dihedral<QuadraticNumber>(7), InputError);
}

TEST(ThreeCycleExample, Data) {
    const auto rep = three_cycle_example();
    ASSERT_EQ(rep.size(), 3u);
    EXPECT_EQ(rep.dim(), 2u);
    EXPECT_EQ(rep.generator(2).alpha, (Vector<Q>{Q(-1), Q(-1)}));
    for (const auto& g : rep.generators()) EXPECT_EQ(testkit::matrix_order(g.matrix), 2);
    const auto t = interaction_table(rep);
    EXPECT_EQ(t[0][1], Q(2));
    EXPECT_EQ(t[1][2], Q(2));
    EXPECT_EQ(t[2][0], Q(2));
    EXPECT_EQ(t[1][0], Q(0));
    EXPECT_EQ(t[2][1], Q(0));
    EXPECT_EQ(t[0][2], Q(0));
}

TEST(ConjugatedCopy, MatricesAndVectors) {
    std::mt19937_64 rng(81);
    const auto rep = affine_An_Vx<Q>(3, Q(2));
    for (int trial = 0; trial < 5; ++trial) {
        const auto t = random_invertible_matrix<Q>(4, rng);
        const auto c = random_scalings<Q>(4, rng);
        const auto copy = conjugated_copy(rep, t, c);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_EQ(copy.generator(i).matrix * t, t * rep.generator(i).matrix);
            EXPECT_EQ(copy.generator(i).alpha, scaled(t * rep.generator(i).alpha, c[i]));
        }
    }
    EXPECT_THROW(conjugated_copy(rep, Matrix<Q>(4, 4), std::vector<Q>(4, Q(1))), InputError);
    EXPECT_THROW(conjugated_copy(rep, Matrix<Q>::identity(4), std::vector<Q>(3, Q(1))), InputError);
}

TEST(ConjugatedCopy, SeedIsDeterministic) {
    const auto rep = symmetric_group_standard<Q>(4);
    const auto a = random_conjugated_copy(rep, 42);
    const auto b = random_conjugated_copy(rep, 42);
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.scalings, b.scalings);
    EXPECT_EQ(a.copy.alphas(), b.copy.alphas());
}

TEST(FamilySpec, RoundTrip) {
    FamilySpec spec;
    spec.family = "conjugate";
    spec.base = "affineA";
    spec.n = 3;
    spec.x = Q(-5, 2);
    spec.seed = 99;
    spec.scalings = {Q(1), Q(2), Q(-1, 3), Q(4)};
    EXPECT_EQ(parse_family_spec(serialize_family_spec(spec)), spec);
    spec = FamilySpec{};
    spec.family = "custom-file";
    spec.path = "samples/three_cycle.rep";
    EXPECT_EQ(parse_family_spec(serialize_family_spec(spec)), spec);
}

TEST(FamilySpec, Errors) {
    EXPECT_THROW(parse_family_spec("family affineA\n"), ParseError);
    EXPECT_THROW(parse_family_spec("reflex-family v1\nn 2\n"), ParseError);
    EXPECT_THROW(parse_family_spec("reflex-family v1\nfamily affineA\ncolour blue\n"), ParseError);
    EXPECT_THROW(parse_family_spec("reflex-family v1\nfamily affineA\nn two\n"), ParseError);
    EXPECT_THROW(parse_family_spec("reflex-family v1\nfamily affineA\nx 1/0\n"), ParseError);
    FamilySpec bad;
    bad.family = "tetrahedral";
    EXPECT_THROW(build_family<Q>(bad), InputError);
    bad.family = "conjugate";
    EXPECT_THROW(build_family<Q>(bad), InputError);
}

TEST(FamilySpec, BuildsEveryTag) {
    FamilySpec spec;
    spec.family = "affineA";
    spec.x = Q(3);
    EXPECT_EQ(build_family<Q>(spec).matrices(), affine_An_Vx<Q>(2, Q(3)).matrices());
    spec.family = "symmetric";
    spec.n = 4;
    EXPECT_EQ(build_family<Q>(spec).dim(), 3u);
    spec.family = "dihedral";
    spec.m = 5;
    EXPECT_TRUE(family_is_quadratic(spec));
    EXPECT_EQ(build_family<QuadraticNumber>(spec).field(), FieldContext::quadratic(5));
    spec.family = "three-cycle";
    spec.scalings = {Q(2), Q(1), Q(1)};
    const auto r = build_family<Q>(spec);
    EXPECT_EQ(r.generator(0).alpha, (Vector<Q>{Q(2), Q(0)}));
    spec.family = "conjugate";
    spec.base = "three-cycle";
    spec.scalings.clear();
    spec.seed = 4;
    EXPECT_EQ(build_family<Q>(spec).alphas(), random_conjugated_copy(three_cycle_example(), 4).copy.alphas());
}
