#include <gtest/gtest.h>

#include <random>

#include "reflex/rep_io.hpp"
#include "support.hpp"

using namespace reflex;
using reflex::testkit::Q;

TEST(ValidateReflection, ExtractsVectorEigenvalueAndHyperplane) {
    // s alpha1 = alpha1 + 2 alpha2 on the alpha2 axis: s = [[1,0],[2,-1]]
    const Matrix<Q> s{{Q(1), Q(0)}, {Q(2), Q(-1)}};
    const auto g = validate_reflection(s, "s2");
    EXPECT_EQ(g.alpha, (Vector<Q>{Q(0), Q(1)}));
    EXPECT_EQ(g.lambda, Q(-1));
    EXPECT_EQ(s * g.alpha, scaled(g.alpha, g.lambda));
    ASSERT_EQ(g.hyperplane.size(), 1u);
    EXPECT_EQ(s * g.hyperplane[0], g.hyperplane[0]);
}

TEST(ValidateReflection, NonInvolutiveEigenvalue) {
    // diag(3, 1): a generalized reflection with lambda = 3
    const auto g = validate_reflection(Matrix<Q>{{Q(3), Q(0)}, {Q(0), Q(1)}});
    EXPECT_EQ(g.lambda, Q(3));
}

TEST(ValidateReflection, Errors) {
    auto kind_of = [](const Matrix<Q>& m) {
        try {
            validate_reflection(m);
        } catch (const ReflectionError& e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error";
        return ReflectionError::Kind::NotSquare;
    };
    EXPECT_EQ(kind_of(Matrix<Q>::identity(2)), ReflectionError::Kind::NotRankOne);
    EXPECT_EQ(kind_of(Matrix<Q>{{Q(-1), Q(0)}, {Q(0), Q(-1)}}), ReflectionError::Kind::NotRankOne);
    EXPECT_EQ(kind_of(Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}}), ReflectionError::Kind::NotDiagonalizable);
    EXPECT_EQ(kind_of(Matrix<Q>{{Q(0), Q(0)}, {Q(0), Q(1)}}), ReflectionError::Kind::NotInvertible);
    EXPECT_EQ(kind_of(Matrix<Q>(2, 3)), ReflectionError::Kind::NotSquare);
}

TEST(ValidateReflection, RandomReflectionsRoundTrip) {
    // s = I + alpha f^T with f(alpha) != 0 is always a reflection.
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 5;
        auto alpha = testkit::rand_vector(rng, n);
        auto f = testkit::rand_vector(rng, n);
        Q fa(0);
        for (std::size_t i = 0; i < n; ++i) fa += f[i] * alpha[i];
        if (is_zero_vector<Q>(alpha) || is_zero_vector<Q>(f) || fa.is_zero() || fa == Q(-1)) continue;
        Matrix<Q> s = Matrix<Q>::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) += alpha[i] * f[j];
        const auto g = validate_reflection(s);
        EXPECT_EQ(g.lambda, Q(1) + fa);
        EXPECT_TRUE(proportionality<Q>(g.alpha, alpha).has_value());
        for (int u = 0; u < 3; ++u) {
            const auto v = testkit::rand_vector(rng, n);
            EXPECT_EQ(s * v, v + scaled(g.alpha, g.apply_functional(v)));
        }
    }
}

TEST(ValidateReflection, RescalingKeepsTheMap) {
    const auto g = validate_reflection(Matrix<Q>{{Q(1), Q(-2)}, {Q(0), Q(-1)}});
    const auto h = rescale_reflection_vector(g, Q(-3, 7));
    const Vector<Q> v{Q(5), Q(2)};
    EXPECT_EQ(v + scaled(h.alpha, h.apply_functional(v)), g.matrix * v);
    EXPECT_THROW(rescale_reflection_vector(g, Q(0)), InputError);
    EXPECT_THROW(with_reflection_vector(g, Vector<Q>{Q(1), Q(0)}), InputError);
}

TEST(InteractionCoefficient, DefiningRelation) {
    const auto rep = three_cycle_example();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            const auto& si = rep.generator(i);
            const auto& aj = rep.generator(j).alpha;
            EXPECT_EQ(si.matrix * aj, aj + scaled(si.alpha, interaction_coefficient(rep, j, i)));
        }
    EXPECT_THROW(interaction_coefficient(rep, 1, 1), InputError);
}

TEST(RepIo, ParseSerializeRoundTrip) {
    const auto rep = affine_An_Vx<Q>(3, Q(-5, 3));
    const auto text = serialize_rep(rep);
    const auto back = parse_rep<Q>(text);
    EXPECT_EQ(back.matrices(), rep.matrices());
    EXPECT_EQ(back.names(), rep.names());
    EXPECT_EQ(serialize_rep(back), text);
}

TEST(RepIo, QuadraticRoundTrip) {
    const auto rep = dihedral<QuadraticNumber>(5);
    const auto back = parse_rep<QuadraticNumber>(serialize_rep(rep));
    EXPECT_EQ(back.matrices(), rep.matrices());
    EXPECT_EQ(back.field(), FieldContext::quadratic(5));
}

TEST(RepIo, CommentsAndBlankLines) {
    const std::string text = "# leading comment\nreflex-rep v1\nfield rational  # inline\n\ndim 1\ngen s\n-1\n";
    const auto rep = parse_rep<Q>(text);
    EXPECT_EQ(rep.dim(), 1u);
    EXPECT_EQ(rep.generator(0).lambda, Q(-1));
}

TEST(RepIo, Errors) {
    EXPECT_THROW(parse_rep<Q>("field rational\ndim 1\ngen s\n-1\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 2\ngen s\n-1 0\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 2\ngen s\n-1 0\n0 x\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 1\ngen s\n1+1*sqrt(2)\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield quadratic 4\ndim 1\ngen s\n-1\n"), ParseError);
    EXPECT_THROW(parse_rep<QuadraticNumber>("reflex-rep v1\nfield quadratic 5\ndim 1\ngen s\n-1\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 0\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 1\n"), ParseError);
    EXPECT_THROW(parse_rep<Q>("reflex-rep v1\nfield rational\ndim 1\ngen e\n1\n"), ReflectionError);
}
