#include <gtest/gtest.h>

#include <random>

#include "reflex/linalg.hpp"
#include "support.hpp"

using namespace reflex;
using reflex::testkit::Q;

TEST(Rref, HandExample) {
    const Matrix<Q> m{{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}, {Q(1), Q(0), Q(1)}};
    const auto rr = rref(m);
    EXPECT_EQ(rr.rank, 2u);
    EXPECT_EQ(rr.pivots, (std::vector<std::size_t>{0, 1}));
    const Matrix<Q> want{{Q(1), Q(0), Q(1)}, {Q(0), Q(1), Q(1)}, {Q(0), Q(0), Q(0)}};
    EXPECT_EQ(rr.reduced, want);
}

TEST(Determinant, MatchesLeibnizExpansion) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = t % 3 == 0 ? testkit::rand_low_rank(rng, n, n, n > 1 ? n - 1 : 1) : testkit::rand_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), testkit::leibniz_det(m));
    }
}

TEST(Kernel, BasisIsAnnihilatedAndHasRightSize) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 150; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5, k = 1 + rng() % 4;
        const auto m = testkit::rand_low_rank(rng, r, c, k);
        const auto ker = kernel_basis(m);
        EXPECT_EQ(ker.size() + rank(m), c);
        for (const auto& v : ker) EXPECT_TRUE(is_zero_vector<Q>(m * v));
        EXPECT_EQ(rank_of(ker, c), ker.size());
    }
}

TEST(Solve, ConsistentAndInconsistentSystems) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const auto a = testkit::rand_low_rank(rng, r, c, 1 + rng() % 3);
        const auto x = testkit::rand_vector(rng, c);
        const auto b = a * x;
        const auto sol = solve(a, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(a * *sol, b);
    }
    const Matrix<Q> a{{Q(1), Q(1)}, {Q(2), Q(2)}};
    EXPECT_FALSE(solve(a, Vector<Q>{Q(1), Q(3)}).has_value());
}

TEST(Inverse, ProductIsIdentity) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = testkit::rand_matrix(rng, n, n);
        auto inv = try_inverse(m);
        EXPECT_EQ(inv.has_value(), !testkit::leibniz_det(m).is_zero());
        if (inv) {
            EXPECT_EQ(m * *inv, Matrix<Q>::identity(n));
            EXPECT_EQ(*inv * m, Matrix<Q>::identity(n));
        }
    }
    EXPECT_THROW(inverse(Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}), InputError);
}

TEST(Subspaces, IntersectionDimensionFormula) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<Vector<Q>> u, w;
        for (std::size_t i = 0, a = 1 + rng() % n; i < a; ++i) u.push_back(testkit::rand_vector(rng, n));
        for (std::size_t i = 0, b = 1 + rng() % n; i < b; ++i) w.push_back(testkit::rand_vector(rng, n));
        auto sum = u;
        sum.insert(sum.end(), w.begin(), w.end());
        const auto cap = intersect_spans(u, w, n);
        EXPECT_EQ(cap.size() + rank_of(sum, n), rank_of(u, n) + rank_of(w, n));
        for (const auto& v : cap) {
            EXPECT_TRUE(in_span(u, v));
            EXPECT_TRUE(in_span(w, v));
        }
    }
}

TEST(Subspaces, CanonicalBasisIdentifiesSpans) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 4;
        std::vector<Vector<Q>> u{testkit::rand_vector(rng, n), testkit::rand_vector(rng, n)};
        std::vector<Vector<Q>> mixed{u[0] + u[1], scaled(u[1], Q(3)) - u[0]};
        EXPECT_TRUE(span_equal(u, mixed, n));
        EXPECT_EQ(canonical_basis(u, n), canonical_basis(mixed, n));
    }
}

TEST(Subspaces, CompleteBasisAndCoordinates) {
    std::vector<Vector<Q>> u{{Q(1), Q(1), Q(1)}};
    const auto full = complete_basis(u, 3);
    ASSERT_EQ(full.size(), 3u);
    EXPECT_EQ(rank_of(full, 3), 3u);
    EXPECT_EQ(full[0], u[0]);
    const Vector<Q> v{Q(2), Q(-1), Q(5)};
    const auto c = coordinates(full, v);
    ASSERT_TRUE(c.has_value());
    Vector<Q> back(3, Q(0));
    for (std::size_t i = 0; i < 3; ++i) back = back + scaled(full[i], (*c)[i]);
    EXPECT_EQ(back, v);
}

TEST(Proportionality, VectorsAndMatrices) {
    const Vector<Q> w{Q(0), Q(2), Q(-4)};
    EXPECT_EQ(proportionality<Q>(scaled(w, Q(-3, 2)), w), Q(-3, 2));
    EXPECT_FALSE(proportionality<Q>(Vector<Q>{Q(1), Q(2), Q(-4)}, w).has_value());
    const Matrix<Q> m{{Q(1), Q(2)}, {Q(3), Q(4)}};
    EXPECT_EQ(matrix_proportionality(m * Q(5), m), Q(5));
}

TEST(IncrementalBasis, AgreesWithRank) {
    std::mt19937_64 rng(27);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 6;
        IncrementalBasis<Q> basis(n);
        std::vector<Vector<Q>> all;
        for (int i = 0; i < 8; ++i) {
            Vector<Q> v = i % 3 == 2 && !all.empty() ? all[0] + scaled(all.back(), Q(2)) : testkit::rand_vector(rng, n);
            const bool added = basis.insert(v);
            const auto before = rank_of(all, n);
            all.push_back(v);
            EXPECT_EQ(added, rank_of(all, n) > before);
            EXPECT_EQ(basis.size(), rank_of(all, n));
        }
    }
}
