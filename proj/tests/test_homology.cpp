#include "helpers.hpp"

using namespace facelab;
using th::F;
using th::K;

namespace {

std::vector<Int> values(const BettiVector& b)
{
    std::vector<Int> v;
    for (int i = 0; i <= b.top(); ++i) v.push_back(b[i]);
    return v;
}

} // namespace

TEST(Betti, SimplexBoundaryIsSphere)
{
    for (int d = 2; d <= 6; ++d) {
        std::vector<Int> want(d, 0);
        want.back() = 1;
        EXPECT_EQ(values(betti(simplex_boundary(d))), want) << d;
    }
}

TEST(Betti, Cp2)
{
    auto b = betti(*catalog("cp2_9").complex);
    EXPECT_EQ(values(b), (std::vector<Int>{0, 0, 1, 0, 1}));
    EXPECT_EQ(b[-1], 0);
    EXPECT_EQ(b.chi(), 3);
}

TEST(Betti, S2xS2Sum)
{
    auto b = betti(*catalog("s2xs2_sum").complex);
    EXPECT_EQ(b[2], 4);
    EXPECT_EQ(b[1], 0);
}

TEST(Betti, RP2DependsOnField)
{
    auto P = th::rp2_6();
    EXPECT_EQ(values(betti(P)), (std::vector<Int>{0, 0, 0}));
    EXPECT_EQ(values(betti(P, Field::gf(2))), (std::vector<Int>{0, 1, 1}));
    EXPECT_EQ(values(betti(P, Field::gf(3))), (std::vector<Int>{0, 0, 0}));
}

TEST(Betti, AlternatingSumIsChi)
{
    for (auto name : {"cp2_9", "s2xs2_sum", "bipyramid"}) {
        auto C = *catalog(name).complex;
        EXPECT_EQ(betti(C).chi(), euler_characteristic(C)) << name;
        EXPECT_EQ(betti(C, Field::gf(2)).chi(), euler_characteristic(C)) << name;
    }
}

TEST(Betti, Errors)
{
    EXPECT_KIND(betti(SimplicialComplex{}), "EmptyInput");
    EXPECT_KIND(Field::gf(4), "InvalidField");
}

TEST(Rank, OverflowFallsBackToBigIntegers)
{
    // rows r1, r2 and r1 + r2 with large entries: rank 2 either way
    const std::int64_t B = 3'000'000'019LL;
    std::vector<detail::SparseCol> cols = {
        {{0, B}, {1, B + 7}, {2, 2 * B + 7}},
        {{0, B - 11}, {1, 5}, {2, B - 6}},
        {{0, 13}, {1, B * 2}, {2, B * 2 + 13}},
    };
    EXPECT_EQ(detail::matrix_rank(cols, Field::rationals()), 2u);
    EXPECT_EQ(detail::rank_integer<mpz_class>(cols), 2u);
}

TEST(Euler, Examples)
{
    EXPECT_EQ(euler_characteristic(simplex_boundary(5)), 2);
    EXPECT_EQ(euler_characteristic(*catalog("cp2_9").complex), 9 - 36 + 84 - 90 + 36);
    EXPECT_EQ(euler_characteristic(kuhnel_lassmann(11, 2)), 0);
}

TEST(Recognition, SphereAndBall)
{
    EXPECT_TRUE(is_homology_sphere(simplex_boundary(4)));
    EXPECT_FALSE(is_homology_ball(simplex_boundary(4)));
    auto D = th::full_simplex(4);
    EXPECT_TRUE(is_homology_ball(D));
    EXPECT_FALSE(is_homology_sphere(D));
    EXPECT_FALSE(is_homology_sphere(*catalog("cp2_9").complex));
    // a stacked ball: star of a vertex in a stacked sphere
    auto S = stacked_sphere(9, 4);
    EXPECT_TRUE(is_homology_ball(closed_star(S, F({5}))));
    EXPECT_KIND(is_homology_sphere(K({{1, 2, 3}, {3, 4}})), "NotPure");
}

TEST(Manifold, KuhnelLassmann)
{
    auto rep = manifold_report(kuhnel_lassmann(11, 2));
    EXPECT_TRUE(rep.is_homology_manifold);
    EXPECT_TRUE(rep.closed);
    EXPECT_TRUE(rep.orientable);
    EXPECT_TRUE(rep.boundary.is_void());
}

TEST(Manifold, SuspendedRP2)
{
    auto S = th::suspension(th::rp2_6());
    auto q = manifold_report(S, Field::rationals());
    auto t = manifold_report(S, Field::gf(2));
    EXPECT_TRUE(q.is_homology_manifold);
    EXPECT_FALSE(t.is_homology_manifold);
    ASSERT_TRUE(t.witness.has_value());
    // the failing face is a suspension point
    EXPECT_EQ(t.witness->size(), 1u);
    EXPECT_FALSE((*t.witness)[0].is_int());
}

TEST(Manifold, SimplexHasBoundary)
{
    auto rep = manifold_report(th::full_simplex(4));
    EXPECT_TRUE(rep.is_homology_manifold);
    EXPECT_FALSE(rep.closed);
    EXPECT_EQ(rep.boundary, simplex_boundary(3));
}

TEST(Manifold, NonOrientable)
{
    auto rep = manifold_report(th::rp2_6(), Field::rationals());
    EXPECT_TRUE(rep.is_homology_manifold);
    EXPECT_FALSE(rep.orientable);
    EXPECT_FALSE(rep.closed);
    EXPECT_TRUE(rep.boundary.is_void());
    // over GF(2) every closed manifold is orientable
    EXPECT_TRUE(manifold_report(th::rp2_6(), Field::gf(2)).closed);
}

TEST(Manifold, Errors)
{
    EXPECT_KIND(manifold_report(K({{1, 2, 3}, {4, 5, 6}})), "NotConnected");
    EXPECT_KIND(manifold_report(K({{1, 2, 3}, {3, 4}})), "NotPure");
}

TEST(Eulerian, Classification)
{
    auto C = *catalog("cp2_9").complex;
    EXPECT_TRUE(is_semi_eulerian(C));
    EXPECT_FALSE(is_eulerian(C));
    auto KL = kuhnel_lassmann(11, 2);
    EXPECT_TRUE(is_semi_eulerian(KL));
    EXPECT_FALSE(is_eulerian(KL));
    EXPECT_TRUE(is_eulerian(simplex_boundary(5)));
    EXPECT_FALSE(is_semi_eulerian(th::full_simplex(4)));
    EXPECT_TRUE(is_semi_eulerian(th::rp2_6()));
}
