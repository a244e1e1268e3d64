#include "helpers.hpp"

using namespace facelab;
using th::F;
using th::K;

TEST(Complex, TriangleBoundary)
{
    auto C = K({{1, 2}, {2, 3}, {1, 3}});
    EXPECT_EQ(C.d(), 2);
    EXPECT_EQ(C.num_facets(), 3u);
    EXPECT_EQ(C.num_vertices(), 3u);
}

TEST(Complex, AntichainReduction)
{
    auto C = K({{1, 2, 3}, {1, 2}});
    ASSERT_EQ(C.num_facets(), 1u);
    EXPECT_EQ(C.facet_labels()[0], F({1, 2, 3}));
}

TEST(Complex, Errors)
{
    EXPECT_KIND(SimplicialComplex::from_facets({}), "EmptyInput");
    EXPECT_KIND(K({{1, 1, 2}}), "DuplicateVertexInFacet");
}

TEST(Complex, MixedLabelsSortIntsFirst)
{
    auto C = SimplicialComplex::from_facets({{Label("b"), Label(2)}, {Label("a"), Label(10)}});
    ASSERT_EQ(C.num_vertices(), 4u);
    EXPECT_EQ(C.vertices()[0], Label(2));
    EXPECT_EQ(C.vertices()[1], Label(10));
    EXPECT_EQ(C.vertices()[2], Label("a"));
}

TEST(Complex, Cp2FromCatalog)
{
    auto C = *catalog("cp2_9").complex;
    EXPECT_EQ(C.num_vertices(), 9u);
    EXPECT_EQ(C.num_facets(), 36u);
}

TEST(Faces, AllFaces)
{
    auto T = simplex_boundary(3);
    EXPECT_EQ(all_faces(T, 1).size(), 6u);
    EXPECT_EQ(all_faces(*catalog("cp2_9").complex, 1).size(), 36u);
    auto e = all_faces(T, -1);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_TRUE(e[0].empty());
    EXPECT_KIND(all_faces(T, 2 + 1), "DimensionOutOfRange");
    EXPECT_KIND(all_faces(T, -2), "DimensionOutOfRange");
}

TEST(Faces, BruteForceCountMatchesSubsets)
{
    // every subset of every facet, counted once
    auto C = *catalog("s2xs2_sum").complex;
    auto fs = face_set(C);
    std::size_t total = 0;
    for (int i = -1; i <= C.dim(); ++i) total += all_faces(C, i).size();
    EXPECT_EQ(fs.size(), total);
}

TEST(Link, VertexOfTetrahedronBoundary)
{
    auto L = link(simplex_boundary(3), F({1}));
    EXPECT_EQ(L, K({{2, 3}, {2, 4}, {3, 4}}));
}

TEST(Link, Cp2EdgeLinkIsSevenVertexSphere)
{
    auto e = catalog("cp2_tree");
    auto L = link(*e.complex, e.rho);
    EXPECT_EQ(L.num_vertices(), 7u);
    EXPECT_TRUE(is_homology_sphere(L));
    EXPECT_NO_THROW(validate_simple_tree(L, e.tree));
}

TEST(Link, EmptyFaceGivesComplex)
{
    auto C = stacked_sphere(7, 4);
    EXPECT_EQ(link(C, LabelFace{}), C);
    EXPECT_KIND(link(C, F({1, 99})), "FaceNotInComplex");
    EXPECT_KIND(link(simplex_boundary(3), F({1, 2, 3, 4})), "FaceNotInComplex");
}

TEST(Star, Vertex)
{
    auto S = closed_star(simplex_boundary(3), F({1}));
    EXPECT_EQ(S.num_facets(), 3u);
}

TEST(Star, LastVertexOfStackedSphere)
{
    // the last stacked vertex sits on d facets forming a cone over ∂Δ^{d-1}
    auto C = stacked_sphere(6, 4);
    auto last = C.vertices().back();
    auto S = closed_star(C, LabelFace{last});
    EXPECT_EQ(S.num_facets(), 4u);
    auto L = link(C, LabelFace{last});
    EXPECT_EQ(L.num_facets(), 4u);
    EXPECT_EQ(L.num_vertices(), 4u);
}

TEST(Star, FacetGivesItself)
{
    auto C = simplex_boundary(5);
    auto f = C.facet_labels()[2];
    auto S = closed_star(C, f);
    ASSERT_EQ(S.num_facets(), 1u);
    EXPECT_EQ(S.facet_labels()[0], f);
}

TEST(Join, ConeOverTriangleBoundary)
{
    auto P = SimplicialComplex::from_facets({{Label("p")}});
    auto J = join(P, K({{1, 2}, {2, 3}, {1, 3}}));
    EXPECT_EQ(J.num_facets(), 3u);
    EXPECT_EQ(J.d(), 3);
}

TEST(Join, SuspensionOfS0)
{
    auto A = K({{1}, {2}});
    auto B = K({{3}, {4}});
    auto J = join(A, B);
    EXPECT_EQ(J.num_facets(), 4u);
    EXPECT_TRUE(is_homology_sphere(J));
    EXPECT_KIND(join(A, A), "VertexLabelCollision");
}

TEST(Join, FVectorIsConvolution)
{
    auto A = K({{1, 2, 3}, {3, 4}});
    auto B = K({{10, 11}, {11, 12}, {13}});
    auto fa = f_vector(A), fb = f_vector(B), fj = f_vector(join(A, B));
    std::vector<Int> conv(fa.size() + fb.size() - 1, 0);
    for (std::size_t i = 0; i < fa.size(); ++i)
        for (std::size_t j = 0; j < fb.size(); ++j) conv[i + j] += fa[i] * fb[j];
    EXPECT_EQ(fj, conv);
}

TEST(ConnectedSum, SimplexBoundariesGiveStackedSphere)
{
    auto A = simplex_boundary(4);
    std::vector<LabelFace> fs;
    for (auto& f : simplex_boundary(4).facet_labels()) {
        LabelFace g;
        for (auto& l : f) g.emplace_back(l.as_int() + 100);
        fs.push_back(g);
    }
    auto B = SimplicialComplex::from_facets(fs);
    auto S = connected_sum(A, F({1, 2, 3, 4}), B, F({101, 102, 103, 104}), {{101, 1}, {102, 2}, {103, 3}, {104, 4}});
    EXPECT_EQ(S.num_vertices(), 6u);
    EXPECT_TRUE(is_stacked_sphere(S));
    EXPECT_EQ(h_vector(S)[4], 1 + 1 - 1);
    EXPECT_EQ(f_vector(S), f_vector(stacked_sphere(6, 4)));
}

TEST(ConnectedSum, HAdditivity)
{
    auto A = stacked_sphere(7, 4);
    auto B0 = stacked_sphere(8, 4);
    std::vector<LabelFace> fs;
    for (auto& f : B0.facet_labels()) {
        LabelFace g;
        for (auto& l : f) g.emplace_back(l.as_int() + 100);
        fs.push_back(g);
    }
    auto B = SimplicialComplex::from_facets(fs);
    auto sa = A.facet_labels()[0], sb = B.facet_labels()[0];
    std::map<Label, Label> bij;
    for (std::size_t i = 0; i < sa.size(); ++i) bij[sb[i]] = sa[i];
    auto S = connected_sum(A, sa, B, sb, bij);
    auto hA = h_vector(A), hB = h_vector(B), hS = h_vector(S);
    EXPECT_EQ(hA[2], 3);
    EXPECT_EQ(hB[2], 4);
    EXPECT_EQ(hS[2], 7);
    EXPECT_EQ(hS[4], hA[4] + hB[4] - 1);
}

TEST(ConnectedSum, Errors)
{
    auto A = simplex_boundary(3);
    auto B = stacked_sphere(6, 3);
    EXPECT_KIND(connected_sum(A, F({1, 2}), B, B.facet_labels()[0], {}), "NotAFacet");
    EXPECT_KIND(connected_sum(A, F({1, 2, 3}), B, B.facet_labels()[0], {{1, 1}}), "BijectionArityMismatch");
}

TEST(Handle, FarFacetsOfLongStackedSphere)
{
    auto C = stacked_sphere(14, 4);
    auto a = F({1, 2, 3, 4}), b = F({11, 12, 13, 14});
    ASSERT_TRUE(C.has_facet(a));
    ASSERT_TRUE(C.has_facet(b));
    auto H = handle_addition(C, a, b, {{1, 11}, {2, 12}, {3, 13}, {4, 14}});
    auto rep = manifold_report(H);
    EXPECT_TRUE(rep.is_homology_manifold);
    EXPECT_TRUE(rep.closed);
    EXPECT_TRUE(in_walkup_class(H));
    EXPECT_EQ(betti(H)[1], 1);
    EXPECT_EQ(H.num_vertices(), C.num_vertices() - 4);
    EXPECT_EQ(H.num_facets(), C.num_facets() - 2);
}

TEST(Handle, AdjacentFacetsRejected)
{
    auto C = simplex_boundary(5);
    auto fs = C.facet_labels();
    std::map<Label, Label> bij;
    for (std::size_t i = 0; i < 5; ++i) bij[fs[0][i]] = fs[1][i];
    EXPECT_KIND(handle_addition(C, fs[0], fs[1], bij), "AdmissibilityViolation");
}

TEST(Handle, DistanceTwoRejected)
{
    // 1 and 9 are not adjacent but both neighbor 5
    auto C = stacked_sphere(12, 4);
    try {
        handle_addition(C, F({1, 2, 3, 4}), F({9, 10, 11, 12}), {{1, 9}, {2, 10}, {3, 11}, {4, 12}});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "AdmissibilityViolation");
        EXPECT_NE(std::string(e.what()).find("share neighbor"), std::string::npos) << e.what();
    }
}

TEST(Handle, NonInjectiveBijection)
{
    auto C = stacked_sphere(14, 4);
    EXPECT_KIND(handle_addition(C, F({1, 2, 3, 4}), F({11, 12, 13, 14}), {{1, 11}, {2, 11}, {3, 13}, {4, 14}}),
                "BijectionArityMismatch");
}

TEST(Neighborly, Catalog)
{
    EXPECT_TRUE(is_i_neighborly(*catalog("cp2_9").complex, 2));
    EXPECT_TRUE(is_i_neighborly(*catalog("cp2_9").complex, 3));
    EXPECT_FALSE(is_i_neighborly(*catalog("cp2_9").complex, 4));
    auto S = *catalog("s2xs2_sum").complex;
    EXPECT_FALSE(is_i_neighborly(S, 2));
    auto ne = nonedges(S);
    ASSERT_EQ(ne.size(), 3u);
    EXPECT_EQ(ne[0], (std::pair<Label, Label>{1, 5}));
    EXPECT_EQ(ne[1], (std::pair<Label, Label>{1, 6}));
    EXPECT_EQ(ne[2], (std::pair<Label, Label>{5, 6}));
    EXPECT_TRUE(is_i_neighborly(S, 1));
    EXPECT_TRUE(is_i_neighborly(simplex_boundary(6), 5));
}

TEST(Induced, Basics)
{
    auto T = simplex_boundary(4);
    EXPECT_EQ(vertex_induced_subcomplex(T, T.vertices()), T);
    EXPECT_EQ(vertex_induced_subcomplex(T, F({1, 2, 3})), K({{1, 2, 3}}));
}

TEST(Induced, BistellarPairSpansFJoinBoundaryG)
{
    auto S = *catalog("s2xs2_sum").complex;
    auto mv = catalog("s2xs2_moves").moves.front();
    LabelFace W = mv.F;
    W.insert(W.end(), mv.G.begin(), mv.G.end());
    auto I = vertex_induced_subcomplex(S, W);
    // F * ∂G
    std::vector<LabelFace> expect;
    for (std::size_t i = 0; i < mv.G.size(); ++i) {
        LabelFace f = mv.F;
        for (std::size_t j = 0; j < mv.G.size(); ++j)
            if (j != i) f.push_back(mv.G[j]);
        std::sort(f.begin(), f.end());
        expect.push_back(f);
    }
    EXPECT_EQ(I, SimplicialComplex::from_facets(expect));
}
