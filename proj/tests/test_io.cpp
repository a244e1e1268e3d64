#include "helpers.hpp"

using namespace facelab;
using th::F;
using th::K;

TEST(ComplexJson, RoundTrip)
{
    for (auto name : {"cp2_9", "s2xs2_sum", "bipyramid"}) {
        auto C = *catalog(name).complex;
        EXPECT_EQ(complex_from_json(complex_to_json(C)), C) << name;
        EXPECT_EQ(parse_complex(complex_to_json(C).dump(2)), C) << name;
    }
    auto S = th::suspension(th::rp2_6());
    EXPECT_EQ(parse_complex(complex_to_json(S).dump()), S);
}

TEST(ComplexJson, BareFacetList)
{
    auto C = parse_complex("[[1,2],[2,3],[1,3]]");
    EXPECT_EQ(C, K({{1, 2}, {2, 3}, {1, 3}}));
}

TEST(ComplexJson, Errors)
{
    try {
        parse_complex("{\"facets\": [[1,2],\n  [2,3,]]}");
        ADD_FAILURE();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 8);
    }
    EXPECT_KIND(parse_complex("{\"faces\": []}"), "ParseError");
    EXPECT_KIND(parse_complex("{\"vertices\": [1,2], \"facets\": [[1,3]]}"), "ParseError");
    EXPECT_KIND(parse_complex("[[1, 2.5]]"), "ParseError");
}

TEST(ComplexText, RoundTrip)
{
    auto C = *catalog("cp2_9").complex;
    EXPECT_EQ(complex_from_text(complex_to_text(C)), C);
    auto M = parse_complex("# mixed labels\na b 1\n1 b c   # comment\n\n");
    EXPECT_EQ(M.num_facets(), 2u);
    EXPECT_TRUE(M.contains_face({Label(1), Label("c")}));
}

TEST(ComplexText, Errors)
{
    try {
        parse_complex("1 2 3\n4 99999999999999999999999 5\n");
        ADD_FAILURE();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
    EXPECT_KIND(parse_complex("# nothing here\n"), "ParseError");
    EXPECT_KIND(load_complex("/nonexistent/file.json"), "FileNotFound");
}

TEST(Coloring, FromComplexFile)
{
    auto j = detail::parse_json(R"({"facets": [[1,2,3]],
        "coloring": {"type": [1,2], "colors": [[1,1],[2,2],[3,2]]}})");
    auto c = coloring_from_json(j);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->type, (std::vector<int>{1, 2}));
    EXPECT_EQ(c->phi.at(Label(3)), 2);
    auto back = coloring_from_json(json{{"coloring", coloring_to_json(*c)}});
    EXPECT_EQ(back->phi, c->phi);
    EXPECT_FALSE(coloring_from_json(json::array()).has_value());
}

TEST(Poset, JsonRoundTrip)
{
    auto T = *catalog("torus_poset").poset;
    auto U = poset_from_json(poset_to_json(T));
    EXPECT_EQ(U.size(), T.size());
    EXPECT_EQ(toric_h(U).th, toric_h(T).th);
    EXPECT_KIND(poset_from_json(json{{"elements", {"a"}}}), "ParseError");
    EXPECT_KIND(poset_from_json(json{{"elements", {"a", "b"}}, {"covers", {{"a"}}}}), "ParseError");
}

TEST(MoveLog, FillReplays)
{
    auto r = s1xs3_fill(12, 66);
    auto log = move_log_from_json(detail::parse_json(move_log_to_json(r.log).dump()));
    EXPECT_EQ(log.size(), r.log.size());
    EXPECT_EQ(replay(log), r.complex);
}

TEST(MoveLog, RealizationReplays)
{
    auto r = realize_space("CP2", 7, 25);
    auto log = move_log_from_json(move_log_to_json(r.log));
    auto R = replay(log);
    EXPECT_EQ(R, r.complex);
    auto h = h_vector(R);
    EXPECT_EQ(h[1], 7);
    EXPECT_EQ(h[2], 25);
}

TEST(MoveLog, Mismatch)
{
    auto r = s1xs3_fill(12, 64);
    auto j = move_log_to_json(r.log);
    j[1]["f1"] = 1000;
    EXPECT_KIND(replay(move_log_from_json(j)), "ReplayMismatch");
    auto k = move_log_to_json(r.log);
    k.erase(0);
    EXPECT_KIND(replay(move_log_from_json(k)), "ReplayMismatch");
    // an explicit start complex substitutes for the missing record
    EXPECT_EQ(replay(move_log_from_json(k), kuhnel_lassmann(12, 2)), r.complex);
    EXPECT_KIND(replay({}), "ReplayMismatch");
    EXPECT_KIND(move_log_from_json(json::array({{{"op", "flip"}}})), "ParseError");
}

TEST(MoveLog, IllegalStepFails)
{
    MoveLog log;
    MoveRecord s;
    s.op = "start";
    s.facets = simplex_boundary(4).facet_labels();
    s.f0 = 5;
    s.f1 = 10;
    MoveRecord b;
    b.op = "bistellar";
    b.F = F({1, 2});
    b.G = F({3, 4, 5});
    log = {s, b};
    EXPECT_KIND(replay(log), "IllegalMove");
}

TEST(Audit, JsonRoundTrip)
{
    AuditAssertions as;
    as.beta1_positive = true;
    auto R = audit(kuhnel_lassmann(11, 2), Field::rationals(), as);
    auto j = audit_to_json(R);
    auto back = audit_from_json(detail::parse_json(j.dump()));
    EXPECT_EQ(audit_to_json(back), j);
    EXPECT_EQ(back.entries.size(), R.entries.size());
    EXPECT_FALSE(j.at("proven_violation").get<bool>());
}

TEST(Betti, Json)
{
    auto j = betti_to_json(betti(*catalog("cp2_9").complex));
    EXPECT_EQ(j.at("reduced"), json({0, 0, 1, 0, 1}));
}
