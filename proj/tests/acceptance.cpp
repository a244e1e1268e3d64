// End-to-end checks, one line per criterion. Exit status is nonzero if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <facelab/facelab.hpp>

#include "properties.hpp"

using namespace facelab;

namespace {

// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> why;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) why.push_back(what);
    }
    template <class A, class B>
    void eq(const A& a, const B& b, const std::string& what)
    {
        if (!(a == b)) why.push_back(what);
    }
};

std::string show(const std::vector<Int>& v)
{
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

void bipyramid_fine(Check& c)
{
    auto e = catalog("bipyramid");
    auto ff = fine_f(*e.complex, *e.coloring);
    auto fh = fine_h(ff, e.coloring->type);
    // ordered (0,0) (1,0) (0,1) (1,1) (0,2) (1,2)
    std::vector<std::vector<int>> order = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
    std::vector<Int> f, h;
    for (auto& b : order) {
        f.push_back(ff.at(b));
        h.push_back(fh.at(b));
    }
    c.eq(f, std::vector<Int>{1, 2, 5, 10, 5, 10}, "fine f " + show(f));
    c.eq(h, std::vector<Int>{1, 1, 3, 3, 1, 1}, "fine h " + show(h));
    c.eq(ff.size(), order.size(), "fine f has extra entries");
    for (auto& [b, v] : fine_ds_defect(fh, e.coloring->type, euler_characteristic(*e.complex)))
        c.expect(v == 0, "fine DS defect nonzero");
}

void toric_torus(Check& c)
{
    auto T = *catalog("torus_poset").poset;
    auto t = toric_h(T);
    c.eq(t.ascending(), std::vector<Int>{-1, 7, 1, 1}, "toric h " + show(t.ascending()));
    c.expect(all_zero(toric_ds_defect(T)), "toric DS defect nonzero");
    c.eq(order_complex_chi(T), 0, "chi of the order complex");
}

void cd_bipyramid(Check& c)
{
    auto P = face_poset(*catalog("bipyramid").complex, true);
    auto ab = ab_polynomial(P);
    std::vector<Int> got;
    for (auto w : {"aaa", "baa", "aba", "aab", "abb", "bab", "bba", "bbb"}) got.push_back(ab.count(w) ? ab.at(w) : 0);
    c.eq(got, std::vector<Int>{1, 6, 14, 9, 6, 14, 9, 1}, "ab-polynomial " + show(got));
    auto cd = cd_index(ab);
    c.eq(cd, CDIndex{{"ccc", 1}, {"dc", 5}, {"cd", 8}}, "cd-index " + to_string(cd));
    c.eq(expand_cd_index(cd, P.rank() - 1), ab, "cd expansion differs from ab");
}

void cp2_table(Check& c)
{
    auto C = *catalog("cp2_9").complex;
    c.eq(f_vector(C), FVector{1, 9, 36, 84, 90, 36}, "f " + show(f_vector(C)));
    c.eq(h_vector(C), HVector{1, 4, 10, 20, -1, 2}, "h " + show(h_vector(C)));
    c.eq(euler_characteristic(C), 3, "chi");
    auto b = betti(C);
    std::vector<Int> bv;
    for (int i = 0; i <= b.top(); ++i) bv.push_back(b[i]);
    c.eq(bv, std::vector<Int>{0, 0, 1, 0, 1}, "betti " + show(bv));
    c.expect(all_zero(ds_defect(C)), "DS defect");
    bool tight = false;
    for (auto& e : audit(C).entries)
        if (e.name == "even_euler_b")
            tight = e.status == AuditStatus::Tight && e.lhs == Int{10} && e.rhs == Int{10};
    c.expect(tight, "even Euler inequality (b) not tight at 10");
    auto t = catalog("cp2_tree");
    auto L = link(*t.complex, t.rho);
    auto T = validate_simple_tree(L, t.tree);
    c.eq(T.vertex_order.size(), L.num_vertices(), "tree does not span lk[1,2]");
    c.eq(t.rho, LabelFace{Label(1), Label(2)}, "tree face");
}

void s2xs2(Check& c)
{
    auto S = *catalog("s2xs2_sum").complex;
    auto h = h_vector(S);
    c.eq(h[1], 7, "h1");
    c.eq(h[2] - h[1], 18, "g2");
    c.eq(betti(S)[2], 4, "beta2");
    std::set<std::pair<Label, Label>> want = {{1, 5}, {1, 6}, {5, 6}};
    auto ne = nonedges(S);
    c.eq(std::set<std::pair<Label, Label>>(ne.begin(), ne.end()), want, "nonedges");
    c.eq(ne.size(), 3u, "nonedge count");
    auto b0 = betti(S);
    for (auto& mv : catalog("s2xs2_moves").moves) {
        c.eq(mv.G.size(), 2u, "not a 1-move");
        try {
            S = apply_bistellar(S, mv, true);
        } catch (const Error& e) {
            c.expect(false, std::string("move rejected: ") + e.what());
        }
    }
    c.expect(is_i_neighborly(S, 2), "moves do not reach a 2-neighborly complex");
    c.eq(betti(S), b0, "moves changed Betti numbers");
    auto t = catalog("s2xs2_tree");
    auto L = link(*t.complex, t.rho);
    auto T = validate_simple_tree(L, t.tree);
    c.eq(T.vertex_order.size(), L.num_vertices(), "tree does not span lk{1,2}");
}

void kuhnel_lassmann_series(Check& c)
{
    auto M = kuhnel_lassmann(11, 2);
    c.expect(is_i_neighborly(M, 2), "n=11 not 2-neighborly");
    c.eq(M.num_vertices(), 11u, "n=11 vertices");
    c.eq(num_edges(M), 55u, "n=11 edges");
    for (int n = 11; n <= 20; ++n) {
        auto K = kuhnel_lassmann(n, 2);
        auto tag = " at n=" + std::to_string(n);
        auto h = h_vector(K);
        c.eq(static_cast<Int>(num_edges(K)), 5 * n, "f1" + tag);
        c.eq(h[2] - h[1], 15, "g2" + tag);
        auto r = manifold_report(K);
        c.expect(r.is_homology_manifold && r.closed && r.orientable, "not closed orientable" + tag);
        c.expect(in_walkup_class(K), "vertex links not stacked" + tag);
        auto b = betti(K);
        c.expect(b[1] == 1 && b[3] == 1, "betti" + tag);
    }
}

void fill_schedule(Check& c)
{
    auto b0 = betti(kuhnel_lassmann(14, 2));
    for (Int k = 1; k <= 3; ++k) {
        Int target = k * 14 + 5 * 14;
        try {
            auto r = s1xs3_fill(14, target, true);
            c.eq(static_cast<Int>(num_edges(r.complex)), target, "edge count for k=" + std::to_string(k));
            c.eq(betti(r.complex), b0, "betti for k=" + std::to_string(k));
        } catch (const Error& e) {
            c.expect(false, "k=" + std::to_string(k) + " " + e.what());
        }
    }
    auto r = s1xs3_fill(11, binom(11, 2), true);
    c.expect(is_i_neighborly(r.complex, 2), "n=11 full fill not 2-neighborly");
}

void realization_windows(Check& c)
{
    struct Edge {
        const char* space;
        Int yes, no;
    };
    for (auto [sp, yes, no] : {Edge{"CP2", 6, 5}, Edge{"K3", 55, 54}, Edge{"S1xS3", 15, 14}, Edge{"S2xS2_sum2", 18, 17}}) {
        Int g1 = std::string(sp) == "K3" ? 20 : 10;
        c.expect(feasibility(sp, g1, yes).feasible, std::string(sp) + " g2=" + std::to_string(yes) + " rejected");
        c.expect(!feasibility(sp, g1, no).feasible, std::string(sp) + " g2=" + std::to_string(no) + " accepted");
    }
    std::map<std::string, BettiVector> ref = {{"CP2", betti(*catalog("cp2_9").complex)},
                                              {"K3", betti_from_values({0, 0, 22, 0, 1})},
                                              {"S1xS3", betti(kuhnel_lassmann(11, 2))},
                                              {"S2xS2_sum2", betti(*catalog("s2xs2_sum").complex)}};
    std::mt19937 rng(20240);
    for (std::string sp : {"CP2", "K3", "S1xS3", "S2xS2_sum2"}) {
        int hit = 0;
        std::string first_error;
        for (int t = 0; t < 20; ++t) {
            // uniform over feasible g-pairs with 7 <= a <= 13
            Int a, b;
            do {
                a = 7 + static_cast<Int>(rng() % 7);
                b = a + static_cast<Int>(rng() % (binom(a, 2) + 1));
            } while (!feasibility(sp, a - 1, b - a).feasible);
            try {
                auto r = realize_space(sp, a, b);
                auto h = h_vector(r.complex);
                if (h[1] == a && h[2] == b && betti(r.complex) == ref.at(sp)) ++hit;
            } catch (const Error& e) {
                if (first_error.empty()) first_error = e.what();
            }
        }
        c.expect(hit == 20, sp + " hit " + std::to_string(hit) + "/20" + (first_error.empty() ? "" : " (" + first_error + ")"));
    }
}

void s3xs3_floor(Check& c)
{
    auto h = s3xs3_min_h();
    c.eq(h, HVector{1, 6, 21, 56, 126, -21, 20, -1}, "floor " + show(h));
    c.expect(all_zero(ds_defect(h, 0)), "DS defect with chi 0");
    c.eq(chi_from_f(f_from_h(h)), 0, "chi");
    auto hp = h_prime(h, betti_from_values({0, 0, 0, 2, 0, 0, 1}));
    c.eq(hp[4] - hp[3], 70, "h'4 - h'3 = " + std::to_string(hp[4] - hp[3]));
    for (Int a = 5; a <= 14; ++a)
        for (Int b = a; b <= a + 100; ++b)
            if (feasibility("S3xS3_pairs", a - 1, b - a).feasible != (15 <= b - a && b - a <= binom(a, 2)))
                c.expect(false, "feasibility at a=" + std::to_string(a) + " b=" + std::to_string(b));
}

void property_suites(Check& c)
{
    // (i) transforms
    std::mt19937_64 rng64(12345);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
        int d = 1 + static_cast<int>(rng64() % 9);
        FVector f(d + 1);
        f[0] = 1;
        for (int i = 1; i <= d; ++i) f[i] = static_cast<Int>(rng64() % 100000);
        bad += f_from_h(h_from_f(f)) != f;
    }
    c.eq(bad, 0, "(i) transform round trip");

    // (ii) short h recurrence on every catalog complex
    std::vector<SimplicialComplex> cat;
    for (auto& n : catalog_names())
        if (auto e = catalog(n); e.complex) cat.push_back(*e.complex);
    for (auto& C : cat) {
        int d = C.d();
        std::vector<std::vector<Int>> sh(d);
        sh[0] = h_vector(C);
        for (int m = 1; m < d; ++m) sh[m] = short_h(C, m);
        for (int m = 0; m + 1 < d; ++m)
            for (int i = 1; i <= d - m; ++i)
                c.expect((m + 1) * sh[m + 1][i - 1] == i * sh[m][i] + (d - m - i + 1) * sh[m][i - 1], "(ii) recurrence");
    }

    // (iii) bistellar h-effect on random legal moves
    std::mt19937 rng(2024);
    std::vector<SimplicialComplex> hosts = {*catalog("cp2_9").complex, *catalog("s2xs2_sum").complex,
                                            kuhnel_lassmann(12, 2), stacked_sphere(10, 5),
                                            *catalog("bipyramid").complex};
    int moves = 0;
    for (int t = 0; t < 200; ++t) {
        auto& H = hosts[t % hosts.size()];
        auto mv = props::random_legal_move(H, rng);
        if (!mv) continue;
        auto R = apply_bistellar(H, *mv);
        c.expect(h_vector(R) == bistellar_h_effect(h_vector(H), static_cast<int>(mv->G.size()) - 1), "(iii) h-effect");
        ++moves;
        if (t % 3 == 0) H = R;
    }
    c.eq(moves, 200, "(iii) only " + std::to_string(moves) + " legal moves found");

    // (iv) central retriangulation of random simple trees
    std::vector<SimplicialComplex> crt_hosts = {*catalog("cp2_9").complex, kuhnel_lassmann(12, 2),
                                                stacked_sphere(12, 5), *catalog("s2xs2_sum").complex};
    for (int t = 0; t < 40; ++t) {
        auto& H = crt_hosts[t % crt_hosts.size()];
        auto T = validate_simple_tree(H, props::random_simple_tree(H, rng, 8));
        auto R = central_retriangulation(H, T, fresh_vertex(H));
        auto h = h_vector(H), hr = h_vector(R);
        c.expect(hr[1] == h[1] + 1 && hr[2] == h[2] + static_cast<Int>(T.length()), "(iv) h1+1, h2+m");
        c.expect(betti(R) == betti(H), "(iv) Betti numbers");
    }

    // (v) Macaulay against greedy growth
    for (Int a = 1; a <= 60; ++a)
        for (int i = 1; i <= 6; ++i)
            c.expect(macaulay_pseudopower(a, i) == props::greedy_growth(a, i), "(v) a=" + std::to_string(a));

    // (vi) audit over the catalog
    for (auto& C : cat) c.expect(!audit(C).has_proven_violation(), "(vi) proven violation");
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"bipyramid fine vectors", bipyramid_fine},
        {"toric h of the torus poset", toric_torus},
        {"cd-index of the bipyramid", cd_bipyramid},
        {"9-vertex CP2", cp2_table},
        {"(S2xS2)#(S2xS2) and its three moves", s2xs2},
        {"Kuhnel-Lassmann series", kuhnel_lassmann_series},
        {"S1xS3 fill schedule", fill_schedule},
        {"realization windows", realization_windows},
        {"S3xS3 floor", s3xs3_floor},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.why.push_back(std::string("exception: ") + e.what());
        }
        bool ok = c.why.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
        if (!ok) {
            // dedupe repeated notes
            std::vector<std::string> seen;
            for (auto& w : c.why)
                if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
            std::cout << ": ";
            for (std::size_t k = 0; k < seen.size() && k < 4; ++k) std::cout << (k ? "; " : "") << seen[k];
            if (seen.size() > 4) std::cout << "; ...";
        }
        std::cout << "\n";
    }
    return failed ? 1 : 0;
}
