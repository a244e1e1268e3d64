#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "complex.hpp"
#include "enumeration.hpp"
#include "homology.hpp"

namespace facelab {

// ---------------------------------------------------------------------------
// spheres

/// Boundary of the simplex on vertices 1..d+1: a (d-1)-sphere.
inline SimplicialComplex simplex_boundary(int d)
{
    if (d < 1) fail("ArgumentOutOfRange", "simplex_boundary needs d >= 1");
    Face all(d + 1);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Face> fs;
    for_each_subset(all, d, [&](const Face& f) { fs.push_back(f); });
    std::vector<Label> labels;
    for (int i = 1; i <= d + 1; ++i) labels.emplace_back(i);
    return SimplicialComplex::from_indexed(labels, std::move(fs));
}

/// Stacked (d-1)-sphere on 1..n: vertex v > d+1 subdivides {v-d, ..., v-1}.
inline SimplicialComplex stacked_sphere(int n, int d)
{
    if (d < 2 || n < d + 1) fail("ArgumentOutOfRange", "stacked_sphere needs d >= 2 and n >= d+1");
    std::set<std::vector<int>> facets;
    for (int skip = 1; skip <= d + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.insert(f);
    }
    for (int v = d + 2; v <= n; ++v) {
        std::vector<int> F;
        for (int u = v - d; u < v; ++u) F.push_back(u);
        facets.erase(F);
        for (int u : F) {
            std::vector<int> g;
            for (int x : F)
                if (x != u) g.push_back(x);
            g.push_back(v);
            facets.insert(g);
        }
    }
    std::vector<LabelFace> out;
    for (auto& f : facets) out.emplace_back(f.begin(), f.end());
    return SimplicialComplex::from_facets(out);
}

namespace detail {

// Repeatedly undo facet subdivisions; stacked spheres reduce to ∂Δ.
inline bool reduces_to_simplex_boundary(SimplicialComplex K)
{
    int d = K.d();
    while (true) {
        if (static_cast<int>(K.num_vertices()) == d + 1) return static_cast<int>(K.num_facets()) == d + 1;
        FaceSet faces = face_set(K);
        bool moved = false;
        for (std::size_t v = 0; v < K.num_vertices() && !moved; ++v) {
            std::vector<Face> star;
            std::set<int> lk;
            for (auto& f : K.facets())
                if (std::binary_search(f.begin(), f.end(), static_cast<int>(v))) {
                    star.push_back(f);
                    for (int u : f)
                        if (u != static_cast<int>(v)) lk.insert(u);
                }
            if (static_cast<int>(star.size()) != d || static_cast<int>(lk.size()) != d) continue;
            Face L(lk.begin(), lk.end());
            if (faces.count(L)) continue;
            std::vector<Face> fs;
            for (auto& f : K.facets())
                if (!std::binary_search(f.begin(), f.end(), static_cast<int>(v))) fs.push_back(f);
            fs.push_back(L);
            K = SimplicialComplex::from_indexed(K.vertices(), std::move(fs));
            moved = true;
        }
        if (!moved) return false;
    }
}

inline void require_manifold_without_boundary(const SimplicialComplex& K, const Field& field, const char* op)
{
    if (!K.is_pure()) fail("HypothesisNotMet", std::string(op) + ": complex is not pure");
    if (!is_connected(K)) fail("HypothesisNotMet", std::string(op) + ": complex is not connected");
    auto rep = manifold_report(K, field);
    if (!rep.is_homology_manifold || !rep.boundary.is_void())
        fail("HypothesisNotMet", std::string(op) + ": not a homology manifold without boundary");
}

} // namespace detail

/// For closed homology manifolds: stacked iff h1 = h2 (d >= 4). Lower
/// dimensions fall back to undoing subdivisions.
inline bool is_stacked_sphere(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    detail::require_manifold_without_boundary(K, field, "is_stacked_sphere");
    if (K.d() >= 4) {
        auto h = h_vector(K);
        return h[1] == h[2];
    }
    return detail::reduces_to_simplex_boundary(K);
}

/// Every vertex link is a stacked sphere.
inline bool in_walkup_class(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    K.require_pure("in_walkup_class");
    for (std::size_t v = 0; v < K.num_vertices(); ++v) {
        auto L = link(K, Face{static_cast<int>(v)});
        if (!is_stacked_sphere(L, field)) return false;
    }
    return true;
}

/// True if `map` (a permutation of the vertex labels) carries facets to facets.
inline bool is_automorphism(const SimplicialComplex& K, const std::map<Label, Label>& map)
{
    std::vector<LabelFace> image;
    for (auto& f : K.facet_labels()) {
        LabelFace g;
        for (auto& l : f) {
            auto it = map.find(l);
            if (it == map.end()) return false;
            g.push_back(it->second);
        }
        image.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(image) == K;
}

// ---------------------------------------------------------------------------
// move log

/// One step of a construction; `op` is "start", "bistellar" or "retriangulate".
struct MoveRecord {
    std::string op;
    LabelFace F, G;                // bistellar
    std::vector<LabelFace> facets; // start complex or retriangulated ball
    Label vertex;                  // retriangulation cone point
    Int f0 = 0, f1 = 0;
};

using MoveLog = std::vector<MoveRecord>;

inline Label fresh_vertex(const SimplicialComplex& K)
{
    for (int i = 1;; ++i) {
        Label l("w" + std::to_string(i));
        if (K.index_of(l) < 0) return l;
    }
}

// ---------------------------------------------------------------------------
// bistellar moves

struct BistellarMove {
    LabelFace F, G;
};

/// h after an m-move: +1 for m < i < d-m, -1 for d-m <= i <= m.
inline HVector bistellar_h_effect(HVector h, int m)
{
    int d = static_cast<int>(h.size()) - 1;
    // moves with 2m >= d are reverses of (d-1-m)-moves and lower the middle
    for (int i = 0; i <= d; ++i) {
        if (m < i && i < d - m) ++h[i];
        if (d - m <= i && i <= m) --h[i];
    }
    return h;
}

/// Replace F * ∂G by ∂F * G after checking the induced subcomplex on F ∪ G.
/// G may be a single vertex new to K (facet subdivision).
inline SimplicialComplex apply_bistellar(const SimplicialComplex& K, const BistellarMove& mv, bool check_h = false)
{
    K.require_pure("apply_bistellar");
    int d = K.d();
    LabelFace F = mv.F, G = mv.G;
    std::sort(F.begin(), F.end());
    std::sort(G.begin(), G.end());
    if (static_cast<int>(F.size() + G.size()) != d + 1 || F.empty() || G.empty())
        fail("IllegalMove", "|F| + |G| must equal d + 1 with both nonempty");
    LabelFace both;
    std::set_intersection(F.begin(), F.end(), G.begin(), G.end(), std::back_inserter(both));
    if (!both.empty()) fail("IllegalMove", "F and G share " + both[0].str());
    for (auto& l : F)
        if (K.index_of(l) < 0) fail("IllegalMove", "vertex " + l.str() + " of F is not in the complex");
    bool new_vertex = false;
    for (auto& l : G)
        if (K.index_of(l) < 0) {
            if (G.size() != 1) fail("IllegalMove", "vertex " + l.str() + " of G is not in the complex");
            new_vertex = true;
        }

    // expected induced subcomplex F * ∂G
    std::set<LabelFace> expected;
    for (std::size_t j = 0; j < G.size(); ++j) {
        LabelFace f = F;
        for (std::size_t t = 0; t < G.size(); ++t)
            if (t != j) f.push_back(G[t]);
        std::sort(f.begin(), f.end());
        expected.insert(f);
    }
    if (!new_vertex) {
        LabelFace W = F;
        W.insert(W.end(), G.begin(), G.end());
        auto induced = vertex_induced_subcomplex(K, W);
        std::set<LabelFace> got;
        for (auto& f : induced.facet_labels()) got.insert(f);
        for (auto& f : got)
            if (!expected.count(f)) fail("IllegalMove", "induced subcomplex has extra face " + to_string(f));
        for (auto& f : expected)
            if (!got.count(f)) fail("IllegalMove", "missing face " + to_string(f) + " of F * boundary(G)");
    } else if (!K.has_facet(F)) {
        fail("IllegalMove", to_string(F) + " is not a facet");
    }
    for (auto& f : expected)
        if (!K.has_facet(f)) fail("IllegalMove", to_string(f) + " is not a facet");

    std::vector<LabelFace> out;
    for (auto& f : K.facet_labels())
        if (!expected.count(f)) out.push_back(f);
    for (std::size_t j = 0; j < F.size(); ++j) {
        LabelFace f = G;
        for (std::size_t t = 0; t < F.size(); ++t)
            if (t != j) f.push_back(F[t]);
        out.push_back(std::move(f));
    }
    auto R = SimplicialComplex::from_facets(out);
    if (check_h) {
        auto want = bistellar_h_effect(h_vector(K), static_cast<int>(G.size()) - 1);
        if (h_vector(R) != want) fail("InternalError", "bistellar h-effect mismatch");
    }
    return R;
}

/// A random legal move of K, or nothing after `tries` misses. F is a face whose
/// link is the boundary of a simplex G that is not itself a face; m = 0
/// subdivides a facet with a fresh vertex.
inline std::optional<BistellarMove> random_bistellar_move(const SimplicialComplex& K, std::mt19937& rng, int tries = 400)
{
    int d = K.d();
    for (int t = 0; t < tries; ++t) {
        int m = static_cast<int>(rng() % static_cast<unsigned>(d));
        if (m == 0) {
            auto f = K.facets()[rng() % K.num_facets()];
            return BistellarMove{K.labels_of(f), {fresh_vertex(K)}};
        }
        auto faces = all_faces(K, d - m - 1);
        auto F = faces[rng() % faces.size()];
        auto L = link(K, F);
        if (L.num_vertices() != static_cast<std::size_t>(m + 1) || L.num_facets() != static_cast<std::size_t>(m + 1))
            continue;
        LabelFace G = L.vertices();
        if (K.contains_face(G)) continue;
        BistellarMove mv{K.labels_of(F), G};
        try {
            apply_bistellar(K, mv);
            return mv;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// simple trees and central retriangulation

/// Facet order certified as a simple tree, with its natural vertex order.
struct SimpleTree {
    std::vector<LabelFace> facets;
    LabelFace vertex_order;

    std::size_t length() const { return facets.size(); }
};

inline SimpleTree validate_simple_tree(const SimplicialComplex& host, const std::vector<LabelFace>& ordered)
{
    if (ordered.empty()) throw NotSimpleTree(0, "empty facet list");
    SimpleTree T;
    std::size_t d = ordered[0].size();
    std::set<Label> seen;
    // codim-1 faces of the tree so far, with multiplicity
    std::map<LabelFace, int> ridge_count;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        LabelFace s = ordered[i];
        std::sort(s.begin(), s.end());
        if (s.size() != d) throw NotSimpleTree(i, "facet size differs");
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw NotSimpleTree(i, "repeated vertex");
        if (!host.has_facet(s)) throw NotSimpleTree(i, to_string(s) + " is not a facet of the host");
        if (i == 0) {
            for (auto& l : s) {
                seen.insert(l);
                T.vertex_order.push_back(l);
            }
        } else {
            LabelFace fresh, old;
            for (auto& l : s) (seen.count(l) ? old : fresh).push_back(l);
            if (fresh.size() != 1) throw NotSimpleTree(i, "must add exactly one new vertex");
            auto it = ridge_count.find(old);
            if (it == ridge_count.end()) throw NotSimpleTree(i, "attaching face " + to_string(old) + " is not in the tree");
            if (it->second != 1) throw NotSimpleTree(i, "attaching face " + to_string(old) + " is interior");
            seen.insert(fresh[0]);
            T.vertex_order.push_back(fresh[0]);
        }
        for (std::size_t j = 0; j < s.size(); ++j) {
            LabelFace r;
            for (std::size_t t = 0; t < s.size(); ++t)
                if (t != j) r.push_back(s[t]);
            ++ridge_count[r];
        }
        T.facets.push_back(s);
    }
    return T;
}

/// Codim-1 faces lying in exactly one of the given facets.
inline std::vector<LabelFace> free_ridges(const std::vector<LabelFace>& facets)
{
    std::map<LabelFace, int> cnt;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        for (std::size_t j = 0; j < f.size(); ++j) {
            LabelFace r;
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != j) r.push_back(f[t]);
            ++cnt[r];
        }
    }
    std::vector<LabelFace> out;
    for (auto& [r, c] : cnt)
        if (c == 1) out.push_back(r);
    return out;
}

inline SimplicialComplex tree_boundary(const SimpleTree& T) { return SimplicialComplex::from_facets(free_ridges(T.facets)); }

namespace detail {

inline SimplicialComplex crt_unchecked(const SimplicialComplex& K, const std::vector<LabelFace>& ball, const Label& w)
{
    std::set<LabelFace> drop;
    for (auto f : ball) {
        std::sort(f.begin(), f.end());
        drop.insert(f);
    }
    std::vector<LabelFace> out;
    for (auto& f : K.facet_labels())
        if (!drop.count(f)) out.push_back(f);
    for (auto& r : free_ridges(ball)) {
        LabelFace f = r;
        f.push_back(w);
        out.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(out);
}

} // namespace detail

/// Replace the interior of the ball B (given by its facets) by the cone from
/// `w` over its boundary.
inline SimplicialComplex central_retriangulation(const SimplicialComplex& K, const std::vector<LabelFace>& ball,
                                                 const Label& w, const Field& field = Field::rationals())
{
    if (K.index_of(w) >= 0) fail("VertexCollision", w.str() + " already in the complex");
    if (ball.empty()) fail("NotABall", "empty ball");
    for (auto& f : ball)
        if (!K.has_facet(f)) fail("NotABall", to_string(f) + " is not a facet");
    if (!is_homology_ball(SimplicialComplex::from_facets(ball), field)) fail("NotABall", "subcomplex is not a homology ball");
    return detail::crt_unchecked(K, ball, w);
}

inline SimplicialComplex central_retriangulation(const SimplicialComplex& K, const SimpleTree& T, const Label& w)
{
    if (K.index_of(w) >= 0) fail("VertexCollision", w.str() + " already in the complex");
    for (auto& f : T.facets)
        if (!K.has_facet(f)) fail("NotABall", to_string(f) + " is not a facet");
    return detail::crt_unchecked(K, T.facets, w);
}

/// Join every facet of a tree in a link with the face ρ.
inline std::vector<LabelFace> lift_facets(const std::vector<LabelFace>& facets, const LabelFace& rho)
{
    std::vector<LabelFace> out;
    for (auto f : facets) {
        f.insert(f.end(), rho.begin(), rho.end());
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    return out;
}

/// Search for a spanning simple 2-tree in lk ρ, a 2-sphere. Depth-first over
/// lexicographically ordered facets with a node budget.
inline std::optional<SimpleTree> find_spanning_tree_in_link(const SimplicialComplex& K, const LabelFace& rho,
                                                             std::size_t budget = 2000000)
{
    K.require_pure("find_spanning_tree_in_link");
    if (!K.contains_face(rho)) fail("FaceNotInComplex", to_string(rho));
    auto L = link(K, rho);
    if (L.dim() != 2 || !is_homology_sphere(L)) fail("NotASphereLink", "link of " + to_string(rho) + " is not a 2-sphere");
    const auto& tri = L.facets();
    std::size_t nv = L.num_vertices();
    std::map<Face, std::vector<int>> by_edge;
    for (std::size_t t = 0; t < tri.size(); ++t)
        for_each_subset(tri[t], 2, [&](const Face& e) { by_edge[e].push_back(static_cast<int>(t)); });

    std::vector<int> order;
    std::vector<char> used_v(nv, 0), used_t(tri.size(), 0);
    std::size_t nodes = 0;
    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() + 2 == nv) return true;
        if (++nodes > budget) return false;
        std::vector<int> cand;
        for (int t : order)
            for_each_subset(tri[t], 2, [&](const Face& e) {
                for (int u : by_edge[e]) {
                    if (used_t[u]) continue;
                    int third = -1;
                    for (int v : tri[u])
                        if (v != e[0] && v != e[1]) third = v;
                    if (!used_v[third]) cand.push_back(u);
                }
            });
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (int u : cand) {
            int fresh = -1;
            for (int v : tri[u])
                if (!used_v[v]) fresh = v;
            used_t[u] = 1;
            used_v[fresh] = 1;
            order.push_back(u);
            if (dfs()) return true;
            order.pop_back();
            used_v[fresh] = 0;
            used_t[u] = 0;
        }
        return false;
    };
    for (std::size_t s = 0; s < tri.size(); ++s) {
        used_t.assign(tri.size(), 0);
        used_v.assign(nv, 0);
        order = {static_cast<int>(s)};
        used_t[s] = 1;
        for (int v : tri[s]) used_v[v] = 1;
        if (dfs()) {
            std::vector<LabelFace> fs;
            for (int t : order) fs.push_back(L.labels_of(tri[t]));
            return validate_simple_tree(L, fs);
        }
        if (nodes > budget) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kühnel–Lassmann generators and the S¹×S³ fill

/// Vertices 1..n; facets {x, x+y1, x+y1+y2, ...} mod n for all arrangements of
/// the difference vector (1,...,1,2) of length 2m.
inline SimplicialComplex kuhnel_lassmann(int n, int m)
{
    if (m < 2 || n < 4 * m + 3) fail("ArgumentOutOfRange", "kuhnel_lassmann needs m >= 2 and n >= 4m+3");
    std::vector<int> diff(2 * m, 1);
    diff.back() = 2;
    std::sort(diff.begin(), diff.end());
    std::vector<LabelFace> facets;
    do {
        for (int x = 1; x <= n; ++x) {
            LabelFace f{Label(x)};
            int cur = x;
            for (int y : diff) {
                cur = (cur - 1 + y) % n + 1;
                f.push_back(Label(cur));
            }
            facets.push_back(std::move(f));
        }
    } while (std::next_permutation(diff.begin(), diff.end()));
    return SimplicialComplex::from_facets(facets);
}

struct FillResult {
    SimplicialComplex complex;
    MoveLog log;
};

namespace detail {

inline int modn(int v, int n) { return ((v - 1) % n + n) % n + 1; }

inline MoveRecord record_start(const SimplicialComplex& K)
{
    MoveRecord r;
    r.op = "start";
    r.facets = K.facet_labels();
    r.f0 = static_cast<Int>(K.num_vertices());
    r.f1 = static_cast<Int>(num_edges(K));
    return r;
}

inline MoveRecord record_bistellar(const SimplicialComplex& after, const BistellarMove& mv)
{
    MoveRecord r;
    r.op = "bistellar";
    r.F = mv.F;
    r.G = mv.G;
    r.f0 = static_cast<Int>(after.num_vertices());
    r.f1 = static_cast<Int>(num_edges(after));
    return r;
}

inline MoveRecord record_crt(const SimplicialComplex& after, const std::vector<LabelFace>& ball, const Label& w)
{
    MoveRecord r;
    r.op = "retriangulate";
    r.facets = ball;
    r.vertex = w;
    r.f0 = static_cast<Int>(after.num_vertices());
    r.f1 = static_cast<Int>(num_edges(after));
    return r;
}

} // namespace detail

/// The grouped 1-move schedule adding edges {x, x+δ} to Δ(n) for δ = 6, 7, ...
/// Each move uses F = {x+1, x+2, x+δ-2, x+δ-1}, G = {x, x+δ}.
inline std::vector<BistellarMove> s1xs3_schedule(int n)
{
    std::vector<BistellarMove> out;
    for (int delta = 6; delta <= n / 2; ++delta) {
        int count = (2 * delta == n) ? n / 2 : n;
        for (int x = 1; x <= count; ++x) {
            auto m = [&](int v) { return Label(detail::modn(v, n)); };
            out.push_back({{m(x + 1), m(x + 2), m(x + delta - 2), m(x + delta - 1)}, {m(x), m(x + delta)}});
        }
    }
    return out;
}

/// Start from kuhnel_lassmann(n,2) and perform the fill schedule until the
/// complex has `target_edges` edges.
inline FillResult s1xs3_fill(int n, Int target_edges, bool check_betti = false)
{
    if (n < 11) fail("ArgumentOutOfRange", "s1xs3_fill needs n >= 11");
    if (target_edges < 5 * n || target_edges > binom(n, 2))
        fail("TargetOutOfRange", "target " + std::to_string(target_edges) + " outside [" + std::to_string(5 * n) + ", " +
                                     std::to_string(binom(n, 2)) + "]");
    FillResult res;
    res.complex = kuhnel_lassmann(n, 2);
    res.log.push_back(detail::record_start(res.complex));
    BettiVector b0;
    if (check_betti) b0 = betti(res.complex);
    Int edges = 5 * n;
    for (auto& mv : s1xs3_schedule(n)) {
        if (edges == target_edges) break;
        try {
            res.complex = apply_bistellar(res.complex, mv);
        } catch (const Error& e) {
            fail("ScheduleBlocked", "move " + to_string(mv.F) + "/" + to_string(mv.G) + " at " + std::to_string(edges) +
                                        " edges: " + e.what());
        }
        ++edges;
        res.log.push_back(detail::record_bistellar(res.complex, mv));
        if (check_betti && !(betti(res.complex) == b0)) fail("InternalError", "fill changed the Betti numbers");
    }
    if (edges != target_edges) fail("ScheduleBlocked", "schedule exhausted at " + std::to_string(edges) + " edges");
    return res;
}

// ---------------------------------------------------------------------------
// realization machine

struct RealizeResult {
    SimplicialComplex complex;
    MoveLog log;
};

namespace detail {

inline LabelFace common_core(const std::vector<LabelFace>& facets)
{
    LabelFace core = facets.at(0);
    std::sort(core.begin(), core.end());
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        LabelFace next;
        std::set_intersection(core.begin(), core.end(), f.begin(), f.end(), std::back_inserter(next));
        core = std::move(next);
    }
    return core;
}

// Cyclic vertex order of a circle complex, starting at its smallest vertex and
// moving to the smaller neighbour first.
inline LabelFace circle_order(const SimplicialComplex& C)
{
    std::size_t n = C.num_vertices();
    std::vector<std::vector<int>> nb(n);
    for (auto& e : C.facets()) {
        if (e.size() != 2) fail("InternalError", "circle has a non-edge facet");
        nb[e[0]].push_back(e[1]);
        nb[e[1]].push_back(e[0]);
    }
    for (auto& v : nb) {
        if (v.size() != 2) fail("InternalError", "link is not a circle");
        std::sort(v.begin(), v.end());
    }
    LabelFace out;
    int prev = -1, cur = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(C.vertices()[cur]);
        int next = (nb[cur][0] != prev) ? nb[cur][0] : nb[cur][1];
        prev = cur;
        cur = next;
    }
    if (cur != 0) fail("InternalError", "link is not a single circle");
    return out;
}

// σ ∗ (circle lk σ minus its closing edge), in path order.
inline std::vector<LabelFace> fan_tree(const SimplicialComplex& K, const LabelFace& sigma)
{
    LabelFace cyc = circle_order(link(K, sigma));
    std::vector<LabelFace> out;
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
        LabelFace f = sigma;
        f.push_back(cyc[i]);
        f.push_back(cyc[i + 1]);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    return out;
}

inline void apply_logged(SimplicialComplex& K, MoveLog& log, const BistellarMove& mv)
{
    K = apply_bistellar(K, mv);
    log.push_back(record_bistellar(K, mv));
}

inline Label crt_logged(SimplicialComplex& K, MoveLog& log, const std::vector<LabelFace>& ball)
{
    Label w = fresh_vertex(K);
    K = crt_unchecked(K, ball, w);
    log.push_back(record_crt(K, ball, w));
    return w;
}

inline void subdivide_first_facet(SimplicialComplex& K, MoveLog& log)
{
    BistellarMove mv{K.labels_of(K.facets().front()), {fresh_vertex(K)}};
    apply_logged(K, log, mv);
}

} // namespace detail

/// Hit h1 = a, h2 = b from a 2-neighborly K with a spanning simple tree whose
/// facets share a codimension-3 face: full retriangulations of spanning trees,
/// one partial retriangulation, then facet subdivisions for any extra vertices.
inline RealizeResult realize_g_pair(const SimplicialComplex& K, const std::vector<LabelFace>& tree, Int a, Int b)
{
    K.require_pure("realize_g_pair");
    int d = K.d();
    if (d < 4) fail("PreconditionFailed", "realize_g_pair needs d >= 4");
    if (!is_i_neighborly(K, 2)) fail("PreconditionFailed", "complex is not 2-neighborly");
    SimpleTree T0 = validate_simple_tree(K, tree);
    if (T0.vertex_order.size() != K.num_vertices()) fail("PreconditionFailed", "tree is not spanning");
    LabelFace core = detail::common_core(T0.facets);
    if (static_cast<int>(core.size()) < d - 3) fail("PreconditionFailed", "tree facets do not share a codimension-3 face");
    auto h = h_vector(K);
    Int h1 = h[1], g2 = h[2] - h[1];
    Int g = b - a;
    if (a < h1 || g < g2 || b > binom(a + 1, 2))
        fail("TargetInfeasible", "(" + std::to_string(a) + "," + std::to_string(b) + ") outside the window h1 >= " +
                                     std::to_string(h1) + ", " + std::to_string(g2) + " + h1 <= h2 <= C(h1+1,2)");

    RealizeResult res;
    res.complex = K;
    res.log.push_back(detail::record_start(K));
    Int a_mid = h1;
    if (g > g2) {
        a_mid = h1 + 1;
        while (binom(a_mid, 2) < g) ++a_mid;
        Int k = a_mid - 1 - h1;
        Int j = g - binom(a_mid, 2) + a_mid;
        std::vector<LabelFace> cur = T0.facets;
        LabelFace sigma;
        for (Int it = 0; it < k; ++it) {
            Label w = detail::crt_logged(res.complex, res.log, cur);
            if (it == 0) {
                sigma = core;
                sigma.resize(d - 3);
            } else {
                sigma.erase(sigma.begin());
            }
            sigma.push_back(w);
            std::sort(sigma.begin(), sigma.end());
            cur = detail::fan_tree(res.complex, sigma);
        }
        std::vector<LabelFace> part(cur.begin(), cur.begin() + j);
        validate_simple_tree(res.complex, part);
        detail::crt_logged(res.complex, res.log, part);
    }
    for (Int i = a_mid; i < a; ++i) detail::subdivide_first_facet(res.complex, res.log);
    auto hh = h_vector(res.complex);
    if (hh[1] != a || hh[2] != b) fail("InternalError", "realization missed the target h-values");
    return res;
}

// ---------------------------------------------------------------------------
// 2-neighborly refit (tree growth, core concentration, nonedge elimination)

struct RefitResult {
    SimplicialComplex complex;
    SimpleTree tree;
    LabelFace rho; // codimension-3 face contained in every tree facet
    MoveLog log;
};

namespace detail {

// Grow a spanning simple tree of lk κ in K through a simplicial map that is
// injective on facets, then retriangulate stars of repeated vertices until the
// map is injective. Returns the lifted tree κ ∗ T̃ in the updated K.
inline std::vector<LabelFace> grow_tree_in_link(SimplicialComplex& K, MoveLog& log, const LabelFace& kappa)
{
    SimplicialComplex H = kappa.empty() ? K : link(K, kappa);
    const auto& hf = H.facets();
    std::map<Face, std::vector<int>> by_ridge;
    for (std::size_t t = 0; t < hf.size(); ++t)
        for_each_subset(hf[t], static_cast<int>(hf[t].size()) - 1,
                        [&](const Face& r) { by_ridge[r].push_back(static_cast<int>(t)); });

    std::vector<std::vector<int>> tfac; // tree facets as tree-vertex ids
    std::vector<int> phi;               // tree vertex -> H vertex
    std::vector<int> img_of(hf.size(), -1);
    std::vector<char> covered(H.num_vertices(), 0);
    std::size_t n_covered = 0;

    tfac.push_back({});
    for (int v : hf[0]) {
        tfac[0].push_back(static_cast<int>(phi.size()));
        phi.push_back(v);
        covered[v] = 1;
        ++n_covered;
    }
    img_of[0] = 0;

    while (n_covered < H.num_vertices()) {
        std::vector<int> parent(hf.size(), -2);
        std::deque<int> q;
        for (std::size_t t = 0; t < hf.size(); ++t)
            if (img_of[t] >= 0) {
                parent[t] = -1;
                q.push_back(static_cast<int>(t));
            }
        int target = -1;
        while (!q.empty() && target < 0) {
            int A = q.front();
            q.pop_front();
            for_each_subset(hf[A], static_cast<int>(hf[A].size()) - 1, [&](const Face& r) {
                if (target >= 0) return;
                for (int B : by_ridge[r]) {
                    if (parent[B] != -2) continue;
                    parent[B] = A;
                    bool hit = false;
                    for (int v : hf[B])
                        if (!covered[v]) hit = true;
                    if (hit) {
                        target = B;
                        return;
                    }
                    q.push_back(B);
                }
            });
        }
        if (target < 0) fail("InternalError", "link is not strongly connected");
        std::vector<int> path;
        for (int t = target; parent[t] != -1; t = parent[t]) path.push_back(t);
        std::reverse(path.begin(), path.end());
        for (int B : path) {
            int A = parent[B];
            const auto& ta = tfac[img_of[A]];
            std::vector<int> nf;
            for (int y : ta)
                if (std::binary_search(hf[B].begin(), hf[B].end(), phi[y])) nf.push_back(y);
            int u = -1;
            for (int v : hf[B])
                if (!std::binary_search(hf[A].begin(), hf[A].end(), v)) u = v;
            nf.push_back(static_cast<int>(phi.size()));
            phi.push_back(u);
            if (!covered[u]) {
                covered[u] = 1;
                ++n_covered;
            }
            img_of[B] = static_cast<int>(tfac.size());
            tfac.push_back(nf);
        }
    }

    // labels from here on, since K changes under repairs
    std::vector<Label> phil(phi.size());
    for (std::size_t y = 0; y < phi.size(); ++y) phil[y] = H.vertices()[phi[y]];
    auto image = [&](const std::vector<int>& t) {
        LabelFace f = kappa;
        for (int y : t) f.push_back(phil[y]);
        std::sort(f.begin(), f.end());
        return f;
    };
    while (true) {
        std::map<Label, int> fiber;
        for (auto& l : phil) ++fiber[l];
        int yt = -1;
        for (int y = static_cast<int>(phil.size()) - 1; y >= 0; --y)
            if (fiber[phil[y]] >= 2) {
                yt = y;
                break;
            }
        if (yt < 0) break;
        std::vector<LabelFace> ball;
        for (auto& t : tfac)
            if (std::find(t.begin(), t.end(), yt) != t.end()) ball.push_back(image(t));
        validate_simple_tree(K, ball);
        phil[yt] = crt_logged(K, log, ball);
    }
    std::vector<LabelFace> out;
    for (auto& t : tfac) out.push_back(image(t));
    return out;
}

} // namespace detail

/// A triangulation containing a spanning simple (d-1)-tree.
inline std::vector<LabelFace> refit_spanning_tree(SimplicialComplex& K, MoveLog& log)
{
    auto T = detail::grow_tree_in_link(K, log, {});
    validate_simple_tree(K, T);
    return T;
}

/// Given a spanning tree, concentrate it until every facet contains a fixed
/// (d-4)-dimensional face; returns that face and the new tree.
inline std::pair<LabelFace, std::vector<LabelFace>> refit_common_core(SimplicialComplex& K, MoveLog& log,
                                                                      std::vector<LabelFace> T)
{
    int d = K.d();
    LabelFace kappa;
    while (static_cast<int>(kappa.size()) < d - 3) {
        Label w = detail::crt_logged(K, log, T);
        kappa.push_back(w);
        std::sort(kappa.begin(), kappa.end());
        T = detail::grow_tree_in_link(K, log, kappa);
    }
    auto tree = validate_simple_tree(K, T);
    if (tree.vertex_order.size() != K.num_vertices()) fail("InternalError", "core tree is not spanning");
    return {kappa, T};
}

/// One nonedge-elimination cycle: needs a spanning tree T0 whose facets all
/// contain ρ0 (|ρ0| = d-3). Returns the new core and tree; the nonedge count
/// drops by one.
inline std::pair<LabelFace, std::vector<LabelFace>> refit_remove_nonedge(SimplicialComplex& K, MoveLog& log,
                                                                         const LabelFace& rho0,
                                                                         const std::vector<LabelFace>& T0)
{
    int d = K.d();
    std::size_t before = nonedges(K).size();
    if (before == 0) return {rho0, T0};
    Label w1 = detail::crt_logged(K, log, T0);
    LabelFace s1 = rho0;
    s1.push_back(w1);
    std::sort(s1.begin(), s1.end());
    LabelFace cyc = detail::circle_order(link(K, s1));
    if (cyc.size() + d - 2 != K.num_vertices()) fail("InternalError", "circle does not span");

    auto ne = nonedges(K);
    Label x = ne.front().first, y = ne.front().second;
    // rotate so the cycle reads (x, v_1..v_s, y, u_1..u_t)
    auto ix = std::find(cyc.begin(), cyc.end(), x);
    if (ix == cyc.end()) fail("InternalError", "nonedge vertex off the circle");
    std::rotate(cyc.begin(), ix, cyc.end());
    std::size_t iy = std::find(cyc.begin(), cyc.end(), y) - cyc.begin();
    LabelFace v(cyc.begin() + 1, cyc.begin() + iy), u(cyc.begin() + iy + 1, cyc.end());
    if (v.empty() || u.empty()) fail("InternalError", "nonedge vertices adjacent on the circle");

    Label w0 = rho0.front();
    LabelFace rp(rho0.begin() + 1, rho0.end()); // ρ0′
    auto face = [](std::initializer_list<LabelFace> parts) {
        LabelFace f;
        for (auto& p : parts) f.insert(f.end(), p.begin(), p.end());
        std::sort(f.begin(), f.end());
        return f;
    };

    // Step 1
    LabelFace path = {x};
    path.insert(path.end(), v.begin(), v.end());
    path.push_back(y);
    path.insert(path.end(), u.begin(), u.end());
    std::vector<LabelFace> T;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) T.push_back(face({s1, {path[i], path[i + 1]}}));
    validate_simple_tree(K, T);
    std::vector<LabelFace> S;
    LabelFace P1 = {x};
    P1.insert(P1.end(), v.begin(), v.end());
    P1.push_back(y);
    for (std::size_t i = 0; i + 1 < P1.size(); ++i) S.push_back(face({rp, {w1, P1[i], P1[i + 1]}}));
    LabelFace P2 = {v.back(), y};
    P2.insert(P2.end(), u.begin(), u.end());
    for (std::size_t i = 0; i + 1 < P2.size(); ++i) S.push_back(face({rp, {w0, P2[i], P2[i + 1]}}));
    Label w2 = detail::crt_logged(K, log, T);
    std::vector<LabelFace> Sw2;
    for (auto& f : S) Sw2.push_back(face({f, {w2}}));
    validate_simple_tree(K, Sw2);
    Label w3 = detail::crt_logged(K, log, Sw2);

    // Step 2
    BistellarMove mv{face({rp, {w1, w2, w3}}), {x, y}};
    detail::apply_logged(K, log, mv);

    // Step 3
    LabelFace P4 = {x, y};
    P4.insert(P4.end(), u.begin(), u.end());
    P4.push_back(w0);
    P4.insert(P4.end(), v.rbegin(), v.rend());
    std::vector<LabelFace> S4t;
    S4t.push_back(face({rp, {w2, P4[0], P4[1]}}));
    S4t.push_back(face({rp, {x, w1, y}}));
    for (std::size_t i = 1; i + 1 < P4.size(); ++i) S4t.push_back(face({rp, {w2, P4[i], P4[i + 1]}}));
    std::vector<LabelFace> T4;
    for (auto& f : S4t) T4.push_back(face({f, {w3}}));
    validate_simple_tree(K, T4);
    std::vector<LabelFace> S4 = S4t;
    S4.push_back(face({rp, {y, w1, w3}}));
    Label w4 = detail::crt_logged(K, log, T4);
    std::vector<LabelFace> T5;
    for (auto& f : S4) T5.push_back(face({f, {w4}}));
    validate_simple_tree(K, T5);
    Label w5 = detail::crt_logged(K, log, T5);

    LabelFace rho = face({rp, {w4, w5}});
    if (nonedges(K).size() + 1 != before) fail("InternalError", "nonedge count did not drop by one");
    auto Tn = detail::fan_tree(K, rho);
    auto tree = validate_simple_tree(K, Tn);
    if (tree.vertex_order.size() != K.num_vertices()) fail("InternalError", "new tree is not spanning");
    LabelFace core = rho;
    core.erase(core.begin());
    return {core, Tn};
}

/// Turn a connected homology manifold without boundary (d >= 4) into a
/// 2-neighborly triangulation with a spanning simple tree through a
/// codimension-3 face.
inline RefitResult two_neighborly_refit(const SimplicialComplex& K, const Field& field = Field::rationals(),
                                        std::vector<std::pair<std::string, SimplicialComplex>>* trace = nullptr)
{
    if (K.d() < 4) fail("HypothesisNotMet", "two_neighborly_refit needs d >= 4");
    detail::require_manifold_without_boundary(K, field, "two_neighborly_refit");
    int d = K.d();
    RefitResult res;
    res.complex = K;
    res.log.push_back(detail::record_start(K));
    if (is_i_neighborly(K, 2)) {
        for (auto& rho : all_faces(K, d - 4)) {
            auto lr = K.labels_of(rho);
            auto T = find_spanning_tree_in_link(K, lr, 200000);
            if (!T) continue;
            auto lifted = lift_facets(T->facets, lr);
            res.tree = validate_simple_tree(K, lifted);
            res.rho = lr;
            return res;
        }
    }
    auto T = refit_spanning_tree(res.complex, res.log);
    if (trace) trace->emplace_back("spanning tree", res.complex);
    auto [core, T2] = refit_common_core(res.complex, res.log, T);
    if (trace) trace->emplace_back("common core", res.complex);
    while (!nonedges(res.complex).empty()) {
        std::tie(core, T2) = refit_remove_nonedge(res.complex, res.log, core, T2);
        if (trace) trace->emplace_back("nonedge removed", res.complex);
    }
    res.tree = validate_simple_tree(res.complex, T2);
    res.rho = core;
    return res;
}

// ---------------------------------------------------------------------------
// feasibility

struct Feasibility {
    bool feasible = false;
    std::string bound;
};

/// Characterizations of (g1, g2) for the spaces with a complete answer. For
/// S3xS3_pairs the pair is (h1 - 1, h2 - h1), matching 15 <= b-a <= C(a,2).
inline Feasibility feasibility(const std::string& space, Int g1, Int g2)
{
    static const std::map<std::string, Int> lower = {
        {"S1xS3", 15}, {"CP2", 6}, {"K3", 55}, {"S2xS2_sum2", 18}, {"S3xS3_pairs", 15}};
    auto it = lower.find(space);
    if (it == lower.end()) fail("UnknownSpace", space);
    Feasibility f;
    Int hi = binom(g1 + 1, 2);
    f.feasible = g1 >= 0 && it->second <= g2 && g2 <= hi;
    f.bound = std::to_string(it->second) + " <= g2 <= C(g1+1,2) = " + std::to_string(hi);
    return f;
}

/// Componentwise minimum h-vector of triangulations of S3 x S3.
inline HVector s3xs3_min_h() { return {1, 6, 21, 56, 126, -21, 20, -1}; }

} // namespace facelab
