#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "homology.hpp"
#include "poset.hpp"

namespace facelab {

/// A stored example with the invariants it is known to have. Tree entries
/// carry their host complex and the face whose link holds the tree.
struct CatalogEntry {
    std::string name;
    std::string provenance;
    std::optional<SimplicialComplex> complex;
    std::optional<GradedPoset> poset;
    std::optional<Coloring> coloring;
    std::vector<LabelFace> tree; // facets in the link of `rho`, in order
    LabelFace rho;
    std::vector<BistellarMove> moves;

    FVector f;
    HVector h;
    std::vector<Int> betti; // β̃_0, β̃_1, ... over Q
};

namespace detail {

inline std::vector<LabelFace> faces_of(std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<LabelFace> out;
    for (auto& r : rows) {
        LabelFace f;
        for (int v : r) f.emplace_back(v);
        out.push_back(std::move(f));
    }
    return out;
}

inline SimplicialComplex cp2_complex()
{
    return SimplicialComplex::from_facets(faces_of({
        {1, 2, 3, 4, 5}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 8}, {1, 2, 3, 7, 8}, {1, 2, 4, 5, 6}, {1, 2, 4, 6, 7},
        {1, 2, 5, 6, 8}, {1, 2, 6, 7, 9}, {1, 2, 6, 8, 9}, {1, 2, 7, 8, 9}, {1, 3, 4, 5, 9}, {1, 3, 4, 7, 8},
        {1, 3, 4, 8, 9}, {1, 3, 5, 6, 8}, {1, 3, 5, 6, 9}, {1, 3, 6, 8, 9}, {1, 4, 5, 6, 7}, {1, 4, 5, 7, 9},
        {1, 4, 7, 8, 9}, {1, 5, 6, 7, 9}, {2, 3, 4, 5, 9}, {2, 3, 4, 6, 7}, {2, 3, 4, 6, 9}, {2, 3, 5, 7, 8},
        {2, 3, 5, 7, 9}, {2, 3, 6, 7, 9}, {2, 4, 5, 6, 8}, {2, 4, 5, 8, 9}, {2, 4, 6, 8, 9}, {2, 5, 7, 8, 9},
        {3, 4, 6, 7, 8}, {3, 4, 6, 8, 9}, {3, 5, 6, 7, 8}, {3, 5, 6, 7, 9}, {4, 5, 6, 7, 8}, {4, 5, 7, 8, 9},
    }));
}

inline SimplicialComplex s2xs2_complex()
{
    return SimplicialComplex::from_facets(faces_of({
        {1, 2, 3, 4, 7},    {1, 2, 3, 4, 10},   {1, 2, 3, 7, 10},   {1, 2, 4, 7, 8},    {1, 2, 4, 8, 11},
        {1, 2, 4, 9, 10},   {1, 2, 4, 9, 12},   {1, 2, 4, 11, 12},  {1, 2, 7, 8, 10},   {1, 2, 8, 9, 10},
        {1, 2, 8, 9, 12},   {1, 2, 8, 11, 12},  {1, 3, 4, 7, 11},   {1, 3, 4, 10, 11},  {1, 3, 7, 8, 11},
        {1, 3, 7, 8, 12},   {1, 3, 7, 9, 10},   {1, 3, 7, 9, 12},   {1, 3, 8, 11, 12},  {1, 3, 9, 10, 12},
        {1, 3, 10, 11, 12}, {1, 4, 7, 8, 11},   {1, 4, 9, 10, 11},  {1, 4, 9, 11, 12},  {1, 7, 8, 9, 10},
        {1, 7, 8, 9, 12},   {1, 9, 10, 11, 12}, {2, 3, 4, 6, 9},    {2, 3, 4, 6, 10},   {2, 3, 4, 7, 12},
        {2, 3, 4, 9, 12},   {2, 3, 5, 7, 9},    {2, 3, 5, 7, 10},   {2, 3, 5, 8, 10},   {2, 3, 5, 8, 11},
        {2, 3, 5, 9, 11},   {2, 3, 6, 9, 11},   {2, 3, 6, 10, 11},  {2, 3, 7, 9, 12},   {2, 3, 8, 10, 11},
        {2, 4, 5, 7, 8},    {2, 4, 5, 7, 12},   {2, 4, 5, 8, 11},   {2, 4, 5, 11, 12},  {2, 4, 6, 9, 10},
        {2, 5, 7, 8, 10},   {2, 5, 7, 9, 11},   {2, 5, 7, 11, 12},  {2, 6, 7, 9, 11},   {2, 6, 7, 9, 12},
        {2, 6, 7, 11, 12},  {2, 6, 8, 9, 10},   {2, 6, 8, 9, 12},   {2, 6, 8, 10, 12},  {2, 6, 10, 11, 12},
        {2, 8, 10, 11, 12}, {3, 4, 5, 8, 9},    {3, 4, 5, 8, 12},   {3, 4, 5, 9, 12},   {3, 4, 6, 7, 11},
        {3, 4, 6, 7, 12},   {3, 4, 6, 8, 9},    {3, 4, 6, 8, 12},   {3, 4, 6, 10, 11},  {3, 5, 7, 9, 10},
        {3, 5, 8, 9, 11},   {3, 5, 8, 10, 12},  {3, 5, 9, 10, 12},  {3, 6, 7, 8, 11},   {3, 6, 7, 8, 12},
        {3, 6, 8, 9, 11},   {3, 8, 10, 11, 12}, {4, 5, 7, 8, 10},   {4, 5, 7, 10, 12},  {4, 5, 8, 9, 11},
        {4, 5, 8, 10, 12},  {4, 5, 9, 11, 12},  {4, 6, 7, 10, 11},  {4, 6, 7, 10, 12},  {4, 6, 8, 9, 10},
        {4, 6, 8, 10, 12},  {4, 7, 8, 9, 10},   {4, 7, 8, 9, 11},   {4, 7, 9, 10, 11},  {5, 7, 9, 10, 11},
        {5, 7, 10, 11, 12}, {5, 9, 10, 11, 12}, {6, 7, 8, 9, 11},   {6, 7, 8, 9, 12},   {6, 7, 10, 11, 12},
    }));
}

// Each move is given by two facets; F is their intersection, G the rest.
inline std::vector<BistellarMove> s2xs2_move_list()
{
    auto rows = faces_of({{1, 2, 3, 7, 10}, {2, 3, 5, 7, 10}, {2, 3, 5, 9, 11}, {2, 3, 6, 9, 11}, {1, 2, 4, 9, 10},
                          {2, 4, 6, 9, 10}});
    std::vector<BistellarMove> out;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        const auto& p = rows[i];
        const auto& q = rows[i + 1];
        BistellarMove mv;
        std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(mv.F));
        std::set_symmetric_difference(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(mv.G));
        out.push_back(std::move(mv));
    }
    return out;
}

inline SimplicialComplex s2xs2_after_moves()
{
    auto K = s2xs2_complex();
    for (auto& mv : s2xs2_move_list()) K = apply_bistellar(K, mv);
    return K;
}

// Suspension of a pentagon: apexes 6, 7 get color 1, the pentagon color 2.
inline std::pair<SimplicialComplex, Coloring> bipyramid_data()
{
    std::vector<LabelFace> fs;
    for (int i = 1; i <= 5; ++i)
        for (int apex : {6, 7}) fs.push_back({Label(i), Label(i % 5 + 1), Label(apex)});
    Coloring c;
    for (int i = 1; i <= 5; ++i) c.phi[Label(i)] = 2;
    c.phi[Label(6)] = 1;
    c.phi[Label(7)] = 1;
    c.type = {1, 2};
    return {SimplicialComplex::from_facets(fs), c};
}

// Face poset of the 2x2 square torus: vertices x_ij, horizontal edges h_ij
// from (i,j) to (i+1,j), vertical edges v_ij from (i,j) to (i,j+1), squares
// s_ij bounded by h_ij, h_i(j+1), v_ij, v_(i+1)j. Indices are mod 2.
inline GradedPoset torus_poset_data()
{
    auto nm = [](char c, int i, int j) { return std::string(1, c) + std::to_string(i % 2) + std::to_string(j % 2); };
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (char c : {'x', 'h', 'v', 's'})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) names.push_back(nm(c, i, j));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            covers.push_back({nm('x', i, j), nm('h', i, j)});
            covers.push_back({nm('x', i + 1, j), nm('h', i, j)});
            covers.push_back({nm('x', i, j), nm('v', i, j)});
            covers.push_back({nm('x', i, j + 1), nm('v', i, j)});
            covers.push_back({nm('h', i, j), nm('s', i, j)});
            covers.push_back({nm('h', i, j + 1), nm('s', i, j)});
            covers.push_back({nm('v', i, j), nm('s', i, j)});
            covers.push_back({nm('v', i + 1, j), nm('s', i, j)});
        }
    return GradedPoset::from_covers(names, covers);
}

inline void check_golden(const CatalogEntry& e, const SimplicialComplex& K)
{
    auto bad = [&](const std::string& what) { fail("CatalogSelfCheck", e.name + ": " + what); };
    if (!e.f.empty() && f_vector(K) != e.f) bad("f-vector");
    if (!e.h.empty() && h_vector(K) != e.h) bad("h-vector");
    if (!e.betti.empty()) {
        auto b = betti(K);
        for (std::size_t i = 0; i < e.betti.size(); ++i)
            if (b[static_cast<int>(i)] != e.betti[i]) bad("Betti numbers");
    }
}

} // namespace detail

inline std::vector<std::string> catalog_names()
{
    return {"cp2_9", "cp2_tree", "s2xs2_sum", "s2xs2_moves", "s2xs2_tree", "bipyramid", "torus_poset"};
}

/// Load a stored example and check it against its recorded invariants.
inline CatalogEntry catalog(const std::string& name)
{
    CatalogEntry e;
    e.name = name;
    if (name == "cp2_9") {
        e.provenance = "9-vertex CP2 (Kühnel)";
        e.complex = detail::cp2_complex();
        e.f = {1, 9, 36, 84, 90, 36};
        e.h = {1, 4, 10, 20, -1, 2};
        e.betti = {0, 0, 1, 0, 1};
    } else if (name == "cp2_tree") {
        e.provenance = "spanning simple 2-tree in the link of [1,2] of cp2_9";
        e.complex = detail::cp2_complex();
        e.rho = {1, 2};
        e.tree = detail::faces_of({{3, 4, 7}, {3, 4, 5}, {4, 5, 6}, {5, 6, 8}, {6, 8, 9}});
    } else if (name == "s2xs2_sum") {
        e.provenance = "12-vertex (S2xS2)#(S2xS2) (Lutz)";
        e.complex = detail::s2xs2_complex();
        e.f = {1, 12, 63, 192, 225, 90};
        e.h = {1, 7, 25, 65, -13, 5};
        e.betti = {0, 0, 4, 0, 1};
    } else if (name == "s2xs2_moves") {
        e.provenance = "three 1-moves making s2xs2_sum 2-neighborly";
        e.complex = detail::s2xs2_complex();
        e.moves = detail::s2xs2_move_list();
    } else if (name == "s2xs2_tree") {
        e.provenance = "spanning simple 2-tree in the link of {1,2} after s2xs2_moves";
        e.complex = detail::s2xs2_after_moves();
        e.rho = {1, 2};
        e.tree = detail::faces_of({{3, 5, 10}, {5, 7, 10}, {7, 8, 10}, {8, 9, 10}, {8, 9, 12}, {4, 9, 12}, {4, 6, 9},
                                   {4, 11, 12}});
    } else if (name == "bipyramid") {
        e.provenance = "boundary of the pentagonal bipyramid, balanced of type (1,2)";
        auto [K, c] = detail::bipyramid_data();
        e.complex = K;
        e.coloring = c;
        e.f = {1, 7, 15, 10};
        e.h = {1, 4, 4, 1};
        e.betti = {0, 0, 1};
    } else if (name == "torus_poset") {
        e.provenance = "face poset of the torus from four squares";
        e.poset = detail::torus_poset_data();
    } else {
        fail("UnknownEntry", name);
    }

    if (e.complex) detail::check_golden(e, *e.complex);
    if (!e.tree.empty()) {
        auto L = link(*e.complex, e.rho);
        auto T = validate_simple_tree(L, e.tree);
        if (T.vertex_order.size() != L.num_vertices()) fail("CatalogSelfCheck", name + ": tree is not spanning");
    }
    if (!e.moves.empty()) {
        auto K = *e.complex;
        for (auto& mv : e.moves) K = apply_bistellar(K, mv);
        if (!is_i_neighborly(K, 2)) fail("CatalogSelfCheck", name + ": moves do not reach a 2-neighborly complex");
    }
    if (e.coloring) validate_coloring(*e.complex, *e.coloring);
    if (e.poset) {
        auto th = toric_h(*e.poset).th;
        if (th != std::vector<Int>{1, 1, 7, -1}) fail("CatalogSelfCheck", name + ": toric h");
    }
    return e;
}

// ---------------------------------------------------------------------------
// realization per space

/// Spaces accepted by realize_space, in the spelling used by feasibility().
inline std::vector<std::string> realizable_spaces() { return {"CP2", "S2xS2_sum2", "S1xS3", "K3", "S3xS3_pairs"}; }

/// A triangulation of `space` with h1 = a and h2 = b, built from the stored
/// seed for that space. K3 and S3xS3 have no stored seed.
inline RealizeResult realize_space(const std::string& space, Int a, Int b)
{
    if (space == "K3" || space == "S3xS3_pairs") fail("NoSeedComplex", space + " has no stored triangulation; supply one and call realize_g_pair");
    auto fz = feasibility(space, a - 1, b - a);
    if (!fz.feasible) fail("TargetInfeasible", space + ": " + fz.bound);

    if (space == "CP2") {
        auto e = catalog("cp2_tree");
        return realize_g_pair(*e.complex, lift_facets(e.tree, e.rho), a, b);
    }
    if (space == "S1xS3") {
        // h1 = n - 5 and g2 = f1 - 5n + 15 along the fill of Δ(n)
        int n = static_cast<int>(a + 5);
        auto fr = s1xs3_fill(n, (b - a) + 5 * Int{n} - 15);
        return {std::move(fr.complex), std::move(fr.log)};
    }
    // S2xS2_sum2: each stored 1-move raises g2 by one; the last one makes the
    // complex 2-neighborly and the stored tree takes over from there.
    auto moves = detail::s2xs2_move_list();
    Int g = b - a;
    RealizeResult res;
    res.complex = detail::s2xs2_complex();
    res.log.push_back(detail::record_start(res.complex));
    std::size_t k = static_cast<std::size_t>(std::min<Int>(g - 18, static_cast<Int>(moves.size())));
    for (std::size_t i = 0; i < k; ++i) detail::apply_logged(res.complex, res.log, moves[i]);
    if (k == moves.size()) {
        auto e = catalog("s2xs2_tree");
        auto more = realize_g_pair(res.complex, lift_facets(e.tree, e.rho), a, b);
        res.complex = std::move(more.complex);
        res.log.insert(res.log.end(), more.log.begin() + 1, more.log.end());
        return res;
    }
    for (Int i = 7; i < a; ++i) detail::subdivide_first_facet(res.complex, res.log);
    return res;
}

} // namespace facelab
