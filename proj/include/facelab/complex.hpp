#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "error.hpp"

namespace facelab {

/// Opaque vertex name: an integer or a string. Integers sort numerically and
/// before all strings; strings sort lexicographically.
class Label {
public:
    Label() : v_(std::int64_t{0}) {}
    Label(int x) : v_(std::int64_t{x}) {}
    Label(long x) : v_(std::int64_t{x}) {}
    Label(long long x) : v_(std::int64_t{x}) {}
    Label(std::string s) : v_(std::move(s)) {}
    Label(const char* s) : v_(std::string(s)) {}

    bool is_int() const { return v_.index() == 0; }
    std::int64_t as_int() const { return std::get<0>(v_); }
    const std::string& as_string() const { return std::get<1>(v_); }
    std::string str() const { return is_int() ? std::to_string(as_int()) : as_string(); }

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b)
    {
        if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
        if (a.is_int()) return a.as_int() <=> b.as_int();
        int c = a.as_string().compare(b.as_string());
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    std::variant<std::int64_t, std::string> v_;
};

/// A face as sorted vertex indices into the owning complex's vertex table.
using Face = std::vector<int>;
/// A face spelled with labels (the form used at API boundaries).
using LabelFace = std::vector<Label>;

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : f) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
        return h;
    }
};
using FaceSet = std::unordered_set<Face, FaceHash>;

inline std::string to_string(const LabelFace& f)
{
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f[i].str();
    }
    return s + "]";
}

namespace detail {

inline bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Sort, dedupe and drop facets contained in other facets.
inline void reduce_antichain(std::vector<Face>& facets)
{
    for (auto& f : facets) std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    if (facets.empty() || facets.front().size() == facets.back().size()) {
        std::sort(facets.begin(), facets.end());
        return;
    }
    std::vector<Face> kept;
    for (auto& f : facets) {
        bool absorbed = false;
        for (auto& g : kept) {
            if (g.size() > f.size() && is_subset(f, g)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    facets = std::move(kept);
}

} // namespace detail

class SimplicialComplex {
public:
    /// The void complex (no faces at all).
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<LabelFace>& facet_list)
    {
        if (facet_list.empty()) fail("EmptyInput", "facet list is empty");
        std::vector<Label> labels;
        for (auto& f : facet_list) labels.insert(labels.end(), f.begin(), f.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        std::vector<Face> facets;
        facets.reserve(facet_list.size());
        for (auto& f : facet_list) {
            Face g;
            g.reserve(f.size());
            for (auto& l : f) g.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
            std::sort(g.begin(), g.end());
            if (std::adjacent_find(g.begin(), g.end()) != g.end())
                fail("DuplicateVertexInFacet", to_string(f));
            facets.push_back(std::move(g));
        }
        return from_indexed(labels, std::move(facets));
    }

    /// Build from facets given as indices into `labels`. Unused labels are
    /// dropped; the result is canonical. An empty facet list gives the void
    /// complex, a single empty facet gives {∅}.
    static SimplicialComplex from_indexed(const std::vector<Label>& labels, std::vector<Face> facets)
    {
        SimplicialComplex K;
        detail::reduce_antichain(facets);
        std::vector<char> used(labels.size(), 0);
        for (auto& f : facets)
            for (int v : f) used[v] = 1;
        std::vector<int> order;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (used[i]) order.push_back(static_cast<int>(i));
        std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
        std::vector<int> remap(labels.size(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) {
            remap[order[i]] = static_cast<int>(i);
            K.labels_.push_back(labels[order[i]]);
        }
        for (std::size_t i = 1; i < K.labels_.size(); ++i)
            if (K.labels_[i] == K.labels_[i - 1]) fail("VertexLabelCollision", K.labels_[i].str());
        for (auto& f : facets) {
            for (int& v : f) v = remap[v];
            std::sort(f.begin(), f.end());
        }
        std::sort(facets.begin(), facets.end());
        K.facets_ = std::move(facets);
        return K;
    }

    const std::vector<Label>& vertices() const { return labels_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_facets() const { return facets_.size(); }
    bool is_void() const { return facets_.empty(); }

    /// Dimension of the largest facet; −1 for {∅}, −2 for the void complex.
    int dim() const
    {
        int d = -2;
        for (auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }
    /// Facet cardinality d of a pure (d−1)-complex.
    int d() const { return dim() + 1; }

    bool is_pure() const
    {
        for (auto& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    void require_pure(const char* op) const
    {
        if (!is_pure()) fail("NotPure", std::string(op) + " needs a pure complex");
    }

    int index_of(const Label& l) const
    {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || !(*it == l)) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    /// Convert a labelled face; unknown labels raise FaceNotInComplex.
    Face to_face(const LabelFace& lf) const
    {
        Face f;
        for (auto& l : lf) {
            int i = index_of(l);
            if (i < 0) fail("FaceNotInComplex", to_string(lf) + " (unknown vertex " + l.str() + ")");
            f.push_back(i);
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) fail("DuplicateVertexInFacet", to_string(lf));
        return f;
    }

    LabelFace labels_of(const Face& f) const
    {
        LabelFace lf;
        lf.reserve(f.size());
        for (int v : f) lf.push_back(labels_[v]);
        return lf;
    }

    std::vector<LabelFace> facet_labels() const
    {
        std::vector<LabelFace> out;
        for (auto& f : facets_) out.push_back(labels_of(f));
        return out;
    }

    bool contains_face(const Face& f) const
    {
        for (auto& g : facets_)
            if (detail::is_subset(f, g)) return true;
        return false;
    }

    bool contains_face(const LabelFace& lf) const
    {
        Face f;
        for (auto& l : lf) {
            int i = index_of(l);
            if (i < 0) return false;
            f.push_back(i);
        }
        std::sort(f.begin(), f.end());
        return contains_face(f);
    }

    bool has_facet(const Face& f) const { return std::binary_search(facets_.begin(), facets_.end(), f); }
    bool has_facet(const LabelFace& lf) const { return contains_face(lf) && has_facet(to_face(lf)); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

private:
    std::vector<Label> labels_;
    std::vector<Face> facets_;
};

// ---------------------------------------------------------------------------
// face enumeration

/// Calls fn on every (k)-subset of `f` (as a sorted Face).
template <class Fn>
void for_each_subset(const Face& f, int k, Fn&& fn)
{
    int n = static_cast<int>(f.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Face sub(k);
    while (true) {
        for (int i = 0; i < k; ++i) sub[i] = f[idx[i]];
        fn(sub);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// All i-dimensional faces, sorted. i = −1 gives the empty face.
inline std::vector<Face> all_faces(const SimplicialComplex& K, int i)
{
    if (i < -1 || i > K.dim()) fail("DimensionOutOfRange", "dimension " + std::to_string(i));
    std::vector<Face> out;
    for (auto& f : K.facets()) for_each_subset(f, i + 1, [&](const Face& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Faces grouped by dimension: entry k holds the (k−1)-faces, k = 0..dim+1.
inline std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& K)
{
    int D = K.dim();
    std::vector<std::vector<Face>> out(std::max(D + 2, 0));
    for (int i = -1; i <= D; ++i) out[i + 1] = all_faces(K, i);
    return out;
}

inline FaceSet face_set(const SimplicialComplex& K)
{
    FaceSet s;
    for (auto& f : K.facets()) {
        int n = static_cast<int>(f.size());
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            Face g;
            for (int j = 0; j < n; ++j)
                if (m >> j & 1) g.push_back(f[j]);
            s.insert(std::move(g));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// local operations

inline SimplicialComplex link(const SimplicialComplex& K, const Face& rho)
{
    std::vector<Face> fs;
    for (auto& f : K.facets()) {
        if (!detail::is_subset(rho, f)) continue;
        Face g;
        std::set_difference(f.begin(), f.end(), rho.begin(), rho.end(), std::back_inserter(g));
        fs.push_back(std::move(g));
    }
    if (fs.empty()) fail("FaceNotInComplex", to_string(K.labels_of(rho)));
    return SimplicialComplex::from_indexed(K.vertices(), std::move(fs));
}

inline SimplicialComplex link(const SimplicialComplex& K, const LabelFace& rho)
{
    return link(K, K.to_face(rho));
}

inline SimplicialComplex closed_star(const SimplicialComplex& K, const Face& rho)
{
    std::vector<Face> fs;
    for (auto& f : K.facets())
        if (detail::is_subset(rho, f)) fs.push_back(f);
    if (fs.empty()) fail("FaceNotInComplex", to_string(K.labels_of(rho)));
    return SimplicialComplex::from_indexed(K.vertices(), std::move(fs));
}

inline SimplicialComplex closed_star(const SimplicialComplex& K, const LabelFace& rho)
{
    return closed_star(K, K.to_face(rho));
}

inline SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B)
{
    for (auto& l : B.vertices())
        if (A.index_of(l) >= 0) fail("VertexLabelCollision", l.str());
    std::vector<Label> labels = A.vertices();
    int off = static_cast<int>(labels.size());
    labels.insert(labels.end(), B.vertices().begin(), B.vertices().end());
    std::vector<Face> fs;
    for (auto& f : A.facets())
        for (auto& g : B.facets()) {
            Face h = f;
            for (int v : g) h.push_back(v + off);
            fs.push_back(std::move(h));
        }
    return SimplicialComplex::from_indexed(labels, std::move(fs));
}

/// Faces of K contained in the vertex set W.
inline SimplicialComplex vertex_induced_subcomplex(const SimplicialComplex& K, const LabelFace& W)
{
    std::vector<char> in(K.num_vertices(), 0);
    for (auto& l : W) {
        int i = K.index_of(l);
        if (i >= 0) in[i] = 1;
    }
    std::vector<Face> fs;
    for (auto& f : K.facets()) {
        Face g;
        for (int v : f)
            if (in[v]) g.push_back(v);
        fs.push_back(std::move(g));
    }
    return SimplicialComplex::from_indexed(K.vertices(), std::move(fs));
}

/// adjacency[u][v] is true when {u,v} is an edge.
inline std::vector<std::vector<char>> adjacency(const SimplicialComplex& K)
{
    std::size_t n = K.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto& f : K.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) adj[f[i]][f[j]] = adj[f[j]][f[i]] = 1;
    return adj;
}

inline std::vector<std::pair<Label, Label>> nonedges(const SimplicialComplex& K)
{
    auto adj = adjacency(K);
    std::vector<std::pair<Label, Label>> out;
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
            if (!adj[i][j]) out.emplace_back(K.vertices()[i], K.vertices()[j]);
    return out;
}

inline std::size_t num_edges(const SimplicialComplex& K)
{
    std::size_t n = K.num_vertices();
    return n * (n - 1) / 2 - nonedges(K).size();
}

/// True iff every i-subset of the vertex set is a face.
inline bool is_i_neighborly(const SimplicialComplex& K, int i)
{
    if (i <= 1) return true;
    if (i == 2) return nonedges(K).empty();
    FaceSet s = face_set(K);
    Face all(K.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    bool ok = true;
    for_each_subset(all, i, [&](const Face& f) {
        if (ok && !s.count(f)) ok = false;
    });
    return ok;
}

inline bool is_connected(const SimplicialComplex& K)
{
    std::size_t n = K.num_vertices();
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& f : K.facets())
        for (std::size_t j = 1; j < f.size(); ++j) parent[find(f[j])] = find(f[0]);
    int r = find(0);
    for (std::size_t v = 1; v < n; ++v)
        if (find(static_cast<int>(v)) != r) return false;
    return true;
}

/// K # K′ along facets σ ∈ K and σ′ ∈ K′; `bij` maps each vertex of σ′ to one of σ.
inline SimplicialComplex connected_sum(const SimplicialComplex& K, const LabelFace& sigma, const SimplicialComplex& K2,
                                       const LabelFace& sigma2, const std::map<Label, Label>& bij)
{
    Face s = K.to_face(sigma);
    Face s2 = K2.to_face(sigma2);
    if (!K.has_facet(s)) fail("NotAFacet", to_string(sigma));
    if (!K2.has_facet(s2)) fail("NotAFacet", to_string(sigma2));
    if (s.size() != s2.size() || bij.size() != s2.size()) fail("BijectionArityMismatch", "sizes differ");
    std::map<Label, Label> ren;
    LabelFace image;
    for (auto& l : sigma2) {
        auto it = bij.find(l);
        if (it == bij.end()) fail("BijectionArityMismatch", "no image for " + l.str());
        if (std::find(sigma.begin(), sigma.end(), it->second) == sigma.end())
            fail("BijectionArityMismatch", it->second.str() + " is not in the first facet");
        ren[l] = it->second;
        image.push_back(it->second);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) fail("BijectionArityMismatch", "not injective");
    for (auto& l : K2.vertices())
        if (!ren.count(l) && K.index_of(l) >= 0) fail("VertexLabelCollision", l.str());

    std::vector<LabelFace> out;
    for (auto& f : K.facets())
        if (f != s) out.push_back(K.labels_of(f));
    for (auto& f : K2.facets()) {
        if (f == s2) continue;
        LabelFace g;
        for (int v : f) {
            auto it = ren.find(K2.vertices()[v]);
            g.push_back(it == ren.end() ? K2.vertices()[v] : it->second);
        }
        out.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(out);
}

/// Identify σ with σ′ via `bij` (σ → σ′) and remove both facets.
inline SimplicialComplex handle_addition(const SimplicialComplex& K, const LabelFace& sigma, const LabelFace& sigma2,
                                         const std::map<Label, Label>& bij)
{
    Face s = K.to_face(sigma);
    Face s2 = K.to_face(sigma2);
    if (!K.has_facet(s)) fail("NotAFacet", to_string(sigma));
    if (!K.has_facet(s2)) fail("NotAFacet", to_string(sigma2));
    if (bij.size() != s.size() || s.size() != s2.size()) fail("BijectionArityMismatch", "sizes differ");
    Face common;
    std::set_intersection(s.begin(), s.end(), s2.begin(), s2.end(), std::back_inserter(common));
    if (!common.empty()) fail("AdmissibilityViolation", "facets share vertex " + K.vertices()[common[0]].str());
    auto adj = adjacency(K);
    std::vector<int> phi(K.num_vertices(), -1);
    for (auto& [a, b] : bij) {
        int u = K.index_of(a), w = K.index_of(b);
        if (u < 0 || w < 0 || !std::binary_search(s.begin(), s.end(), u) || !std::binary_search(s2.begin(), s2.end(), w))
            fail("BijectionArityMismatch", a.str() + "->" + b.str());
        if (std::find(phi.begin(), phi.end(), w) != phi.end()) fail("BijectionArityMismatch", "not injective");
        phi[u] = w;
    }
    for (int u : s) {
        int w = phi[u];
        if (w < 0) fail("BijectionArityMismatch", "no image for " + K.vertices()[u].str());
        if (adj[u][w])
            fail("AdmissibilityViolation", "vertices " + K.vertices()[u].str() + " and " + K.vertices()[w].str() + " are adjacent");
        for (std::size_t x = 0; x < K.num_vertices(); ++x)
            if (adj[u][x] && adj[w][x])
                fail("AdmissibilityViolation", "vertices " + K.vertices()[u].str() + " and " + K.vertices()[w].str() +
                                                   " share neighbor " + K.vertices()[x].str());
    }
    // merge φ(v) into v
    std::vector<int> target(K.num_vertices());
    std::iota(target.begin(), target.end(), 0);
    for (int u : s) target[phi[u]] = u;
    std::vector<Face> fs;
    for (auto& f : K.facets()) {
        if (f == s || f == s2) continue;
        Face g;
        for (int v : f) g.push_back(target[v]);
        fs.push_back(std::move(g));
    }
    return SimplicialComplex::from_indexed(K.vertices(), std::move(fs));
}

} // namespace facelab
