#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace facelab {

/// f-vector stored as (f_{-1}, f_0, ..., f_{d-1}); entry 0 is the empty face.
using FVector = std::vector<Int>;
/// h-vector (h_0, ..., h_d).
using HVector = std::vector<Int>;
/// g-vector (g_0, ..., g_{floor(d/2)}).
using GVector = std::vector<Int>;

inline FVector f_vector(const SimplicialComplex& K)
{
    FVector f;
    for (int i = -1; i <= K.dim(); ++i) f.push_back(static_cast<Int>(all_faces(K, i).size()));
    return f;
}

inline HVector h_from_f(const FVector& f)
{
    if (f.empty()) fail("InvalidVector", "empty f-vector");
    Int d = static_cast<Int>(f.size()) - 1;
    HVector h(d + 1, 0);
    for (Int i = 0; i <= d; ++i) {
        Int s = 0;
        for (Int j = 0; j <= i; ++j) s = add(s, mul(sign_pow(i - j) * binom(d - j, d - i), f[j]));
        h[i] = s;
    }
    return h;
}

inline FVector f_from_h(const HVector& h)
{
    if (h.empty()) fail("InvalidVector", "empty h-vector");
    Int d = static_cast<Int>(h.size()) - 1;
    FVector f(d + 1, 0);
    for (Int i = 0; i <= d; ++i) {
        Int s = 0;
        for (Int j = 0; j <= i; ++j) s = add(s, mul(binom(d - j, d - i), h[j]));
        f[i] = s;
    }
    return f;
}

inline HVector h_vector(const SimplicialComplex& K)
{
    K.require_pure("h_vector");
    return h_from_f(f_vector(K));
}

inline GVector g_from_h(const HVector& h)
{
    Int d = static_cast<Int>(h.size()) - 1;
    GVector g;
    for (Int i = 0; i <= d / 2; ++i) g.push_back(i == 0 ? h[0] : sub(h[i], h[i - 1]));
    return g;
}

/// Euler characteristic from an f-vector (f_{-1} excluded).
inline Int chi_from_f(const FVector& f)
{
    Int c = 0;
    for (std::size_t i = 1; i < f.size(); ++i) c = add(c, sign_pow(static_cast<Int>(i) - 1) * f[i]);
    return c;
}

/// Entry i: h_{d-i} - h_i - (-1)^i C(d,i) (chi - chi(S^{d-1})). Zero iff the
/// generalized Dehn-Sommerville relations hold.
inline std::vector<Int> ds_defect(const HVector& h, Int chi)
{
    Int d = static_cast<Int>(h.size()) - 1;
    Int excess = chi - sphere_chi(static_cast<int>(d - 1));
    std::vector<Int> out(d + 1);
    for (Int i = 0; i <= d; ++i) out[i] = h[d - i] - h[i] - mul(sign_pow(i) * binom(d, i), excess);
    return out;
}

inline std::vector<Int> ds_defect(const SimplicialComplex& K)
{
    K.require_pure("ds_defect");
    FVector f = f_vector(K);
    return ds_defect(h_from_f(f), chi_from_f(f));
}

inline bool all_zero(const std::vector<Int>& v)
{
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// balanced complexes

struct Coloring {
    std::map<Label, int> phi; // colors 1..m
    std::vector<int> type;    // a_1..a_m

    int m() const { return static_cast<int>(type.size()); }
    int total() const
    {
        int s = 0;
        for (int x : type) s += x;
        return s;
    }
};

/// Indexed by color-count vectors b <= a.
using FineVector = std::map<std::vector<int>, Int>;

namespace detail {

// Every b <= a in colex order (first coordinate fastest).
inline std::vector<std::vector<int>> boxes_below(const std::vector<int>& a)
{
    std::vector<std::vector<int>> out;
    std::vector<int> b(a.size(), 0);
    while (true) {
        out.push_back(b);
        std::size_t j = 0;
        while (j < a.size() && b[j] == a[j]) b[j++] = 0;
        if (j == a.size()) break;
        ++b[j];
    }
    return out;
}

} // namespace detail

/// Checks the coloring is surjective and that every facet meets color j in
/// exactly a_j vertices; raises NotBalanced with the offending facet.
inline void validate_coloring(const SimplicialComplex& K, const Coloring& c)
{
    int m = c.m();
    if (m == 0) fail("NotBalanced", "empty type vector");
    std::vector<char> seen(m + 1, 0);
    for (auto& v : K.vertices()) {
        auto it = c.phi.find(v);
        if (it == c.phi.end()) fail("NotBalanced", "vertex " + v.str() + " has no color");
        if (it->second < 1 || it->second > m) fail("NotBalanced", "vertex " + v.str() + " color out of range");
        seen[it->second] = 1;
    }
    for (int j = 1; j <= m; ++j)
        if (!seen[j]) fail("NotBalanced", "color " + std::to_string(j) + " unused");
    for (auto& f : K.facets()) {
        std::vector<int> cnt(m, 0);
        for (int v : f) ++cnt[c.phi.at(K.vertices()[v]) - 1];
        if (cnt != c.type) fail("NotBalanced", "facet " + to_string(K.labels_of(f)));
    }
}

inline FineVector fine_f(const SimplicialComplex& K, const Coloring& c)
{
    validate_coloring(K, c);
    FineVector out;
    for (auto& b : detail::boxes_below(c.type)) out[b] = 0;
    std::vector<int> color(K.num_vertices());
    for (std::size_t v = 0; v < color.size(); ++v) color[v] = c.phi.at(K.vertices()[v]) - 1;
    for (auto& face : face_set(K)) {
        std::vector<int> b(c.m(), 0);
        for (int v : face) ++b[color[v]];
        ++out[b];
    }
    return out;
}

inline FineVector fine_h(const FineVector& ff, const std::vector<int>& a)
{
    FineVector out;
    auto all = detail::boxes_below(a);
    for (auto& b : all) {
        Int s = 0;
        for (auto& c : detail::boxes_below(b)) {
            Int coef = 1;
            for (std::size_t i = 0; i < a.size(); ++i) coef *= sign_pow(b[i] - c[i]) * binom(a[i] - c[i], b[i] - c[i]);
            auto it = ff.find(c);
            if (it != ff.end()) s = add(s, mul(coef, it->second));
        }
        out[b] = s;
    }
    return out;
}

/// Entry b: h_{a-b} - h_b - (-1)^{|b|} (chi - chi(S^{d-1})) prod C(a_j, b_j).
inline FineVector fine_ds_defect(const FineVector& fh, const std::vector<int>& a, Int chi)
{
    int d = 0;
    for (int x : a) d += x;
    Int excess = chi - sphere_chi(d - 1);
    FineVector out;
    for (auto& b : detail::boxes_below(a)) {
        std::vector<int> comp(a.size());
        int size = 0;
        Int prod = 1;
        for (std::size_t j = 0; j < a.size(); ++j) {
            comp[j] = a[j] - b[j];
            size += b[j];
            prod *= binom(a[j], b[j]);
        }
        out[b] = fh.at(comp) - fh.at(b) - sign_pow(size) * prod * excess;
    }
    return out;
}

/// Flag vectors indexed by subsets S of [d] (sorted, 1-based).
struct FlagVector {
    int d = 0;
    std::map<std::vector<int>, Int> entries;

    Int at(const std::vector<int>& S) const
    {
        auto it = entries.find(S);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

namespace detail {

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& ground)
{
    std::vector<std::vector<int>> out;
    std::size_t n = ground.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(ground[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
    return out;
}

inline std::vector<int> iota_vec(int lo, int hi)
{
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

} // namespace detail

/// h_S = sum_{T subset S} (-1)^{|S-T|} f_T.
inline FlagVector flag_h(const FlagVector& ff)
{
    FlagVector out;
    out.d = ff.d;
    for (auto& S : detail::subsets_of(detail::iota_vec(1, ff.d))) {
        Int s = 0;
        for (auto& T : detail::subsets_of(S)) s = add(s, sign_pow(static_cast<Int>(S.size() - T.size())) * ff.at(T));
        out.entries[S] = s;
    }
    return out;
}

/// Flag f-vector of a completely balanced complex (type (1,...,1)).
inline FlagVector flag_f(const SimplicialComplex& K, const Coloring& c)
{
    for (int x : c.type)
        if (x != 1) fail("TypeVectorMismatch", "flag vectors need type (1,...,1)");
    FineVector ff = fine_f(K, c);
    FlagVector out;
    out.d = c.m();
    for (auto& [b, v] : ff) {
        std::vector<int> S;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i]) S.push_back(static_cast<int>(i) + 1);
        out.entries[S] = v;
    }
    return out;
}

/// f_b = sum over S -> b of f_S, with color j owning the j-th block of
/// consecutive ranks.
inline FineVector specialize_flag(const FlagVector& flag, const std::vector<int>& a)
{
    int total = 0;
    for (int x : a) {
        if (x < 1) fail("TypeVectorMismatch", "type entries must be positive");
        total += x;
    }
    if (total != flag.d) fail("TypeVectorMismatch", "|a| = " + std::to_string(total) + " but d = " + std::to_string(flag.d));
    std::vector<int> block(flag.d + 1);
    int r = 1;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (int t = 0; t < a[j]; ++t) block[r++] = static_cast<int>(j);
    FineVector out;
    for (auto& b : detail::boxes_below(a)) out[b] = 0;
    for (auto& S : detail::subsets_of(detail::iota_vec(1, flag.d))) {
        std::vector<int> b(a.size(), 0);
        for (int s : S) ++b[block[s]];
        out[b] = add(out[b], flag.at(S));
    }
    return out;
}

/// Dimension of the affine span of fine h-vectors of type a.
inline Int affine_span_dim(const std::vector<int>& a)
{
    if (a.empty()) fail("ArgumentOutOfRange", "empty type vector");
    Int n = 1;
    bool all_even = true;
    for (int x : a) {
        if (x < 1) fail("ArgumentOutOfRange", "type entries must be positive");
        n = mul(n, x + 1);
        all_even = all_even && x % 2 == 0;
    }
    return all_even ? (n - 1) / 2 : (n - 2) / 2;
}

// ---------------------------------------------------------------------------
// Schenzel, short h, stacked counts, Macaulay

/// h'_i = h_i + C(d,i) sum_{j=2}^{i-1} (-1)^{i-j-1} b_{j-1}.
inline std::vector<Int> h_prime(const HVector& h, const BettiVector& b)
{
    Int d = static_cast<Int>(h.size()) - 1;
    std::vector<Int> out(d + 1);
    for (Int i = 0; i <= d; ++i) {
        Int s = 0;
        for (Int j = 2; j <= i - 1; ++j) s = add(s, sign_pow(i - j - 1) * b[static_cast<int>(j - 1)]);
        out[i] = add(h[i], mul(binom(d, i), s));
    }
    return out;
}

/// Sum of h_i(lk rho) over all faces rho with |rho| = m; entries i = 0..d-m.
inline std::vector<Int> short_h(const SimplicialComplex& K, int m)
{
    K.require_pure("short_h");
    int d = K.d();
    if (m < 1 || m > d - 1) fail("ArgumentOutOfRange", "short_h needs 1 <= m <= d-1");
    std::vector<Int> out(d - m + 1, 0);
    for (auto& rho : all_faces(K, m - 1)) {
        HVector h = h_vector(link(K, rho));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = add(out[i], h[i]);
    }
    return out;
}

/// Number of i-faces of a stacked (d-1)-sphere with n vertices, no range guard.
inline Int phi_raw(Int n, Int d, Int i)
{
    if (i == 0) return n;
    if (i == d - 1) return sub(mul(d - 1, n), mul(d + 1, d - 2));
    return sub(mul(binom(d, i), n), mul(binom(d + 1, i + 1), i));
}

inline Int phi(Int n, Int d, Int i)
{
    if (d < 2 || n < d + 1 || i < 0 || i > d - 1)
        fail("ArgumentOutOfRange", "phi(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(i) + ")");
    return phi_raw(n, d, i);
}

/// Sum of phi_i(N_j, d) over a composition of N into n parts (closed form).
inline Int Phi(Int N, Int n, Int d, Int i)
{
    if (n < 1 || N < n || d < 2 || i < 0 || i > d - 1) fail("ArgumentOutOfRange", "Phi arguments");
    if (i == 0) return N;
    if (i == d - 1) return sub(mul(d - 1, N), mul(n, mul(d + 1, d - 2)));
    return sub(mul(binom(d, i), N), mul(n, mul(binom(d + 1, i + 1), i)));
}

inline Int Phi_of(const std::vector<Int>& parts, Int d, Int i)
{
    Int s = 0;
    for (Int p : parts) s = add(s, phi_raw(p, d, i));
    return s;
}

/// i-binomial (Macaulay) expansion a = C(a_i,i) + C(a_{i-1},i-1) + ... as
/// pairs (a_k, k).
inline std::vector<std::pair<Int, Int>> macaulay_expansion(Int a, Int i)
{
    if (a < 0 || i < 1) fail("ArgumentOutOfRange", "macaulay expansion");
    std::vector<std::pair<Int, Int>> out;
    for (Int k = i; k >= 1 && a > 0; --k) {
        Int top = k;
        while (binom(top + 1, k) <= a) ++top;
        out.emplace_back(top, k);
        a -= binom(top, k);
    }
    return out;
}

inline Int macaulay_pseudopower(Int a, Int i)
{
    Int s = 0;
    for (auto [ak, k] : macaulay_expansion(a, i)) s = add(s, binom(ak + 1, k + 1));
    return s;
}

inline bool is_M_vector(const std::vector<Int>& v)
{
    if (v.empty() || v[0] != 1) return false;
    for (Int x : v)
        if (x < 0) return false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i + 1] > macaulay_pseudopower(v[i], static_cast<Int>(i))) return false;
    return true;
}

/// h'_{m+1} - h'_m for a 2m-dimensional connected homology manifold without
/// boundary, written through chi and the lower Betti numbers. Reduces to
/// C(2m+1,m)(b_m - b_{m-1}) under Poincare duality.
inline Int G_invariant(const BettiVector& b, int m)
{
    if (b.top() != 2 * m) fail("DimensionParity", "Betti data has top dimension " + std::to_string(b.top()) + ", expected " + std::to_string(2 * m));
    if (m < 1) fail("DimensionParity", "m must be positive");
    Int chi = b.chi();
    Int s = mul(sign_pow(m), chi - 2);
    s = add(s, b[m - 1]);
    for (int l = 1; l <= m - 2; ++l) s = add(s, mul(2 * sign_pow(m - l - 1), b[l]));
    // m = 1 would need b_0; for a connected complex reduced b_0 = 0
    return mul(binom(2 * m + 1, m), s);
}

inline Int G_invariant(const BettiVector& b)
{
    if (b.top() % 2 != 0) fail("DimensionParity", "odd-dimensional Betti data");
    return G_invariant(b, b.top() / 2);
}

/// Betti vector from listed reduced values b_0..b_top (b_{-1} = 0).
inline BettiVector betti_from_values(const std::vector<Int>& values, Field field = Field::rationals())
{
    BettiVector b;
    b.field = field;
    b.reduced.push_back(0);
    b.reduced.insert(b.reduced.end(), values.begin(), values.end());
    return b;
}

} // namespace facelab
