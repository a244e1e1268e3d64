#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "complex.hpp"

namespace facelab {

/// Coefficient field: p == 0 means the rationals, otherwise GF(p).
struct Field {
    std::int64_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field gf(std::int64_t p)
    {
        if (p < 2 || p > 2147483647) fail("InvalidField", "prime out of range");
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) fail("InvalidField", std::to_string(p) + " is not prime");
        return Field{p};
    }
    bool rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }
    friend bool operator==(const Field&, const Field&) = default;
};

/// Reduced Betti numbers β̃_{-1} .. β̃_{dim}.
struct BettiVector {
    Field field;
    std::vector<Int> reduced; // reduced[i+1] = β̃_i

    Int operator[](int i) const
    {
        if (i + 1 < 0 || i + 1 >= static_cast<int>(reduced.size())) return 0;
        return reduced[i + 1];
    }
    int top() const { return static_cast<int>(reduced.size()) - 2; }
    /// Euler characteristic implied by the Betti numbers.
    Int chi() const
    {
        Int s = 1;
        for (int i = -1; i <= top(); ++i) s += sign_pow(i + 2) * (*this)[i];
        return s;
    }
    friend bool operator==(const BettiVector& a, const BettiVector& b) { return a.reduced == b.reduced; }
};

namespace detail {

using SparseCol = std::vector<std::pair<int, std::int64_t>>;

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

inline std::size_t rank_mod_p(std::vector<SparseCol> cols, std::int64_t p)
{
    std::unordered_map<int, std::size_t> pivot_of;
    std::vector<SparseCol> stored;
    for (auto& c : cols) {
        SparseCol cur;
        for (auto& [r, v] : c) {
            std::int64_t x = ((v % p) + p) % p;
            if (x) cur.emplace_back(r, x);
        }
        while (!cur.empty()) {
            auto it = pivot_of.find(cur.back().first);
            if (it == pivot_of.end()) {
                std::int64_t inv = inv_mod(cur.back().second, p);
                for (auto& e : cur) e.second = e.second * inv % p;
                pivot_of[cur.back().first] = stored.size();
                stored.push_back(std::move(cur));
                break;
            }
            const SparseCol& pc = stored[it->second];
            std::int64_t factor = cur.back().second; // pc has leading 1
            SparseCol next;
            next.reserve(cur.size() + pc.size());
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pc.size()) {
                if (j == pc.size() || (i < cur.size() && cur[i].first < pc[j].first)) {
                    next.push_back(cur[i++]);
                } else if (i == cur.size() || pc[j].first < cur[i].first) {
                    std::int64_t x = (p - factor * pc[j].second % p) % p;
                    if (x) next.emplace_back(pc[j].first, x);
                    ++j;
                } else {
                    std::int64_t x = ((cur[i].second - factor * pc[j].second) % p + p) % p;
                    if (x) next.emplace_back(cur[i].first, x);
                    ++i;
                    ++j;
                }
            }
            cur = std::move(next);
        }
    }
    return stored.size();
}

struct IntOverflow {};

inline std::int64_t cmul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntOverflow{};
    return r;
}
inline std::int64_t csub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw IntOverflow{};
    return r;
}
inline mpz_class cmul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class csub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline std::int64_t cgcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline mpz_class cgcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool is_neg(std::int64_t a) { return a < 0; }
inline bool is_neg(const mpz_class& a) { return sgn(a) < 0; }

// Fraction-free column elimination over the integers: the rank over ℚ. Each
// reduced column is divided by its content so entries stay small.
template <class T>
std::size_t rank_integer(const std::vector<SparseCol>& cols)
{
    using Col = std::vector<std::pair<int, T>>;
    std::unordered_map<int, std::size_t> pivot_of;
    std::vector<Col> stored;
    for (auto& c0 : cols) {
        Col cur;
        for (auto& [r, v] : c0)
            if (v) cur.emplace_back(r, T(v));
        while (!cur.empty()) {
            auto it = pivot_of.find(cur.back().first);
            if (it == pivot_of.end()) {
                T g = 0;
                for (auto& e : cur) g = cgcd(g, e.second);
                if (g < 0) g = -g;
                bool flip = is_neg(cur.back().second);
                for (auto& e : cur) {
                    e.second /= g;
                    if (flip) e.second = -e.second;
                }
                pivot_of[cur.back().first] = stored.size();
                stored.push_back(std::move(cur));
                break;
            }
            const Col& pc = stored[it->second];
            T a = pc.back().second; // > 0
            T b = cur.back().second;
            T g = cgcd(a, b);
            T ma = a / g, mb = b / g;
            Col next;
            next.reserve(cur.size() + pc.size());
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pc.size()) {
                T x;
                int row;
                if (j == pc.size() || (i < cur.size() && cur[i].first < pc[j].first)) {
                    row = cur[i].first;
                    x = cmul(ma, cur[i].second);
                    ++i;
                } else if (i == cur.size() || pc[j].first < cur[i].first) {
                    row = pc[j].first;
                    x = csub(T(0), cmul(mb, pc[j].second));
                    ++j;
                } else {
                    row = cur[i].first;
                    x = csub(cmul(ma, cur[i].second), cmul(mb, pc[j].second));
                    ++i;
                    ++j;
                }
                if (!is_zero(x)) next.emplace_back(row, x);
            }
            T h = 0;
            for (auto& e : next) h = cgcd(h, e.second);
            if (h < 0) h = -h;
            if (!is_zero(h) && h != 1)
                for (auto& e : next) e.second /= h;
            cur = std::move(next);
        }
    }
    return stored.size();
}

inline std::size_t matrix_rank(const std::vector<SparseCol>& cols, const Field& field)
{
    if (!field.rational()) return rank_mod_p(cols, field.p);
    try {
        return rank_integer<std::int64_t>(cols);
    } catch (const IntOverflow&) {
        return rank_integer<mpz_class>(cols);
    }
}

inline std::size_t index_in(const std::vector<Face>& sorted, const Face& f)
{
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

// Columns of the boundary map from `upper` (k-faces) to `lower` ((k−1)-faces).
// Rows not present in `lower` are dropped, which gives relative boundaries.
inline std::vector<SparseCol> boundary_columns(const std::vector<Face>& upper, const std::vector<Face>& lower)
{
    std::vector<SparseCol> cols;
    cols.reserve(upper.size());
    for (auto& f : upper) {
        SparseCol c;
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face g;
            g.reserve(f.size() - 1);
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != j) g.push_back(f[t]);
            std::size_t r = index_in(lower, g);
            if (r < lower.size() && lower[r] == g) c.emplace_back(static_cast<int>(r), (j % 2 == 0) ? 1 : -1);
        }
        std::sort(c.begin(), c.end());
        cols.push_back(std::move(c));
    }
    return cols;
}

} // namespace detail

/// Reduced Betti numbers over `field`.
inline BettiVector betti(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    BettiVector b;
    b.field = field;
    if (K.is_void()) fail("EmptyInput", "betti of the void complex");
    auto faces = faces_by_dim(K);
    int D = K.dim();
    // rank[k+1] = rank of ∂_k : C_k → C_{k−1}, k = −1..D+1
    std::vector<Int> rank(D + 3, 0);
    if (D >= 0) rank[1] = 1; // ∂_0 onto the empty face
    for (int k = 1; k <= D; ++k)
        rank[k + 1] = static_cast<Int>(detail::matrix_rank(detail::boundary_columns(faces[k + 1], faces[k]), field));
    b.reduced.assign(D + 2, 0);
    for (int k = -1; k <= D; ++k)
        b.reduced[k + 1] = static_cast<Int>(faces[k + 1].size()) - rank[k + 1] - rank[k + 2];
    return b;
}

/// Σ_{i ≥ 0} (−1)^i f_i.
inline Int euler_characteristic(const SimplicialComplex& K)
{
    Int chi = 0;
    for (int i = 0; i <= K.dim(); ++i) chi += sign_pow(i) * static_cast<Int>(all_faces(K, i).size());
    return chi;
}

/// χ(S^k) = 1 + (−1)^k, also valid for k = −1.
inline Int sphere_chi(int k) { return 1 + sign_pow(k + 2); }

namespace detail {

inline bool sphere_betti(const BettiVector& b, int k)
{
    for (int i = -1; i <= b.top(); ++i)
        if (b[i] != (i == k ? 1 : 0)) return false;
    return k <= b.top() || k == -1;
}

inline bool acyclic(const BettiVector& b)
{
    for (int i = -1; i <= b.top(); ++i)
        if (b[i] != 0) return false;
    return true;
}

} // namespace detail

struct ManifoldReport {
    bool is_homology_manifold = false;
    SimplicialComplex boundary; // void when empty
    bool orientable = false;
    bool closed = false;
    std::optional<LabelFace> witness; // first face with a bad link
    Field field;
};

namespace detail {

enum class LinkKind { Sphere, Ball, Bad };

inline LinkKind classify_link(const SimplicialComplex& L, int k, const Field& field)
{
    BettiVector b = betti(L, field);
    if (detail::sphere_betti(b, k)) return LinkKind::Sphere;
    if (k >= 0 && detail::acyclic(b)) return LinkKind::Ball;
    return LinkKind::Bad;
}

// Link sweep over every nonempty non-facet face. Returns the boundary ridges
// (faces of size d−1 with ball links) or the first bad face.
struct LinkSweep {
    bool ok = true;
    Face bad;
    std::vector<Face> boundary_ridges;
};

inline LinkSweep sweep_links(const SimplicialComplex& K, const Field& field)
{
    LinkSweep out;
    int d = K.d();
    auto faces = faces_by_dim(K);
    for (int s = 1; s < d; ++s) {
        for (auto& rho : faces[s]) {
            LinkKind kind = classify_link(link(K, rho), d - s - 1, field);
            if (kind == LinkKind::Bad) {
                out.ok = false;
                out.bad = rho;
                return out;
            }
            if (kind == LinkKind::Ball && s == d - 1) out.boundary_ridges.push_back(rho);
        }
    }
    return out;
}

} // namespace detail

inline ManifoldReport manifold_report(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    K.require_pure("manifold_report");
    if (!is_connected(K)) fail("NotConnected", "manifold_report needs a connected complex");
    ManifoldReport rep;
    rep.field = field;
    auto sweep = detail::sweep_links(K, field);
    if (!sweep.ok) {
        rep.witness = K.labels_of(sweep.bad);
        return rep;
    }
    rep.is_homology_manifold = true;
    rep.boundary = SimplicialComplex::from_indexed(K.vertices(), sweep.boundary_ridges);
    // rank H_{d−1}(K, ∂K)
    int d = K.d();
    auto ridges = all_faces(K, d - 2);
    std::vector<Face> interior;
    std::set_difference(ridges.begin(), ridges.end(), sweep.boundary_ridges.begin(), sweep.boundary_ridges.end(),
                        std::back_inserter(interior));
    std::size_t r = detail::matrix_rank(detail::boundary_columns(K.facets(), interior), field);
    rep.orientable = (K.num_facets() - r) == 1;
    rep.closed = rep.boundary.is_void() && rep.orientable;
    return rep;
}

inline bool is_homology_sphere(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    K.require_pure("is_homology_sphere");
    if (!detail::sphere_betti(betti(K, field), K.dim())) return false;
    auto sweep = detail::sweep_links(K, field);
    return sweep.ok && sweep.boundary_ridges.empty();
}

inline bool is_homology_ball(const SimplicialComplex& K, const Field& field = Field::rationals())
{
    K.require_pure("is_homology_ball");
    if (K.dim() < 0 || !detail::acyclic(betti(K, field))) return false;
    if (K.num_facets() == 1) return true;
    auto sweep = detail::sweep_links(K, field);
    return sweep.ok && !sweep.boundary_ridges.empty();
}

/// χ(lk ρ) = χ(S^{d−|ρ|−1}) for every nonempty face ρ.
inline bool is_semi_eulerian(const SimplicialComplex& K)
{
    K.require_pure("is_semi_eulerian");
    int d = K.d();
    auto faces = faces_by_dim(K);
    for (int s = 1; s <= d; ++s)
        for (auto& rho : faces[s]) {
            auto L = link(K, rho);
            Int chi = L.dim() < 0 ? 0 : euler_characteristic(L);
            if (chi != sphere_chi(d - s - 1)) return false;
        }
    return true;
}

inline bool is_eulerian(const SimplicialComplex& K)
{
    return is_semi_eulerian(K) && euler_characteristic(K) == sphere_chi(K.dim());
}

} // namespace facelab
