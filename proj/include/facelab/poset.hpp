#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "complex.hpp"
#include "enumeration.hpp"

namespace facelab {

/// Finite graded poset with 0̂ and 1̂, stored as named elements and upward
/// covers. Ranks are computed from the covers and validated.
class GradedPoset {
public:
    /// Build from cover pairs (lower, upper). A missing unique minimum or
    /// maximum is supplied as "bottom" / "top".
    static GradedPoset from_covers(std::vector<std::string> names,
                                   const std::vector<std::pair<std::string, std::string>>& covers)
    {
        GradedPoset P;
        std::unordered_map<std::string, int> idx;
        for (auto& n : names) {
            if (idx.count(n)) fail("InvalidPoset", "duplicate element " + n);
            idx[n] = static_cast<int>(P.names_.size());
            P.names_.push_back(n);
        }
        auto lookup = [&](const std::string& n) {
            auto it = idx.find(n);
            if (it == idx.end()) fail("InvalidPoset", "unknown element " + n);
            return it->second;
        };
        P.up_.assign(P.names_.size(), {});
        P.down_.assign(P.names_.size(), {});
        for (auto& [a, b] : covers) P.add_cover(lookup(a), lookup(b));
        if (P.names_.empty()) fail("InvalidPoset", "no elements");

        std::vector<int> minimal, maximal;
        for (std::size_t i = 0; i < P.names_.size(); ++i) {
            if (P.down_[i].empty()) minimal.push_back(static_cast<int>(i));
            if (P.up_[i].empty()) maximal.push_back(static_cast<int>(i));
        }
        if (minimal.size() > 1) {
            int b = P.add_element("bottom", idx);
            for (int m : minimal) P.add_cover(b, m);
            P.bottom_ = b;
        } else {
            P.bottom_ = minimal.at(0);
        }
        if (maximal.size() > 1) {
            int t = P.add_element("top", idx);
            for (int m : maximal) P.add_cover(m, t);
            P.top_ = t;
        } else {
            P.top_ = maximal.at(0);
        }
        P.finish();
        return P;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int rank(int i) const { return rank_[i]; }
    /// rank(1̂)
    int rank() const { return rank_[top_]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<int>& covers_up(int i) const { return up_[i]; }
    const std::vector<int>& covers_down(int i) const { return down_[i]; }
    bool leq(int x, int y) const { return leq_[x][y]; }
    /// Elements sorted by rank, then by insertion order.
    const std::vector<int>& by_rank() const { return order_; }

    int index_of(const std::string& n) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        fail("InvalidPoset", "unknown element " + n);
    }

    std::vector<std::pair<std::string, std::string>> cover_pairs() const
    {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (int j : up_[i]) out.emplace_back(names_[i], names_[j]);
        return out;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> rank_;
    std::vector<int> order_;
    std::vector<std::vector<char>> leq_;
    int bottom_ = 0, top_ = 0;

    int add_element(const std::string& n, std::unordered_map<std::string, int>& idx)
    {
        if (idx.count(n)) fail("InvalidPoset", "element " + n + " exists but is not a unique extremum");
        idx[n] = static_cast<int>(names_.size());
        names_.push_back(n);
        up_.emplace_back();
        down_.emplace_back();
        return idx[n];
    }

    void add_cover(int a, int b)
    {
        if (a == b) fail("InvalidPoset", "self cover on " + names_[a]);
        if (std::find(up_[a].begin(), up_[a].end(), b) != up_[a].end()) return;
        up_[a].push_back(b);
        down_[b].push_back(a);
    }

    void finish()
    {
        std::size_t n = names_.size();
        rank_.assign(n, -1);
        rank_[bottom_] = 0;
        std::queue<int> q;
        q.push(bottom_);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : up_[x]) {
                if (rank_[y] < 0) {
                    rank_[y] = rank_[x] + 1;
                    q.push(y);
                }
            }
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (rank_[x] < 0) fail("NotGraded", names_[x] + " is not above the minimum");
            for (int y : up_[x])
                if (rank_[y] != rank_[x] + 1)
                    fail("NotGraded", "cover " + names_[x] + " < " + names_[y] + " skips a rank");
        }
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
        leq_.assign(n, std::vector<char>(n, 0));
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            int x = *it;
            leq_[x][x] = 1;
            for (int y : up_[x])
                for (std::size_t z = 0; z < n; ++z)
                    if (leq_[y][z]) leq_[x][z] = 1;
        }
        if (!leq_[bottom_][top_]) fail("InvalidPoset", "no 1̂");
        for (std::size_t x = 0; x < n; ++x)
            if (!leq_[x][top_]) fail("InvalidPoset", names_[x] + " is not below the maximum");
    }
};

/// Face poset ordered by inclusion with 0̂ = ∅. With `augment` a 1̂ is always
/// adjoined; without it a 1̂ is only added when K has more than one facet.
inline GradedPoset face_poset(const SimplicialComplex& K, bool augment)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    auto faces = faces_by_dim(K);
    auto nm = [&](const Face& f) { return f.empty() ? std::string("bottom") : to_string(K.labels_of(f)); };
    for (auto& level : faces)
        for (auto& f : level) {
            names.push_back(nm(f));
            for (std::size_t j = 0; j < f.size(); ++j) {
                Face g;
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != j) g.push_back(f[t]);
                covers.emplace_back(nm(g), nm(f));
            }
        }
    if (augment) {
        names.push_back("top");
        for (auto& f : K.facets()) covers.emplace_back(nm(f), "top");
    }
    return GradedPoset::from_covers(names, covers);
}

/// Order complex on element names; `reduced` drops 0̂ and 1̂.
inline SimplicialComplex order_complex(const GradedPoset& P, bool reduced)
{
    std::vector<LabelFace> chains;
    LabelFace cur;
    std::function<void(int)> walk = [&](int x) {
        bool skip = reduced && (x == P.bottom() || x == P.top());
        if (!skip) cur.push_back(Label(P.name(x)));
        if (P.covers_up(x).empty()) {
            chains.push_back(cur);
        } else {
            for (int y : P.covers_up(x)) walk(y);
        }
        if (!skip) cur.pop_back();
    };
    walk(P.bottom());
    std::vector<Label> labels;
    for (auto& n : P.names()) labels.push_back(Label(n));
    std::sort(labels.begin(), labels.end());
    std::vector<Face> fs;
    for (auto& ch : chains) {
        Face f;
        for (auto& l : ch) f.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_indexed(labels, std::move(fs));
}

/// mu(x, y) for every y (0 where y is not above x).
inline std::vector<Int> mobius_from(const GradedPoset& P, int x)
{
    std::vector<Int> mu(P.size(), 0);
    std::vector<int> above;
    for (int y : P.by_rank())
        if (P.leq(x, y)) above.push_back(y);
    for (int y : above) {
        if (y == x) {
            mu[y] = 1;
            continue;
        }
        Int s = 0;
        for (int z : above) {
            if (P.rank(z) >= P.rank(y)) break;
            if (P.leq(z, y)) s += mu[z];
        }
        mu[y] = -s;
    }
    return mu;
}

inline Int mobius(const GradedPoset& P, int x, int y)
{
    if (!P.leq(x, y)) fail("NotComparable", P.name(x) + " and " + P.name(y));
    return mobius_from(P, x)[y];
}

inline Int mobius(const GradedPoset& P, const std::string& x, const std::string& y)
{
    return mobius(P, P.index_of(x), P.index_of(y));
}

enum class PosetClass { Eulerian, SemiEulerian, Neither };

inline const char* to_string(PosetClass c)
{
    switch (c) {
    case PosetClass::Eulerian: return "Eulerian";
    case PosetClass::SemiEulerian: return "SemiEulerian";
    default: return "Neither";
    }
}

inline PosetClass classify_poset(const GradedPoset& P)
{
    bool top_ok = true;
    for (std::size_t x = 0; x < P.size(); ++x) {
        auto mu = mobius_from(P, static_cast<int>(x));
        for (std::size_t y = 0; y < P.size(); ++y) {
            if (!P.leq(static_cast<int>(x), static_cast<int>(y))) continue;
            bool ok = mu[y] == sign_pow(P.rank(static_cast<int>(y)) - P.rank(static_cast<int>(x)));
            if (ok) continue;
            if (static_cast<int>(x) == P.bottom() && static_cast<int>(y) == P.top())
                top_ok = false;
            else
                return PosetClass::Neither;
        }
    }
    return top_ok ? PosetClass::Eulerian : PosetClass::SemiEulerian;
}

/// χ of the reduced order complex, via μ(0̂,1̂) = χ̃.
inline Int order_complex_chi(const GradedPoset& P) { return mobius(P, P.bottom(), P.top()) + 1; }

// ---------------------------------------------------------------------------
// toric h

/// th(P,x) = th_d + th_{d-1} x + ... + th_0 x^d for P of rank d+1.
/// `th[i]` is th_i in that convention; `g_hat[k]` is the coefficient of x^k.
struct ToricPolynomial {
    int d = 0;
    std::vector<Int> th;
    std::vector<Int> g_hat;

    /// Coefficients of th in ascending powers of x.
    std::vector<Int> ascending() const
    {
        return std::vector<Int>(th.rbegin(), th.rend());
    }
};

namespace detail {

// (x-1)^e in ascending powers
inline std::vector<Int> x_minus_one_pow(int e)
{
    std::vector<Int> p(e + 1);
    for (int k = 0; k <= e; ++k) p[k] = sign_pow(e - k) * binom(e, k);
    return p;
}

} // namespace detail

inline ToricPolynomial toric_h(const GradedPoset& P)
{
    std::size_t n = P.size();
    // ascending-power coefficient vectors per element
    std::vector<std::vector<Int>> g(n);
    std::vector<std::vector<Int>> th(n);
    std::vector<std::vector<Int>> pw(P.rank() + 1);
    for (int e = 0; e <= P.rank(); ++e) pw[e] = detail::x_minus_one_pow(e);
    for (int z : P.by_rank()) {
        int rz = P.rank(z);
        if (rz == 0) {
            th[z] = {1};
            g[z] = {1};
            continue;
        }
        int dz = rz - 1;
        std::vector<Int> c(dz + 1, 0);
        for (int y : P.by_rank()) {
            if (P.rank(y) >= rz) break;
            if (!P.leq(y, z)) continue;
            const auto& q = pw[dz - P.rank(y)];
            for (std::size_t a = 0; a < g[y].size(); ++a)
                for (std::size_t b = 0; b < q.size(); ++b) c[a + b] = add(c[a + b], mul(g[y][a], q[b]));
        }
        th[z] = c;
        int m = dz / 2;
        std::vector<Int> gz(m + 1);
        for (int k = 0; k <= m; ++k) gz[k] = c[k] - (k ? c[k - 1] : 0);
        g[z] = gz;
    }
    ToricPolynomial out;
    out.d = P.rank() - 1;
    const auto& c = th[P.top()];
    out.th.resize(out.d + 1);
    for (int i = 0; i <= out.d; ++i) out.th[i] = c[out.d - i];
    out.g_hat = g[P.top()];
    return out;
}

/// Entry i: th_{d-i} - th_i - (-1)^i C(d,i) (χ(Δ_P) - χ(S^{d-1})).
inline std::vector<Int> toric_ds_defect(const GradedPoset& P)
{
    if (classify_poset(P) == PosetClass::Neither) fail("NotSemiEulerian", "toric_ds_defect needs a semi-Eulerian poset");
    auto t = toric_h(P);
    return ds_defect(t.th, order_complex_chi(P));
}

// ---------------------------------------------------------------------------
// flag vectors, ab- and cd-polynomials

/// Flag f of the reduced order complex: f_S counts chains with rank set S,
/// S ⊆ [rank(P) - 1].
inline FlagVector flag_f(const GradedPoset& P)
{
    FlagVector out;
    out.d = P.rank() - 1;
    std::vector<std::vector<int>> level(P.rank() + 1);
    for (int x : P.by_rank()) level[P.rank(x)].push_back(x);
    for (auto& S : detail::subsets_of(detail::iota_vec(1, out.d))) {
        if (S.empty()) {
            out.entries[S] = 1;
            continue;
        }
        std::vector<Int> cnt(P.size(), 0);
        for (int x : level[S[0]]) cnt[x] = 1;
        for (std::size_t j = 1; j < S.size(); ++j)
            for (int x : level[S[j]]) {
                Int s = 0;
                for (int y : level[S[j - 1]])
                    if (P.leq(y, x)) s = add(s, cnt[y]);
                cnt[x] = s;
            }
        Int total = 0;
        for (int x : level[S.back()]) total = add(total, cnt[x]);
        out.entries[S] = total;
    }
    return out;
}

struct FlagPair {
    FlagVector f, h;
};

inline FlagPair flag_vectors(const GradedPoset& P)
{
    FlagPair out;
    out.f = flag_f(P);
    out.h = flag_h(out.f);
    return out;
}

/// Words over {a,b}; position i (1-based) is 'b' iff i ∈ S.
using ABPolynomial = std::map<std::string, Int>;
/// Words over {c,d}.
using CDIndex = std::map<std::string, Int>;

inline std::string ab_word(const std::vector<int>& S, int n)
{
    std::string w(n, 'a');
    for (int s : S) w[s - 1] = 'b';
    return w;
}

inline ABPolynomial ab_polynomial(const FlagVector& h)
{
    ABPolynomial out;
    for (auto& [S, v] : h.entries) out[ab_word(S, h.d)] = v;
    return out;
}

inline ABPolynomial ab_polynomial(const GradedPoset& P) { return ab_polynomial(flag_vectors(P).h); }

/// Monomials in c (degree 1) and d (degree 2) of total degree n, in
/// lexicographic order.
inline std::vector<std::string> cd_monomials(int n)
{
    if (n < 0) return {};
    if (n == 0) return {""};
    std::vector<std::string> out;
    for (auto& w : cd_monomials(n - 1)) out.push_back("c" + w);
    if (n >= 2)
        for (auto& w : cd_monomials(n - 2)) out.push_back("d" + w);
    std::sort(out.begin(), out.end());
    return out;
}

/// Expansion of a cd-monomial into ab-words (all coefficients 1).
inline std::vector<std::string> expand_cd(const std::string& m)
{
    std::vector<std::string> words{""};
    for (char ch : m) {
        std::vector<std::string> next;
        for (auto& w : words) {
            if (ch == 'c') {
                next.push_back(w + "a");
                next.push_back(w + "b");
            } else {
                next.push_back(w + "ab");
                next.push_back(w + "ba");
            }
        }
        words = std::move(next);
    }
    return words;
}

inline ABPolynomial expand_cd_index(const CDIndex& cd, int n)
{
    ABPolynomial out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string w(n, 'a');
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) w[i] = 'b';
        out[w] = 0;
    }
    for (auto& [m, v] : cd)
        for (auto& w : expand_cd(m)) out[w] += v;
    return out;
}

/// Raised when an ab-polynomial is not a combination of cd-monomials.
class NotInCDSpan : public Error {
public:
    explicit NotInCDSpan(ABPolynomial residual)
        : Error("NotInCDSpan", "ab-polynomial has a nonzero residual"), residual_(std::move(residual)) {}
    const ABPolynomial& residual() const noexcept { return residual_; }

private:
    ABPolynomial residual_;
};

/// Exact solve of ab = Σ x_m · expand(m) over cd-monomials m.
inline CDIndex cd_index(const ABPolynomial& ab)
{
    if (ab.empty()) fail("InvalidVector", "empty ab-polynomial");
    int n = static_cast<int>(ab.begin()->first.size());
    for (auto& [w, v] : ab)
        if (static_cast<int>(w.size()) != n) fail("InvalidVector", "mixed word lengths");
    auto monos = cd_monomials(n);
    std::vector<std::string> words;
    for (auto& [w, v] : expand_cd_index({}, n)) words.push_back(w);
    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < words.size(); ++i) row_of[words[i]] = i;
    std::size_t R = words.size(), C = monos.size();
    std::vector<std::vector<mpq_class>> A(R, std::vector<mpq_class>(C, 0));
    for (std::size_t j = 0; j < C; ++j)
        for (auto& w : expand_cd(monos[j])) A[row_of[w]][j] += 1;
    auto rhs_of = [&](const std::string& w) {
        auto it = ab.find(w);
        return it == ab.end() ? Int{0} : it->second;
    };

    // choose independent rows greedily in word order
    std::vector<std::vector<mpq_class>> basis; // reduced rows, augmented
    std::vector<std::size_t> pivcol;
    for (std::size_t r = 0; r < R && basis.size() < C; ++r) {
        std::vector<mpq_class> row = A[r];
        row.push_back(mpq_class(rhs_of(words[r])));
        for (std::size_t b = 0; b < basis.size(); ++b) {
            mpq_class f = row[pivcol[b]];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= C; ++j) row[j] -= f * basis[b][j];
        }
        std::size_t p = C;
        for (std::size_t j = 0; j < C; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p == C) continue;
        mpq_class inv = 1 / row[p];
        for (auto& e : row) e *= inv;
        for (auto& br : basis) {
            mpq_class f = br[p];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= C; ++j) br[j] -= f * row[j];
        }
        basis.push_back(std::move(row));
        pivcol.push_back(p);
    }
    std::vector<mpq_class> x(C, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) x[pivcol[b]] = basis[b][C];

    ABPolynomial residual;
    bool zero = true;
    for (std::size_t r = 0; r < R; ++r) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < C; ++j) s += A[r][j] * x[j];
        mpq_class res = mpq_class(rhs_of(words[r])) - s;
        if (res != 0) zero = false;
        // fractional residuals (only possible with a fractional x) are truncated
        mpz_class q = res.get_num() / res.get_den();
        residual[words[r]] = q.get_si();
    }
    bool integral = std::all_of(x.begin(), x.end(), [](const mpq_class& q) { return q.get_den() == 1; });
    if (!zero || !integral) throw NotInCDSpan(residual);
    CDIndex out;
    for (std::size_t j = 0; j < C; ++j)
        if (x[j] != 0) out[monos[j]] = x[j].get_num().get_si();
    return out;
}

inline std::string to_string(const CDIndex& cd)
{
    std::string s;
    for (auto& [m, v] : cd) {
        if (v == 0) continue;
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        Int a = v < 0 ? -v : v;
        if (a != 1 || m.empty()) s += std::to_string(a);
        s += m;
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Bayer-Billera relations

struct BBInstance {
    std::vector<int> S;
    int i = 0, k = 0;
    Int lhs = 0, rhs = 0;
    Int defect() const { return lhs - rhs; }
};

/// Every instance of the generalized Dehn-Sommerville relations for flag f:
/// for S ⊆ [r-1], i < k-1 consecutive in S ∪ {0, r},
/// Σ_{j=i+1}^{k-1} (-1)^{j-i-1} f_{S∪j} = f_S (1 - (-1)^{k-i-1}).
inline std::vector<BBInstance> bayer_billera_defects(const FlagVector& f)
{
    int r = f.d + 1;
    std::vector<BBInstance> out;
    for (auto& S : detail::subsets_of(detail::iota_vec(1, f.d))) {
        std::vector<int> ext = S;
        ext.insert(ext.begin(), 0);
        ext.push_back(r);
        for (std::size_t t = 0; t + 1 < ext.size(); ++t) {
            int i = ext[t], k = ext[t + 1];
            if (i >= k - 1) continue;
            BBInstance inst;
            inst.S = S;
            inst.i = i;
            inst.k = k;
            for (int j = i + 1; j <= k - 1; ++j) {
                std::vector<int> T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), j), j);
                inst.lhs = add(inst.lhs, sign_pow(j - i - 1) * f.at(T));
            }
            inst.rhs = mul(f.at(S), 1 - sign_pow(k - i - 1));
            out.push_back(std::move(inst));
        }
    }
    return out;
}

inline std::vector<BBInstance> bayer_billera_defects(const GradedPoset& P) { return bayer_billera_defects(flag_f(P)); }

/// f^X: zero except f_{r-1} = X = χ(Δ_P) - χ(S^{r-2}), r = rank(P). Zero for
/// odd rank (such posets are Eulerian).
inline FlagVector semi_eulerian_correction(const GradedPoset& P)
{
    if (classify_poset(P) == PosetClass::Neither) fail("NotSemiEulerian", "correction needs a semi-Eulerian poset");
    int r = P.rank();
    FlagVector out;
    out.d = r - 1;
    for (auto& S : detail::subsets_of(detail::iota_vec(1, out.d))) out.entries[S] = 0;
    if (r % 2 == 1) return out;
    out.entries[{r - 1}] = order_complex_chi(P) - sphere_chi(r - 2);
    return out;
}

inline FlagVector flag_difference(const FlagVector& a, const FlagVector& b)
{
    FlagVector out = a;
    for (auto& [S, v] : b.entries) out.entries[S] = a.at(S) - v;
    return out;
}

} // namespace facelab
