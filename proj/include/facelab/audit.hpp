#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "enumeration.hpp"
#include "homology.hpp"

namespace facelab {

enum class AuditStatus { Holds, Violated, Inapplicable, Tight };

inline const char* to_string(AuditStatus s)
{
    switch (s) {
    case AuditStatus::Holds: return "holds";
    case AuditStatus::Violated: return "violated";
    case AuditStatus::Inapplicable: return "inapplicable";
    case AuditStatus::Tight: return "tight";
    }
    return "?";
}

struct AuditEntry {
    std::string name;
    std::string statement;
    bool proven = true; // false: conjecture, never fatal
    AuditStatus status = AuditStatus::Inapplicable;
    std::optional<Int> lhs, rhs;
    std::string notes;
};

/// Group-theoretic facts about the input that cannot be computed here.
struct AuditAssertions {
    bool beta1_positive = false;
    std::optional<Int> subgroup_index;
};

struct AuditReport {
    std::string field;
    std::vector<AuditEntry> entries;

    bool has_proven_violation() const
    {
        for (auto& e : entries)
            if (e.proven && e.status == AuditStatus::Violated) return true;
        return false;
    }
    const AuditEntry& at(const std::string& name) const
    {
        for (auto& e : entries)
            if (e.name == name) return e;
        fail("UnknownCheck", name);
    }
};

namespace detail {

struct AuditContext {
    const SimplicialComplex& K;
    Field field;
    int d;
    Int n;
    FVector f;
    HVector h;
    Int chi;
    BettiVector b;  // chosen field
    BettiVector bq; // rationals
    ManifoldReport rep;
    ManifoldReport rep_q;
    AuditAssertions as;

    bool manifold_nb() const { return rep.is_homology_manifold && rep.boundary.is_void(); }
    bool closed_q() const { return rep_q.closed; }
};

// Every link of a face of the given size is a homology manifold without boundary.
inline bool links_manifold_nb(const AuditContext& c, int size)
{
    if (c.manifold_nb()) return true;
    for (auto& rho : all_faces(c.K, size - 1)) {
        auto L = link(c.K, rho);
        try {
            auto r = manifold_report(L, c.field);
            if (!r.is_homology_manifold || !r.boundary.is_void()) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

inline AuditEntry leq(std::string name, std::string statement, Int lhs, Int rhs)
{
    AuditEntry e;
    e.name = std::move(name);
    e.statement = std::move(statement);
    e.lhs = lhs;
    e.rhs = rhs;
    e.status = lhs < rhs ? AuditStatus::Holds : lhs == rhs ? AuditStatus::Tight : AuditStatus::Violated;
    return e;
}

inline AuditEntry skip(std::string name, std::string statement, std::string why, bool proven = true)
{
    AuditEntry e;
    e.name = std::move(name);
    e.statement = std::move(statement);
    e.proven = proven;
    e.notes = std::move(why);
    return e;
}

inline Int hget(const HVector& h, int i) { return i >= 0 && i < static_cast<int>(h.size()) ? h[i] : 0; }

inline bool pi1_nontrivial(const AuditContext& c)
{
    return c.as.beta1_positive || (c.as.subgroup_index && *c.as.subgroup_index >= 2) || c.bq[1] > 0;
}

// f-vector (f_0..f_{d-1}) of Kühnel's M^d, from its stacked vertex links.
inline std::vector<Int> kuhnel_min_f(int d)
{
    std::vector<Int> out{2 * d + 1, binom(2 * d + 1, 2)};
    for (int i = 1; i + 1 < d; ++i) out.push_back((2 * d + 1) * phi(2 * d, d - 1, i) / (i + 2));
    return out;
}

} // namespace detail

/// Evaluate every registered inequality, each behind its own hypothesis guard.
inline AuditReport audit(const SimplicialComplex& K, const Field& field = Field::rationals(),
                         const AuditAssertions& as = {})
{
    K.require_pure("audit");
    if (!is_connected(K)) fail("NotConnected", "audit needs a connected complex");
    using detail::hget;
    using detail::leq;
    using detail::skip;
    detail::AuditContext c{K, field, K.d(), static_cast<Int>(K.num_vertices()), f_vector(K), h_vector(K),
                           euler_characteristic(K), betti(K, field), betti(K, Field::rationals()),
                           manifold_report(K, field), manifold_report(K, Field::rationals()), as};
    const int d = c.d;
    const auto& h = c.h;
    const Int g2 = hget(h, 2) - hget(h, 1);
    AuditReport R;
    R.field = field.name();
    auto& E = R.entries;
    const std::string nb_gate = "needs a homology manifold without boundary";

    // 1
    {
        std::string st = "h2 - h1 <= C(h1,2)";
        if (d < 2) E.push_back(skip("universal_upper", st, "needs d >= 2"));
        else E.push_back(leq("universal_upper", st, g2, binom(h[1], 2)));
    }
    // 2
    {
        std::string st = "h0 <= h1 <= h2";
        if (d < 3 || !c.manifold_nb()) E.push_back(skip("rigidity", st, nb_gate + " and d >= 3"));
        else {
            auto e = leq("rigidity", st, h[1], h[2]);
            if (h[0] > h[1]) e.status = AuditStatus::Violated;
            if (e.status == AuditStatus::Tight) e.notes = "h1 = h2: stacked sphere expected";
            E.push_back(e);
        }
    }
    // 3
    {
        std::string st = "(t-1)/t C(d+1,2) <= h2 - h1 (scaled by t)";
        if (!c.closed_q()) E.push_back(skip("covering_index", st, "needs a closed homology manifold"));
        else if (!as.subgroup_index) E.push_back(skip("covering_index", st, "no subgroup index asserted"));
        else {
            Int t = *as.subgroup_index;
            auto e = leq("covering_index", st, (t - 1) * binom(d + 1, 2), t * g2);
            e.notes = "t = " + std::to_string(t) + " (asserted)";
            E.push_back(e);
        }
    }
    // 4
    {
        std::string st = "C(d+1,2) <= h2 - h1 when beta1 > 0";
        if (!c.closed_q()) E.push_back(skip("covering_beta1", st, "needs a closed homology manifold"));
        else if (!as.beta1_positive && c.bq[1] == 0)
            E.push_back(skip("covering_beta1", st, "beta1 = 0 over Q and not asserted positive"));
        else {
            auto e = leq("covering_beta1", st, binom(d + 1, 2), g2);
            e.notes = as.beta1_positive ? "beta1 > 0 asserted" : "beta1 > 0 computed over Q";
            E.push_back(e);
        }
    }
    // 5
    {
        std::string st = "d + 1 <= h1 for nontrivial fundamental group";
        if (!c.closed_q()) E.push_back(skip("bku_vertex_bound", st, "needs a closed manifold"));
        else if (!detail::pi1_nontrivial(c)) E.push_back(skip("bku_vertex_bound", st, "fundamental group not known to be nontrivial"));
        else {
            auto e = leq("bku_vertex_bound", st, d + 1, h[1]);
            e.notes = "assumes a combinatorial manifold; PL type of vertex links is not checked";
            E.push_back(e);
        }
    }
    // 6
    {
        std::string st = "(d-1) h1 <= 3 h3 + (d-4) h2";
        if (d < 4 || !detail::links_manifold_nb(c, 1))
            E.push_back(skip("vertex_link_rigidity", st, "needs d >= 4 and every vertex link a homology manifold without boundary"));
        else {
            auto e = leq("vertex_link_rigidity", st, (d - 1) * h[1], 3 * hget(h, 3) + (d - 4) * h[2]);
            if (d >= 5) {
                bool w = in_walkup_class(K, field);
                e.notes = std::string("Walkup class: ") + (w ? "yes" : "no");
                if ((e.status == AuditStatus::Tight) != w) e.notes += "; equality and class membership disagree";
            }
            E.push_back(e);
        }
    }
    // 7
    {
        std::string st = "h2 - h1 >= -15/2 (chi - 2) (scaled by 2)";
        if (d != 5 || !detail::links_manifold_nb(c, 1))
            E.push_back(skip("walkup_d5", st, "needs d = 5 and every vertex link a homology manifold without boundary"));
        else E.push_back(leq("walkup_d5", st, -15 * (c.chi - 2), 2 * g2));
    }
    // 8
    Int edge_lhs = 0, edge_rhs = 0;
    bool edge_ok = false;
    {
        std::string st = "12 h4 + 6(d-4) h3 + (d-2)(d-7) h2 - (d-1)(d-2) h1 >= 0";
        if (d < 5 || !detail::links_manifold_nb(c, 2))
            E.push_back(skip("edge_link_rigidity", st, "needs d >= 5 and every edge link a homology manifold without boundary"));
        else {
            edge_lhs = 0;
            edge_rhs = 12 * hget(h, 4) + 6 * (d - 4) * hget(h, 3) + (d - 2) * (d - 7) * h[2] - (d - 1) * (d - 2) * h[1];
            edge_ok = true;
            E.push_back(leq("edge_link_rigidity", st, edge_lhs, edge_rhs));
        }
    }
    // 9
    {
        std::string st = "chi <= 2 + (h3 - h1)/14 (scaled by 14)";
        if (d != 7 || !c.manifold_nb()) E.push_back(skip("euler_bound_d7", st, "needs a 6-dimensional homology manifold without boundary"));
        else {
            auto e = leq("euler_bound_d7", st, 14 * (c.chi - 2), h[3] - h[1]);
            bool direct = e.status != AuditStatus::Violated;
            bool via_edges = edge_ok && edge_lhs <= edge_rhs;
            e.notes = direct == via_edges ? "agrees with the edge-link route" : "disagrees with the edge-link route";
            if (direct != via_edges) e.status = AuditStatus::Violated;
            E.push_back(e);
        }
    }
    // 10
    {
        std::string st = "h'_{d-2} >= h'_{d-1} + (d-1) beta_{d-3}";
        if (d < 4 || !c.rep_q.is_homology_manifold) E.push_back(skip("hprime_top_gap", st, "needs a homology manifold and d >= 4"));
        else {
            auto hp = h_prime(h, c.bq);
            auto e = leq("hprime_top_gap", st, hp[d - 1] + (d - 1) * c.bq[d - 3], hp[d - 2]);
            e.notes = "rational Betti numbers";
            E.push_back(e);
        }
    }
    // 11
    {
        std::string st = "h2 >= h1 + C(d+1,2) beta1 - C(d-1,2) beta2";
        if (!c.closed_q() || d < 3) E.push_back(skip("betti_h2_bound", st, "needs a closed homology manifold over Q"));
        else {
            auto e = leq("betti_h2_bound", st, h[1] + binom(d + 1, 2) * c.bq[1] - binom(d - 1, 2) * c.bq[2], h[2]);
            if (d >= 5 && c.bq[2] == 0 && e.status == AuditStatus::Tight) {
                bool w = in_walkup_class(K, field);
                e.notes = std::string("equality with beta2 = 0: Walkup class ") + (w ? "confirmed" : "NOT confirmed");
                if (!w) e.status = AuditStatus::Violated;
            }
            E.push_back(e);
        }
    }
    // 12
    {
        std::string st = "h2 - h1 >= C(d+1,2) beta1";
        if (!c.manifold_nb() || d < 3) E.push_back(skip("kalai_beta1", st, nb_gate, false));
        else {
            auto e = leq("kalai_beta1", st, binom(d + 1, 2) * c.bq[1], g2);
            e.proven = false;
            e.notes = "CONJECTURE; proven when closed with beta2 = 0, or beta1 = 1";
            E.push_back(e);
        }
    }
    // 13
    {
        std::string st = "f_i >= phi_i(n,d) for 1 <= i <= d-1";
        if (d < 4 || !c.manifold_nb()) E.push_back(skip("stacked_lower", st, nb_gate + " and d >= 4"));
        else {
            int worst = 1;
            for (int i = 1; i < d; ++i)
                if (c.f[i + 1] - phi(c.n, d, i) < c.f[worst + 1] - phi(c.n, d, worst)) worst = i;
            auto e = leq("stacked_lower", st, phi(c.n, d, worst), c.f[worst + 1]);
            e.notes = "smallest slack at i = " + std::to_string(worst);
            if (e.status == AuditStatus::Tight) e.notes += "; equality forces a stacked sphere";
            E.push_back(e);
        }
    }
    // 14
    {
        std::string st = "f_i >= f_i(M^d) when beta1 > 0";
        if (d < 4 || !c.manifold_nb()) E.push_back(skip("min_nonzero_betti", st, nb_gate + " and d >= 4"));
        else if (!as.beta1_positive && c.bq[1] == 0) E.push_back(skip("min_nonzero_betti", st, "beta1 = 0"));
        else {
            auto fm = detail::kuhnel_min_f(d);
            int worst = 0;
            for (int i = 0; i < d; ++i)
                if (c.f[i + 1] - fm[i] < c.f[worst + 1] - fm[worst]) worst = i;
            auto e = leq("min_nonzero_betti", st, fm[worst], c.f[worst + 1]);
            e.notes = "smallest slack at i = " + std::to_string(worst);
            E.push_back(e);
        }
    }
    // 15, 16
    {
        std::string sta = "G + C(2m,m) beta_{m-1} <= C(n-m-2,m+1)";
        std::string stb = "G + C(2m,m) beta_{m-1} <= C(a+m-1,m+1) + C(b+m-1,m)";
        int m = (d - 1) / 2;
        std::optional<Int> G;
        if (d % 2 == 1 && d >= 3 && c.manifold_nb()) G = G_invariant(c.bq, m);
        if (!G) {
            E.push_back(skip("even_euler_a", sta, "needs an even-dimensional homology manifold without boundary"));
            E.push_back(skip("even_euler_b", stb, "needs an even-dimensional homology manifold without boundary"));
        } else if (*G <= 0) {
            E.push_back(skip("even_euler_a", sta, "G = " + std::to_string(*G) + " is not positive"));
            E.push_back(skip("even_euler_b", stb, "G = " + std::to_string(*G) + " is not positive"));
        } else {
            Int lhs = *G + binom(2 * m, m) * c.bq[m - 1];
            // Macaulay bound in degree m+1 over n-2m-2 generators
            auto ea = leq("even_euler_a", sta, lhs, binom(c.n - m - 2, m + 1));
            ea.notes = "G = " + std::to_string(*G);
            E.push_back(ea);
            Int a = 1;
            while (binom(a + 1, 2) <= g2) ++a;
            Int b = g2 - binom(a, 2);
            if (!(a > b)) { // cannot happen with the largest a, kept as the documented fallback
                ++a;
                b = g2 - binom(a, 2);
            }
            auto eb = leq("even_euler_b", stb, lhs, binom(a + m - 1, m + 1) + binom(b + m - 1, m));
            eb.notes = "h2 - h1 = C(" + std::to_string(a) + ",2) + " + std::to_string(b) + ", largest a";
            E.push_back(eb);
        }
    }
    // 17
    {
        std::string st = "h' is an M-vector";
        if (!c.rep.is_homology_manifold) E.push_back(skip("hprime_m_vector", st, "needs a homology manifold"));
        else {
            auto hp = h_prime(h, c.b);
            AuditEntry e;
            e.name = "hprime_m_vector";
            e.statement = st;
            e.status = is_M_vector(hp) ? AuditStatus::Holds : AuditStatus::Violated;
            e.notes = "h' = (" + join_ints(hp) + ")";
            E.push_back(e);
        }
    }
    // 18
    {
        std::string st = "h_{d-i} - h_i = (-1)^i C(d,i)(chi - chi(S^{d-1}))";
        if (!c.manifold_nb()) E.push_back(skip("klee_ds", st, nb_gate));
        else {
            auto def = ds_defect(h, c.chi);
            Int worst = 0;
            for (Int x : def) worst = std::max(worst, x < 0 ? -x : x);
            AuditEntry e;
            e.name = "klee_ds";
            e.statement = st;
            e.lhs = worst;
            e.rhs = 0;
            e.status = worst == 0 ? AuditStatus::Holds : AuditStatus::Violated;
            E.push_back(e);
        }
    }
    // 19
    {
        std::string st = "h'_d = 1 if orientable, 0 otherwise";
        if (!c.manifold_nb()) E.push_back(skip("top_hprime", st, nb_gate));
        else {
            auto hp = h_prime(h, c.b);
            Int want = c.rep.orientable ? 1 : 0;
            AuditEntry e;
            e.name = "top_hprime";
            e.statement = st;
            e.lhs = hp[d];
            e.rhs = want;
            e.status = hp[d] == want ? AuditStatus::Holds : AuditStatus::Violated;
            e.notes = c.rep.orientable ? "orientable" : "not orientable";
            E.push_back(e);
        }
    }
    return R;
}

/// Aligned text table of an audit report.
inline std::string format_table(const AuditReport& R)
{
    std::size_t w = 5;
    for (auto& e : R.entries) w = std::max(w, e.name.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w)) << "check" << "  " << std::setw(14) << "status" << std::setw(10)
       << "lhs" << std::setw(10) << "rhs" << "notes\n";
    for (auto& e : R.entries) {
        std::string st = to_string(e.status);
        if (!e.proven) st += "*";
        os << std::setw(static_cast<int>(w)) << e.name << "  " << std::setw(14) << st << std::setw(10)
           << (e.lhs ? std::to_string(*e.lhs) : "-") << std::setw(10) << (e.rhs ? std::to_string(*e.rhs) : "-")
           << e.notes << "\n";
    }
    os << "(* conjecture, never fatal; field " << R.field << ")\n";
    return os.str();
}

} // namespace facelab
