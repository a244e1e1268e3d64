#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <facelab/facelab.hpp>

using namespace facelab;

namespace {

struct Options {
    std::string field = "q";
    std::string format = "json";
    unsigned seed = 1;
    bool trace = false;
    std::string out, log_out;
};

Field parse_field(const std::string& s)
{
    if (s == "q" || s == "Q") return Field::rationals();
    if (s.size() > 2 && (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0)) return Field::gf(std::stoll(s.substr(2)));
    fail("InvalidField", "field must be q or gfP, got " + s);
}

// "catalog:NAME" reads a stored example instead of a file
CatalogEntry* catalog_ref(const std::string& input)
{
    static std::optional<CatalogEntry> held;
    if (input.rfind("catalog:", 0) != 0) return nullptr;
    held = catalog(input.substr(8));
    return &*held;
}

struct Loaded {
    SimplicialComplex K;
    std::optional<Coloring> coloring;
};

Loaded load_input(const std::string& input)
{
    if (auto* e = catalog_ref(input)) {
        if (!e->complex) fail("UnknownEntry", input + " is not a complex");
        return {*e->complex, e->coloring};
    }
    auto text = read_file(input);
    if (detail::looks_like_json(text)) {
        auto j = detail::parse_json(text);
        return {complex_from_json(j), coloring_from_json(j)};
    }
    return {complex_from_text(text), std::nullopt};
}

GradedPoset load_poset_input(const std::string& input)
{
    if (auto* e = catalog_ref(input)) {
        if (e->poset) return *e->poset;
        if (e->complex) return face_poset(*e->complex, true);
        fail("UnknownEntry", input + " has no poset");
    }
    auto text = read_file(input);
    auto j = detail::parse_json(text);
    if (j.is_object() && j.contains("elements")) return poset_from_json(j);
    return face_poset(complex_from_json(j), true);
}

void emit(const Options& o, const json& j)
{
    if (o.out.empty()) std::cout << j.dump(2) << "\n";
    else write_file(o.out, j.dump(2) + "\n");
}

void emit_complex(const Options& o, const SimplicialComplex& K, const MoveLog* log)
{
    emit(o, complex_to_json(K));
    if (log && !o.log_out.empty()) write_file(o.log_out, move_log_to_json(*log).dump(2) + "\n");
    if (log && o.trace)
        for (auto& r : *log) std::cerr << r.op << " -> (" << r.f0 << "," << r.f1 << ")\n";
}

json fine_to_json(const FineVector& v)
{
    json a = json::array();
    for (auto& [b, x] : v) a.push_back({{"b", b}, {"value", x}});
    return a;
}

json flag_to_json(const FlagVector& v)
{
    json a = json::array();
    for (auto& [S, x] : v.entries) a.push_back({{"S", S}, {"value", x}});
    return a;
}

std::string join(const std::vector<Int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

void print_table(const json& j, const std::string& indent = "")
{
    for (auto& [k, v] : j.items()) {
        if (v.is_object()) {
            std::cout << indent << k << ":\n";
            print_table(v, indent + "  ");
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); })) {
            std::vector<Int> xs;
            for (auto& x : v) xs.push_back(x.get<Int>());
            std::cout << indent << std::left << std::setw(22) << k << join(xs) << "\n";
        } else {
            std::cout << indent << std::left << std::setw(22) << k << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "\n";
        }
    }
}

void report(const Options& o, const json& j)
{
    if (o.format == "table" && o.out.empty()) print_table(j);
    else emit(o, j);
}

int cmd_analyze(const Options& o, const std::string& input)
{
    auto [K, coloring] = load_input(input);
    auto field = parse_field(o.field);
    json r;
    r["vertices"] = K.num_vertices();
    r["dimension"] = K.d() - 1;
    auto f = f_vector(K);
    auto h = h_vector(K);
    r["f"] = f;
    r["h"] = h;
    r["g"] = g_from_h(h);
    r["chi"] = euler_characteristic(K);
    r["betti"] = betti_to_json(betti(K, field));
    r["ds_defect"] = ds_defect(K);
    try {
        auto m = manifold_report(K, field);
        json mj = {{"homology_manifold", m.is_homology_manifold},
                   {"closed", m.closed},
                   {"orientable", m.orientable},
                   {"boundary_facets", m.boundary.num_facets()}};
        if (m.witness) mj["witness"] = to_json(*m.witness);
        r["manifold"] = mj;
    } catch (const Error& e) {
        r["manifold"] = {{"error", e.kind()}};
    }
    r["semi_eulerian"] = is_semi_eulerian(K);
    r["eulerian"] = is_eulerian(K);
    if (coloring) {
        validate_coloring(K, *coloring);
        auto ff = fine_f(K, *coloring);
        auto fh = fine_h(ff, coloring->type);
        r["fine_f"] = fine_to_json(ff);
        r["fine_h"] = fine_to_json(fh);
        r["fine_ds_defect"] = fine_to_json(fine_ds_defect(fh, coloring->type, euler_characteristic(K)));
        if (std::all_of(coloring->type.begin(), coloring->type.end(), [](int a) { return a == 1; })) {
            auto fl = flag_f(K, *coloring);
            r["flag_f"] = flag_to_json(fl);
            r["flag_h"] = flag_to_json(flag_h(fl));
        }
    }
    report(o, r);
    return 0;
}

int cmd_audit(const Options& o, const std::string& input, bool beta1, std::optional<Int> index)
{
    auto K = load_input(input).K;
    AuditAssertions as;
    as.beta1_positive = beta1;
    as.subgroup_index = index;
    auto R = audit(K, parse_field(o.field), as);
    if (o.format == "table" && o.out.empty()) std::cout << format_table(R);
    else emit(o, audit_to_json(R));
    return R.has_proven_violation() ? 1 : 0;
}

int cmd_poset(const Options& o, const std::string& input, const std::string& which)
{
    auto P = load_poset_input(input);
    json r;
    if (which == "classify") {
        auto c = classify_poset(P);
        r["class"] = c == PosetClass::Eulerian ? "Eulerian" : c == PosetClass::SemiEulerian ? "SemiEulerian" : "Neither";
        r["rank"] = P.rank();
        r["mu"] = mobius(P, P.bottom(), P.top());
    } else if (which == "toric") {
        auto t = toric_h(P);
        r["th"] = t.th;
        r["ascending"] = t.ascending();
        r["g_hat"] = t.g_hat;
        r["chi"] = order_complex_chi(P);
        try {
            r["ds_defect"] = toric_ds_defect(P);
        } catch (const Error& e) {
            r["ds_defect"] = e.kind();
        }
    } else if (which == "flag") {
        auto fp = flag_vectors(P);
        r["flag_f"] = flag_to_json(fp.f);
        r["flag_h"] = flag_to_json(fp.h);
        r["ab"] = ab_polynomial(fp.h);
    } else if (which == "cd") {
        auto ab = ab_polynomial(P);
        r["ab"] = ab;
        try {
            auto cd = cd_index(ab);
            r["cd"] = cd;
            r["cd_string"] = to_string(cd);
        } catch (const NotInCDSpan& e) {
            r["cd"] = nullptr;
            r["error"] = e.kind();
            r["residual"] = e.residual();
            if (classify_poset(P) == PosetClass::SemiEulerian) {
                auto fx = flag_difference(flag_f(P), semi_eulerian_correction(P));
                auto cd = cd_index(ab_polynomial(flag_h(fx)));
                r["corrected_cd"] = cd;
                r["corrected_cd_string"] = to_string(cd);
            }
        }
    } else {
        fail("UnknownReport", which);
    }
    report(o, r);
    return 0;
}

LabelFace parse_face(const std::string& s)
{
    LabelFace f;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        bool digits = tok.find_first_not_of("-0123456789") == std::string::npos;
        if (digits) f.emplace_back(static_cast<long long>(std::stoll(tok)));
        else f.emplace_back(tok);
    }
    return f;
}

int cmd_move(const Options& o, const std::string& input, const std::string& F, const std::string& G, bool random)
{
    auto K = load_input(input).K;
    BistellarMove mv;
    if (random) {
        std::mt19937 rng(o.seed);
        auto m = random_bistellar_move(K, rng);
        if (!m) fail("NotFound", "no legal move found");
        mv = *m;
    } else {
        if (F.empty() || G.empty()) fail("ArgumentOutOfRange", "move needs --F and --G, or --random");
        mv = {parse_face(F), parse_face(G)};
    }
    auto R = apply_bistellar(K, mv, true);
    MoveLog log(2);
    log[0].op = "start";
    log[0].facets = K.facet_labels();
    log[0].f0 = static_cast<Int>(K.num_vertices());
    log[0].f1 = static_cast<Int>(num_edges(K));
    log[1].op = "bistellar";
    log[1].F = mv.F;
    log[1].G = mv.G;
    log[1].f0 = static_cast<Int>(R.num_vertices());
    log[1].f1 = static_cast<Int>(num_edges(R));
    emit_complex(o, R, &log);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"facelab: face numbers, homology and constructions for simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "coefficient field: q or gfP")->capture_default_str();
    app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();
    app.add_flag("--trace", o.trace, "print intermediate steps to stderr");
    app.add_option("-o,--out", o.out, "write the main output here");

    std::string input;

    auto* analyze = app.add_subcommand("analyze", "f/h/g vectors, Betti numbers and manifold checks");
    analyze->add_option("input", input, "complex file or catalog:NAME")->required();

    bool beta1 = false;
    std::optional<Int> index;
    auto* aud = app.add_subcommand("audit", "check the known inequalities");
    aud->add_option("input", input, "complex file or catalog:NAME")->required();
    aud->add_flag("--assert-beta1-positive", beta1, "assume a nonzero first Betti number");
    aud->add_option("--assert-subgroup-index", index, "assume a subgroup of this index in the fundamental group");

    auto* gen = app.add_subcommand("generate", "build complexes");
    gen->require_subcommand(1);
    gen->fallthrough();
    gen->add_option("--log", o.log_out, "write the move log here");
    int n = 0, d = 0, m = 2;
    Int g1 = 0, g2 = 0, edges = 0;
    std::string name, space;
    auto* g_stacked = gen->add_subcommand("stacked", "stacked sphere");
    g_stacked->add_option("--n", n)->required();
    g_stacked->add_option("--d", d)->required();
    auto* g_kl = gen->add_subcommand("kl", "vertex-transitive S1 x S(2m-1)");
    g_kl->add_option("--n", n)->required();
    g_kl->add_option("--m", m)->capture_default_str();
    auto* g_cat = gen->add_subcommand("catalog", "stored example");
    g_cat->add_option("name", name)->required();
    auto* g_real = gen->add_subcommand("realize", "hit a target g-vector");
    g_real->add_option("--space", space)->required();
    g_real->add_option("--g1", g1)->required();
    g_real->add_option("--g2", g2)->required();
    auto* g_fill = gen->add_subcommand("fill", "add edges to the S1 x S3 series by 1-moves");
    g_fill->add_option("--n", n)->required();
    g_fill->add_option("--edges", edges)->required();
    auto* g_refit = gen->add_subcommand("refit", "make a complex 2-neighborly with a spanning tree");
    g_refit->add_option("input", input)->required();

    std::string mF, mG;
    bool random = false;
    auto* mov = app.add_subcommand("move", "apply one bistellar move");
    mov->add_option("input", input)->required();
    mov->add_option("--F", mF, "comma separated labels");
    mov->add_option("--G", mG, "comma separated labels");
    mov->add_flag("--random", random, "pick a random legal move");
    mov->add_option("--log", o.log_out, "write the move log here");

    std::string which;
    auto* pos = app.add_subcommand("poset", "poset invariants");
    pos->add_option("input", input, "poset or complex file, or catalog:NAME")->required();
    pos->add_option("which", which)->required()->check(CLI::IsMember({"toric", "cd", "flag", "classify"}));

    std::string start;
    auto* rep = app.add_subcommand("replay", "re-run a move log");
    rep->add_option("log", input)->required();
    rep->add_option("--start", start, "complex to start from when the log has none");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(o, input);
        if (*aud) return cmd_audit(o, input, beta1, index);
        if (*pos) return cmd_poset(o, input, which);
        if (*mov) return cmd_move(o, input, mF, mG, random);
        if (*rep) {
            auto log = move_log_from_json(detail::parse_json(read_file(input)));
            std::optional<SimplicialComplex> s;
            if (!start.empty()) s = load_input(start).K;
            emit(o, complex_to_json(replay(log, s)));
            return 0;
        }
        if (*g_stacked) emit_complex(o, stacked_sphere(n, d), nullptr);
        else if (*g_kl) emit_complex(o, kuhnel_lassmann(n, m), nullptr);
        else if (*g_cat) {
            auto e = catalog(name);
            if (e.complex) emit(o, complex_to_json(*e.complex));
            else if (e.poset) emit(o, poset_to_json(*e.poset));
        } else if (*g_real) {
            std::string sp = space;
            std::map<std::string, std::string> alias = {{"cp2", "CP2"}, {"k3", "K3"}, {"s1xs3", "S1xS3"},
                                                        {"s2xs2", "S2xS2_sum2"}, {"s3xs3", "S3xS3_pairs"}};
            if (alias.count(sp)) sp = alias[sp];
            auto r = realize_space(sp, g1 + 1, g2 + g1 + 1);
            emit_complex(o, r.complex, &r.log);
        } else if (*g_fill) {
            auto r = s1xs3_fill(n, edges);
            emit_complex(o, r.complex, &r.log);
        } else if (*g_refit) {
            std::vector<std::pair<std::string, SimplicialComplex>> trace;
            auto r = two_neighborly_refit(load_input(input).K, parse_field(o.field), o.trace ? &trace : nullptr);
            for (auto& [stage, K] : trace)
                std::cerr << stage << ": f = " << join(f_vector(K)) << "\n";
            auto j = complex_to_json(r.complex);
            j["tree"] = to_json(r.tree.facets);
            j["rho"] = to_json(r.rho);
            emit(o, j);
            if (!o.log_out.empty()) write_file(o.log_out, move_log_to_json(r.log).dump(2) + "\n");
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return 2;
    }
}
