#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matchmult/covers.hpp"
#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"
#include "matchmult/matching.hpp"
#include "matchmult/sweep.hpp"
#include "matchmult/theta.hpp"

using namespace matchmult;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string graph;
    std::string theta;
    std::string vertex;
    std::string dot;
    std::string poly;
    std::string report;
    std::string campaign;
    std::string demo;
    bool json = false;
    bool allow_nonroot = false;
    bool list = false;
    int jobs = 0;
    int min_n = 1;
    int max_n = 0;
    int enumerate = 0;
    int cap = kDefaultConverseCap;
    std::uint64_t seed = 1;
};

Graph read_graph(const std::string& spec) {
    if (spec.empty()) throw Error(ErrorCode::ParseError, "--graph is required");
    if (spec.starts_with("builtin:")) return builtin(std::string_view(spec).substr(8));
    std::ifstream in(spec);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file '" + spec + "'");
    std::stringstream text;
    text << in.rdbuf();
    return load_graph(text.str());
}

RootClass read_theta(const Graph& g, const std::string& spec) {
    if (spec.empty()) throw Error(ErrorCode::ParseError, "--theta is required");
    if (spec.starts_with("factor:")) {
        const auto roots = root_classes(g);
        std::size_t k = 0;
        try {
            k = std::stoul(spec.substr(7));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad factor index in '" + spec + "'");
        }
        if (k < 1 || k > roots.size())
            throw Error(ErrorCode::ParseError, "factor index " + std::to_string(k) + " outside 1.." + std::to_string(roots.size()));
        return roots[k - 1].root;
    }
    RootClass r(parse_poly(spec));
    r.with_display_interval();
    return r;
}

Vertex read_vertex(const Graph& g, const std::string& spec) {
    if (spec.empty()) throw Error(ErrorCode::ParseError, "--vertex is required");
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.has_labels() && g.label(v) == spec) return v;
    try {
        std::size_t used = 0;
        const int v = std::stoi(spec, &used);
        if (used == spec.size()) {
            if (!g.contains(v)) throw Error(ErrorCode::BadVertex, "vertex " + spec + " not in graph");
            return v;
        }
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::BadVertex, "no vertex '" + spec + "'");
}

void maybe_dot(const Options& o, const Graph& g) {
    if (o.dot.empty()) return;
    std::ofstream out(o.dot);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + o.dot + "'");
    out << to_dot(g);
}

char sign_symbol(Sign s) { return s == Sign::essential ? '-' : s == Sign::neutral ? '*' : '+'; }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string vertex_list(const Graph& g, const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + g.label(vs[i]);
    return s + "}";
}

void print_signs(const Graph& g, const SignTable& t, const std::vector<Vertex>& origin = {}) {
    for (Vertex v = 0; v < static_cast<Vertex>(t.signs.size()); ++v) {
        const Vertex name = origin.empty() ? v : origin[static_cast<std::size_t>(v)];
        std::cout << "  " << std::setw(4) << g.label(name) << "  " << sign_symbol(t.signs[static_cast<std::size_t>(v)]) << "  "
                  << std::setw(9) << std::left << to_string(t.signs[static_cast<std::size_t>(v)]) << std::right
                  << (t.special[static_cast<std::size_t>(v)] ? "  special" : "") << "\n";
    }
}

void print_partition(const Graph& g, const ThetaPartition& p) {
    std::cout << "theta " << p.theta.describe() << ", mult " << p.table.mult << "\n";
    print_signs(g, p.table);
    std::cout << "D = " << vertex_list(g, p.D) << "\nA = " << vertex_list(g, p.A) << "\nC = " << vertex_list(g, p.C) << "\n";
}

std::string path_text(const Graph& g, const std::vector<Vertex>& path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) s += (i ? " " : "") + g.label(path[i]);
    return s;
}

void print_cover(const Graph& g, const PathCover& c) {
    std::cout << c.size() << " path(s)\n";
    for (const auto& p : c.paths()) std::cout << "  [" << p.size() << "] " << path_text(g, p) << "\n";
}

void print_verdict(const Graph& g, const MainVerdict& v) {
    std::cout << (v.forest ? "forest" : "not a forest (counterexample mode)") << "\n"
              << "min cover size  " << v.min_cover_size << "\n"
              << "max multiplicity " << v.max_mult << " at";
    for (const auto& w : v.witnesses) std::cout << " [" << w.describe() << "]";
    std::cout << "\nbound            " << (v.bound_ok ? "holds" : "FAILS") << "\n"
              << "biconditional    " << (v.biconditional_ok ? "holds" : "fails") << "\n";
    if (v.forest) std::cout << "converse         " << (v.converse_ok ? "holds" : "FAILS") << "\n";
    std::cout << "covers checked   " << v.covers_checked << " (" << v.pairs_checked << " cover/theta pairs)\n";
    if (v.counterexample) {
        std::cout << "counterexample at " << v.counterexample->theta.describe() << ": " << v.counterexample->reason << "\n";
        print_cover(g, v.counterexample->cover);
    }
}

int cmd_poly(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    const IntPoly mu = matching_polynomial(g);
    if (o.json)
        print_json({{"poly", to_json(mu)}, {"text", to_string(mu)}});
    else
        std::cout << to_string(mu) << "\n";
    return 0;
}

int cmd_factor(const Options& o) {
    IntPoly p;
    if (!o.poly.empty()) {
        p = parse_poly(o.poly);
    } else {
        const Graph g = read_graph(o.graph);
        maybe_dot(o, g);
        p = matching_polynomial(g);
    }
    const FactoredPoly f = factor_irreducible(p);
    if (o.json) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& x : f.factors) {
            RootClass r = RootClass::trusted(x.base);
            r.with_display_interval();
            fs.push_back({{"factor", to_json(x.base)}, {"mult", x.exponent}, {"rootclass", r.to_json()}});
        }
        print_json({{"poly", to_json(p)}, {"unit", f.unit.get_str()}, {"factors", fs}});
        return 0;
    }
    std::cout << to_string(p) << "\n";
    if (f.unit != 1) std::cout << "unit " << f.unit.get_str() << "\n";
    int k = 1;
    for (const auto& x : f.factors) {
        RootClass r = RootClass::trusted(x.base);
        r.with_display_interval();
        std::cout << "  factor:" << k++ << "  (" << r.describe() << ")^" << x.exponent << "\n";
    }
    return 0;
}

int cmd_classify(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    const RootClass theta = read_theta(g, o.theta);
    const Vertex v = read_vertex(g, o.vertex);
    const VertexSign s = classify_vertex(g, theta, v, o.allow_nonroot);
    if (o.json)
        print_json({{"vertex", vertex_json(g, v)},
                    {"rootclass", theta.to_json()},
                    {"sign", std::string(to_string(s.sign))},
                    {"special", s.special}});
    else
        std::cout << g.label(v) << ": " << to_string(s.sign) << (s.special ? ", special" : "") << "\n";
    return 0;
}

int cmd_partition(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    const ThetaPartition p = theta_partition(g, read_theta(g, o.theta), o.allow_nonroot);
    if (o.json)
        print_json(p.to_json(g));
    else
        print_partition(g, p);
    return 0;
}

int cmd_eigvec(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    const EigvecResult e = construct_eigenvector(g, read_theta(g, o.theta));
    if (o.json) {
        print_json(e.to_json(g));
    } else {
        std::cout << "theta " << e.theta.describe() << " (t denotes theta)\n";
        for (Vertex v = 0; v < g.order(); ++v)
            std::cout << "  " << std::setw(4) << g.label(v) << "  " << e.values[static_cast<std::size_t>(v)].to_string() << "\n";
        std::cout << "support " << vertex_list(g, e.support) << "\n"
                  << "eigenvalue equation " << (e.equation_holds ? "holds" : "FAILS") << ", support "
                  << (e.support_matches ? "equals D" : "DIFFERS from D") << "\n";
    }
    return e.equation_holds && e.support_matches ? 0 : kExitViolation;
}

int cmd_cover(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    if (o.enumerate > 0) {
        const auto all = enumerate_covers(g, o.enumerate);
        if (o.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : all) arr.push_back(c.to_json(g));
            print_json(arr);
        } else {
            std::cout << all.size() << " cover(s) by " << o.enumerate << " path(s)\n";
            for (const auto& c : all) {
                std::string line;
                for (const auto& p : c.paths()) line += " [" + path_text(g, p) + "]";
                std::cout << " " << line << "\n";
            }
        }
        return 0;
    }
    const PathCover c = min_path_cover(g);
    if (o.theta.empty()) {
        if (o.json)
            print_json(c.to_json(g));
        else
            print_cover(g, c);
        return 0;
    }
    const RootClass theta = read_theta(g, o.theta);
    const ExtremalReport r = is_extremal(g, theta, c);
    if (o.json) {
        print_json({{"cover", c.to_json(g)}, {"rootclass", theta.to_json()}, {"report", r.to_json(g)}});
        return 0;
    }
    print_cover(g, c);
    std::cout << "theta " << theta.describe() << ": " << (r.verdict ? "extremal" : "not extremal") << "\n";
    for (std::size_t i = 0; i < r.condition_a.size(); ++i)
        std::cout << "  path " << i << ": theta " << (r.condition_a[i] ? "is" : "is not") << " a root\n";
    for (const auto& x : r.cross_edges)
        std::cout << "  cross edge " << g.label(x.edge.first) << "-" << g.label(x.edge.second) << ": "
                  << (x.u_special ? g.label(x.edge.first) + " special" : x.v_special ? g.label(x.edge.second) + " special" : "no special endpoint")
                  << "\n";
    return 0;
}

int cmd_certify(const Options& o) {
    const Graph g = read_graph(o.graph);
    maybe_dot(o, g);
    const MainVerdict v = certify_main(g, o.cap);
    if (o.json)
        print_json(v.to_json(g));
    else
        print_verdict(g, v);
    return v.ok() ? 0 : kExitViolation;
}

int cmd_sweep(const Options& o) {
    if (o.list) {
        for (const auto& c : campaigns())
            std::cout << std::setw(16) << std::left << c.name << std::right << " n <= " << std::setw(2) << c.default_max_n
                      << " (cap " << c.cap << ")  " << c.description << "\n";
        return 0;
    }
    SweepConfig cfg;
    cfg.campaign = o.campaign;
    cfg.n_min = o.min_n;
    cfg.n_max = o.max_n;
    cfg.jobs = o.jobs;
    cfg.seed = o.seed;
    cfg.converse_cap = o.cap;
    const SweepReport r = run_sweep(cfg);
    const std::string text = r.to_json().dump(2) + "\n";
    if (!o.report.empty()) {
        std::ofstream out(o.report);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + o.report + "'");
        out << text;
    }
    if (o.json) {
        std::cout << text;
    } else {
        std::cout << r.campaign << " n=" << r.n_min << ".." << r.n_max << ": " << r.subjects << " subjects\n";
        for (const auto& [name, count] : r.checks) std::cout << "  " << std::setw(28) << std::left << name << std::right << count << "\n";
        std::cout << r.violations.size() << " violation(s)\n";
        for (const auto& v : r.violations) std::cout << "  " << v.check << " on " << v.subject << ": " << v.detail << "\n";
    }
    std::cerr << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    return r.ok() ? 0 : kExitViolation;
}

int demo_t9(const Options& o) {
    const Graph t = builtin("paper:T9");
    maybe_dot(o, t);
    const RootClass one(IntPoly{-1, 1});
    const auto p = theta_partition(t, one);
    const auto stable = check_stability(t, one, 4);
    const Graph minus_v3 = delete_vertex(t, 2).graph;
    const auto third = theta_partition(minus_v3, one);
    std::string rejected;
    try {
        check_stability(t, one, 2);
    } catch (const Error& e) {
        rejected = e.what();
    }
    const auto e = construct_eigenvector(t, one);
    if (o.json) {
        print_json({{"graph", to_json(t)},
                    {"poly", to_json(matching_polynomial(t))},
                    {"partition", p.to_json(t)},
                    {"delete_v5", {{"stable", stable.stable}, {"partition", stable.after.to_json(delete_vertex(t, 4).graph)}}},
                    {"delete_v3", {{"rejected", rejected}, {"partition", third.to_json(minus_v3)}}},
                    {"eigenvector", e.to_json(t)}});
        return 0;
    }
    std::cout << "mu(T) = " << to_string(matching_polynomial(t)) << "\n\n";
    print_partition(t, p);
    std::cout << "\ndelete v5 (special): " << (stable.stable ? "every other vertex keeps its class" : "NOT stable") << "\n";
    print_signs(t, stable.after.table, stable.origin);
    std::cout << "\ndelete v3 (positive, not special): stability check refused (" << rejected << ")\n";
    print_signs(t, third.table, delete_vertex(t, 2).origin);
    std::cout << "\neigenvector for theta = 1:\n";
    for (Vertex v = 0; v < t.order(); ++v)
        std::cout << "  " << std::setw(4) << t.label(v) << "  " << e.values[static_cast<std::size_t>(v)].to_string() << "\n";
    std::cout << "support " << vertex_list(t, e.support) << " = D\n";
    return 0;
}

int demo_g14(const Options& o) {
    const Graph g = builtin("paper:G14");
    maybe_dot(o, g);
    const RootClass sqrt3(IntPoly{-3, 0, 1});
    const IntPoly mu = matching_polynomial(g);
    const IntPoly p7 = matching_polynomial(path_graph(7));
    const unsigned mult = root_multiplicity(mu, sqrt3.minpoly());
    const IntPoly common = gcd(p7, sqrt3.minpoly());
    const MainVerdict v = certify_main(g);
    if (o.json) {
        print_json({{"graph", to_json(g)},
                    {"poly", to_json(mu)},
                    {"mult_sqrt3", mult},
                    {"mu_P7", to_json(p7)},
                    {"gcd_P7_sqrt3", to_json(common)},
                    {"verdict", v.to_json(g)}});
        return 0;
    }
    std::cout << "mu(G) = " << to_string(mu) << "\n";
    for (const auto& f : factor_irreducible(mu).factors) std::cout << "  (" << to_string(f.base) << ")^" << f.exponent << "\n";
    std::cout << "mult(sqrt 3, G) = " << mult << "\n"
              << "mu(P7) = " << to_string(p7) << "\n"
              << "gcd(mu(P7), x^2 - 3) = " << to_string(common) << "\n\n";
    print_verdict(g, v);
    return 0;
}

int cmd_demo(const Options& o) {
    if (o.demo == "t9") return demo_t9(o);
    if (o.demo == "g14") return demo_g14(o);
    throw Error(ErrorCode::UnknownBuiltin, "no demo named '" + o.demo + "' (t9, g14)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching polynomials, root classes and path covers of trees"};
    app.require_subcommand(1);
    Options o;

    auto graph_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "JSON graph file or builtin:NAME (P:k, star:k, paper:T9, paper:G14)");
        sub->add_option("--dot", o.dot, "write the graph as DOT");
        sub->add_flag("--json", o.json, "JSON output");
    };

    auto* poly = app.add_subcommand("poly", "matching polynomial");
    graph_opts(poly);
    auto* factor = app.add_subcommand("factor", "irreducible factors of mu(G) or of --poly");
    graph_opts(factor);
    factor->add_option("--poly", o.poly, "polynomial as text or dense JSON");
    auto* classify = app.add_subcommand("classify", "sign of one vertex");
    graph_opts(classify);
    classify->add_option("--theta", o.theta, "minimal polynomial, or factor:k for the k-th factor of mu(G)");
    classify->add_option("--vertex", o.vertex, "vertex number or label");
    classify->add_flag("--allow-nonroot", o.allow_nonroot, "classify even if theta is not a root");
    auto* partition = app.add_subcommand("partition", "signs and D/A/C classes");
    graph_opts(partition);
    partition->add_option("--theta", o.theta, "minimal polynomial, or factor:k");
    partition->add_flag("--allow-nonroot", o.allow_nonroot, "classify even if theta is not a root");
    auto* eigvec = app.add_subcommand("eigvec", "exact theta-eigenvector of a tree supported on D");
    graph_opts(eigvec);
    eigvec->add_option("--theta", o.theta, "minimal polynomial, or factor:k");
    auto* cover = app.add_subcommand("cover", "minimum path cover; extremality with --theta");
    graph_opts(cover);
    cover->add_option("--theta", o.theta, "minimal polynomial, or factor:k");
    cover->add_option("--enumerate", o.enumerate, "list every cover by this many paths");
    auto* certify = app.add_subcommand("certify", "check the cover/multiplicity characterisation");
    graph_opts(certify);
    certify->add_option("--cap", o.cap, "largest cover size for the converse check");
    auto* sweep = app.add_subcommand("sweep", "exhaustive campaign over trees");
    sweep->add_option("campaign", o.campaign, "campaign name");
    sweep->add_flag("--list", o.list, "list campaigns");
    sweep->add_option("--min-n", o.min_n, "smallest size");
    sweep->add_option("--max-n", o.max_n, "largest size (default depends on campaign)");
    sweep->add_option("--jobs", o.jobs, "worker threads (default: all)");
    sweep->add_option("--seed", o.seed, "seed for random-graph checks");
    sweep->add_option("--cap", o.cap, "largest cover size for the converse check");
    sweep->add_option("--report", o.report, "write the JSON report to a file");
    sweep->add_flag("--json", o.json, "print the JSON report");
    auto* demo = app.add_subcommand("demo", "worked examples: t9, g14");
    demo->add_option("name", o.demo, "t9 or g14")->required();
    demo->add_option("--dot", o.dot, "write the graph as DOT");
    demo->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*poly) return cmd_poly(o);
        if (*factor) return cmd_factor(o);
        if (*classify) return cmd_classify(o);
        if (*partition) return cmd_partition(o);
        if (*eigvec) return cmd_eigvec(o);
        if (*cover) return cmd_cover(o);
        if (*certify) return cmd_certify(o);
        if (*sweep) {
            if (!o.list && o.campaign.empty()) throw Error(ErrorCode::UnknownCampaign, "campaign name required (see --list)");
            return cmd_sweep(o);
        }
        if (*demo) return cmd_demo(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
