#include "matchmult/theta.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"
#include "matchmult/matching.hpp"

namespace matchmult {

std::string_view to_string(Sign s) {
    switch (s) {
        case Sign::essential: return "essential";
        case Sign::neutral: return "neutral";
        case Sign::positive: return "positive";
    }
    return "?";
}

std::vector<RootMult> root_classes(const Graph& g) {
    std::vector<RootMult> out;
    for (const auto& f : factor_irreducible(matching_polynomial(g)).factors) {
        RootClass r = RootClass::trusted(f.base);
        r.with_display_interval();
        out.push_back({std::move(r), f.exponent});
    }
    return out;
}

unsigned multiplicity(const RootClass& theta, const Graph& g) {
    return root_multiplicity(matching_polynomial(g), theta.minpoly());
}

SignTable sign_table(const Graph& g, const RootClass& theta, bool allow_nonroot) {
    SignTable t;
    t.mult = multiplicity(theta, g);
    if (t.mult == 0 && !allow_nonroot)
        throw Error(ErrorCode::NotARoot, to_string(theta.minpoly()) + " does not divide mu(G)");
    const auto n = static_cast<std::size_t>(g.order());
    t.signs.resize(n);
    t.special.assign(n, false);
    for (Vertex u = 0; u < g.order(); ++u) {
        const unsigned m = multiplicity(theta, delete_vertex(g, u).graph);
        t.signs[static_cast<std::size_t>(u)] = m < t.mult ? Sign::essential : m == t.mult ? Sign::neutral : Sign::positive;
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        if (t.signs[static_cast<std::size_t>(u)] == Sign::essential) continue;
        for (Vertex v : g.neighbors(u))
            if (t.signs[static_cast<std::size_t>(v)] == Sign::essential) t.special[static_cast<std::size_t>(u)] = true;
    }
    return t;
}

VertexSign classify_vertex(const Graph& g, const RootClass& theta, Vertex u, bool allow_nonroot) {
    if (!g.contains(u)) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(u) + " not in graph");
    const SignTable t = sign_table(g, theta, allow_nonroot);
    return {t.signs[static_cast<std::size_t>(u)], t.special[static_cast<std::size_t>(u)]};
}

namespace {

nlohmann::json vertices_json(const Graph& g, const std::vector<Vertex>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : vs) out.push_back(vertex_json(g, v));
    return out;
}

}  // namespace

nlohmann::json ThetaPartition::to_json(const Graph& g) const {
    nlohmann::json signs = nlohmann::json::object();
    std::vector<Vertex> special;
    for (Vertex v = 0; v < g.order(); ++v) {
        signs[g.label(v)] = std::string(to_string(table.signs[static_cast<std::size_t>(v)]));
        if (table.special[static_cast<std::size_t>(v)]) special.push_back(v);
    }
    return {{"rootclass", theta.to_json()},
            {"mult", table.mult},
            {"signs", signs},
            {"special", vertices_json(g, special)},
            {"D", vertices_json(g, D)},
            {"A", vertices_json(g, A)},
            {"C", vertices_json(g, C)}};
}

ThetaPartition theta_partition(const Graph& g, const RootClass& theta, bool allow_nonroot) {
    ThetaPartition p{theta, sign_table(g, theta, allow_nonroot), {}, {}, {}};
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.table.signs[static_cast<std::size_t>(v)] == Sign::essential)
            p.D.push_back(v);
        else if (p.table.special[static_cast<std::size_t>(v)])
            p.A.push_back(v);
        else
            p.C.push_back(v);
    }
    return p;
}

PartClass part_of(const ThetaPartition& p, Vertex v) {
    if (p.table.signs[static_cast<std::size_t>(v)] == Sign::essential) return PartClass::D;
    return p.table.special[static_cast<std::size_t>(v)] ? PartClass::A : PartClass::C;
}

StabilityReport check_stability(const Graph& tree, const RootClass& theta, Vertex u) {
    if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "stability check needs a tree");
    if (!tree.contains(u)) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(u) + " not in graph");
    ThetaPartition before = theta_partition(tree, theta);
    if (part_of(before, u) != PartClass::A)
        throw Error(ErrorCode::NotSpecial, "vertex " + tree.label(u) + " is not special for " + to_string(theta.minpoly()));
    Subgraph rest = delete_vertex(tree, u);
    // u is positive, so theta is still a root of T - u
    ThetaPartition after = theta_partition(rest.graph, theta);
    std::vector<bool> preserved(static_cast<std::size_t>(tree.order()), true);
    bool stable = true;
    for (Vertex i = 0; i < rest.graph.order(); ++i) {
        const Vertex v = rest.origin[static_cast<std::size_t>(i)];
        const bool same = part_of(before, v) == part_of(after, i);
        preserved[static_cast<std::size_t>(v)] = same;
        stable = stable && same;
    }
    return {u, std::move(before), std::move(after), std::move(rest.origin), std::move(preserved), stable};
}

bool is_eigenvector(const Graph& g, const NfVector& f) {
    if (static_cast<int>(f.size()) != g.order()) return false;
    if (f.empty()) return true;
    const NfElem theta = NfElem::generator(f.front().field());
    for (Vertex u = 0; u < g.order(); ++u) {
        NfElem sum = NfElem::zero(f.front().field());
        for (Vertex v : g.neighbors(u)) sum += f[static_cast<std::size_t>(v)];
        if (!(sum == theta * f[static_cast<std::size_t>(u)])) return false;
    }
    return true;
}

namespace {

NfVector kernel_vector(const Graph& t, const NfElem::Field& field) {
    const auto n = static_cast<std::size_t>(t.order());
    const NfElem zero = NfElem::zero(field);
    const NfElem one = NfElem::constant(field, 1);
    NfMatrix m(n, NfVector(n, zero));
    for (const auto& [a, b] : t.edges()) {
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = one;
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = one;
    }
    const NfElem theta = NfElem::generator(field);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -theta;
    auto basis = kernel_basis(m);
    if (basis.empty()) throw std::logic_error("theta-eigenspace of a tree with theta as a root is empty");
    return std::move(basis.front());
}

// theta must be a root of mu(t); t is a tree.
NfVector build(const Graph& t, const NfElem::Field& field) {
    const SignTable table = sign_table(t, *field);
    const auto special = std::find(table.special.begin(), table.special.end(), true);
    if (special == table.special.end()) {
        if (std::any_of(table.signs.begin(), table.signs.end(), [](Sign s) { return s != Sign::essential; }))
            throw std::logic_error("tree with a non-essential vertex but no special vertex");
        return kernel_vector(t, field);
    }
    const auto u = static_cast<Vertex>(special - table.special.begin());
    const Subgraph rest = delete_vertex(t, u);
    const auto parts = components(rest.graph);

    NfVector g(static_cast<std::size_t>(t.order()), NfElem::zero(field));
    struct Piece {
        const Subgraph* comp;
        Vertex b;  // u's neighbour, in component ids
        NfVector f;
    };
    std::vector<Piece> in_a;
    for (Vertex b_tree : t.neighbors(u)) {
        const auto b_rest = static_cast<Vertex>(std::find(rest.origin.begin(), rest.origin.end(), b_tree) - rest.origin.begin());
        const Subgraph* comp = nullptr;
        Vertex b = -1;
        for (const auto& c : parts) {
            const auto it = std::find(c.origin.begin(), c.origin.end(), b_rest);
            if (it != c.origin.end()) {
                comp = &c;
                b = static_cast<Vertex>(it - c.origin.begin());
                break;
            }
        }
        const SignTable sub = sign_table(comp->graph, *field, true);
        if (sub.mult == 0) continue;  // index set C: zero on this component
        NfVector f = build(comp->graph, field);
        if (sub.signs[static_cast<std::size_t>(b)] == Sign::essential) {
            in_a.push_back({comp, b, std::move(f)});
            continue;
        }
        // index set B keeps its vector as constructed
        for (std::size_t j = 0; j < f.size(); ++j)
            g[static_cast<std::size_t>(rest.origin[static_cast<std::size_t>(comp->origin[j])])] = f[j];
    }
    if (in_a.size() < 2) throw std::logic_error("special vertex with fewer than two essential neighbours");
    // alpha = (1, ..., 1, -(k - 1)): nonzero entries summing to zero
    for (std::size_t i = 0; i < in_a.size(); ++i) {
        const Rational alpha = i + 1 < in_a.size() ? Rational(1) : Rational(-static_cast<long>(in_a.size() - 1));
        const NfElem scale = NfElem::constant(field, alpha) / in_a[i].f[static_cast<std::size_t>(in_a[i].b)];
        for (std::size_t j = 0; j < in_a[i].f.size(); ++j)
            g[static_cast<std::size_t>(rest.origin[static_cast<std::size_t>(in_a[i].comp->origin[j])])] = in_a[i].f[j] * scale;
    }
    return g;
}

}  // namespace

nlohmann::json EigvecResult::to_json(const Graph& g) const {
    nlohmann::json vals = nlohmann::json::object();
    for (Vertex v = 0; v < g.order(); ++v) vals[g.label(v)] = values[static_cast<std::size_t>(v)].to_json();
    return {{"rootclass", theta.to_json()},
            {"values", vals},
            {"support", vertices_json(g, support)},
            {"equation_holds", equation_holds},
            {"support_matches", support_matches}};
}

EigvecResult construct_eigenvector(const Graph& tree, const RootClass& theta) {
    if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "eigenvector construction needs a tree");
    const ThetaPartition p = theta_partition(tree, theta);
    const auto field = std::make_shared<const RootClass>(theta);
    EigvecResult r{theta, build(tree, field), {}, false, false};
    for (Vertex v = 0; v < tree.order(); ++v)
        if (!r.values[static_cast<std::size_t>(v)].is_zero()) r.support.push_back(v);
    r.equation_holds = is_eigenvector(tree, r.values);
    r.support_matches = r.support == p.D;
    return r;
}

}  // namespace matchmult
