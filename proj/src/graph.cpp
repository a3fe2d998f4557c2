#include "matchmult/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "matchmult/errors.hpp"

namespace matchmult {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw Error(ErrorCode::BadSize, "negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw Error(ErrorCode::ShapeError, "labels must name every vertex");
    for (auto& [u, v] : edges_) {
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error(ErrorCode::BadVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                  ") outside 0.." + std::to_string(n_ - 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw Error(ErrorCode::DuplicateEdge,
                    "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
    adj_.resize(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n_;
}

bool Graph::is_forest() const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& [u, v] : edges_) {
        const Vertex a = find(u), b = find(v);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> origin(keep.begin(), keep.end());
    std::sort(origin.begin(), origin.end());
    origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        if (!g.contains(origin[i])) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(origin[i]));
        index[static_cast<std::size_t>(origin[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const Vertex a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    std::vector<std::string> labels;
    if (g.has_labels())
        for (Vertex v : origin) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(origin.size()), std::move(edges), std::move(labels)), std::move(origin)};
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) {
        if (!g.contains(v)) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
    const Vertex one[] = {v};
    return delete_vertices(g, one);
}

std::vector<Subgraph> components(const Graph& g) {
    std::vector<Subgraph> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> members{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Vertex w : g.neighbors(members[i])) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                members.push_back(w);
            }
        }
        out.push_back(induced_subgraph(g, members));
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    std::vector<std::string> labels;
    if (a.has_labels() && b.has_labels()) {
        labels = a.labels();
        labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    }
    return Graph(a.order() + b.order(), std::move(edges), std::move(labels));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw Error(ErrorCode::ShapeError, "permutation size");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(g.labels().size());
        for (Vertex v = 0; v < g.order(); ++v)
            labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = g.labels()[static_cast<std::size_t>(v)];
    }
    return Graph(g.order(), std::move(edges), std::move(labels));
}

Graph path_graph(int k) {
    if (k < 1) throw Error(ErrorCode::BadSize, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, std::move(edges));
}

Graph star_graph(int k) {
    if (k < 0) throw Error(ErrorCode::BadSize, "star needs a non-negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, std::move(edges));
}

namespace {

Graph paper_t9() {
    // v1..v9 -> 0..8
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 8}};
    std::vector<std::string> labels;
    for (int i = 1; i <= 9; ++i) labels.push_back("v" + std::to_string(i));
    return Graph(9, std::move(edges), std::move(labels));
}

Graph paper_g14() {
    // t1..t7 -> 0..6, b1..b7 -> 7..13
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int side = 0; side < 2; ++side) {
        const int base = 7 * side;
        for (int i = 0; i < 6; ++i) edges.emplace_back(base + i, base + i + 1);
        edges.emplace_back(base + 0, base + 2);
        edges.emplace_back(base + 4, base + 6);
        for (int i = 1; i <= 7; ++i) labels.push_back((side == 0 ? "t" : "b") + std::to_string(i));
    }
    edges.emplace_back(3, 10);
    return Graph(14, std::move(edges), std::move(labels));
}

int parse_size(std::string_view s, std::string_view name) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::UnknownBuiltin, "bad size in builtin '" + std::string(name) + "'");
    return k;
}

}  // namespace

Graph builtin(std::string_view name) {
    if (name == "paper:T9") return paper_t9();
    if (name == "paper:G14") return paper_g14();
    if (name.starts_with("P:")) return path_graph(parse_size(name.substr(2), name));
    if (name.starts_with("star:")) return star_graph(parse_size(name.substr(5), name));
    throw Error(ErrorCode::UnknownBuiltin, "unknown builtin graph '" + std::string(name) + "'");
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, "graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "each edge must be [int, int]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw Error(ErrorCode::ParseError, "\"labels\" must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw Error(ErrorCode::ParseError, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

Graph load_graph(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return graph_from_json(j);
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

nlohmann::json vertex_json(const Graph& g, Vertex v) {
    if (g.has_labels()) return g.label(v);
    return v;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : g.neighbors(v))
        if (w != parent) kids.push_back(rooted_code(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

std::vector<Vertex> centroids(const Graph& tree) {
    const int n = tree.order();
    std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : tree.neighbors(order[i]))
            if (w != parent[static_cast<std::size_t>(order[i])]) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    std::vector<int> sub(static_cast<std::size_t>(n), 1);
    for (std::size_t i = order.size(); i-- > 1;) sub[static_cast<std::size_t>(parent[static_cast<std::size_t>(order[i])])] += sub[static_cast<std::size_t>(order[i])];
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        int worst = n - sub[static_cast<std::size_t>(v)];
        for (Vertex w : tree.neighbors(v))
            if (w != parent[static_cast<std::size_t>(v)]) worst = std::max(worst, sub[static_cast<std::size_t>(w)]);
        if (2 * worst <= n) out.push_back(v);
    }
    return out;
}

std::string tree_code(const Graph& tree) {
    std::string best;
    for (Vertex c : centroids(tree)) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace

std::string canonical_code(const Graph& forest) {
    if (!forest.is_forest()) throw Error(ErrorCode::NotATree, "canonical codes are defined for forests only");
    if (forest.is_connected()) return forest.order() == 0 ? std::string() : tree_code(forest);
    std::vector<std::string> parts;
    for (const auto& c : components(forest)) parts.push_back(tree_code(c.graph));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

Graph tree_from_code(std::string_view code) {
    std::vector<Edge> edges;
    std::vector<Vertex> stack;
    int n = 0;
    for (char ch : code) {
        if (ch == '(') {
            if (!stack.empty()) edges.emplace_back(stack.back(), n);
            stack.push_back(n++);
        } else if (ch == ')') {
            if (stack.empty()) throw Error(ErrorCode::ParseError, "unbalanced tree code");
            stack.pop_back();
        } else {
            throw Error(ErrorCode::ParseError, "tree code may only contain parentheses");
        }
    }
    if (!stack.empty()) throw Error(ErrorCode::ParseError, "unbalanced tree code");
    return Graph(n, std::move(edges));
}

std::vector<Graph> enumerate_trees(int n, int cap) {
    if (n < 1 || n > cap)
        throw Error(ErrorCode::BadSize, "tree size " + std::to_string(n) + " outside 1.." + std::to_string(cap));
    // Grow every class of size k-1 by one leaf in every position and keep one
    // representative per canonical code.
    std::set<std::string> level{"()"};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const Graph t = tree_from_code(code);
            for (Vertex v = 0; v < t.order(); ++v) {
                std::vector<Edge> edges = t.edges();
                edges.emplace_back(v, t.order());
                next.insert(canonical_code(Graph(t.order() + 1, std::move(edges))));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& code : level) out.push_back(tree_from_code(code));
    return out;
}

}  // namespace matchmult
