#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace matchmult {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Immutable simple graph on vertices 0..n-1.
class Graph {
   public:
    Graph() = default;
    /// Edges may be given in either orientation; throws SelfLoop, BadVertex
    /// or DuplicateEdge.
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Display name: the label when present, otherwise the vertex number.
    std::string label(Vertex v) const;

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const { return is_forest() && is_connected() && n_ > 0; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
};

/// An induced subgraph together with the map back to the parent's ids:
/// origin[new_id] = parent_id. Labels are inherited.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> origin;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph delete_vertex(const Graph& g, Vertex v);
/// Connected components ordered by smallest original vertex id.
std::vector<Subgraph> components(const Graph& g);
/// b's vertices are shifted up by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph path_graph(int k);
/// K_{1,k}: centre 0, leaves 1..k.
Graph star_graph(int k);
/// "P:k", "star:k", "paper:T9", "paper:G14".
Graph builtin(std::string_view name);

Graph load_graph(std::string_view json_text);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);
std::string to_dot(const Graph& g);
/// The label when the graph has labels, otherwise the vertex number.
nlohmann::json vertex_json(const Graph& g, Vertex v);

/// AHU code of a forest: each tree is coded from its centroid(s), taking the
/// smaller code when there are two, and component codes are concatenated in
/// sorted order. Equal codes iff isomorphic forests. Throws NotATree for a
/// graph with a cycle.
std::string canonical_code(const Graph& forest);
/// Tree whose canonical code is `code`, labeled in preorder from the root.
Graph tree_from_code(std::string_view code);

inline constexpr int kDefaultTreeCap = 12;

/// One representative per isomorphism class of free trees on n vertices,
/// sorted by canonical code. Throws BadSize unless 1 <= n <= cap.
std::vector<Graph> enumerate_trees(int n, int cap = kDefaultTreeCap);

}  // namespace matchmult
