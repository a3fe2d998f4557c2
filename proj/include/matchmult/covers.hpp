#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchmult/algebraic.hpp"
#include "matchmult/graph.hpp"

namespace matchmult {

/// Vertex-disjoint paths covering every vertex, held as the edge subset S
/// they use. Paths are listed by smallest vertex and run from their smaller
/// endpoint.
class PathCover {
   public:
    /// Throws InvalidCover unless S is a set of edges of g with every vertex
    /// of degree <= 2 and no cycle.
    static PathCover from_edges(const Graph& g, std::vector<Edge> s);
    /// Throws InvalidCover unless the paths partition V(g) and consecutive
    /// vertices are adjacent.
    static PathCover from_paths(const Graph& g, const std::vector<std::vector<Vertex>>& paths);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<Vertex>>& paths() const noexcept { return paths_; }
    std::size_t size() const noexcept { return paths_.size(); }
    /// Index of the path through v.
    int path_of(Vertex v) const { return path_of_[static_cast<std::size_t>(v)]; }

    nlohmann::json to_json(const Graph& g) const;

    friend bool operator==(const PathCover& a, const PathCover& b) { return a.edges_ == b.edges_; }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> paths_;
    std::vector<int> path_of_;
};

inline constexpr int kGeneralCoverCap = 16;

/// A minimum path cover. Among optimal edge subsets the lexicographically
/// smallest sorted edge list wins. Forests of any size; other graphs up to
/// kGeneralCoverCap vertices, else TooLarge.
PathCover min_path_cover(const Graph& g);

/// Every cover by exactly m paths, in lexicographic order of edge lists.
/// The callback returns false to stop early. Same size limits as
/// min_path_cover.
void for_each_cover(const Graph& g, int m, const std::function<bool(const PathCover&)>& visit);
std::vector<PathCover> enumerate_covers(const Graph& g, int m);

struct CrossEdge {
    Edge edge;
    int path_u = 0;
    int path_v = 0;
    bool u_special = false;
    bool v_special = false;

    bool witnessed() const { return u_special || v_special; }
};

struct ExtremalReport {
    /// theta is a root of mu of each path
    std::vector<bool> condition_a;
    std::vector<CrossEdge> cross_edges;
    bool verdict = false;

    nlohmann::json to_json(const Graph& g) const;
};

/// Both extremality conditions, with specialness judged inside each path.
/// Throws InvalidCover if q is not a cover of g.
ExtremalReport is_extremal(const Graph& g, const RootClass& theta, const PathCover& q);

inline constexpr int kDefaultConverseCap = 4;

struct Counterexample {
    PathCover cover;
    RootClass theta;
    std::string reason;
};

struct MainVerdict {
    bool forest = false;
    int min_cover_size = 0;
    unsigned max_mult = 0;
    std::vector<RootClass> witnesses;
    /// max_mult <= min_cover_size
    bool bound_ok = true;
    /// [mult(theta) = c] iff extremal, over every cover of size c
    bool biconditional_ok = true;
    /// forests only: every extremal cover of size m <= cap has mult = m = max_mult
    bool converse_ok = true;
    std::size_t covers_checked = 0;
    std::size_t pairs_checked = 0;
    std::optional<Counterexample> counterexample;

    /// Forests must satisfy all three; other graphs only the bound.
    bool ok() const { return bound_ok && (!forest || (biconditional_ok && converse_ok)); }
    nlohmann::json to_json(const Graph& g) const;
};

/// Checks the cover/multiplicity characterisation on g. Candidate theta for
/// a cover are the root classes of mu(g) together with the irreducible
/// factors of mu of its first path, which contain every theta that could
/// satisfy condition (a).
MainVerdict certify_main(const Graph& g, int converse_cap = kDefaultConverseCap);

}  // namespace matchmult
