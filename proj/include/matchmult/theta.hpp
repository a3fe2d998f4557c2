#pragma once

#include <string_view>
#include <vector>

#include "matchmult/algebraic.hpp"
#include "matchmult/graph.hpp"

namespace matchmult {

/// mult(theta, G - u) - mult(theta, G) is -1, 0 or +1.
enum class Sign { essential, neutral, positive };

std::string_view to_string(Sign s);

struct RootMult {
    RootClass root;
    unsigned mult = 0;
};

/// Irreducible factors of mu(G) with multiplicities, in canonical factor
/// order, each carrying a display interval.
std::vector<RootMult> root_classes(const Graph& g);

unsigned multiplicity(const RootClass& theta, const Graph& g);

/// Signs of every vertex. special[v]: not essential, with an essential
/// neighbour.
struct SignTable {
    unsigned mult = 0;
    std::vector<Sign> signs;
    std::vector<bool> special;
};

/// Throws NotARoot when mult(theta, G) = 0 unless allow_nonroot is set.
SignTable sign_table(const Graph& g, const RootClass& theta, bool allow_nonroot = false);

struct VertexSign {
    Sign sign = Sign::neutral;
    bool special = false;
};

/// Throws BadVertex, or NotARoot as sign_table.
VertexSign classify_vertex(const Graph& g, const RootClass& theta, Vertex u, bool allow_nonroot = false);

struct ThetaPartition {
    RootClass theta;
    SignTable table;
    std::vector<Vertex> D, A, C;

    /// {"rootclass", "mult", "signs", "special", "D", "A", "C"}; vertices by
    /// label when the graph has labels.
    nlohmann::json to_json(const Graph& g) const;
};

ThetaPartition theta_partition(const Graph& g, const RootClass& theta, bool allow_nonroot = false);

enum class PartClass { D, A, C };
PartClass part_of(const ThetaPartition& p, Vertex v);

struct StabilityReport {
    Vertex removed = 0;
    ThetaPartition before;
    /// Partition of T - u; indices are those of T - u, see origin.
    ThetaPartition after;
    std::vector<Vertex> origin;
    /// Indexed by vertices of T; the removed vertex counts as preserved.
    std::vector<bool> preserved;
    bool stable = true;
};

/// Requires a tree and u in A_theta(T). Throws NotATree, NotSpecial,
/// BadVertex, NotARoot.
StabilityReport check_stability(const Graph& tree, const RootClass& theta, Vertex u);

struct EigvecResult {
    RootClass theta;
    NfVector values;
    std::vector<Vertex> support;
    bool equation_holds = false;
    /// support equals D_theta(T)
    bool support_matches = false;

    nlohmann::json to_json(const Graph& g) const;
};

/// theta * f(u) = sum over neighbours of f(v), at every vertex, exactly.
bool is_eigenvector(const Graph& g, const NfVector& f);

/// theta-eigenvector of a tree that is nonzero exactly on D_theta(T), built by
/// recursing through a special vertex. Throws NotATree, NotARoot.
EigvecResult construct_eigenvector(const Graph& tree, const RootClass& theta);

}  // namespace matchmult
