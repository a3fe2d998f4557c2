#pragma once

#include <cstdint>
#include <list>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchmult/graph.hpp"
#include "matchmult/int_poly.hpp"

namespace matchmult {

/// Rooted two-polynomial DP: for every vertex, mu of its subtree and of its
/// subtree minus itself. Linear number of polynomial products. Throws
/// NotATree if g has a cycle.
IntPoly forest_matching_polynomial(const Graph& forest);

/// Plain vertex recurrence mu(G) = x mu(G-u) - sum_{v~u} mu(G-u-v) expanded
/// at the lowest vertex, with no sharing and no forest shortcut. Exponential;
/// kept as the reference the fast paths are checked against.
IntPoly recurrence_matching_polynomial(const Graph& g);

/// Matching polynomials of arbitrary graphs. Forests go to the DP; other
/// graphs are split into components and expanded with the vertex recurrence,
/// sharing connected cyclic subproblems through a bounded LRU cache keyed by
/// the edge list.
///
/// Not thread-safe; use one engine per thread.
class MatchingEngine {
   public:
    static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

    explicit MatchingEngine(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

    IntPoly operator()(const Graph& g);

    std::size_t hits() const noexcept { return hits_; }
    std::size_t misses() const noexcept { return misses_; }
    std::size_t cached() const noexcept { return index_.size(); }

   private:
    IntPoly connected(const Graph& g);
    const IntPoly* lookup(const std::string& key);
    void store(std::string key, const IntPoly& value);

    std::size_t capacity_;
    std::list<std::pair<std::string, IntPoly>> lru_;
    std::unordered_map<std::string, std::list<std::pair<std::string, IntPoly>>::iterator> index_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

/// mu(G, x) through a thread-local engine.
IntPoly matching_polynomial(const Graph& g);

inline constexpr std::size_t kMatchingCountEdgeCap = 24;

/// p(G, k) for k = 0..floor(n/2) by explicit enumeration of every set of
/// pairwise disjoint edges. Throws TooLarge above kMatchingCountEdgeCap edges.
struct MatchCounts {
    std::vector<Integer> counts;

    /// sum_k (-1)^k p(G, k) x^(n - 2k)
    IntPoly polynomial(int n) const;
    /// Largest k with p(G, k) > 0.
    int max_matching() const;
};

MatchCounts matching_counts(const Graph& g);

struct IdentityReport {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_violation;
};

/// Checks the product rule over disjoint unions, the edge-deletion recurrence
/// and the vertex recurrence for `trials` random edges and vertices.
IdentityReport check_identities(const Graph& g, int trials, std::uint64_t seed);
/// Same, at every edge and every vertex.
IdentityReport check_identities_exhaustive(const Graph& g);

Graph delete_edge(const Graph& g, const Edge& e);

}  // namespace matchmult
