#include "matchmult/matching.hpp"

#include <algorithm>
#include <random>

#include "matchmult/errors.hpp"

namespace matchmult {

IntPoly forest_matching_polynomial(const Graph& forest) {
    if (!forest.is_forest()) throw Error(ErrorCode::NotATree, "forest DP on a graph with a cycle");
    const int n = forest.order();
    const IntPoly x = IntPoly::x();
    std::vector<IntPoly> with(static_cast<std::size_t>(n)), without(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    IntPoly total = IntPoly::constant(1);

    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<Vertex> order{root};
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (Vertex w : forest.neighbors(order[i])) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            const Vertex v = order[i];
            IntPoly prod = IntPoly::constant(1);
            std::vector<Vertex> kids;
            for (Vertex w : forest.neighbors(v))
                if (w != parent[static_cast<std::size_t>(v)]) kids.push_back(w);
            for (Vertex c : kids) prod *= with[static_cast<std::size_t>(c)];
            IntPoly val = x * prod;
            for (Vertex c : kids) {
                IntPoly term = without[static_cast<std::size_t>(c)];
                for (Vertex d : kids)
                    if (d != c) term *= with[static_cast<std::size_t>(d)];
                val -= term;
            }
            without[static_cast<std::size_t>(v)] = std::move(prod);
            with[static_cast<std::size_t>(v)] = std::move(val);
        }
        total *= with[static_cast<std::size_t>(root)];
    }
    return total;
}

IntPoly recurrence_matching_polynomial(const Graph& g) {
    if (g.order() == 0) return IntPoly::constant(1);
    const Vertex u = 0;
    IntPoly result = IntPoly::x() * recurrence_matching_polynomial(delete_vertex(g, u).graph);
    for (Vertex v : g.neighbors(u)) {
        const Vertex pair[] = {u, v};
        result -= recurrence_matching_polynomial(delete_vertices(g, pair).graph);
    }
    return result;
}

IntPoly MatchingEngine::operator()(const Graph& g) {
    if (g.order() == 0) return IntPoly::constant(1);
    if (g.is_forest()) return forest_matching_polynomial(g);
    if (g.is_connected()) return connected(g);
    IntPoly result = IntPoly::constant(1);
    for (const auto& c : components(g)) result *= (*this)(c.graph);
    return result;
}

IntPoly MatchingEngine::connected(const Graph& g) {
    std::string key = std::to_string(g.order()) + ":";
    for (const auto& [u, v] : g.edges()) key += std::to_string(u) + "-" + std::to_string(v) + ",";
    if (const IntPoly* hit = lookup(key)) {
        ++hits_;
        return *hit;
    }
    ++misses_;
    Vertex u = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(u)) u = v;
    IntPoly result = IntPoly::x() * (*this)(delete_vertex(g, u).graph);
    for (Vertex v : g.neighbors(u)) {
        const Vertex pair[] = {u, v};
        result -= (*this)(delete_vertices(g, pair).graph);
    }
    store(std::move(key), result);
    return result;
}

const IntPoly* MatchingEngine::lookup(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second);
    return &it->second->second;
}

void MatchingEngine::store(std::string key, const IntPoly& value) {
    if (capacity_ == 0 || index_.count(key)) return;
    lru_.emplace_front(std::move(key), value);
    index_.emplace(lru_.front().first, lru_.begin());
    while (index_.size() > capacity_) {
        index_.erase(lru_.back().first);
        lru_.pop_back();
    }
}

IntPoly matching_polynomial(const Graph& g) {
    thread_local MatchingEngine engine;
    return engine(g);
}

IntPoly MatchCounts::polynomial(int n) const {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < counts.size(); ++k) c[static_cast<std::size_t>(n) - 2 * k] = (k % 2 == 0) ? counts[k] : Integer(-counts[k]);
    return IntPoly(std::move(c));
}

int MatchCounts::max_matching() const {
    int k = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) k = static_cast<int>(i);
    return k;
}

namespace {

void count_from(const std::vector<Edge>& edges, std::size_t first, std::vector<char>& used, std::size_t k,
                std::vector<std::uint64_t>& counts) {
    ++counts[k];
    for (std::size_t j = first; j < edges.size(); ++j) {
        const auto [u, v] = edges[j];
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
        count_from(edges, j + 1, used, k + 1, counts);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace

MatchCounts matching_counts(const Graph& g) {
    if (g.size() > kMatchingCountEdgeCap)
        throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " edges exceeds the enumeration cap of " +
                                             std::to_string(kMatchingCountEdgeCap));
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(g.order() / 2) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    count_from(g.edges(), 0, used, 0, raw);
    MatchCounts out;
    for (auto c : raw) out.counts.emplace_back(static_cast<unsigned long>(c));
    return out;
}

Graph delete_edge(const Graph& g, const Edge& e) {
    std::vector<Edge> edges;
    const Edge norm{std::min(e.first, e.second), std::max(e.first, e.second)};
    for (const auto& f : g.edges())
        if (f != norm) edges.push_back(f);
    return Graph(g.order(), std::move(edges), g.labels());
}

namespace {

class IdentityChecker {
   public:
    explicit IdentityChecker(const Graph& g) : g_(g), mu_(matching_polynomial(g)) {}

    void product_rule() {
        IntPoly prod = IntPoly::constant(1);
        for (const auto& c : components(g_)) prod *= matching_polynomial(c.graph);
        expect(prod == mu_, "product over components differs from mu(G)");
    }

    void product_rule_with(Vertex u) {
        const Graph minus = delete_vertex(g_, u).graph;
        expect(matching_polynomial(disjoint_union(g_, minus)) == mu_ * matching_polynomial(minus),
               "mu(G u (G-" + std::to_string(u) + ")) != mu(G) mu(G-" + std::to_string(u) + ")");
    }

    void edge_rule(const Edge& e) {
        const Vertex pair[] = {e.first, e.second};
        const IntPoly rhs = matching_polynomial(delete_edge(g_, e)) - matching_polynomial(delete_vertices(g_, pair).graph);
        expect(rhs == mu_, "edge recurrence fails at (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }

    void vertex_rule(Vertex u) {
        IntPoly rhs = IntPoly::x() * matching_polynomial(delete_vertex(g_, u).graph);
        for (Vertex v : g_.neighbors(u)) {
            const Vertex pair[] = {u, v};
            rhs -= matching_polynomial(delete_vertices(g_, pair).graph);
        }
        expect(rhs == mu_, "vertex recurrence fails at " + std::to_string(u));
    }

    IdentityReport report() const { return report_; }

   private:
    void expect(bool holds, const std::string& what) {
        ++report_.checks;
        if (!holds && report_.ok) {
            report_.ok = false;
            report_.first_violation = what;
        }
    }

    const Graph& g_;
    IntPoly mu_;
    IdentityReport report_;
};

}  // namespace

IdentityReport check_identities(const Graph& g, int trials, std::uint64_t seed) {
    IdentityChecker checker(g);
    checker.product_rule();
    if (g.order() == 0) return checker.report();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> vertex(0, g.order() - 1);
    for (int t = 0; t < trials; ++t) {
        const Vertex u = vertex(rng);
        checker.vertex_rule(u);
        checker.product_rule_with(u);
        if (g.size() > 0) {
            std::uniform_int_distribution<std::size_t> edge(0, g.size() - 1);
            checker.edge_rule(g.edges()[edge(rng)]);
        }
    }
    return checker.report();
}

IdentityReport check_identities_exhaustive(const Graph& g) {
    IdentityChecker checker(g);
    checker.product_rule();
    for (Vertex u = 0; u < g.order(); ++u) {
        checker.vertex_rule(u);
        checker.product_rule_with(u);
    }
    for (const auto& e : g.edges()) checker.edge_rule(e);
    return checker.report();
}

}  // namespace matchmult
