#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchmult/int_poly.hpp"

namespace oracle {

using matchmult::Integer;
using matchmult::IntPoly;
using matchmult::Rational;

inline Integer eval_int(const IntPoly& p, long x) {
    Integer acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline std::vector<Integer> signed_divisors(Integer v) {
    v = abs(v);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
    }
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
    return out;
}

// Schoolbook long division over Q; true when b divides a with integer quotient.
inline bool divides_over_z(const IntPoly& b, const IntPoly& a) {
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    for (int k = static_cast<int>(r.size()) - 1 - db; k >= 0; --k) {
        Rational t = r[static_cast<std::size_t>(k + db)] / Rational(b.leading());
        if (t.get_den() != 1) return false;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * Rational(b[static_cast<std::size_t>(j)]);
    }
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

// Kronecker: searches for an integer factor of exact degree d through
// interpolation at d+1 integer points. Bounded by the divisor counts of the
// values, so only meant for small inputs.
inline bool has_factor_of_degree(const IntPoly& f, int d) {
    std::vector<long> xs;
    std::vector<Integer> ys;
    for (long x : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L}) {
        if (static_cast<int>(xs.size()) == d + 1) break;
        Integer y = eval_int(f, x);
        if (y == 0) return d == 1 || f.degree() > 1;
        xs.push_back(x);
        ys.push_back(y);
    }
    std::vector<std::vector<Integer>> choices;
    for (const auto& y : ys) choices.push_back(signed_divisors(y));
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
        // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
        std::vector<Rational> g(static_cast<std::size_t>(d) + 1, Rational(0));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::vector<Rational> basis{Rational(1)};
            Rational denom = 1;
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                std::vector<Rational> next(basis.size() + 1, Rational(0));
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    next[k + 1] += basis[k];
                    next[k] -= basis[k] * xs[j];
                }
                basis = std::move(next);
                denom *= xs[i] - xs[j];
            }
            const Rational scale = Rational(choices[i][idx[i]]) / denom;
            for (std::size_t k = 0; k < basis.size(); ++k) g[k] += basis[k] * scale;
        }
        bool integral = g.back() != 0;
        std::vector<Integer> gi;
        for (auto& c : g) {
            c.canonicalize();
            if (c.get_den() != 1) integral = false;
            gi.push_back(c.get_num());
        }
        if (integral && divides_over_z(IntPoly(gi), f)) return true;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
        if (pos == idx.size()) return false;
    }
}

inline bool kronecker_irreducible(const IntPoly& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d)
        if (has_factor_of_degree(f, d)) return false;
    return true;
}

using Edge = std::pair<int, int>;

// Labeled tree from a Pruefer sequence over {0..n-1}.
inline std::vector<Edge> pruefer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq) ++degree[static_cast<std::size_t>(v)];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int v : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Brute-force p(G, k) over all edge subsets.
inline std::vector<std::uint64_t> matching_counts_bruteforce(int n, const std::vector<Edge>& edges) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n / 2 + 1), 0);
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        int k = 0;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            if (!(mask >> e & 1U)) continue;
            const std::uint64_t bits = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
            if (used & bits) ok = false;
            used |= bits;
            ++k;
        }
        if (ok) ++counts[static_cast<std::size_t>(k)];
    }
    return counts;
}

inline IntPoly poly_from_counts(int n, const std::vector<std::uint64_t>& counts) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        Integer v = static_cast<unsigned long>(counts[k]);
        c[static_cast<std::size_t>(n) - 2 * k] = (k % 2 == 0) ? v : Integer(-v);
    }
    return IntPoly(std::move(c));
}

// Edge subsets with every degree <= 2 and no cycle, by mask.
inline bool is_path_forest(int n, const std::vector<Edge>& edges, std::uint64_t mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(mask >> e & 1U)) continue;
        const auto [u, v] = edges[e];
        if (++deg[static_cast<std::size_t>(u)] > 2 || ++deg[static_cast<std::size_t>(v)] > 2) return false;
        const int a = find(u), b = find(v);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

// Fewest paths covering the graph, over all edge subsets.
inline int min_cover_bruteforce(int n, const std::vector<Edge>& edges) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask)
        if (is_path_forest(n, edges, mask)) best = std::max(best, __builtin_popcountll(mask));
    return n - best;
}

inline std::size_t count_covers_bruteforce(int n, const std::vector<Edge>& edges, int m) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask)
        if (n - __builtin_popcountll(mask) == m && is_path_forest(n, edges, mask)) ++count;
    return count;
}

// Isomorphism certificate of a free tree: the least rooted encoding over
// the one or two centers found by peeling leaves. Independent of the
// library's centroid-based canonical form.
inline std::string tree_certificate(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    auto encode = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (w != parent) kids.push_back(self(self, w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        return s + ")";
    };
    std::string best;
    for (int r : layer) {
        std::string s = encode(encode, r, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

}  // namespace oracle
