#include "matchmult/covers.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"
#include "matchmult/matching.hpp"
#include "matchmult/theta.hpp"

namespace matchmult {

namespace {

Error invalid(const std::string& what) { return Error(ErrorCode::InvalidCover, what); }

// Paths grown one edge at a time; for a path endpoint, other_end gives the
// opposite endpoint (itself for an isolated vertex).
class PathSet {
   public:
    explicit PathSet(int n) : deg_(static_cast<std::size_t>(n), 0), other_end_(static_cast<std::size_t>(n)) {
        for (int v = 0; v < n; ++v) other_end_[static_cast<std::size_t>(v)] = v;
    }

    bool can_add(Vertex u, Vertex v) const {
        return deg(u) < 2 && deg(v) < 2 && other_end_[static_cast<std::size_t>(u)] != v;
    }

    void add(Vertex u, Vertex v) {
        const Vertex a = other_end_[static_cast<std::size_t>(u)];
        const Vertex b = other_end_[static_cast<std::size_t>(v)];
        undo_.push_back({a, other_end_[static_cast<std::size_t>(a)], b, other_end_[static_cast<std::size_t>(b)], u, v});
        other_end_[static_cast<std::size_t>(a)] = b;
        other_end_[static_cast<std::size_t>(b)] = a;
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
    }

    void undo() {
        const Step s = undo_.back();
        undo_.pop_back();
        --deg_[static_cast<std::size_t>(s.u)];
        --deg_[static_cast<std::size_t>(s.v)];
        other_end_[static_cast<std::size_t>(s.b)] = s.old_b;
        other_end_[static_cast<std::size_t>(s.a)] = s.old_a;
    }

   private:
    struct Step {
        Vertex a, old_a, b, old_b, u, v;
    };
    int deg(Vertex v) const { return deg_[static_cast<std::size_t>(v)]; }

    std::vector<int> deg_;
    std::vector<Vertex> other_end_;
    std::vector<Step> undo_;
};

void check_size(const Graph& g) {
    if (!g.is_forest() && g.order() > kGeneralCoverCap)
        throw Error(ErrorCode::TooLarge, "path covers of non-forests are limited to " + std::to_string(kGeneralCoverCap) +
                                             " vertices, got " + std::to_string(g.order()));
}

// Largest |S| over degree <= 2 edge subsets of a forest, honouring forced
// choices per edge. -1 when the forced choices admit no valid subset.
class ForestCoverDp {
   public:
    enum State : char { kFree, kIn, kOut };

    explicit ForestCoverDp(const Graph& f) : f_(f), state(f.size(), kFree) {
        const auto n = static_cast<std::size_t>(f.order());
        std::vector<char> seen(n, 0);
        parent_.assign(n, -1);
        for (Vertex root = 0; root < f.order(); ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            seen[static_cast<std::size_t>(root)] = 1;
            roots_.push_back(root);
            const std::size_t start = order_.size();
            order_.push_back(root);
            for (std::size_t i = start; i < order_.size(); ++i)
                for (Vertex w : f.neighbors(order_[i])) {
                    if (seen[static_cast<std::size_t>(w)]) continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    parent_[static_cast<std::size_t>(w)] = order_[i];
                    order_.push_back(w);
                }
        }
    }

    std::size_t index(Vertex u, Vertex v) const {
        const Edge e{std::min(u, v), std::max(u, v)};
        return static_cast<std::size_t>(std::lower_bound(f_.edges().begin(), f_.edges().end(), e) - f_.edges().begin());
    }

    int solve() const {
        constexpr int kNone = INT_MIN / 4;
        const auto n = static_cast<std::size_t>(f_.order());
        // free_[v]: parent edge unused, v may take two child edges;
        // taken_[v]: parent edge used, one child edge left.
        std::vector<int> free_(n), taken_(n);
        std::vector<int> gains;
        for (std::size_t i = order_.size(); i-- > 0;) {
            const Vertex v = order_[i];
            int base = 0;
            int forced = 0;
            bool dead = false;
            gains.clear();
            for (Vertex w : f_.neighbors(v)) {
                if (w == parent_[static_cast<std::size_t>(v)]) continue;
                const int no = free_[static_cast<std::size_t>(w)];
                const int yes = taken_[static_cast<std::size_t>(w)] == kNone ? kNone : taken_[static_cast<std::size_t>(w)] + 1;
                const State st = state[index(v, w)];
                if (st == kOut || (st == kFree && yes == kNone)) {
                    if (no == kNone) dead = true;
                    base += no;
                } else if (st == kIn || no == kNone) {
                    if (yes == kNone) dead = true;
                    base += yes;
                    ++forced;
                } else {
                    base += no;
                    gains.push_back(yes - no);
                }
            }
            std::sort(gains.begin(), gains.end(), std::greater<>());
            auto best = [&](int slots) {
                if (dead || forced > slots) return kNone;
                int total = base;
                for (int k = 0; k < slots - forced && k < static_cast<int>(gains.size()) && gains[static_cast<std::size_t>(k)] > 0; ++k)
                    total += gains[static_cast<std::size_t>(k)];
                return total;
            };
            free_[static_cast<std::size_t>(v)] = best(2);
            taken_[static_cast<std::size_t>(v)] = best(1);
        }
        int total = 0;
        for (Vertex r : roots_) {
            if (free_[static_cast<std::size_t>(r)] == kNone) return -1;
            total += free_[static_cast<std::size_t>(r)];
        }
        return total;
    }

   private:
    const Graph& f_;
    std::vector<Vertex> order_, parent_, roots_;

   public:
    std::vector<State> state;
};

std::vector<Edge> forest_cover_edges(const Graph& f) {
    ForestCoverDp dp(f);
    const int target = dp.solve();
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < f.size(); ++i) {
        dp.state[i] = ForestCoverDp::kIn;
        if (dp.solve() == target) {
            chosen.push_back(f.edges()[i]);
        } else {
            dp.state[i] = ForestCoverDp::kOut;
        }
    }
    return chosen;
}

class CoverSearch {
   public:
    explicit CoverSearch(const Graph& g) : g_(g), paths_(g.order()) {}

    // Include-first search for the largest valid subset; the first one found
    // at each size is the lexicographically smallest.
    std::vector<Edge> maximum() {
        upper_ = g_.order() - static_cast<int>(components(g_).size());
        best_.clear();
        best_size_ = -1;
        grow(0);
        return best_;
    }

    void each_of_size(int k, const std::function<bool(const std::vector<Edge>&)>& visit) {
        target_ = k;
        visit_ = &visit;
        stopped_ = false;
        current_.clear();
        exact(0);
    }

   private:
    void grow(std::size_t i) {
        const int cur = static_cast<int>(current_.size());
        if (cur > best_size_) {
            best_size_ = cur;
            best_ = current_;
        }
        if (best_size_ == upper_ || i == g_.size()) return;
        if (cur + static_cast<int>(g_.size() - i) <= best_size_) return;
        const auto [u, v] = g_.edges()[i];
        if (paths_.can_add(u, v)) {
            paths_.add(u, v);
            current_.push_back(g_.edges()[i]);
            grow(i + 1);
            current_.pop_back();
            paths_.undo();
            if (best_size_ == upper_) return;
        }
        grow(i + 1);
    }

    void exact(std::size_t i) {
        if (stopped_) return;
        const int cur = static_cast<int>(current_.size());
        if (cur == target_) {
            if (!(*visit_)(current_)) stopped_ = true;
            return;
        }
        if (cur + static_cast<int>(g_.size() - i) < target_) return;
        const auto [u, v] = g_.edges()[i];
        if (paths_.can_add(u, v)) {
            paths_.add(u, v);
            current_.push_back(g_.edges()[i]);
            exact(i + 1);
            current_.pop_back();
            paths_.undo();
        }
        exact(i + 1);
    }

    const Graph& g_;
    PathSet paths_;
    std::vector<Edge> current_;
    std::vector<Edge> best_;
    int best_size_ = -1;
    int upper_ = 0;
    int target_ = 0;
    const std::function<bool(const std::vector<Edge>&)>* visit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

PathCover PathCover::from_edges(const Graph& g, std::vector<Edge> s) {
    for (auto& e : s) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!g.has_edge(e.first, e.second))
            throw invalid("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not an edge");
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw invalid("repeated edge");
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : s) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (adj[v].size() > 2) throw invalid("vertex " + std::to_string(v) + " has degree above 2");

    PathCover c;
    c.edges_ = std::move(s);
    c.path_of_.assign(n, -1);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (c.path_of_[static_cast<std::size_t>(start)] != -1 || adj[static_cast<std::size_t>(start)].size() == 2) continue;
        std::vector<Vertex> path{start};
        Vertex prev = -1;
        Vertex cur = start;
        for (;;) {
            c.path_of_[static_cast<std::size_t>(cur)] = static_cast<int>(c.paths_.size());
            Vertex next = -1;
            for (Vertex w : adj[static_cast<std::size_t>(cur)])
                if (w != prev) next = w;
            if (next == -1) break;
            prev = cur;
            cur = next;
            path.push_back(cur);
        }
        c.paths_.push_back(std::move(path));
    }
    if (std::find(c.path_of_.begin(), c.path_of_.end(), -1) != c.path_of_.end()) throw invalid("edge subset contains a cycle");

    // order by smallest vertex, run from the smaller endpoint
    for (auto& p : c.paths_)
        if (p.back() < p.front()) std::reverse(p.begin(), p.end());
    std::sort(c.paths_.begin(), c.paths_.end(),
              [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });
    for (std::size_t i = 0; i < c.paths_.size(); ++i)
        for (Vertex v : c.paths_[i]) c.path_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    return c;
}

PathCover PathCover::from_paths(const Graph& g, const std::vector<std::vector<Vertex>>& paths) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Edge> s;
    for (const auto& p : paths) {
        if (p.empty()) throw invalid("empty path");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!g.contains(p[i])) throw invalid("vertex " + std::to_string(p[i]) + " not in graph");
            if (seen[static_cast<std::size_t>(p[i])]++) throw invalid("vertex " + std::to_string(p[i]) + " covered twice");
            if (i > 0) s.emplace_back(p[i - 1], p[i]);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw invalid("vertex " + std::to_string(v) + " not covered");
    return from_edges(g, std::move(s));
}

nlohmann::json PathCover::to_json(const Graph& g) const {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : paths_) {
        nlohmann::json row = nlohmann::json::array();
        for (Vertex v : p) row.push_back(vertex_json(g, v));
        ps.push_back(row);
    }
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [u, v] : edges_) es.push_back({u, v});
    return {{"paths", ps}, {"edges", es}};
}

PathCover min_path_cover(const Graph& g) {
    check_size(g);
    if (g.is_forest()) return PathCover::from_edges(g, forest_cover_edges(g));
    return PathCover::from_edges(g, CoverSearch(g).maximum());
}

void for_each_cover(const Graph& g, int m, const std::function<bool(const PathCover&)>& visit) {
    check_size(g);
    const int k = g.order() - m;
    if (m < 0 || k < 0 || k > static_cast<int>(g.size())) return;
    CoverSearch(g).each_of_size(k, [&](const std::vector<Edge>& s) { return visit(PathCover::from_edges(g, s)); });
}

std::vector<PathCover> enumerate_covers(const Graph& g, int m) {
    std::vector<PathCover> out;
    for_each_cover(g, m, [&](const PathCover& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

nlohmann::json ExtremalReport::to_json(const Graph& g) const {
    nlohmann::json cross = nlohmann::json::array();
    for (const auto& c : cross_edges) {
        nlohmann::json special = nlohmann::json::array();
        if (c.u_special) special.push_back(vertex_json(g, c.edge.first));
        if (c.v_special) special.push_back(vertex_json(g, c.edge.second));
        cross.push_back({{"edge", {vertex_json(g, c.edge.first), vertex_json(g, c.edge.second)}},
                         {"paths", {c.path_u, c.path_v}},
                         {"special", special},
                         {"witnessed", c.witnessed()}});
    }
    nlohmann::json a = nlohmann::json::array();
    for (bool b : condition_a) a.push_back(b);
    return {{"condition_a", a}, {"cross_edges", cross}, {"extremal", verdict}};
}

ExtremalReport is_extremal(const Graph& g, const RootClass& theta, const PathCover& q) {
    const PathCover cover = PathCover::from_edges(g, q.edges());
    if (!(cover.paths() == q.paths())) throw invalid("cover does not match its edge set");

    std::map<std::size_t, SignTable> tables;  // by path length
    auto table_for = [&](std::size_t len) -> const SignTable& {
        auto it = tables.find(len);
        if (it == tables.end()) it = tables.emplace(len, sign_table(path_graph(static_cast<int>(len)), theta, true)).first;
        return it->second;
    };
    std::vector<std::size_t> position(static_cast<std::size_t>(g.order()));
    for (const auto& p : cover.paths())
        for (std::size_t i = 0; i < p.size(); ++i) position[static_cast<std::size_t>(p[i])] = i;

    ExtremalReport r;
    r.verdict = true;
    for (const auto& p : cover.paths()) {
        const bool root = table_for(p.size()).mult > 0;
        r.condition_a.push_back(root);
        r.verdict = r.verdict && root;
    }
    auto special = [&](Vertex v) {
        const auto& p = cover.paths()[static_cast<std::size_t>(cover.path_of(v))];
        return static_cast<bool>(table_for(p.size()).special[position[static_cast<std::size_t>(v)]]);
    };
    for (const auto& [u, v] : g.edges()) {
        if (cover.path_of(u) == cover.path_of(v)) continue;
        CrossEdge c{{u, v}, cover.path_of(u), cover.path_of(v), special(u), special(v)};
        r.verdict = r.verdict && c.witnessed();
        r.cross_edges.push_back(c);
    }
    return r;
}

nlohmann::json MainVerdict::to_json(const Graph& g) const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& r : witnesses) w.push_back(r.to_json());
    nlohmann::json j = {{"forest", forest},
                        {"min_cover_size", min_cover_size},
                        {"max_mult", max_mult},
                        {"witnesses", w},
                        {"bound_ok", bound_ok},
                        {"biconditional_ok", biconditional_ok},
                        {"converse_ok", converse_ok},
                        {"covers_checked", covers_checked},
                        {"pairs_checked", pairs_checked},
                        {"ok", ok()},
                        {"counterexample", nullptr}};
    if (counterexample)
        j["counterexample"] = {{"cover", counterexample->cover.to_json(g)},
                               {"rootclass", counterexample->theta.to_json()},
                               {"reason", counterexample->reason}};
    return j;
}

MainVerdict certify_main(const Graph& g, int converse_cap) {
    check_size(g);
    MainVerdict out;
    out.forest = g.is_forest();
    const IntPoly mu = matching_polynomial(g);
    const auto roots = root_classes(g);
    for (const auto& r : roots) out.max_mult = std::max(out.max_mult, r.mult);
    for (const auto& r : roots)
        if (r.mult == out.max_mult) out.witnesses.push_back(r.root);
    const PathCover best = min_path_cover(g);
    out.min_cover_size = static_cast<int>(best.size());
    out.bound_ok = static_cast<int>(out.max_mult) <= out.min_cover_size;

    std::map<std::size_t, std::vector<RootClass>> path_factors;  // by path length
    auto candidates = [&](const PathCover& q, bool with_roots) {
        std::vector<RootClass> out_roots;
        if (with_roots)
            for (const auto& r : roots) out_roots.push_back(r.root);
        if (q.size() == 0) return out_roots;
        const std::size_t len = q.paths().front().size();
        auto it = path_factors.find(len);
        if (it == path_factors.end()) {
            std::vector<RootClass> fs;
            for (const auto& r : root_classes(path_graph(static_cast<int>(len)))) fs.push_back(r.root);
            it = path_factors.emplace(len, std::move(fs)).first;
        }
        for (const auto& f : it->second)
            if (std::find(out_roots.begin(), out_roots.end(), f) == out_roots.end()) out_roots.push_back(f);
        return out_roots;
    };
    auto record = [&](const PathCover& q, const RootClass& theta, std::string reason) {
        if (!out.counterexample) out.counterexample = Counterexample{q, theta, std::move(reason)};
    };

    const int c = out.min_cover_size;
    for_each_cover(g, c, [&](const PathCover& q) {
        ++out.covers_checked;
        for (const auto& theta : candidates(q, true)) {
            ++out.pairs_checked;
            const unsigned m = root_multiplicity(mu, theta.minpoly());
            const bool attains = static_cast<int>(m) == c;
            const bool extremal = is_extremal(g, theta, q).verdict;
            if (attains == extremal) continue;
            out.biconditional_ok = false;
            record(q, theta,
                   attains ? "multiplicity equals the cover size but the cover is not extremal"
                           : "cover is extremal but the multiplicity is " + std::to_string(m));
        }
        return true;
    });

    if (out.forest) {
        for (int m = std::max(c, 1); m <= converse_cap; ++m) {
            for_each_cover(g, m, [&](const PathCover& q) {
                ++out.covers_checked;
                for (const auto& theta : candidates(q, false)) {
                    ++out.pairs_checked;
                    if (!is_extremal(g, theta, q).verdict) continue;
                    const unsigned mult = root_multiplicity(mu, theta.minpoly());
                    if (static_cast<int>(mult) == m && mult == out.max_mult) continue;
                    out.converse_ok = false;
                    record(q, theta,
                           "extremal cover of " + std::to_string(m) + " paths but multiplicity " + std::to_string(mult) +
                               " with maximum " + std::to_string(out.max_mult));
                }
                return true;
            });
        }
    }
    return out;
}

}  // namespace matchmult
