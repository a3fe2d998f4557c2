#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "matchmult/errors.hpp"
#include "matchmult/graph.hpp"
#include "oracles.hpp"

using namespace matchmult;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("load_graph") {
    const Graph p2 = load_graph(R"({"n":2,"edges":[[0,1]]})");
    CHECK(p2 == path_graph(2));
    CHECK(code_of([] { load_graph(R"({"n":2,"edges":[[0,1],[1,0]]})"); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { load_graph(R"({"n":3,"edges":[[0,3]]})"); }) == ErrorCode::BadVertex);
    CHECK(code_of([] { load_graph(R"({"n":3,"edges":[[1,1]]})"); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { load_graph(R"({"n":3})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { load_graph("not json"); }) == ErrorCode::ParseError);
    const Graph labeled = load_graph(R"({"n":2,"edges":[[1,0]],"labels":["a","b"]})");
    CHECK(labeled.label(1) == "b");
    CHECK(to_json(labeled).dump() == R"({"edges":[[0,1]],"labels":["a","b"],"n":2})");
}

TEST_CASE("builtins") {
    const Graph p7 = builtin("P:7");
    CHECK(p7.order() == 7);
    CHECK(p7.size() == 6);
    CHECK(p7.is_tree());

    const Graph t9 = builtin("paper:T9");
    CHECK(t9.order() == 9);
    CHECK(t9.size() == 8);
    CHECK(t9.is_tree());
    std::vector<std::string> leaves;
    for (Vertex v = 0; v < 9; ++v)
        if (t9.degree(v) == 1) leaves.push_back(t9.label(v));
    CHECK(leaves == std::vector<std::string>{"v1", "v8", "v9"});

    const Graph g14 = builtin("paper:G14");
    CHECK(g14.order() == 14);
    CHECK(g14.size() == 17);
    CHECK_FALSE(g14.is_forest());
    // t2 t1 t3 t4 t5 t7 t6 is a Hamiltonian path of the top component; same below.
    for (int base : {0, 7}) {
        const std::vector<int> order{1, 0, 2, 3, 4, 6, 5};
        for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(g14.has_edge(base + order[i], base + order[i + 1]));
    }
    CHECK(g14.has_edge(3, 10));

    CHECK(builtin("star:3").order() == 4);
    CHECK(code_of([] { builtin("paper:K5"); }) == ErrorCode::UnknownBuiltin);
    CHECK(code_of([] { builtin("P:x"); }) == ErrorCode::UnknownBuiltin);
}

TEST_CASE("delete_vertices") {
    const Vertex end[] = {6};
    CHECK(delete_vertices(builtin("P:7"), end).graph == path_graph(6));

    const Graph t9 = builtin("paper:T9");
    auto sub = delete_vertex(t9, 4);  // v5
    CHECK(sub.graph.order() == 8);
    auto parts = components(sub.graph);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].graph == path_graph(4));
    CHECK(parts[1].graph == path_graph(2));
    CHECK(parts[2].graph == path_graph(2));
    // v6, v8 and v7, v9 through both maps
    CHECK(sub.origin[static_cast<std::size_t>(parts[1].origin[0])] == 5);
    CHECK(sub.origin[static_cast<std::size_t>(parts[1].origin[1])] == 7);
    CHECK(sub.graph.label(parts[2].origin[1]) == "v9");

    CHECK(delete_vertices(t9, {}).graph == t9);
    const Vertex bad[] = {9};
    CHECK(code_of([&] { delete_vertices(t9, bad); }) == ErrorCode::BadVertex);
}

TEST_CASE("delete_vertices keeps exactly the edges avoiding the deleted set") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 8;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        const Graph g(n, edges);
        std::vector<Vertex> removed;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) removed.push_back(v);
        auto sub = delete_vertices(g, removed);
        CHECK(sub.graph.order() == n - static_cast<int>(removed.size()));
        std::size_t expected = 0;
        for (const auto& [u, v] : g.edges())
            if (std::find(removed.begin(), removed.end(), u) == removed.end() &&
                std::find(removed.begin(), removed.end(), v) == removed.end())
                ++expected;
        CHECK(sub.graph.size() == expected);
        for (const auto& [u, v] : sub.graph.edges()) CHECK(g.has_edge(sub.origin[static_cast<std::size_t>(u)], sub.origin[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("components") {
    const Graph g(5, {{0, 1}, {2, 3}, {3, 4}});
    auto parts = components(g);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].graph == path_graph(2));
    CHECK(parts[1].graph == path_graph(3));
    CHECK(parts[1].origin == std::vector<Vertex>{2, 3, 4});
    CHECK(components(builtin("paper:T9")).size() == 1);
    auto isolated = components(Graph(3, {}));
    REQUIRE(isolated.size() == 3);
    for (const auto& c : isolated) CHECK(c.graph.order() == 1);
}

TEST_CASE("DOT export") {
    CHECK(to_dot(path_graph(2)) == "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n");
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            const std::string code = canonical_code(t);
            std::vector<Vertex> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int k = 0; k < 100; ++k) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_code(relabel(t, perm)) == code);
            }
        }
    }
    CHECK_THROWS_AS(canonical_code(builtin("paper:G14")), Error);
    CHECK(canonical_code(Graph(2, {})) == "()()");
}

TEST_CASE("enumerate_trees small cases") {
    auto four = enumerate_trees(4);
    REQUIRE(four.size() == 2);
    std::set<std::string> codes{canonical_code(four[0]), canonical_code(four[1])};
    CHECK(codes == std::set<std::string>{canonical_code(path_graph(4)), canonical_code(star_graph(3))});
    auto two = enumerate_trees(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == path_graph(2));
    CHECK(code_of([] { enumerate_trees(0); }) == ErrorCode::BadSize);
    CHECK(code_of([] { enumerate_trees(13); }) == ErrorCode::BadSize);
    CHECK(enumerate_trees(13, 13).size() == 1301);
}

TEST_CASE("enumerate_trees matches the Pruefer + dedup oracle for n <= 9") {
    const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        const auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        std::set<std::string> emitted;
        for (const auto& t : trees) {
            CHECK(t.is_tree());
            CHECK(t.order() == n);
            emitted.insert(canonical_code(t));
        }
        CHECK(emitted.size() == trees.size());

        std::unordered_set<std::string> seen;
        if (n <= 2) {
            seen.insert(oracle::tree_certificate(n, path_graph(n).edges()));
        } else {
            std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
            for (;;) {
                seen.insert(oracle::tree_certificate(n, oracle::pruefer_decode(seq, n)));
                std::size_t pos = 0;
                while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
                if (pos == seq.size()) break;
            }
        }
        CHECK(seen.size() == expected[n - 1]);
        std::set<std::string> emitted_certs;
        for (const auto& t : trees) emitted_certs.insert(oracle::tree_certificate(n, t.edges()));
        CHECK(emitted_certs == std::set<std::string>(seen.begin(), seen.end()));
    }
}
