#include <random>

#include "doctest.h"
#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"
#include "matchmult/matching.hpp"
#include "oracles.hpp"

using namespace matchmult;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

IntPoly oracle_mu(const Graph& g) {
    return oracle::poly_from_counts(g.order(), oracle::matching_counts_bruteforce(g.order(), g.edges()));
}

void check_shape(const IntPoly& mu, int n) {
    REQUIRE(mu.degree() == n);
    CHECK(mu.leading() == 1);
    for (int i = 0; i <= n; ++i) {
        const Integer& c = mu[static_cast<std::size_t>(i)];
        if ((n - i) % 2 != 0) {
            CHECK(c == 0);
        } else {
            const int k = (n - i) / 2;
            CHECK(sgn(c) * (k % 2 == 0 ? 1 : -1) >= 0);
        }
    }
}

}  // namespace

TEST_CASE("matching polynomial examples") {
    CHECK(to_string(matching_polynomial(path_graph(7))) == "x^7 - 6*x^5 + 10*x^3 - 4*x");
    CHECK(to_string(matching_polynomial(builtin("paper:T9"))) == "x^9 - 8*x^7 + 20*x^5 - 18*x^3 + 5*x");
    CHECK(matching_polynomial(path_graph(1)) == IntPoly::x());
    CHECK(matching_polynomial(Graph()) == IntPoly::constant(1));
    // K3: x^3 - 3x; C4: x^4 - 4x^2 + 2
    CHECK(matching_polynomial(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == IntPoly{0, -3, 0, 1});
    CHECK(matching_polynomial(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == IntPoly{2, 0, -4, 0, 1});
}

TEST_CASE("matching counts") {
    const auto p7 = matching_counts(path_graph(7));
    REQUIRE(p7.counts.size() == 4);
    CHECK(p7.counts[0] == 1);
    CHECK(p7.counts[1] == 6);
    CHECK(p7.counts[2] == 10);
    CHECK(p7.counts[3] == 4);
    CHECK(matching_counts(star_graph(3)).counts[1] == 3);
    CHECK(matching_counts(star_graph(3)).max_matching() == 1);

    std::vector<Edge> k7;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) k7.emplace_back(u, v);
    // 7 choices of the unmatched vertex times 15 perfect matchings of K6
    CHECK(matching_counts(Graph(7, k7)).counts[3] == 105);
    std::vector<Edge> big;
    for (int i = 0; i < 25; ++i) big.emplace_back(i, i + 1);
    try {
        matching_counts(Graph(26, big));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("identities") {
    CHECK(check_identities_exhaustive(path_graph(4)).ok);
    const Graph p2p3 = disjoint_union(path_graph(2), path_graph(3));
    const auto r = check_identities_exhaustive(p2p3);
    CHECK(r.ok);
    CHECK(r.checks > 0);
    const auto g14 = check_identities(builtin("paper:G14"), 10, 7);
    CHECK(g14.ok);
    CHECK(g14.first_violation.empty());
    CHECK(check_identities(Graph(3, {}), 5, 1).ok);
}

TEST_CASE("every tree up to 8 vertices matches the enumeration oracle") {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            const IntPoly mu = matching_polynomial(t);
            CHECK(mu == oracle_mu(t));
            CHECK(mu == recurrence_matching_polynomial(t));
            CHECK(mu == matching_counts(t).polynomial(n));
            check_shape(mu, n);
        }
    }
}

TEST_CASE("random graphs up to 8 vertices match the enumeration oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(0, 8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, size(rng), density(rng));
        const IntPoly mu = matching_polynomial(g);
        CHECK(mu == oracle_mu(g));
        CHECK(mu == recurrence_matching_polynomial(g));
        check_shape(mu, g.order());
        if (g.order() == 0) continue;

        // multiplicity of the root 0 is the number of vertices left uncovered
        // by a maximum matching
        const auto counts = oracle::matching_counts_bruteforce(g.order(), g.edges());
        int nu = 0;
        for (std::size_t k = 0; k < counts.size(); ++k)
            if (counts[k] != 0) nu = static_cast<int>(k);
        int zero_mult = 0;
        while (mu[static_cast<std::size_t>(zero_mult)] == 0) ++zero_mult;
        CHECK(zero_mult == g.order() - 2 * nu);
        CHECK(check_identities(g, 3, static_cast<std::uint64_t>(trial)).ok);
    }
}

TEST_CASE("paths have simple roots") {
    for (int n = 1; n <= 10; ++n) CHECK(is_squarefree(matching_polynomial(path_graph(n))));
}

TEST_CASE("engine cache is bounded and reused") {
    MatchingEngine engine(4);
    std::vector<Edge> k6;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
    const Graph g(6, k6);
    const IntPoly first = engine(g);
    CHECK(engine.cached() <= 4);
    CHECK(engine(g) == first);
    CHECK(engine.hits() > 0);
    MatchingEngine uncached(0);
    CHECK(uncached(g) == first);
    CHECK(uncached.cached() == 0);
    // K6 has 15 perfect matchings
    CHECK(first[0] == -15);
}
