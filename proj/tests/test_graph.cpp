#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "mdim/errors.hpp"
#include "mdim/graph.hpp"
#include "mdim/rng.hpp"
#include "support/oracles.hpp"

using namespace mdim;

TEST_CASE("bfs distances on hand-checkable graphs") {
    CHECK(bfs_distances(named::path(3), 0).dist == std::vector<Distance>{0, 1, 2});

    const auto k4 = bfs_distances(named::complete(4), 2);
    CHECK(std::count(k4.dist.begin(), k4.dist.end(), 0u) == 1);
    CHECK(std::count(k4.dist.begin(), k4.dist.end(), 1u) == 3);

    // Star: center 0, leaves 1..3; from leaf 1.
    CHECK(bfs_distances(named::star(3), 1).dist == std::vector<Distance>{1, 0, 2, 2});
}

TEST_CASE("unreached vertices carry the sentinel and refuse arithmetic") {
    const std::vector<Edge> two_edges{{0, 1}, {2, 3}};
    const auto g = Graph::from_edges(4, two_edges);
    const auto f = bfs_distances(g, 0);
    CHECK(f.reached(1));
    CHECK_FALSE(f.reached(2));
    CHECK(f.dist[3] == kUnreached);
    CHECK_THROWS_AS(f.at(3), ConnectivityError);
    CHECK(f.at(1) == 1);
    CHECK_FALSE(f.all_reached());
}

TEST_CASE("shell decompositions") {
    CHECK(shells(named::path(4), 0).shell_sizes == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(shells(named::complete(4), 0).shell_sizes == std::vector<std::size_t>{1, 3});
    for (Vertex v = 0; v < 6; ++v) {
        const auto sh = shells(named::cycle(6), v);
        CHECK(sh.shell_sizes == std::vector<std::size_t>{1, 2, 2, 1});
        CHECK(sh.eccentricity == 3);
        CHECK(sh.within(1) == 3);
        CHECK(sh.beyond(1) == 3);
    }
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(shells(Graph::from_edges(4, split), 0), ConnectivityError);
}

TEST_CASE("diameter") {
    CHECK(diameter(named::path(5)) == 4);
    for (std::size_t n = 2; n <= 7; ++n) CHECK(diameter(named::complete(n)) == 1);
    CHECK(diameter(named::cycle(6)) == 3);
    CHECK(diameter(named::cycle(6), 4) == 3);
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(diameter(Graph::from_edges(4, split)), ConnectivityError);
}

TEST_CASE("connectivity") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_FALSE(is_connected(Graph::from_edges(4, split)));
    CHECK(is_connected(named::path(3)));
    CHECK(is_connected(Graph::from_edges(1, {})));
}

TEST_CASE("pairs with three common neighbors") {
    CHECK(count_pairs_with_three_common_neighbors(named::complete_bipartite(2, 3)) == 1);
    CHECK(count_pairs_with_three_common_neighbors(named::path(9)) == 0);
    CHECK(count_pairs_with_three_common_neighbors(named::star(6)) == 0);
    // K_5: every pair shares the other three vertices.
    CHECK(count_pairs_with_three_common_neighbors(named::complete(5)) == 10);

    Engine eng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 3 + uniform_below(eng, 12);
        const auto g = oracle::bernoulli_graph(eng, n, uniform01(eng));
        REQUIRE(count_pairs_with_three_common_neighbors(g) == oracle::pairs_with_three_common(g));
    }
}

TEST_CASE("G(n,p) structural invariants on random small instances") {
    Engine eng(3);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + uniform_below(eng, 40);
        const double d = 0.01 + uniform01(eng) * (static_cast<double>(n) - 0.02);
        const auto g = generate_gnp({n, d, eng()});
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            const auto nb = g.neighbors(v);
            REQUIRE(std::is_sorted(nb.begin(), nb.end()));
            REQUIRE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (Vertex u : nb) {
                REQUIRE(u != v);
                REQUIRE(g.has_edge(u, v));
            }
            degree_sum += nb.size();
        }
        REQUIRE(degree_sum == 2 * g.size());
    }
}

TEST_CASE("G(n,p) parameter validation") {
    CHECK_THROWS_AS(generate_gnp({5, 0.0, 1}), ParameterError);
    CHECK_THROWS_AS(generate_gnp({5, -1.0, 1}), ParameterError);
    CHECK_THROWS_AS(generate_gnp({5, 5.0, 1}), ParameterError);
    CHECK_THROWS_AS(generate_gnp({1, 0.5, 1}), ParameterError);
}

TEST_CASE("G(2, p ~ 1) edge frequency") {
    const double d = 1.999999;
    const double p = d / 2.0;
    std::size_t present = 0;
    const std::size_t seeds = 10'000;
    for (std::size_t s = 0; s < seeds; ++s) present += generate_gnp({2, d, s}).size();
    CHECK(std::abs(static_cast<double>(present) / seeds - p) <= 0.02);
}

TEST_CASE("G(n, p -> 0) is empty") {
    for (std::uint64_t s = 0; s < 100; ++s) CHECK(generate_gnp({5, 1e-12, s}).size() == 0);
}

TEST_CASE("G(n,p) determinism") {
    const auto a = generate_gnp({1000, 13.8, 7});
    const auto b = generate_gnp({1000, 13.8, 7});
    CHECK(a == b);
    CHECK(a.edges() == b.edges());
    CHECK_FALSE(a == generate_gnp({1000, 13.8, 8}));
}

TEST_CASE("G(30, 5) mean degree") {
    const std::size_t samples = 10'000;
    const double n = 30.0;
    std::vector<double> means(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto g = generate_gnp({30, 5.0, derive_seed(99, {s})});
        means[s] = 2.0 * static_cast<double>(g.size()) / n;
    }
    const double mean = std::accumulate(means.begin(), means.end(), 0.0) / samples;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= samples - 1;
    const double se = std::sqrt(var / samples);
    const double expected = 5.0 * (1.0 - 1.0 / n);
    CHECK(std::abs(mean - expected) <= 3.0 * se);
}

TEST_CASE("BFS against Floyd-Warshall, triangle step and shell prefix sums") {
    Engine eng(5);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + uniform_below(eng, 20);
        const auto g = oracle::random_connected(eng, n, 0.15 + 0.5 * uniform01(eng));
        const auto fw = oracle::floyd_warshall(g);
        for (Vertex s = 0; s < n; ++s) {
            const auto f = bfs_distances(g, s);
            for (Vertex v = 0; v < n; ++v) REQUIRE(f.dist[v] == fw[s][v]);
            for (const auto& [u, v] : g.edges()) {
                const auto a = static_cast<long>(f.dist[u]);
                const auto b = static_cast<long>(f.dist[v]);
                REQUIRE(std::abs(a - b) <= 1);
            }
            const auto sh = shells(g, s);
            REQUIRE(sh.shell_sizes[0] == 1);
            REQUIRE(sh.shell_sizes[1] == g.degree(s));
            for (std::size_t t = 0; t <= sh.eccentricity; ++t) {
                const auto within = static_cast<std::size_t>(
                    std::count_if(f.dist.begin(), f.dist.end(), [&](Distance x) { return x <= t; }));
                REQUIRE(sh.within(t) == within);
                REQUIRE(sh.within(t) + sh.beyond(t) == n);
            }
        }
    }
}

TEST_CASE("hub-pair count matches its exact expectation") {
    // A pair {u, v} has Binomial(n-2, p^2) common neighbors, so the expected
    // count is C(n,2) P(Bin >= 3). The first moment C(n,2) C(n-2,3) p^6
    // counts 3-subsets instead and sits slightly above it.
    const std::size_t n = 2000;
    const double d = 2.0 * std::log(static_cast<double>(n));
    const double p = d / static_cast<double>(n);
    const double nn = static_cast<double>(n);
    const double q = p * p;
    const double m = nn - 2;
    const double below = std::pow(1 - q, m) + m * q * std::pow(1 - q, m - 1) +
                         m * (m - 1) / 2 * q * q * std::pow(1 - q, m - 2);
    const double expected = nn * (nn - 1) / 2 * (1 - below);
    const std::size_t samples = 200;
    std::vector<double> counts(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        counts[s] = static_cast<double>(
            count_pairs_with_three_common_neighbors(generate_gnp({n, d, derive_seed(2024, {s})})));
    }
    const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / samples;
    double var = 0.0;
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= samples - 1;
    const double se = std::sqrt(var / samples);
    CHECK(std::abs(mean - expected) <= 3.0 * se);
    const double first_moment = nn * (nn - 1) / 2 * m * (m - 1) * (m - 2) / 6 * std::pow(p, 6);
    CHECK(mean <= first_moment);
}

TEST_CASE("edge list round trip and validation") {
    const auto g = generate_gnp({50, 4.0, 1});
    std::stringstream buf;
    write_edge_list(buf, g);
    const std::string text = buf.str();
    CHECK(text.rfind(std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n", 0) == 0);
    CHECK(text.back() == '\n');
    std::istringstream in(text);
    CHECK(read_edge_list(in) == g);

    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), ParameterError);
    std::istringstream loop("3 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), ParameterError);
    std::istringstream range("3 1\n0 3\n");
    CHECK_THROWS_AS(read_edge_list(range), ParameterError);
    std::istringstream short_body("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_body), ParameterError);
}
