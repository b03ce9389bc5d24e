#pragma once

// Test-only reference implementations. Everything here avoids the library's
// BFS, hashing and search code paths so it can serve as an independent check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

namespace mdim::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// All-pairs distances by Floyd-Warshall over the adjacency test.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) d[u][v] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Rows of the |V| x |W| distance matrix pairwise distinct.
inline bool is_separator(const Matrix& d, const std::vector<Vertex>& w) {
    const std::size_t n = d.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            bool separated = false;
            for (Vertex x : w) separated = separated || d[u][x] != d[v][x];
            if (!separated) return false;
        }
    }
    return true;
}

/// Smallest separator size by enumerating subsets in increasing size.
inline std::size_t brute_force_md(const Graph& g) {
    const auto d = floyd_warshall(g);
    const std::size_t n = g.order();
    if (n <= 1) return 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
        do {
            std::vector<Vertex> w;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) w.push_back(static_cast<Vertex>(i));
            if (is_separator(d, w)) return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// |S(u,v)| for every pair, minimum over pairs divided by n.
inline double brute_sigma(const Graph& g) {
    const auto d = floyd_warshall(g);
    const std::size_t n = g.order();
    std::size_t best = n;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t s = 0;
            for (std::size_t w = 0; w < n; ++w) s += d[w][u] != d[w][v];
            best = std::min(best, s);
        }
    return static_cast<double>(best) / static_cast<double>(n);
}

inline std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

/// Pairs with >= 3 common neighbors by sorted-list intersection per pair.
inline std::size_t pairs_with_three_common(const Graph& g) {
    std::size_t count = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) count += common_neighbors(g, u, v) >= 3;
    return count;
}

/// Random graph where each edge appears with probability p, drawn with
/// plain Bernoulli trials (not geometric skipping).
inline Graph bernoulli_graph(Engine& eng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (uniform01(eng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph random_connected(Engine& eng, std::size_t n, double p) {
    for (;;) {
        Graph g = bernoulli_graph(eng, n, p);
        if (is_connected(g)) return g;
    }
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

}  // namespace mdim::oracle
