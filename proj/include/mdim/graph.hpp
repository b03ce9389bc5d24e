#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices [0, n), stored as CSR with
/// each neighbor list sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Rejects self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints with ParameterError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const noexcept;

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
};

/// Parameters of an Erdős–Rényi G(n, p) sample with p = d / n.
struct GnpParams {
    std::size_t n = 0;
    double d = 0.0;
    std::uint64_t seed = 0;

    double p() const noexcept { return d / static_cast<double>(n); }
};

/// Samples G(n, d/n) by geometric skipping over the upper-triangular edge
/// sequence; expected O(n + m) work. Deterministic for a fixed seed.
Graph generate_gnp(const GnpParams& params);

/// Hop distance; kUnreached marks vertices outside the source's component.
using Distance = std::uint32_t;
inline constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

struct DistanceField {
    Vertex source = 0;
    std::vector<Distance> dist;

    bool reached(Vertex v) const noexcept { return dist[v] != kUnreached; }
    /// Distance to v; throws ConnectivityError if v was not reached.
    Distance at(Vertex v) const;
    bool all_reached() const noexcept;
};

/// Breadth-first distances from `source`.
DistanceField bfs_distances(const Graph& g, Vertex source);

/// Same as bfs_distances but writes into caller-owned storage, reusing
/// `queue` as scratch. Returns the number of reached vertices.
std::size_t bfs_into(const Graph& g, Vertex source, std::span<Distance> dist,
                     std::vector<Vertex>& queue);

/// Distance histogram |V_t(source)| for t = 0..eccentricity.
struct ShellDecomposition {
    Vertex source = 0;
    std::vector<std::size_t> shell_sizes;
    std::size_t eccentricity = 0;

    /// |V_{<=t}|.
    std::size_t within(std::size_t t) const noexcept;
    /// |V_{>t}|.
    std::size_t beyond(std::size_t t) const noexcept;
    std::size_t shell(std::size_t t) const noexcept {
        return t < shell_sizes.size() ? shell_sizes[t] : 0;
    }
};

/// Throws ConnectivityError unless every vertex is reached from `source`.
ShellDecomposition shells(const Graph& g, Vertex source);
ShellDecomposition shells_from(const DistanceField& field);

/// Maximum eccentricity via n BFS runs. Throws ConnectivityError when the
/// graph is disconnected. `workers` = 0 uses hardware concurrency.
std::size_t diameter(const Graph& g, unsigned workers = 1);

bool is_connected(const Graph& g);

/// Number of unordered pairs {u, v} with |N(u) ∩ N(v)| >= 3, i.e. the number
/// of K_{2,3} "hub pairs".
std::size_t count_pairs_with_three_common_neighbors(const Graph& g);

/// Edge-list text format: "n m" header then m lines "u v" (u < v), LF.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

/// Small named graphs used by tests, examples and the CLI.
namespace named {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
}  // namespace named

}  // namespace mdim
