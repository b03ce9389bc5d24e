#include "mdim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "mdim/errors.hpp"
#include "mdim/parallel.hpp"
#include "mdim/rng.hpp"

namespace mdim {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") out of range for n = " + std::to_string(n));
        }
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw ParameterError("duplicate edge (" + std::to_string(v) + ", " +
                                 std::to_string(*dup) + ")");
        }
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph generate_gnp(const GnpParams& params) {
    const std::size_t n = params.n;
    if (n < 2) throw ParameterError("generate_gnp: n must be at least 2");
    if (!(params.d > 0.0) || !(params.d < static_cast<double>(n))) {
        throw ParameterError("generate_gnp: mean degree must satisfy 0 < d < n");
    }
    const double p = params.p();
    const double log_q = std::log1p(-p);
    Engine eng = make_engine(params.seed);

    // Walk the strictly-lower-triangular index (v, w), w < v, jumping by
    // geometric gaps between successive present edges.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.d * static_cast<double>(n) * 0.5 * 1.1) + 16);
    const double total_pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
        const double r = uniform01(eng);
        const double gap = std::floor(std::log1p(-r) / log_q);
        if (!(gap < total_pairs)) break;
        w += 1 + static_cast<std::int64_t>(gap);
        while (w >= v && v < nn) {
            w -= v;
            ++v;
        }
        if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, edges);
}

Distance DistanceField::at(Vertex v) const {
    if (dist[v] == kUnreached) {
        throw ConnectivityError("vertex " + std::to_string(v) + " unreachable from " +
                                std::to_string(source));
    }
    return dist[v];
}

bool DistanceField::all_reached() const noexcept {
    return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
}

std::size_t bfs_into(const Graph& g, Vertex source, std::span<Distance> dist,
                     std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.resize(g.order());
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
        const Vertex u = queue[head++];
        const Distance next = dist[u] + 1;
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = next;
                queue[tail++] = v;
            }
        }
    }
    return tail;
}

DistanceField bfs_distances(const Graph& g, Vertex source) {
    DistanceField field{source, std::vector<Distance>(g.order())};
    std::vector<Vertex> queue;
    bfs_into(g, source, field.dist, queue);
    return field;
}

std::size_t ShellDecomposition::within(std::size_t t) const noexcept {
    std::size_t total = 0;
    for (std::size_t s = 0; s <= t && s < shell_sizes.size(); ++s) total += shell_sizes[s];
    return total;
}

std::size_t ShellDecomposition::beyond(std::size_t t) const noexcept {
    std::size_t total = 0;
    for (std::size_t s = t + 1; s < shell_sizes.size(); ++s) total += shell_sizes[s];
    return total;
}

ShellDecomposition shells_from(const DistanceField& field) {
    ShellDecomposition out;
    out.source = field.source;
    for (Distance d : field.dist) {
        if (d == kUnreached) {
            throw ConnectivityError("shells: graph is disconnected");
        }
        if (d >= out.shell_sizes.size()) out.shell_sizes.resize(d + 1, 0);
        ++out.shell_sizes[d];
    }
    out.eccentricity = out.shell_sizes.size() - 1;
    return out;
}

ShellDecomposition shells(const Graph& g, Vertex source) {
    return shells_from(bfs_distances(g, source));
}

std::size_t diameter(const Graph& g, unsigned workers) {
    const std::size_t n = g.order();
    std::vector<std::size_t> ecc(n, 0);
    std::vector<char> disconnected(n, 0);
    parallel_for(n, workers, [&](std::size_t s) {
        std::vector<Distance> dist(n);
        std::vector<Vertex> queue;
        const std::size_t reached = bfs_into(g, static_cast<Vertex>(s), dist, queue);
        if (reached != n) {
            disconnected[s] = 1;
            return;
        }
        ecc[s] = dist[queue[n - 1]];
    });
    if (std::find(disconnected.begin(), disconnected.end(), 1) != disconnected.end()) {
        throw ConnectivityError("diameter: graph is disconnected");
    }
    return n == 0 ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<Distance> dist(g.order());
    std::vector<Vertex> queue;
    return bfs_into(g, 0, dist, queue) == g.order();
}

std::size_t count_pairs_with_three_common_neighbors(const Graph& g) {
    // For each u, count 2-paths u - w - v with v > u; the count for v is
    // exactly |N(u) ∩ N(v)|.
    const std::size_t n = g.order();
    std::vector<std::uint32_t> common(n, 0);
    std::vector<Vertex> touched;
    std::size_t pairs = 0;
    for (Vertex u = 0; u < n; ++u) {
        touched.clear();
        for (Vertex w : g.neighbors(u)) {
            for (Vertex v : g.neighbors(w)) {
                if (v <= u) continue;
                if (common[v]++ == 0) touched.push_back(v);
            }
        }
        for (Vertex v : touched) {
            if (common[v] >= 3) ++pairs;
            common[v] = 0;
        }
    }
    return pairs;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!out) throw IoError("write_edge_list: stream failure");
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return;
        }
        throw ParameterError(std::string("edge list: missing ") + what);
    };
    next_line("header");
    std::size_t n = 0;
    std::size_t m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m)) throw ParameterError("edge list: malformed header '" + line + "'");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        next_line("edge line");
        std::istringstream row(line);
        long long u = -1;
        long long v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0) {
            throw ParameterError("edge list: malformed edge line '" + line + "'");
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, edges);
}

namespace named {

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, e);
}

}  // namespace named
}  // namespace mdim
