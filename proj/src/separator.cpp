#include "mdim/separator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mdim/errors.hpp"
#include "mdim/parallel.hpp"
#include "mdim/rng.hpp"

namespace mdim {

namespace {

DistanceField connected_bfs(const Graph& g, Vertex source, const char* who) {
    auto field = bfs_distances(g, source);
    if (!field.all_reached()) throw ConnectivityError(std::string(who) + ": graph is disconnected");
    return field;
}

void check_vertex(const Graph& g, Vertex v, const char* who) {
    if (v >= g.order()) throw DomainError(std::string(who) + ": vertex out of range");
}

}  // namespace

PairSeparationStats pair_separation(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "pair_separation");
    check_vertex(g, v, "pair_separation");
    if (u == v) throw DomainError("pair_separation: u and v must differ");
    const auto du = connected_bfs(g, u, "pair_separation");
    const auto dv = bfs_distances(g, v);

    PairSeparationStats out{u, v, 0, {}};
    for (std::size_t w = 0; w < g.order(); ++w) {
        const Distance a = du.dist[w];
        const Distance b = dv.dist[w];
        if (a == b) continue;
        ++out.s_size;
        const std::size_t top = std::max(a, b);
        if (out.delta_sizes.size() <= top) out.delta_sizes.resize(top + 1, 0);
        ++out.delta_sizes[a];
        ++out.delta_sizes[b];
    }
    return out;
}

ShellOverlap shell_overlap(std::span<const Distance> du, std::span<const Distance> dv,
                           std::size_t t) {
    ShellOverlap out;
    for (std::size_t w = 0; w < du.size(); ++w) {
        const bool in_u = du[w] == t;
        const bool in_v = dv[w] == t;
        out.union_size += in_u || in_v;
        out.intersection += in_u && in_v;
    }
    out.delta = out.union_size - out.intersection;
    return out;
}

ShellOverlap pair_delta_at(const Graph& g, Vertex u, Vertex v, std::size_t t) {
    check_vertex(g, u, "pair_delta_at");
    check_vertex(g, v, "pair_delta_at");
    if (u == v) throw DomainError("pair_delta_at: u and v must differ");
    const auto du = connected_bfs(g, u, "pair_delta_at");
    const auto dv = bfs_distances(g, v);
    return shell_overlap(du.dist, dv.dist, t);
}

SigmaEstimate min_sigma(const Graph& g, const SigmaOptions& opts) {
    const std::size_t n = g.order();
    SigmaEstimate out;
    if (n < 2) {
        out.sigma = 1.0;
        out.exact = true;
        return out;
    }
    if (!is_connected(g)) throw ConnectivityError("min_sigma: graph is disconnected");

    struct Best {
        std::size_t count = std::numeric_limits<std::size_t>::max();
        Vertex u = 0;
        Vertex v = 0;
    };
    auto better = [](const Best& a, const Best& b) {
        return std::tie(a.count, a.u, a.v) < std::tie(b.count, b.u, b.v);
    };

    const std::size_t total_pairs = n * (n - 1) / 2;
    Best best;
    if (total_pairs <= opts.pair_budget) {
        // Rows of the distance matrix; symmetric, so row u holds d(u, .).
        std::vector<Distance> rows(n * n);
        parallel_for(n, opts.workers, [&](std::size_t s) {
            std::vector<Vertex> queue;
            bfs_into(g, static_cast<Vertex>(s), std::span(rows).subspan(s * n, n), queue);
        });
        std::vector<Best> per_u(n);
        parallel_for(n, opts.workers, [&](std::size_t u) {
            const Distance* ru = rows.data() + u * n;
            for (std::size_t v = u + 1; v < n; ++v) {
                const Distance* rv = rows.data() + v * n;
                std::size_t count = 0;
                for (std::size_t w = 0; w < n; ++w) count += ru[w] != rv[w];
                Best cand{count, static_cast<Vertex>(u), static_cast<Vertex>(v)};
                if (better(cand, per_u[u])) per_u[u] = cand;
            }
        });
        for (std::size_t u = 0; u + 1 < n; ++u) {
            if (better(per_u[u], best)) best = per_u[u];
        }
        out.exact = true;
        out.pairs_examined = total_pairs;
    } else {
        Engine eng = make_engine(opts.seed);
        std::vector<std::pair<Vertex, Vertex>> pairs(opts.sample_pairs);
        for (auto& [u, v] : pairs) {
            u = static_cast<Vertex>(uniform_below(eng, n));
            v = static_cast<Vertex>(uniform_below(eng, n - 1));
            if (v >= u) ++v;
            if (u > v) std::swap(u, v);
        }
        std::vector<Best> per_pair(pairs.size());
        parallel_for(pairs.size(), opts.workers, [&](std::size_t i) {
            const auto [u, v] = pairs[i];
            const auto du = bfs_distances(g, u);
            const auto dv = bfs_distances(g, v);
            std::size_t count = 0;
            for (std::size_t w = 0; w < n; ++w) count += du.dist[w] != dv.dist[w];
            per_pair[i] = {count, u, v};
        });
        for (const auto& b : per_pair) {
            if (better(b, best)) best = b;
        }
        out.exact = false;
        out.pairs_examined = pairs.size();
    }
    out.sigma = static_cast<double>(best.count) / static_cast<double>(n);
    out.argmin_u = best.u;
    out.argmin_v = best.v;
    return out;
}

std::size_t landmark_count_from_log(double log_n, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("landmark_count: sigma must be positive");
    if (sigma >= 1.0) return 1;
    const double z = 2.0 * log_n / -std::log1p(-sigma);
    // Same relative slack as the entropy certificate: float noise must not
    // push an exact integer up by one.
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(z * (1.0 - 1e-9))));
}

std::size_t landmark_count(std::size_t n, double sigma) {
    if (n < 2) throw DomainError("landmark_count: requires n >= 2");
    return landmark_count_from_log(std::log(static_cast<double>(n)), sigma);
}

namespace {

struct Fingerprint {
    std::uint64_t hi = 0x243f6a8885a308d3ULL;
    std::uint64_t lo = 0x13198a2e03707344ULL;

    void fold(Distance d) noexcept {
        hi = mix64(hi ^ (static_cast<std::uint64_t>(d) + 0xa4093822299f31d0ULL));
        lo = mix64(lo + static_cast<std::uint64_t>(d) * 0x082efa98ec4e6c89ULL + 0x452821e638d01377ULL);
    }
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

}  // namespace

bool verify_separator(const Graph& g, std::span<const Vertex> landmarks, unsigned workers) {
    const std::size_t n = g.order();
    std::vector<Vertex> marks(landmarks.begin(), landmarks.end());
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (Vertex w : marks) check_vertex(g, w, "verify_separator");
    if (n <= 1) return true;
    if (marks.empty()) return false;

    // Landmarks are processed in batches so BFS runs can proceed in parallel
    // while fingerprints are still folded in a fixed order.
    const std::size_t batch = std::max<std::size_t>(1, workers == 0 ? default_workers() : workers);
    std::vector<Fingerprint> prints(n);
    std::vector<std::vector<Distance>> dist(batch, std::vector<Distance>(n));
    for (std::size_t start = 0; start < marks.size(); start += batch) {
        const std::size_t count = std::min(batch, marks.size() - start);
        std::vector<char> partial(count, 0);
        parallel_for(count, workers, [&](std::size_t i) {
            std::vector<Vertex> queue;
            partial[i] = bfs_into(g, marks[start + i], dist[i], queue) != n;
        });
        if (std::find(partial.begin(), partial.end(), 1) != partial.end()) {
            throw ConnectivityError("verify_separator: graph is disconnected");
        }
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t v = 0; v < n; ++v) prints[v].fold(dist[i][v]);
        }
    }

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return std::tie(prints[a], a) < std::tie(prints[b], b); });

    // Vertices sharing a fingerprint with someone else need a full comparison.
    std::vector<Vertex> suspects;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && prints[order[j]] == prints[order[i]]) ++j;
        if (j - i > 1) suspects.insert(suspects.end(), order.begin() + static_cast<std::ptrdiff_t>(i),
                                       order.begin() + static_cast<std::ptrdiff_t>(j));
        i = j;
    }
    if (suspects.empty()) return true;

    const std::size_t k = marks.size();
    std::vector<Distance> vectors(suspects.size() * k);
    std::vector<Distance> scratch(n);
    std::vector<Vertex> queue;
    for (std::size_t j = 0; j < k; ++j) {
        bfs_into(g, marks[j], scratch, queue);
        for (std::size_t s = 0; s < suspects.size(); ++s) vectors[s * k + j] = scratch[suspects[s]];
    }
    std::vector<std::size_t> idx(suspects.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto row = [&](std::size_t s) { return std::span<const Distance>(vectors.data() + s * k, k); };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto ra = row(a);
        const auto rb = row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
    for (std::size_t i = 1; i < idx.size(); ++i) {
        const auto ra = row(idx[i - 1]);
        const auto rb = row(idx[i]);
        if (std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return false;
    }
    return true;
}

SeparatorCertificate construct_separator(const Graph& g, const SigmaEstimate& sigma,
                                         const ConstructOptions& opts) {
    const std::size_t n = g.order();
    SeparatorCertificate cert;
    cert.sigma_used = sigma.sigma;
    cert.sigma_exact = sigma.exact;
    if (n < 2) {
        cert.verified = true;
        return cert;
    }
    cert.z = landmark_count(n, sigma.sigma);

    Engine eng = make_engine(opts.seed);
    for (std::size_t trial = 1; trial <= opts.max_retries; ++trial) {
        cert.landmarks.resize(cert.z);
        for (auto& w : cert.landmarks) w = static_cast<Vertex>(uniform_below(eng, n));
        if (verify_separator(g, cert.landmarks, opts.workers)) {
            cert.distinct_landmarks = cert.landmarks;
            std::sort(cert.distinct_landmarks.begin(), cert.distinct_landmarks.end());
            cert.distinct_landmarks.erase(
                std::unique(cert.distinct_landmarks.begin(), cert.distinct_landmarks.end()),
                cert.distinct_landmarks.end());
            cert.verified = true;
            cert.trials_used = trial;
            return cert;
        }
    }
    const std::string detail = " (Z = " + std::to_string(cert.z) +
                               ", sigma = " + std::to_string(sigma.sigma) + ")";
    if (sigma.exact) {
        throw ConstructionFailure("construct_separator: all " + std::to_string(opts.max_retries) +
                                      " draws failed despite exact sigma; unlucky draws" + detail,
                                  cert.z, sigma.sigma, true);
    }
    throw ConstructionFailure("construct_separator: all " + std::to_string(opts.max_retries) +
                                  " draws failed; sigma was a sampled estimate and may be too high" +
                                  detail,
                              cert.z, sigma.sigma, false);
}

SeparatorCertificate construct_separator(const Graph& g, const ConstructOptions& opts) {
    if (!is_connected(g)) throw ConnectivityError("construct_separator: graph is disconnected");
    SigmaOptions sopts = opts.sigma;
    sopts.workers = opts.workers;
    return construct_separator(g, min_sigma(g, sopts), opts);
}

}  // namespace mdim
