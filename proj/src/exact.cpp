#include "mdim/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

#include "mdim/entropy.hpp"
#include "mdim/errors.hpp"
#include "mdim/parallel.hpp"

namespace mdim {

using Word = PairCoverageMap::Word;

std::size_t PairCoverageMap::pair_index(Vertex u, Vertex v) const noexcept {
    if (u > v) std::swap(u, v);
    const std::size_t a = u;
    return a * n_ - a * (a + 1) / 2 + (v - a - 1);
}

bool PairCoverageMap::separates(Vertex w, Vertex u, Vertex v) const noexcept {
    const std::size_t p = pair_index(u, v);
    return (coverage(w)[p / 64] >> (p % 64)) & 1U;
}

PairCoverageMap PairCoverageMap::build(const Graph& g, unsigned workers) {
    PairCoverageMap cov;
    const std::size_t n = g.order();
    cov.n_ = n;
    cov.pairs_ = n * (n - (n > 0)) / 2;
    cov.words_ = (cov.pairs_ + 63) / 64;
    cov.bits_.assign(n * cov.words_, 0);
    std::vector<char> disconnected(n, 0);
    parallel_for(n, workers, [&](std::size_t w) {
        const auto field = bfs_distances(g, static_cast<Vertex>(w));
        if (!field.all_reached()) {
            disconnected[w] = 1;
            return;
        }
        Word* row = cov.bits_.data() + w * cov.words_;
        std::size_t p = 0;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v, ++p) {
                if (field.dist[u] != field.dist[v]) row[p / 64] |= Word{1} << (p % 64);
            }
        }
    });
    if (std::find(disconnected.begin(), disconnected.end(), 1) != disconnected.end()) {
        throw ConnectivityError("PairCoverageMap: graph is disconnected");
    }
    return cov;
}

namespace {

// Pair set over the triangular pair index, plus the bit tricks the search needs.
struct PairSet {
    std::vector<Word> words;
    std::size_t count = 0;

    static PairSet full(std::size_t pairs) {
        PairSet s;
        s.words.assign((pairs + 63) / 64, ~Word{0});
        if (pairs % 64 != 0) s.words.back() = (Word{1} << (pairs % 64)) - 1;
        s.count = pairs;
        return s;
    }

    std::size_t overlap(std::span<const Word> cov) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words.size(); ++i) c += std::popcount(words[i] & cov[i]);
        return c;
    }

    void remove(std::span<const Word> cov) noexcept {
        count = 0;
        for (std::size_t i = 0; i < words.size(); ++i) {
            words[i] &= ~cov[i];
            count += std::popcount(words[i]);
        }
    }
};

}  // namespace

bool is_separator_via_coverage(const PairCoverageMap& cov, std::span<const Vertex> landmarks) {
    PairSet left = PairSet::full(cov.pair_count());
    for (Vertex w : landmarks) left.remove(cov.coverage(w));
    return left.count == 0;
}

std::vector<Vertex> greedy_separator(const Graph& g, unsigned workers) {
    const std::size_t n = g.order();
    if (n <= 1) return {};
    if (n > std::numeric_limits<std::uint16_t>::max()) {
        throw ParameterError("greedy_separator: n too large for the cached distance matrix");
    }
    using Short = std::uint16_t;
    std::vector<Short> rows(n * n);
    std::vector<char> disconnected(n, 0);
    std::size_t max_dist = 0;
    std::vector<std::size_t> ecc(n, 0);
    parallel_for(n, workers, [&](std::size_t w) {
        std::vector<Distance> dist(n);
        std::vector<Vertex> queue;
        if (bfs_into(g, static_cast<Vertex>(w), dist, queue) != n) {
            disconnected[w] = 1;
            return;
        }
        for (std::size_t v = 0; v < n; ++v) rows[w * n + v] = static_cast<Short>(dist[v]);
        ecc[w] = dist[queue[n - 1]];
    });
    if (std::find(disconnected.begin(), disconnected.end(), 1) != disconnected.end()) {
        throw ConnectivityError("greedy_separator: graph is disconnected");
    }
    max_dist = *std::max_element(ecc.begin(), ecc.end());

    // Groups of still-unseparated vertices (each of size >= 2). A pair is
    // unseparated iff both endpoints share a group.
    std::vector<std::vector<Vertex>> groups(1);
    groups[0].resize(n);
    std::iota(groups[0].begin(), groups[0].end(), 0);

    auto gain_of = [&](std::size_t w, std::vector<std::size_t>& tally) {
        const Short* row = rows.data() + w * n;
        std::size_t gain = 0;
        for (const auto& grp : groups) {
            const std::size_t s = grp.size();
            std::size_t same = 0;
            for (Vertex v : grp) same += tally[row[v]]++;
            for (Vertex v : grp) tally[row[v]] = 0;
            gain += s * (s - 1) / 2 - same;
        }
        return gain;
    };

    std::vector<Vertex> chosen;
    std::vector<std::size_t> gains(n);
    while (!groups.empty()) {
        parallel_for(n, workers, [&](std::size_t w) {
            std::vector<std::size_t> tally(max_dist + 1, 0);
            gains[w] = gain_of(w, tally);
        });
        const auto best = static_cast<Vertex>(std::max_element(gains.begin(), gains.end()) - gains.begin());
        chosen.push_back(best);

        const Short* row = rows.data() + static_cast<std::size_t>(best) * n;
        std::vector<std::vector<Vertex>> next;
        for (auto& grp : groups) {
            std::stable_sort(grp.begin(), grp.end(), [&](Vertex a, Vertex b) { return row[a] < row[b]; });
            for (std::size_t i = 0; i < grp.size();) {
                std::size_t j = i + 1;
                while (j < grp.size() && row[grp[j]] == row[grp[i]]) ++j;
                if (j - i > 1) next.emplace_back(grp.begin() + static_cast<std::ptrdiff_t>(i),
                                                 grp.begin() + static_cast<std::ptrdiff_t>(j));
                i = j;
            }
        }
        groups = std::move(next);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<std::vector<Vertex>> twin_classes(const PairCoverageMap& cov) {
    const std::size_t n = cov.order();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool twins = true;
            for (Vertex w = 0; w < n && twins; ++w) {
                if (w != u && w != v && cov.separates(w, u, v)) twins = false;
            }
            if (twins) parent[find(v)] = find(u);
        }
    }
    std::vector<std::vector<Vertex>> by_root(n);
    for (Vertex v = 0; v < n; ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& cls : by_root) {
        if (cls.size() > 1) out.push_back(std::move(cls));
    }
    return out;
}

namespace {

class SubsetSearch {
public:
    SubsetSearch(const PairCoverageMap& cov, std::vector<Vertex> candidates, std::uint64_t budget)
        : cov_(cov), candidates_(std::move(candidates)), budget_(budget) {}

    /// Looks for `picks` more candidates covering `uncovered`.
    std::optional<std::vector<Vertex>> find(const PairSet& uncovered, std::size_t picks) {
        chosen_.clear();
        if (dfs(uncovered, 0, picks)) return chosen_;
        return std::nullopt;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    bool exhausted() const noexcept { return exhausted_; }

private:
    bool dfs(const PairSet& uncovered, std::size_t start, std::size_t picks) {
        if (uncovered.count == 0) return true;
        if (picks == 0 || exhausted_) return false;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        std::size_t best_gain = 0;
        for (std::size_t i = start; i < candidates_.size(); ++i) {
            best_gain = std::max(best_gain, uncovered.overlap(cov_.coverage(candidates_[i])));
        }
        if (best_gain * picks < uncovered.count) return false;

        for (std::size_t i = start; i + picks <= candidates_.size(); ++i) {
            const auto c = cov_.coverage(candidates_[i]);
            if (uncovered.overlap(c) == 0) continue;
            PairSet next = uncovered;
            next.remove(c);
            chosen_.push_back(candidates_[i]);
            if (dfs(next, i + 1, picks - 1)) return true;
            chosen_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    const PairCoverageMap& cov_;
    std::vector<Vertex> candidates_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Vertex> chosen_;
};

}  // namespace

ExactResult exact_md(const Graph& g, const ExactOptions& opts) {
    const std::size_t n = g.order();
    ExactResult res;
    if (n <= 1) return res;
    if (!is_connected(g)) throw ConnectivityError("exact_md: graph is disconnected");

    const auto cov = PairCoverageMap::build(g, opts.workers);
    const auto greedy = greedy_separator(g, opts.workers);
    res.greedy_size = greedy.size();

    std::vector<char> is_forced(n, 0);
    std::vector<Vertex> forced;
    for (const auto& cls : twin_classes(cov)) {
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
            forced.push_back(cls[i]);
            is_forced[cls[i]] = 1;
        }
    }
    std::sort(forced.begin(), forced.end());
    res.forced = forced.size();

    PairSet uncovered = PairSet::full(cov.pair_count());
    for (Vertex w : forced) uncovered.remove(cov.coverage(w));

    std::vector<Vertex> candidates;
    std::vector<std::size_t> initial(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (is_forced[v]) continue;
        initial[v] = uncovered.overlap(cov.coverage(v));
        candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return initial[a] > initial[b]; });

    std::size_t lower = 1;
    if (opts.use_entropy_lower_bound) lower = std::max(lower, certify_md_lower_bound(g).lower_bound);
    lower = std::max(lower, forced.size());
    res.start_k = lower;

    SubsetSearch search(cov, candidates, opts.node_budget);
    for (std::size_t k = lower; k < greedy.size(); ++k) {
        auto found = search.find(uncovered, k - forced.size());
        res.nodes = search.nodes();
        if (search.exhausted()) {
            throw Inconclusive("exact_md: node budget exhausted", k, greedy.size());
        }
        if (found) {
            res.md = k;
            res.witness = forced;
            res.witness.insert(res.witness.end(), found->begin(), found->end());
            std::sort(res.witness.begin(), res.witness.end());
            return res;
        }
    }
    res.md = greedy.size();
    res.witness = greedy;
    return res;
}

}  // namespace mdim
