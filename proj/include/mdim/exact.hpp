#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// For every candidate landmark w, the bitset of unordered pairs {u, v}
/// (u < v, triangular index) with d(u, w) != d(v, w).
class PairCoverageMap {
public:
    using Word = std::uint64_t;

    /// n BFS runs plus O(n^3) bit setting; intended for small n.
    static PairCoverageMap build(const Graph& g, unsigned workers = 1);

    std::size_t order() const noexcept { return n_; }
    std::size_t pair_count() const noexcept { return pairs_; }
    std::size_t words() const noexcept { return words_; }

    std::size_t pair_index(Vertex u, Vertex v) const noexcept;
    bool separates(Vertex w, Vertex u, Vertex v) const noexcept;
    std::span<const Word> coverage(Vertex w) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(w) * words_, words_};
    }

private:
    std::size_t n_ = 0;
    std::size_t pairs_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// True iff the union of coverage over `landmarks` is every pair.
bool is_separator_via_coverage(const PairCoverageMap& cov, std::span<const Vertex> landmarks);

/// Greedy set cover over the pair universe: repeatedly add the vertex that
/// separates the most still-unseparated pairs, ties to the smallest id.
/// Implemented by partition refinement over a cached distance matrix, which
/// yields the same gains as explicit pair bitsets without C(n,2)-bit sets.
/// Returns the selected vertices sorted ascending.
std::vector<Vertex> greedy_separator(const Graph& g, unsigned workers = 1);

/// Twin classes: maximal groups whose members are separated only by
/// themselves. All but one member of each class lie in every separator.
std::vector<std::vector<Vertex>> twin_classes(const PairCoverageMap& cov);

struct ExactOptions {
    std::uint64_t node_budget = 100'000'000;
    /// Start the search at the entropic certificate instead of 1.
    bool use_entropy_lower_bound = true;
    unsigned workers = 1;
};

struct ExactResult {
    std::size_t md = 0;
    std::vector<Vertex> witness;  ///< a minimum separator, sorted
    std::size_t start_k = 0;      ///< first size tried
    std::size_t greedy_size = 0;
    std::size_t forced = 0;       ///< vertices fixed by twin reduction
    std::uint64_t nodes = 0;
};

/// Exact metric dimension by iterative deepening over landmark subsets with
/// coverage pruning. Throws Inconclusive (carrying [lower, upper]) when the
/// node budget runs out, ConnectivityError when disconnected.
ExactResult exact_md(const Graph& g, const ExactOptions& opts = {});

}  // namespace mdim
