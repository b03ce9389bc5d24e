#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Separation data for one pair: |S(u,v)| where S(u,v) = {w : d(u,w) != d(v,w)},
/// and |Δ_t(u,v)| = |V_t(u) △ V_t(v)| for each t.
///
/// Each w in S(u,v) lies in exactly two of the Δ_t (at t = d(u,w) and at
/// t = d(v,w)), so sum_t |Δ_t| = 2 |S(u,v)| while the union of the Δ_t is S.
struct PairSeparationStats {
    Vertex u = 0;
    Vertex v = 0;
    std::size_t s_size = 0;
    std::vector<std::size_t> delta_sizes;
};

/// DomainError when u == v, ConnectivityError when disconnected.
PairSeparationStats pair_separation(const Graph& g, Vertex u, Vertex v);

struct ShellOverlap {
    std::size_t delta = 0;         ///< |V_t(u) △ V_t(v)|
    std::size_t union_size = 0;    ///< |V_t(u) ∪ V_t(v)|
    std::size_t intersection = 0;  ///< |V_t(u) ∩ V_t(v)|
};

/// Overlap of the t-shells of u and v (t = 0 allowed).
ShellOverlap pair_delta_at(const Graph& g, Vertex u, Vertex v, std::size_t t);
ShellOverlap shell_overlap(std::span<const Distance> du, std::span<const Distance> dv,
                           std::size_t t);

struct SigmaOptions {
    /// Exact all-pairs evaluation when C(n,2) <= pair_budget.
    std::size_t pair_budget = 200'000;
    /// Pairs drawn uniformly otherwise.
    std::size_t sample_pairs = 10'000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct SigmaEstimate {
    double sigma = 0.0;  ///< min |S(u,v)| / n over examined pairs
    bool exact = false;  ///< false: sampled estimate, not a guarantee
    std::size_t pairs_examined = 0;
    Vertex argmin_u = 0;
    Vertex argmin_v = 0;
};

/// Minimum separating fraction over pairs. Throws ConnectivityError when
/// disconnected; n < 2 gives sigma = 1 with zero pairs examined.
SigmaEstimate min_sigma(const Graph& g, const SigmaOptions& opts = {});

/// Number of uniform landmarks Z = ceil(2 ln n / -ln(1 - sigma)) that
/// separate every pair with probability >= 1/2. sigma >= 1 yields 1;
/// sigma <= 0 is a DomainError.
std::size_t landmark_count(std::size_t n, double sigma);
std::size_t landmark_count_from_log(double log_n, double sigma);

/// True iff the distance vectors of all vertices to `landmarks` are pairwise
/// distinct. Vectors are fingerprinted with a 128-bit hash; hash collisions
/// are confirmed by full comparison, so `true` is never a false positive.
/// Requires a connected graph (ConnectivityError otherwise).
bool verify_separator(const Graph& g, std::span<const Vertex> landmarks, unsigned workers = 1);

struct SeparatorCertificate {
    std::vector<Vertex> landmarks;           ///< multiset of size Z, in draw order
    std::vector<Vertex> distinct_landmarks;  ///< sorted, deduplicated
    bool verified = false;
    double sigma_used = 0.0;
    bool sigma_exact = false;
    std::size_t z = 0;
    std::size_t trials_used = 0;
};

struct ConstructOptions {
    std::uint64_t seed = 0;
    std::size_t max_retries = 32;
    SigmaOptions sigma;
    unsigned workers = 1;
};

/// Draws Z landmarks uniformly with replacement and verifies, retrying up to
/// max_retries times. Throws ConstructionFailure when every draw fails.
SeparatorCertificate construct_separator(const Graph& g, const ConstructOptions& opts);

/// Same, with sigma already known.
SeparatorCertificate construct_separator(const Graph& g, const SigmaEstimate& sigma,
                                         const ConstructOptions& opts);

}  // namespace mdim
