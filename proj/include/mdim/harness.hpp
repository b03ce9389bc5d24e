#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/separator.hpp"
#include "mdim/theory.hpp"

namespace mdim {

struct Modes {
    bool bounds = true;
    bool certify = true;
    bool construct = false;
    bool exact = false;
    bool validate_lemmas = false;
};

/// Parses a comma list such as "bounds,certify,validate-lemmas" (or "all").
Modes parse_modes(const std::string& list);
std::string to_string(const Modes& m);

/// Finite-n tolerance windows for the asymptotic expansion lemmas.
struct LemmaWindows {
    double shell_ratio_lo = 0.5;
    double shell_ratio_hi = 1.6;
    double fraction_slack = 0.1;  ///< additive widening of shell-fraction windows
    double degree_lo = 0.9;       ///< min degree >= degree_lo * alpha * d
    double degree_hi = 1.1;       ///< max degree <= degree_hi * beta * d
    double pass_fraction = 0.99;  ///< share of ratios that must fall in window
    double k23_factor = 10.0;
    std::size_t delta_pairs = 1000;
};

/// Raw per-graph measurements from which every lemma flag is derived.
struct LemmaRaw {
    std::size_t shell_total = 0;      ///< (w, t) pairs with 1 <= t <= t*
    std::size_t shell_in_window = 0;
    double shell_ratio_min = 0.0;     ///< |V_t(w)| / (d^(t-1) deg w)
    double shell_ratio_max = 0.0;
    std::size_t diameter = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    double frac_next_min = 0.0;       ///< |V_(t*+1)(w)| / n over w
    double frac_next_max = 0.0;
    double frac_after_min = 0.0;      ///< |V_(t*+2)(w)| / n over w
    double frac_after_max = 0.0;
    std::size_t delta_total = 0;      ///< sampled pairs
    std::size_t delta_in_window = 0;
    double delta_ratio_min = 0.0;     ///< |Δ_t*(u,v)| / (d^(t*-1)(deg u + deg v))
    double delta_ratio_max = 0.0;
    double sep_next_min = 0.0;        ///< min |Δ_(t*+1)(u,v)| / n
    double sep_pair_min = 0.0;        ///< min (|Δ_t*| + |Δ_(t*+1)|) / n
    std::size_t k23_count = 0;
    double k23_expected = 0.0;
};

struct LemmaFlags {
    bool shell_growth = false;     ///< |V_t| ~ d^(t-1) deg w for t <= t*
    bool diameter_hard = false;    ///< Diam <= t* + 3
    bool diameter_case = false;    ///< Diam <= t* + 3 (Case 1) or t* + 2 (Case 2)
    bool degree_window = false;
    bool last_shells = false;      ///< |V_(t*+1)|, |V_(t*+2)| fraction windows
    bool pair_delta = false;       ///< |Δ_t*| ~ d^(t*-1)(deg u + deg v)
    bool pair_separators = false;  ///< |S(u,v)|/n lower bound
    bool k23 = false;              ///< hub-pair count <= factor * first moment
};

/// C(n,2) C(n-2,3) p^6.
double k23_first_moment(std::size_t n, double p);

/// Measures everything the lemma flags need. Requires a connected graph;
/// `seed` drives the pair sample.
LemmaRaw measure_lemmas(const Graph& g, const RegimeParams& r, const LemmaWindows& w,
                        std::uint64_t seed);

/// Pure function of the raw measurements, so flags can be recomputed from
/// persisted records.
LemmaFlags evaluate_lemmas(const LemmaRaw& raw, const RegimeParams& r, const LemmaWindows& w);

struct LemmaReport {
    LemmaRaw raw;
    LemmaFlags flags;
};

LemmaReport validate_lemmas(const Graph& g, const RegimeParams& r, const LemmaWindows& w,
                            std::uint64_t seed);

struct ExperimentConfig {
    std::vector<std::size_t> n_values;
    std::vector<double> c_values;  ///< d = c ln n; exclusive with d_values
    std::vector<double> d_values;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    RegimeOptions regime;
    Modes modes;
    LemmaWindows windows;
    std::size_t exact_max_n = 25;
    std::uint64_t exact_budget = 100'000'000;
    std::size_t greedy_max_n = 3000;
    std::size_t construct_retries = 32;
    std::size_t sigma_pair_budget = 200'000;
    std::size_t sigma_sample_pairs = 10'000;
    std::string out;             ///< output path stem; empty writes to stdout
    std::string format = "csv";  ///< csv, json or svg
};

struct Cell {
    std::size_t index = 0;
    std::size_t n = 0;
    double d = 0.0;
    double c = 0.0;
};

/// Cells in n-major order. Throws ParameterError unless every cell has 1 < d < n.
std::vector<Cell> expand_cells(const ExperimentConfig& cfg);

/// One row of sweep output. Optional fields are empty when not computed.
struct TrialRecord {
    std::size_t cell = 0;
    std::size_t trial = 0;
    std::size_t n = 0;
    double d = 0.0;
    double c = 0.0;
    std::uint64_t seed = 0;
    bool connected = false;
    std::optional<std::size_t> t_star;
    std::optional<double> gamma;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::string case_label;
    std::optional<std::size_t> diameter;
    std::optional<std::size_t> entropic_lb;
    std::optional<double> entropic_raw;
    std::optional<double> h_max;
    std::optional<std::size_t> greedy_ub;
    std::optional<std::size_t> constructed_z;
    std::optional<std::size_t> distinct_landmarks;
    std::optional<bool> verified;
    std::optional<std::size_t> trials_used;
    std::optional<double> sigma;
    std::optional<bool> sigma_exact;
    std::optional<std::size_t> exact_md;
    std::optional<double> case1_lb;
    std::optional<double> case1_ub;
    std::optional<double> case2_lb;
    std::optional<double> case2_ub;
    std::optional<double> q;
    std::optional<std::size_t> khuller_lb;
    std::optional<double> simple_diam_lb;
    std::optional<LemmaRaw> lemmas;
    std::optional<LemmaFlags> flags;
    std::string error;

    friend bool operator==(const TrialRecord&, const TrialRecord&);
};

bool operator==(const LemmaRaw&, const LemmaRaw&);
bool operator==(const LemmaFlags&, const LemmaFlags&);

/// Seed of trial `trial` in cell `cell`.
std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial);

/// Generates one G(n, d/n) sample and fills the requested fields. Module
/// errors are captured in `error`, never thrown.
TrialRecord run_single(const ExperimentConfig& cfg, const Cell& cell, std::size_t trial);

struct Quantiles {
    std::size_t count = 0;
    double mean = 0.0;
    double p10 = 0.0;
    double median = 0.0;
    double p90 = 0.0;
};

Quantiles summarize(std::vector<double> values);

struct CellSummary {
    Cell cell;
    std::size_t trials = 0;
    std::size_t connected = 0;
    double connected_fraction = 0.0;
    std::size_t sandwich_violations = 0;  ///< connected records with entropic_lb > greedy_ub
    Quantiles entropic_lb;
    Quantiles greedy_ub;
    Quantiles constructed_z;
    /// Pass rate over connected records carrying lemma flags, per flag name.
    std::vector<std::pair<std::string, double>> lemma_pass_rates;
};

struct SweepResult {
    std::vector<TrialRecord> records;
    std::vector<CellSummary> summaries;
};

/// Runs trials x cells on `workers` threads (0 = hardware concurrency).
/// Output is a pure function of the config.
SweepResult run_sweep(const ExperimentConfig& cfg, unsigned workers = 1);

std::vector<CellSummary> summarize_cells(const std::vector<Cell>& cells,
                                         const std::vector<TrialRecord>& records);

/// Flat "key = value" config text mirroring the CLI flags; '#' starts a comment.
ExperimentConfig parse_config(const std::string& text);

}  // namespace mdim
