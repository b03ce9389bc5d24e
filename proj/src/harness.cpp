#include "mdim/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "mdim/entropy.hpp"
#include "mdim/errors.hpp"
#include "mdim/exact.hpp"
#include "mdim/parallel.hpp"
#include "mdim/rng.hpp"

namespace mdim {

Modes parse_modes(const std::string& list) {
    Modes m{false, false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        if (item == "all") {
            m = {true, true, true, true, true};
        } else if (item == "bounds") {
            m.bounds = true;
        } else if (item == "certify") {
            m.certify = true;
        } else if (item == "construct") {
            m.construct = true;
        } else if (item == "exact") {
            m.exact = true;
        } else if (item == "validate-lemmas" || item == "validate") {
            m.validate_lemmas = true;
        } else {
            throw ParameterError("unknown mode '" + item + "'");
        }
    }
    return m;
}

std::string to_string(const Modes& m) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(m.bounds, "bounds");
    add(m.certify, "certify");
    add(m.construct, "construct");
    add(m.exact, "exact");
    add(m.validate_lemmas, "validate-lemmas");
    return out;
}

double k23_first_moment(std::size_t n, double p) {
    if (n < 5) return 0.0;
    const double x = static_cast<double>(n);
    const double pairs = x * (x - 1.0) / 2.0;
    const double triples = (x - 2.0) * (x - 3.0) * (x - 4.0) / 6.0;
    return pairs * triples * std::pow(p, 6);
}

LemmaRaw measure_lemmas(const Graph& g, const RegimeParams& r, const LemmaWindows& w,
                        std::uint64_t seed) {
    const std::size_t n = g.order();
    if (n < 2) throw DomainError("measure_lemmas: requires n >= 2");
    if (!is_connected(g)) throw ConnectivityError("measure_lemmas: graph is disconnected");

    LemmaRaw raw;
    const double nd = static_cast<double>(n);
    const std::size_t ts = r.t_star;
    raw.shell_ratio_min = std::numeric_limits<double>::infinity();
    raw.shell_ratio_max = 0.0;
    raw.frac_next_min = raw.frac_after_min = std::numeric_limits<double>::infinity();
    raw.min_degree = n;

    std::vector<Distance> dist(n);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        bfs_into(g, v, dist, queue);
        ShellDecomposition sh = shells_from(DistanceField{v, dist});
        const double deg = static_cast<double>(g.degree(v));
        raw.min_degree = std::min(raw.min_degree, g.degree(v));
        raw.max_degree = std::max(raw.max_degree, g.degree(v));
        raw.diameter = std::max(raw.diameter, sh.eccentricity);
        for (std::size_t t = 1; t <= ts; ++t) {
            const double ratio = static_cast<double>(sh.shell(t)) / (safe_power(r.d, t - 1) * deg);
            raw.shell_ratio_min = std::min(raw.shell_ratio_min, ratio);
            raw.shell_ratio_max = std::max(raw.shell_ratio_max, ratio);
            ++raw.shell_total;
            raw.shell_in_window += ratio >= w.shell_ratio_lo && ratio <= w.shell_ratio_hi;
        }
        const double next = static_cast<double>(sh.shell(ts + 1)) / nd;
        const double after = static_cast<double>(sh.shell(ts + 2)) / nd;
        raw.frac_next_min = std::min(raw.frac_next_min, next);
        raw.frac_next_max = std::max(raw.frac_next_max, next);
        raw.frac_after_min = std::min(raw.frac_after_min, after);
        raw.frac_after_max = std::max(raw.frac_after_max, after);
    }

    Engine eng = make_engine(seed);
    std::vector<Distance> du(n);
    std::vector<Distance> dv(n);
    raw.delta_ratio_min = raw.sep_next_min = raw.sep_pair_min = std::numeric_limits<double>::infinity();
    raw.delta_ratio_max = 0.0;
    const double scale = safe_power(r.d, ts - 1);
    for (std::size_t i = 0; i < w.delta_pairs; ++i) {
        const auto u = static_cast<Vertex>(uniform_below(eng, n));
        auto v = static_cast<Vertex>(uniform_below(eng, n - 1));
        if (v >= u) ++v;
        bfs_into(g, u, du, queue);
        bfs_into(g, v, dv, queue);
        const auto at = shell_overlap(du, dv, ts);
        const auto next = shell_overlap(du, dv, ts + 1);
        const double ratio = static_cast<double>(at.delta) /
                             (scale * static_cast<double>(g.degree(u) + g.degree(v)));
        raw.delta_ratio_min = std::min(raw.delta_ratio_min, ratio);
        raw.delta_ratio_max = std::max(raw.delta_ratio_max, ratio);
        ++raw.delta_total;
        raw.delta_in_window += ratio >= w.shell_ratio_lo && ratio <= w.shell_ratio_hi;
        raw.sep_next_min = std::min(raw.sep_next_min, static_cast<double>(next.delta) / nd);
        raw.sep_pair_min =
            std::min(raw.sep_pair_min, static_cast<double>(at.delta + next.delta) / nd);
    }
    if (raw.delta_total == 0) raw.delta_ratio_min = raw.sep_next_min = raw.sep_pair_min = 0.0;

    raw.k23_count = count_pairs_with_three_common_neighbors(g);
    raw.k23_expected = k23_first_moment(n, r.d / nd);
    return raw;
}

LemmaFlags evaluate_lemmas(const LemmaRaw& raw, const RegimeParams& r, const LemmaWindows& w) {
    LemmaFlags f;
    auto share = [](std::size_t in, std::size_t total) {
        return total == 0 ? 1.0 : static_cast<double>(in) / static_cast<double>(total);
    };
    const bool case2 = r.case_label == RegimeCase::Case2;
    const double ea = std::exp(-r.alpha * r.gamma);
    const double eb = std::exp(-r.beta * r.gamma);
    const double s = w.fraction_slack;

    f.shell_growth = share(raw.shell_in_window, raw.shell_total) >= w.pass_fraction;
    f.diameter_hard = raw.diameter <= r.t_star + 3;
    f.diameter_case = raw.diameter <= r.t_star + (case2 ? 2 : 3);
    f.degree_window = static_cast<double>(raw.min_degree) >= w.degree_lo * r.alpha * r.d &&
                      static_cast<double>(raw.max_degree) <= w.degree_hi * r.beta * r.d;
    if (case2) {
        f.last_shells = raw.frac_next_min >= 1.0 - (r.beta * r.gamma / r.d + ea) - s;
        f.pair_separators = raw.sep_pair_min >= 2.0 * (r.alpha * r.gamma / r.d + eb) - s;
    } else {
        f.last_shells = raw.frac_next_min >= 1.0 - ea - s && raw.frac_next_max <= 1.0 - eb + s &&
                        raw.frac_after_min >= eb - s && raw.frac_after_max <= ea + s;
        f.pair_separators = raw.sep_next_min >= 2.0 * (1.0 - ea) * eb - s;
    }
    f.pair_delta = share(raw.delta_in_window, raw.delta_total) >= w.pass_fraction;
    f.k23 = static_cast<double>(raw.k23_count) <= std::ceil(w.k23_factor * raw.k23_expected);
    return f;
}

LemmaReport validate_lemmas(const Graph& g, const RegimeParams& r, const LemmaWindows& w,
                            std::uint64_t seed) {
    LemmaReport rep;
    rep.raw = measure_lemmas(g, r, w, seed);
    rep.flags = evaluate_lemmas(rep.raw, r, w);
    return rep;
}

std::vector<Cell> expand_cells(const ExperimentConfig& cfg) {
    if (!cfg.c_values.empty() && !cfg.d_values.empty()) {
        throw ParameterError("config: give either c values or d values, not both");
    }
    std::vector<Cell> cells;
    for (std::size_t n : cfg.n_values) {
        const double log_n = std::log(static_cast<double>(n));
        auto push = [&](double d) {
            if (!(d > 1.0 && d < static_cast<double>(n))) {
                throw ParameterError("config: cell (n = " + std::to_string(n) + ", d = " +
                                     std::to_string(d) + ") violates 1 < d < n");
            }
            cells.push_back({cells.size(), n, d, d / log_n});
        };
        for (double c : cfg.c_values) push(c * log_n);
        for (double d : cfg.d_values) push(d);
    }
    return cells;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial) {
    return derive_seed(master, {cell, trial});
}

namespace {

template <typename Fn>
void stage(TrialRecord& rec, const char* name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        if (!rec.error.empty()) rec.error += "; ";
        rec.error += std::string(name) + ": " + e.what();
    }
}

}  // namespace

TrialRecord run_single(const ExperimentConfig& cfg, const Cell& cell, std::size_t trial) {
    TrialRecord rec;
    rec.cell = cell.index;
    rec.trial = trial;
    rec.n = cell.n;
    rec.d = cell.d;
    rec.c = cell.c;
    rec.seed = trial_seed(cfg.master_seed, cell.index, trial);

    std::optional<RegimeParams> regime;
    stage(rec, "regime", [&] {
        regime = compute_regime(cell.n, cell.d, cfg.regime);
        rec.t_star = regime->t_star;
        rec.gamma = regime->gamma;
        rec.alpha = regime->alpha;
        rec.beta = regime->beta;
        rec.case_label = to_string(regime->case_label);
    });
    if (cfg.modes.bounds && regime) {
        stage(rec, "bounds", [&] {
            const auto b = closed_form_bounds(*regime);
            rec.case1_lb = b.case1_lb;
            rec.case1_ub = b.case1_ub;
            rec.case2_lb = b.case2_lb;
            rec.case2_ub = b.case2_ub;
            rec.q = b.q;
        });
    }

    Graph g;
    try {
        g = generate_gnp({cell.n, cell.d, derive_seed(rec.seed, {0})});
    } catch (const std::exception& e) {
        rec.error = std::string("generate: ") + e.what();
        return rec;
    }
    rec.connected = is_connected(g);
    if (!rec.connected) return rec;

    stage(rec, "diameter", [&] {
        rec.diameter = diameter(g);
        if (cfg.modes.bounds) {
            rec.khuller_lb = khuller_lower_bound(cell.n, *rec.diameter);
            rec.simple_diam_lb = simple_diameter_lower_bound(cell.n, *rec.diameter);
        }
    });
    if (cfg.modes.certify) {
        stage(rec, "certify", [&] {
            const auto cert = certify_md_lower_bound(g);
            rec.entropic_lb = cert.lower_bound;
            rec.entropic_raw = cert.raw_bound;
            rec.h_max = cert.h_max;
        });
        if (cell.n <= cfg.greedy_max_n) {
            stage(rec, "greedy", [&] { rec.greedy_ub = greedy_separator(g).size(); });
        }
    }
    if (cfg.modes.construct) {
        stage(rec, "construct", [&] {
            ConstructOptions opts;
            opts.seed = derive_seed(rec.seed, {2});
            opts.max_retries = cfg.construct_retries;
            opts.sigma.pair_budget = cfg.sigma_pair_budget;
            opts.sigma.sample_pairs = cfg.sigma_sample_pairs;
            opts.sigma.seed = derive_seed(rec.seed, {3});
            const auto sigma = min_sigma(g, opts.sigma);
            rec.sigma = sigma.sigma;
            rec.sigma_exact = sigma.exact;
            rec.constructed_z = landmark_count(cell.n, sigma.sigma);
            try {
                const auto cert = construct_separator(g, sigma, opts);
                rec.verified = cert.verified;
                rec.distinct_landmarks = cert.distinct_landmarks.size();
                rec.trials_used = cert.trials_used;
            } catch (const ConstructionFailure&) {
                rec.verified = false;
                rec.trials_used = cfg.construct_retries;
                throw;
            }
        });
    }
    if (cfg.modes.exact && cell.n <= cfg.exact_max_n) {
        stage(rec, "exact", [&] {
            ExactOptions opts;
            opts.node_budget = cfg.exact_budget;
            opts.use_entropy_lower_bound = false;
            rec.exact_md = exact_md(g, opts).md;
        });
    }
    if (cfg.modes.validate_lemmas && regime) {
        stage(rec, "validate", [&] {
            auto rep = validate_lemmas(g, *regime, cfg.windows, derive_seed(rec.seed, {4}));
            rec.lemmas = rep.raw;
            rec.flags = rep.flags;
        });
    }
    return rec;
}

Quantiles summarize(std::vector<double> values) {
    Quantiles q;
    q.count = values.size();
    if (values.empty()) return q;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    q.mean = sum / static_cast<double>(values.size());
    auto at = [&](double prob) {
        const double pos = prob * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
    };
    q.p10 = at(0.1);
    q.median = at(0.5);
    q.p90 = at(0.9);
    return q;
}

std::vector<CellSummary> summarize_cells(const std::vector<Cell>& cells,
                                         const std::vector<TrialRecord>& records) {
    using FlagPtr = bool LemmaFlags::*;
    static const std::vector<std::pair<std::string, FlagPtr>> flag_names = {
        {"shell_growth", &LemmaFlags::shell_growth},
        {"diameter_hard", &LemmaFlags::diameter_hard},
        {"diameter_case", &LemmaFlags::diameter_case},
        {"degree_window", &LemmaFlags::degree_window},
        {"last_shells", &LemmaFlags::last_shells},
        {"pair_delta", &LemmaFlags::pair_delta},
        {"pair_separators", &LemmaFlags::pair_separators},
        {"k23", &LemmaFlags::k23},
    };
    std::vector<CellSummary> out;
    for (const auto& cell : cells) {
        CellSummary s;
        s.cell = cell;
        std::vector<double> lb, ub, z;
        std::vector<std::size_t> passes(flag_names.size(), 0);
        std::size_t flagged = 0;
        for (const auto& rec : records) {
            if (rec.cell != cell.index) continue;
            ++s.trials;
            if (!rec.connected) continue;
            ++s.connected;
            if (rec.entropic_lb) lb.push_back(static_cast<double>(*rec.entropic_lb));
            if (rec.greedy_ub) ub.push_back(static_cast<double>(*rec.greedy_ub));
            if (rec.constructed_z) z.push_back(static_cast<double>(*rec.constructed_z));
            if (rec.entropic_lb && rec.greedy_ub && *rec.entropic_lb > *rec.greedy_ub) {
                ++s.sandwich_violations;
            }
            if (rec.flags) {
                ++flagged;
                for (std::size_t i = 0; i < flag_names.size(); ++i) {
                    passes[i] += (*rec.flags).*(flag_names[i].second);
                }
            }
        }
        s.connected_fraction =
            s.trials == 0 ? 0.0 : static_cast<double>(s.connected) / static_cast<double>(s.trials);
        s.entropic_lb = summarize(lb);
        s.greedy_ub = summarize(ub);
        s.constructed_z = summarize(z);
        if (flagged > 0) {
            for (std::size_t i = 0; i < flag_names.size(); ++i) {
                s.lemma_pass_rates.emplace_back(
                    flag_names[i].first, static_cast<double>(passes[i]) / static_cast<double>(flagged));
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

SweepResult run_sweep(const ExperimentConfig& cfg, unsigned workers) {
    const auto cells = expand_cells(cfg);
    SweepResult result;
    result.records.resize(cells.size() * cfg.trials);
    parallel_for(result.records.size(), workers, [&](std::size_t i) {
        const auto& cell = cells[i / cfg.trials];
        result.records[i] = run_single(cfg, cell, i % cfg.trials);
    });
    result.summaries = summarize_cells(cells, result.records);
    return result;
}

namespace {

bool same_double(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same_double(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || same_double(*a, *b);
}

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParameterError("config: bad value '" + text + "' for key '" + key + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number<T>(key, item));
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ParameterError("config: bad boolean '" + text + "' for key '" + key + "'");
}

}  // namespace

bool operator==(const LemmaRaw& a, const LemmaRaw& b) {
    return a.shell_total == b.shell_total && a.shell_in_window == b.shell_in_window &&
           same_double(a.shell_ratio_min, b.shell_ratio_min) &&
           same_double(a.shell_ratio_max, b.shell_ratio_max) && a.diameter == b.diameter &&
           a.min_degree == b.min_degree && a.max_degree == b.max_degree &&
           same_double(a.frac_next_min, b.frac_next_min) &&
           same_double(a.frac_next_max, b.frac_next_max) &&
           same_double(a.frac_after_min, b.frac_after_min) &&
           same_double(a.frac_after_max, b.frac_after_max) && a.delta_total == b.delta_total &&
           a.delta_in_window == b.delta_in_window &&
           same_double(a.delta_ratio_min, b.delta_ratio_min) &&
           same_double(a.delta_ratio_max, b.delta_ratio_max) &&
           same_double(a.sep_next_min, b.sep_next_min) &&
           same_double(a.sep_pair_min, b.sep_pair_min) && a.k23_count == b.k23_count &&
           same_double(a.k23_expected, b.k23_expected);
}

bool operator==(const LemmaFlags& a, const LemmaFlags& b) {
    return a.shell_growth == b.shell_growth && a.diameter_hard == b.diameter_hard &&
           a.diameter_case == b.diameter_case && a.degree_window == b.degree_window &&
           a.last_shells == b.last_shells && a.pair_delta == b.pair_delta &&
           a.pair_separators == b.pair_separators && a.k23 == b.k23;
}

bool operator==(const TrialRecord& a, const TrialRecord& b) {
    return a.cell == b.cell && a.trial == b.trial && a.n == b.n && same_double(a.d, b.d) &&
           same_double(a.c, b.c) && a.seed == b.seed && a.connected == b.connected &&
           a.t_star == b.t_star && same_double(a.gamma, b.gamma) &&
           same_double(a.alpha, b.alpha) && same_double(a.beta, b.beta) &&
           a.case_label == b.case_label && a.diameter == b.diameter &&
           a.entropic_lb == b.entropic_lb && same_double(a.entropic_raw, b.entropic_raw) &&
           same_double(a.h_max, b.h_max) && a.greedy_ub == b.greedy_ub &&
           a.constructed_z == b.constructed_z && a.distinct_landmarks == b.distinct_landmarks &&
           a.verified == b.verified && a.trials_used == b.trials_used &&
           same_double(a.sigma, b.sigma) && a.sigma_exact == b.sigma_exact &&
           a.exact_md == b.exact_md && same_double(a.case1_lb, b.case1_lb) &&
           same_double(a.case1_ub, b.case1_ub) && same_double(a.case2_lb, b.case2_lb) &&
           same_double(a.case2_ub, b.case2_ub) && same_double(a.q, b.q) &&
           a.khuller_lb == b.khuller_lb && same_double(a.simple_diam_lb, b.simple_diam_lb) &&
           a.lemmas == b.lemmas && a.flags == b.flags && a.error == b.error;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::vector<std::pair<std::string, Setter>> keys = {
        {"n", [&](auto& k, auto& v) { cfg.n_values = parse_list<std::size_t>(k, v); }},
        {"c", [&](auto& k, auto& v) { cfg.c_values = parse_list<double>(k, v); }},
        {"d", [&](auto& k, auto& v) { cfg.d_values = parse_list<double>(k, v); }},
        {"trials", [&](auto& k, auto& v) { cfg.trials = parse_number<std::size_t>(k, v); }},
        {"seed", [&](auto& k, auto& v) { cfg.master_seed = parse_number<std::uint64_t>(k, v); }},
        {"gamma-threshold",
         [&](auto& k, auto& v) { cfg.regime.gamma_threshold = parse_number<double>(k, v); }},
        {"force-unit-alpha-beta",
         [&](auto& k, auto& v) { cfg.regime.force_unit_alpha_beta = parse_bool(k, v); }},
        {"modes", [&](auto&, auto& v) { cfg.modes = parse_modes(v); }},
        {"exact-max-n", [&](auto& k, auto& v) { cfg.exact_max_n = parse_number<std::size_t>(k, v); }},
        {"exact-budget",
         [&](auto& k, auto& v) { cfg.exact_budget = parse_number<std::uint64_t>(k, v); }},
        {"greedy-max-n",
         [&](auto& k, auto& v) { cfg.greedy_max_n = parse_number<std::size_t>(k, v); }},
        {"retries",
         [&](auto& k, auto& v) { cfg.construct_retries = parse_number<std::size_t>(k, v); }},
        {"sigma-pair-budget",
         [&](auto& k, auto& v) { cfg.sigma_pair_budget = parse_number<std::size_t>(k, v); }},
        {"sigma-sample-pairs",
         [&](auto& k, auto& v) { cfg.sigma_sample_pairs = parse_number<std::size_t>(k, v); }},
        {"shell-ratio-lo",
         [&](auto& k, auto& v) { cfg.windows.shell_ratio_lo = parse_number<double>(k, v); }},
        {"shell-ratio-hi",
         [&](auto& k, auto& v) { cfg.windows.shell_ratio_hi = parse_number<double>(k, v); }},
        {"fraction-slack",
         [&](auto& k, auto& v) { cfg.windows.fraction_slack = parse_number<double>(k, v); }},
        {"degree-lo", [&](auto& k, auto& v) { cfg.windows.degree_lo = parse_number<double>(k, v); }},
        {"degree-hi", [&](auto& k, auto& v) { cfg.windows.degree_hi = parse_number<double>(k, v); }},
        {"pass-fraction",
         [&](auto& k, auto& v) { cfg.windows.pass_fraction = parse_number<double>(k, v); }},
        {"k23-factor", [&](auto& k, auto& v) { cfg.windows.k23_factor = parse_number<double>(k, v); }},
        {"delta-pairs",
         [&](auto& k, auto& v) { cfg.windows.delta_pairs = parse_number<std::size_t>(k, v); }},
        {"out", [&](auto&, auto& v) { cfg.out = v; }},
        {"format", [&](auto&, auto& v) { cfg.format = v; }},
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& kv) { return kv.first == key; });
        if (it == keys.end()) {
            throw ParameterError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        it->second(key, value);
    }
    return cfg;
}

}  // namespace mdim
