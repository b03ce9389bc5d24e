// mdim: command-line front end for metric-dimension bounds, certificates and
// G(n, d/n) sweeps.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/emit.hpp"
#include "mdim/entropy.hpp"
#include "mdim/errors.hpp"
#include "mdim/exact.hpp"
#include "mdim/graph.hpp"
#include "mdim/harness.hpp"
#include "mdim/parallel.hpp"
#include "mdim/rng.hpp"
#include "mdim/separator.hpp"
#include "mdim/theory.hpp"

using nlohmann::json;
using namespace mdim;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInconclusive = 3 };

struct Global {
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    double gamma_threshold = 8.0;
    bool force_unit = false;
    unsigned workers = 1;
    bool verbose = false;
};

// Where a single-instance command gets its graph: an edge-list file, or a
// fresh G(n, d/n) sample with d given directly or as c ln n.
struct GraphSource {
    std::string file;
    std::size_t n = 0;
    std::optional<double> d;
    std::optional<double> c;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-g,--graph", file, "Edge-list file (\"n m\" header, then \"u v\" lines)");
        cmd->add_option("-n", n, "Vertex count when sampling G(n, d/n)");
        auto* od = cmd->add_option("-d", d, "Mean degree d");
        auto* oc = cmd->add_option("-c", c, "Degree constant: d = c ln n");
        od->excludes(oc);
    }

    double degree() const {
        if (d) return *d;
        if (c) return *c * std::log(static_cast<double>(n));
        throw ParameterError("give -d or -c together with -n");
    }

    Graph load(std::uint64_t seed) const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw IoError("cannot read '" + file + "'");
            return read_edge_list(in);
        }
        if (n == 0) throw ParameterError("give --graph or -n with -d/-c");
        return generate_gnp({n, degree(), seed});
    }
};

RegimeOptions regime_options(const Global& g) {
    RegimeOptions o;
    o.gamma_threshold = g.gamma_threshold;
    o.force_unit_alpha_beta = g.force_unit;
    return o;
}

void write_text(const Global& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + g.out + "' for writing");
    f << text;
    if (!f.flush()) throw IoError("failed writing '" + g.out + "'");
}

void write_json_doc(const Global& g, const json& doc) { write_text(g, doc.dump(2) + "\n"); }

json graph_summary(const Graph& graph) {
    return {{"n", graph.order()}, {"m", graph.size()}, {"connected", is_connected(graph)}};
}

std::string path_with_suffix(const std::string& out, const std::string& suffix) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? out.substr(0, dot) : out) + suffix;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric dimension of sparse random graphs: bounds, certificates, sweeps"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "mdim 1.0.0");

    Global glob;
    app.add_option("--seed", glob.seed, "Master seed")->capture_default_str();
    app.add_option("-o,--out", glob.out, "Output path ('-' or empty: stdout)");
    app.add_option("--format", glob.format, "csv, json or svg (sweep); json (others)");
    app.add_option("--gamma-threshold", glob.gamma_threshold, "gamma <= threshold is Case 1")
        ->capture_default_str();
    app.add_flag("--force-unit-alpha-beta", glob.force_unit, "Pin alpha = beta = 1");
    app.add_option("-j,--workers", glob.workers, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("-v,--verbose", glob.verbose, "Per-vertex detail in JSON reports");

    // gen
    auto* gen = app.add_subcommand("gen", "Sample G(n, d/n) and write an edge list");
    std::size_t gen_n = 0;
    std::optional<double> gen_d, gen_c;
    gen->add_option("-n", gen_n, "Vertex count")->required();
    auto* gd = gen->add_option("-d", gen_d, "Mean degree");
    gen->add_option("-c", gen_c, "Degree constant: d = c ln n")->excludes(gd);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, d)");
    std::size_t b_n = 0;
    std::optional<double> b_d, b_c;
    std::optional<std::size_t> b_diam;
    bounds->add_option("-n", b_n, "Vertex count")->required();
    auto* bd = bounds->add_option("-d", b_d, "Mean degree");
    bounds->add_option("-c", b_c, "Degree constant: d = c ln n")->excludes(bd);
    bounds->add_option("--diameter", b_diam, "Also report diameter-based bounds");

    // certify
    auto* certify = app.add_subcommand("certify", "Entropic lower bound on the metric dimension");
    GraphSource certify_src;
    certify_src.add_to(certify);

    // construct
    auto* construct = app.add_subcommand("construct", "Random landmark separator with verification");
    GraphSource construct_src;
    construct_src.add_to(construct);
    ConstructOptions construct_opts;
    construct->add_option("--retries", construct_opts.max_retries, "Draws before giving up")
        ->capture_default_str();
    construct->add_option("--sigma-pair-budget", construct_opts.sigma.pair_budget,
                          "Exact sigma when C(n,2) <= budget")
        ->capture_default_str();
    construct->add_option("--sigma-sample-pairs", construct_opts.sigma.sample_pairs,
                          "Sampled pairs otherwise")
        ->capture_default_str();
    bool list_landmarks = false;
    construct->add_flag("--landmarks", list_landmarks, "Include the landmark list");

    // exact
    auto* exact = app.add_subcommand("exact", "Exact metric dimension (small graphs)");
    GraphSource exact_src;
    exact_src.add_to(exact);
    ExactOptions exact_opts;
    exact->add_option("--budget", exact_opts.node_budget, "Search node budget")->capture_default_str();
    bool exact_from_one = false;
    exact->add_flag("--from-one", exact_from_one, "Start the search at 1, not the entropic bound");

    // validate
    auto* validate = app.add_subcommand("validate", "Lemma checks on one G(n, d/n) sample");
    GraphSource validate_src;
    validate_src.add_to(validate);
    LemmaWindows windows;
    validate->add_option("--shell-ratio-lo", windows.shell_ratio_lo)->capture_default_str();
    validate->add_option("--shell-ratio-hi", windows.shell_ratio_hi)->capture_default_str();
    validate->add_option("--fraction-slack", windows.fraction_slack)->capture_default_str();
    validate->add_option("--degree-lo", windows.degree_lo)->capture_default_str();
    validate->add_option("--degree-hi", windows.degree_hi)->capture_default_str();
    validate->add_option("--pass-fraction", windows.pass_fraction)->capture_default_str();
    validate->add_option("--k23-factor", windows.k23_factor)->capture_default_str();
    validate->add_option("--delta-pairs", windows.delta_pairs)->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Seeded Monte-Carlo sweep over (n, c) or (n, d) cells");
    std::string config_path;
    std::vector<std::size_t> s_n;
    std::vector<double> s_c, s_d;
    std::optional<std::size_t> s_trials;
    std::string s_modes;
    std::string svg_series = "entropic_lb";
    sweep->add_option("--config", config_path, "Key = value config file (flags override it)");
    sweep->add_option("-n", s_n, "Vertex counts")->delimiter(',');
    auto* sd = sweep->add_option("-d", s_d, "Mean degrees")->delimiter(',');
    sweep->add_option("-c", s_c, "Degree constants")->delimiter(',')->excludes(sd);
    sweep->add_option("--trials", s_trials, "Trials per cell");
    sweep->add_option("--modes", s_modes, "bounds,certify,construct,exact,validate-lemmas or all");
    sweep->add_option("--svg-series", svg_series, "CSV column plotted against gamma")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (glob.workers == 0) glob.workers = default_workers();

    try {
        if (*gen) {
            double d = 0.0;
            if (gen_d) {
                d = *gen_d;
            } else if (gen_c) {
                d = *gen_c * std::log(static_cast<double>(gen_n));
            } else {
                throw ParameterError("gen: give -d or -c");
            }
            const Graph g = generate_gnp({gen_n, d, glob.seed});
            std::ostringstream text;
            write_edge_list(text, g);
            write_text(glob, text.str());
            return kOk;
        }

        if (*bounds) {
            double d = 0.0;
            if (b_d) {
                d = *b_d;
            } else if (b_c) {
                d = *b_c * std::log(static_cast<double>(b_n));
            } else {
                throw ParameterError("bounds: give -d or -c");
            }
            const auto r = compute_regime(b_n, d, regime_options(glob));
            const auto b = b_diam ? closed_form_bounds(r, *b_diam) : closed_form_bounds(r);
            write_json_doc(glob, {{"regime", to_json(r)}, {"bounds", to_json(b)}});
            return kOk;
        }

        if (*certify) {
            const Graph g = certify_src.load(glob.seed);
            const auto cert = certify_md_lower_bound(g, glob.workers);
            write_json_doc(glob, {{"graph", graph_summary(g)}, {"certificate", to_json(cert, glob.verbose)}});
            return kOk;
        }

        if (*construct) {
            const Graph g = construct_src.load(glob.seed);
            construct_opts.seed = derive_seed(glob.seed, {2});
            construct_opts.sigma.seed = derive_seed(glob.seed, {3});
            construct_opts.sigma.workers = glob.workers;
            construct_opts.workers = glob.workers;
            const auto sigma = min_sigma(g, construct_opts.sigma);
            json doc = {{"graph", graph_summary(g)}, {"sigma", to_json(sigma)}};
            try {
                const auto cert = construct_separator(g, sigma, construct_opts);
                doc["certificate"] = to_json(cert);
                if (!list_landmarks) doc["certificate"].erase("landmarks");
                write_json_doc(glob, doc);
                return kOk;
            } catch (const ConstructionFailure& e) {
                doc["failure"] = {{"message", e.what()},
                                  {"Z", e.landmark_count},
                                  {"sigma", e.sigma},
                                  {"sigma_exact", e.sigma_exact}};
                write_json_doc(glob, doc);
                return kInconclusive;
            }
        }

        if (*exact) {
            const Graph g = exact_src.load(glob.seed);
            exact_opts.use_entropy_lower_bound = !exact_from_one;
            exact_opts.workers = glob.workers;
            json doc = {{"graph", graph_summary(g)}};
            try {
                doc["exact"] = to_json(exact_md(g, exact_opts));
                write_json_doc(glob, doc);
                return kOk;
            } catch (const Inconclusive& e) {
                doc["inconclusive"] = {{"message", e.what()}, {"lower", e.lower}, {"upper", e.upper}};
                write_json_doc(glob, doc);
                return kInconclusive;
            }
        }

        if (*validate) {
            if (validate_src.n == 0 && validate_src.file.empty()) {
                throw ParameterError("validate: give -n with -d/-c, or --graph with -d/-c");
            }
            const Graph g = validate_src.load(glob.seed);
            if (!validate_src.file.empty() && validate_src.n == 0) validate_src.n = g.order();
            const auto r = compute_regime(g.order(), validate_src.degree(), regime_options(glob));
            if (!is_connected(g)) {
                write_json_doc(glob, {{"graph", graph_summary(g)}, {"regime", to_json(r)}});
                return kOk;
            }
            const auto rep = validate_lemmas(g, r, windows, derive_seed(glob.seed, {4}));
            write_json_doc(glob, {{"graph", graph_summary(g)},
                                  {"regime", to_json(r)},
                                  {"windows", to_json(windows)},
                                  {"lemmas", to_json(rep)}});
            return kOk;
        }

        if (*sweep) {
            ExperimentConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw IoError("cannot read '" + config_path + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                cfg = parse_config(buf.str());
            }
            if (!s_n.empty()) cfg.n_values = s_n;
            if (!s_c.empty()) {
                cfg.c_values = s_c;
                cfg.d_values.clear();
            }
            if (!s_d.empty()) {
                cfg.d_values = s_d;
                cfg.c_values.clear();
            }
            if (s_trials) cfg.trials = *s_trials;
            if (!s_modes.empty()) cfg.modes = parse_modes(s_modes);
            if (app.count("--seed")) cfg.master_seed = glob.seed;
            if (app.count("--gamma-threshold")) cfg.regime.gamma_threshold = glob.gamma_threshold;
            if (glob.force_unit) cfg.regime.force_unit_alpha_beta = true;
            if (!glob.out.empty()) cfg.out = glob.out;
            if (!glob.format.empty()) cfg.format = glob.format;
            const auto format = parse_format(cfg.format);

            const auto result = run_sweep(cfg, glob.workers);
            if (cfg.out.empty() || cfg.out == "-") {
                switch (format) {
                    case OutputFormat::Csv: write_csv(std::cout, result.records); break;
                    case OutputFormat::Json: write_json(std::cout, result.records); break;
                    case OutputFormat::Svg: write_svg(std::cout, result.records, svg_series); break;
                }
                return kOk;
            }
            const auto parent = std::filesystem::path(cfg.out).parent_path();
            if (!parent.empty()) std::filesystem::create_directories(parent);
            if (format == OutputFormat::Svg) {
                std::ofstream f(cfg.out, std::ios::binary);
                if (!f) throw IoError("cannot open '" + cfg.out + "' for writing");
                write_svg(f, result.records, svg_series);
                if (!f.flush()) throw IoError("failed writing '" + cfg.out + "'");
            } else {
                emit(result.records, format, cfg.out);
            }

            const auto summary_path = path_with_suffix(cfg.out, ".summary.csv");
            std::ofstream sf(summary_path, std::ios::binary);
            if (!sf) throw IoError("cannot open '" + summary_path + "' for writing");
            write_summary_csv(sf, result.summaries);

            json meta = {{"seed", cfg.master_seed},
                         {"trials", cfg.trials},
                         {"modes", to_string(cfg.modes)},
                         {"gamma_threshold", cfg.regime.gamma_threshold},
                         {"force_unit_alpha_beta", cfg.regime.force_unit_alpha_beta},
                         {"windows", to_json(cfg.windows)},
                         {"summaries", json::array()}};
            for (const auto& s : result.summaries) meta["summaries"].push_back(to_json(s));
            std::ofstream mf(path_with_suffix(cfg.out, ".meta.json"), std::ios::binary);
            mf << meta.dump(2) << "\n";
            if (!sf.flush() || !mf.flush()) throw IoError("failed writing sweep summaries");
            if (glob.verbose) {
                std::cerr << result.records.size() << " records -> " << cfg.out << ", summary -> "
                          << summary_path << "\n";
            }
            return kOk;
        }
    } catch (const ParameterError& e) {
        std::cerr << "mdim: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "mdim: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "mdim: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}
