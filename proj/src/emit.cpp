#include "mdim/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <type_traits>

#include "mdim/errors.hpp"

namespace mdim {

using nlohmann::json;

namespace {

template <typename T>
struct is_optional : std::false_type {};
template <typename T>
struct is_optional<std::optional<T>> : std::true_type {};

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParameterError("csv: bad number '" + s + "'");
    }
    return v;
}

template <typename T>
std::string format_value(const T& v) {
    if constexpr (is_optional<T>::value) {
        return v ? format_value(*v) : std::string();
    } else if constexpr (std::is_same_v<T, bool>) {
        return v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, double>) {
        return format_double(v);
    } else if constexpr (std::is_same_v<T, std::string>) {
        return v;
    } else {
        return std::to_string(v);
    }
}

template <typename T>
void parse_value(T& dst, const std::string& s) {
    if constexpr (is_optional<T>::value) {
        if (s.empty()) {
            dst.reset();
        } else {
            typename T::value_type inner{};
            parse_value(inner, s);
            dst = inner;
        }
    } else if constexpr (std::is_same_v<T, bool>) {
        if (s == "true") {
            dst = true;
        } else if (s == "false") {
            dst = false;
        } else {
            throw ParameterError("csv: bad boolean '" + s + "'");
        }
    } else if constexpr (std::is_same_v<T, double>) {
        dst = parse_double(s);
    } else if constexpr (std::is_same_v<T, std::string>) {
        dst = s;
    } else {
        const auto res = std::from_chars(s.data(), s.data() + s.size(), dst);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw ParameterError("csv: bad integer '" + s + "'");
        }
    }
}

template <typename T>
json json_value(const T& v) {
    if constexpr (is_optional<T>::value) {
        return v ? json_value(*v) : json(nullptr);
    } else if constexpr (std::is_same_v<T, double>) {
        return std::isfinite(v) ? json(v) : json(nullptr);
    } else {
        return json(v);
    }
}

struct Column {
    std::string name;
    std::function<std::string(const TrialRecord&)> text;
    std::function<void(TrialRecord&, const std::string&)> parse;
    std::function<json(const TrialRecord&)> to_json;
    bool lemma = false;  ///< backed by the lemma raw data or flags
};

template <typename T>
Column field(const char* name, T TrialRecord::*member) {
    return {name, [member](const TrialRecord& r) { return format_value(r.*member); },
            [member](TrialRecord& r, const std::string& s) { parse_value(r.*member, s); },
            [member](const TrialRecord& r) { return json_value(r.*member); }};
}

// Columns backed by a member of an optional sub-struct (lemma raw data or
// flags): empty when the sub-struct is absent, created on first non-empty cell.
template <typename Sub, typename T>
Column nested(const char* name, std::optional<Sub> TrialRecord::*holder, T Sub::*member) {
    return {name,
            [=](const TrialRecord& r) {
                return (r.*holder) ? format_value((*(r.*holder)).*member) : std::string();
            },
            [=](TrialRecord& r, const std::string& s) {
                if (s.empty()) return;
                if (!(r.*holder)) (r.*holder).emplace();
                parse_value((*(r.*holder)).*member, s);
            },
            [=](const TrialRecord& r) {
                return (r.*holder) ? json_value((*(r.*holder)).*member) : json(nullptr);
            },
            true};
}

const std::vector<Column>& columns() {
    using R = TrialRecord;
    using L = LemmaRaw;
    using F = LemmaFlags;
    static const std::vector<Column> cols = {
        field("cell", &R::cell),
        field("trial", &R::trial),
        field("n", &R::n),
        field("d", &R::d),
        field("c", &R::c),
        field("seed", &R::seed),
        field("connected", &R::connected),
        field("t_star", &R::t_star),
        field("gamma", &R::gamma),
        field("alpha", &R::alpha),
        field("beta", &R::beta),
        field("case_label", &R::case_label),
        field("diameter", &R::diameter),
        field("entropic_lb", &R::entropic_lb),
        field("entropic_raw", &R::entropic_raw),
        field("h_max", &R::h_max),
        field("greedy_ub", &R::greedy_ub),
        field("constructed_z", &R::constructed_z),
        field("distinct_landmarks", &R::distinct_landmarks),
        field("verified", &R::verified),
        field("trials_used", &R::trials_used),
        field("sigma", &R::sigma),
        field("sigma_exact", &R::sigma_exact),
        field("exact_md", &R::exact_md),
        field("case1_lb", &R::case1_lb),
        field("case1_ub", &R::case1_ub),
        field("case2_lb", &R::case2_lb),
        field("case2_ub", &R::case2_ub),
        field("q", &R::q),
        field("khuller_lb", &R::khuller_lb),
        field("simple_diam_lb", &R::simple_diam_lb),
        nested("shell_total", &R::lemmas, &L::shell_total),
        nested("shell_in_window", &R::lemmas, &L::shell_in_window),
        nested("shell_ratio_min", &R::lemmas, &L::shell_ratio_min),
        nested("shell_ratio_max", &R::lemmas, &L::shell_ratio_max),
        nested("lemma_diameter", &R::lemmas, &L::diameter),
        nested("min_degree", &R::lemmas, &L::min_degree),
        nested("max_degree", &R::lemmas, &L::max_degree),
        nested("frac_next_min", &R::lemmas, &L::frac_next_min),
        nested("frac_next_max", &R::lemmas, &L::frac_next_max),
        nested("frac_after_min", &R::lemmas, &L::frac_after_min),
        nested("frac_after_max", &R::lemmas, &L::frac_after_max),
        nested("delta_total", &R::lemmas, &L::delta_total),
        nested("delta_in_window", &R::lemmas, &L::delta_in_window),
        nested("delta_ratio_min", &R::lemmas, &L::delta_ratio_min),
        nested("delta_ratio_max", &R::lemmas, &L::delta_ratio_max),
        nested("sep_next_min", &R::lemmas, &L::sep_next_min),
        nested("sep_pair_min", &R::lemmas, &L::sep_pair_min),
        nested("k23_count", &R::lemmas, &L::k23_count),
        nested("k23_expected", &R::lemmas, &L::k23_expected),
        nested("flag_shell_growth", &R::flags, &F::shell_growth),
        nested("flag_diameter_hard", &R::flags, &F::diameter_hard),
        nested("flag_diameter_case", &R::flags, &F::diameter_case),
        nested("flag_degree_window", &R::flags, &F::degree_window),
        nested("flag_last_shells", &R::flags, &F::last_shells),
        nested("flag_pair_delta", &R::flags, &F::pair_delta),
        nested("flag_pair_separators", &R::flags, &F::pair_separators),
        nested("flag_k23", &R::flags, &F::k23),
        field("error", &R::error),
    };
    return cols;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// Reads one CSV record; false at end of input.
bool read_csv_row(std::istream& in, std::vector<std::string>& cells) {
    cells.clear();
    if (in.peek() == std::char_traits<char>::eof()) return false;
    std::string cell;
    bool quoted = false;
    char ch;
    while (in.get(ch)) {
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    cell += '"';
                } else {
                    quoted = false;
                }
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else if (ch == '\n') {
            break;
        } else if (ch != '\r') {
            cell += ch;
        }
    }
    if (quoted) throw ParameterError("csv: unterminated quoted field");
    cells.push_back(std::move(cell));
    return true;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : columns()) out.push_back(c.name);
        return out;
    }();
    return names;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    const auto& cols = columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].name;
    out << '\n';
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out << (i ? "," : "") << csv_escape(cols[i].text(rec));
        }
        out << '\n';
    }
    if (!out) throw IoError("write_csv: stream failure");
}

std::vector<TrialRecord> read_csv(std::istream& in) {
    const auto& cols = columns();
    std::vector<std::string> cells;
    if (!read_csv_row(in, cells)) throw ParameterError("csv: missing header");
    if (cells != csv_columns()) throw ParameterError("csv: header does not match the record schema");
    std::vector<TrialRecord> out;
    while (read_csv_row(in, cells)) {
        if (cells.size() == 1 && cells[0].empty()) continue;
        if (cells.size() != cols.size()) throw ParameterError("csv: wrong number of cells");
        TrialRecord rec;
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i].parse(rec, cells[i]);
        out.push_back(std::move(rec));
    }
    return out;
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries) {
    static const char* flags[] = {"shell_growth", "diameter_hard", "diameter_case",
                                  "degree_window", "last_shells", "pair_delta",
                                  "pair_separators", "k23"};
    out << "cell,n,d,c,trials,connected,connected_fraction,sandwich_violations";
    for (const char* q : {"entropic_lb", "greedy_ub", "constructed_z"}) {
        out << ',' << q << "_count," << q << "_mean," << q << "_p10," << q << "_median," << q
            << "_p90";
    }
    for (const char* f : flags) out << ",pass_" << f;
    out << '\n';
    for (const auto& s : summaries) {
        out << s.cell.index << ',' << s.cell.n << ',' << format_double(s.cell.d) << ','
            << format_double(s.cell.c) << ',' << s.trials << ',' << s.connected << ','
            << format_double(s.connected_fraction) << ',' << s.sandwich_violations;
        for (const Quantiles* q : {&s.entropic_lb, &s.greedy_ub, &s.constructed_z}) {
            out << ',' << q->count;
            if (q->count == 0) {
                out << ",,,,";
            } else {
                out << ',' << format_double(q->mean) << ',' << format_double(q->p10) << ','
                    << format_double(q->median) << ',' << format_double(q->p90);
            }
        }
        for (const char* f : flags) {
            out << ',';
            for (const auto& [name, rate] : s.lemma_pass_rates) {
                if (name == f) out << format_double(rate);
            }
        }
        out << '\n';
    }
    if (!out) throw IoError("write_summary_csv: stream failure");
}

json to_json(const TrialRecord& rec) {
    json j = json::object();
    for (const auto& c : columns()) j[c.name] = c.to_json(rec);
    return j;
}

namespace {

json quantiles_json(const Quantiles& q) {
    if (q.count == 0) return json{{"count", 0}};
    return {{"count", q.count}, {"mean", q.mean}, {"p10", q.p10}, {"median", q.median}, {"p90", q.p90}};
}

}  // namespace

json to_json(const CellSummary& s) {
    json rates = json::object();
    for (const auto& [name, rate] : s.lemma_pass_rates) rates[name] = rate;
    return {{"cell", s.cell.index},
            {"n", s.cell.n},
            {"d", s.cell.d},
            {"c", s.cell.c},
            {"trials", s.trials},
            {"connected", s.connected},
            {"connected_fraction", s.connected_fraction},
            {"sandwich_violations", s.sandwich_violations},
            {"entropic_lb", quantiles_json(s.entropic_lb)},
            {"greedy_ub", quantiles_json(s.greedy_ub)},
            {"constructed_z", quantiles_json(s.constructed_z)},
            {"lemma_pass_rates", rates}};
}

json to_json(const RegimeParams& r) {
    return {{"n", r.n},
            {"d", r.d},
            {"c", r.c},
            {"t_star", r.t_star},
            {"gamma", r.gamma},
            {"alpha", r.alpha},
            {"beta", r.beta},
            {"case_label", to_string(r.case_label)},
            {"gamma_threshold", r.gamma_threshold}};
}

json to_json(const BoundReport& b) {
    json j = {{"case1_lb", json_value(b.case1_lb)},
              {"case1_ub", json_value(b.case1_ub)},
              {"case2_lb", json_value(b.case2_lb)},
              {"case2_ub", json_value(b.case2_ub)},
              {"q", b.q},
              {"entropy_maximizer", b.entropy_maximizer},
              {"max_entropy", b.max_entropy},
              {"khuller_lb", json_value(b.khuller_lb)},
              {"simple_diam_lb", json_value(b.simple_diam_lb)},
              {"warnings", b.warnings}};
    return j;
}

json to_json(const EntropyCertificate& cert, bool verbose) {
    json j = {{"n", cert.n},
              {"h_max", cert.h_max},
              {"argmax_vertex", cert.argmax},
              {"raw_bound", cert.raw_bound},
              {"lower_bound", cert.lower_bound},
              {"ceil_slack", kCeilSlack}};
    if (verbose) j["per_vertex_entropy"] = cert.per_vertex_entropy;
    return j;
}

json to_json(const SigmaEstimate& s) {
    return {{"sigma", s.sigma},
            {"sigma_exact", s.exact},
            {"pairs_examined", s.pairs_examined},
            {"argmin_pair", {s.argmin_u, s.argmin_v}}};
}

json to_json(const SeparatorCertificate& cert) {
    return {{"sigma", cert.sigma_used},
            {"sigma_exact", cert.sigma_exact},
            {"Z", cert.z},
            {"landmarks", cert.landmarks},
            {"distinct_count", cert.distinct_landmarks.size()},
            {"verified", cert.verified},
            {"trials_used", cert.trials_used}};
}

json to_json(const ExactResult& res) {
    return {{"md", res.md},
            {"witness", res.witness},
            {"start_k", res.start_k},
            {"greedy_size", res.greedy_size},
            {"forced", res.forced},
            {"nodes", res.nodes}};
}

json to_json(const LemmaWindows& w) {
    return {{"shell_ratio_lo", w.shell_ratio_lo}, {"shell_ratio_hi", w.shell_ratio_hi},
            {"fraction_slack", w.fraction_slack}, {"degree_lo", w.degree_lo},
            {"degree_hi", w.degree_hi},           {"pass_fraction", w.pass_fraction},
            {"k23_factor", w.k23_factor},         {"delta_pairs", w.delta_pairs}};
}

json to_json(const LemmaReport& rep) {
    TrialRecord carrier;
    carrier.lemmas = rep.raw;
    carrier.flags = rep.flags;
    json raw = json::object();
    json flags = json::object();
    for (const auto& c : columns()) {
        if (!c.lemma) continue;
        const json v = c.to_json(carrier);
        if (c.name.rfind("flag_", 0) == 0) {
            flags[c.name.substr(5)] = v;
        } else {
            raw[c.name] = v;
        }
    }
    return {{"raw", raw}, {"flags", flags}};
}

void write_json(std::ostream& out, const std::vector<TrialRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(to_json(rec));
    out << arr.dump(2) << '\n';
    if (!out) throw IoError("write_json: stream failure");
}

void write_svg(std::ostream& out, const std::vector<TrialRecord>& records, const std::string& series) {
    const auto& cols = columns();
    const auto it = std::find_if(cols.begin(), cols.end(), [&](const Column& c) { return c.name == series; });
    if (it == cols.end()) throw ParameterError("write_svg: unknown series '" + series + "'");

    std::vector<std::pair<double, double>> points;
    for (const auto& rec : records) {
        const json y = it->to_json(rec);
        if (!rec.gamma || !std::isfinite(*rec.gamma) || !y.is_number()) continue;
        points.emplace_back(*rec.gamma, y.get<double>());
    }
    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double margin = 56.0;
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    if (!points.empty()) {
        x0 = x1 = points[0].first;
        y0 = y1 = points[0].second;
        for (const auto& [x, y] : points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
        if (x1 - x0 <= 0.0) x1 = x0 + 1.0;
        if (y1 - y0 <= 0.0) y1 = y0 + 1.0;
    }
    auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n"
        << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << width / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-size=\"14\">gamma [" << format_double(x0) << ", "
        << format_double(x1) << "]</text>\n"
        << "  <text x=\"16\" y=\"" << height / 2 << "\" font-size=\"14\" transform=\"rotate(-90 16 "
        << height / 2 << ")\" text-anchor=\"middle\">" << series << " [" << format_double(y0)
        << ", " << format_double(y1) << "]</text>\n"
        << "  <g fill=\"steelblue\" fill-opacity=\"0.7\">\n";
    for (const auto& [x, y] : points) {
        out << "    <circle cx=\"" << format_double(sx(x)) << "\" cy=\"" << format_double(sy(y))
            << "\" r=\"3\"/>\n";
    }
    out << "  </g>\n</svg>\n";
    if (!out) throw IoError("write_svg: stream failure");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg" || name == "svg-scatter") return OutputFormat::Svg;
    throw ParameterError("unknown output format '" + name + "'");
}

void emit(const std::vector<TrialRecord>& records, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    switch (format) {
        case OutputFormat::Csv: write_csv(out, records); break;
        case OutputFormat::Json: write_json(out, records); break;
        case OutputFormat::Svg: write_svg(out, records); break;
    }
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace mdim
