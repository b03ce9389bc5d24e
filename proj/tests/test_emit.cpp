#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mdim/emit.hpp"
#include "mdim/errors.hpp"

using namespace mdim;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

std::string csv_text(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    write_csv(out, records);
    return out.str();
}

TrialRecord synthetic(std::size_t i) {
    TrialRecord r;
    r.cell = i / 3;
    r.trial = i % 3;
    r.n = 100 + i;
    r.d = 9.21034037197618 + 0.1 * static_cast<double>(i);
    r.c = r.d / std::log(static_cast<double>(r.n));
    r.seed = 0xfedcba9876543210ULL + i;
    r.connected = true;
    r.t_star = 1;
    r.gamma = 1.0 + 0.01 * static_cast<double>(i);
    r.entropic_lb = 3 + i % 4;
    r.entropic_raw = 2.000000001 + 1.0 / 3.0 * static_cast<double>(i % 4);
    r.case_label = "Case1";
    return r;
}

}  // namespace

TEST_CASE("one record gives header plus one line") {
    const auto text = csv_text({synthetic(0)});
    CHECK(count_of(text, "\n") == 2);
    CHECK(text.rfind("cell,trial,n,", 0) == 0);
    CHECK(text.back() == '\n');
    CHECK(count_of(text, "\r") == 0);
    CHECK(csv_text({}) == csv_text({}).substr(0, csv_text({}).find('\n') + 1));
    CHECK(count_of(csv_text({}), "\n") == 1);
}

TEST_CASE("missing optional values are empty cells") {
    auto rec = synthetic(1);
    rec.exact_md.reset();
    const auto text = csv_text({rec});
    const auto& cols = csv_columns();
    const auto idx = static_cast<std::size_t>(
        std::find(cols.begin(), cols.end(), "exact_md") - cols.begin());
    REQUIRE(idx < cols.size());
    std::istringstream in(text);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    std::vector<std::string> cells;
    std::stringstream ss(row);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!row.empty() && row.back() == ',') cells.emplace_back();
    REQUIRE(cells.size() == cols.size());
    CHECK(cells[idx].empty());

    rec.exact_md = 0;
    std::istringstream back(csv_text({rec}));
    CHECK(read_csv(back).at(0).exact_md == std::optional<std::size_t>{0});
}

TEST_CASE("csv round trip preserves every field") {
    std::vector<TrialRecord> records;
    for (std::size_t i = 0; i < 12; ++i) records.push_back(synthetic(i));
    records[2].error = "certify: weird, \"quoted\"\nmultiline";
    records[3].case2_lb = std::numeric_limits<double>::quiet_NaN();
    records[3].case2_ub = std::numeric_limits<double>::infinity();
    records[4].verified = false;
    records[4].sigma = 0.1 + 0.2;
    LemmaRaw raw;
    raw.shell_total = 10;
    raw.shell_ratio_min = 0.7123456789012345;
    raw.k23_expected = 0.5111;
    records[5].lemmas = raw;
    records[5].flags = LemmaFlags{true, true, false, true, false, true, true, false};

    const auto text = csv_text(records);
    std::istringstream in(text);
    const auto back = read_csv(in);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) CHECK(back[i] == records[i]);
    CHECK(csv_text(back) == text);

    std::istringstream bad("not,a,header\n");
    CHECK_THROWS_AS(read_csv(bad), ParameterError);
}

TEST_CASE("json output") {
    std::ostringstream out;
    write_json(out, {synthetic(0), synthetic(1)});
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["n"] == 100);
    CHECK(doc[0]["exact_md"].is_null());
    CHECK(doc[1]["case_label"] == "Case1");
}

TEST_CASE("svg scatter has one point per record") {
    std::vector<TrialRecord> records;
    for (std::size_t i = 0; i < 50; ++i) records.push_back(synthetic(i));
    std::ostringstream out;
    write_svg(out, records);
    const auto text = out.str();
    CHECK(count_of(text, "<circle") == 50);
    CHECK(count_of(text, "<svg") == 1);
    CHECK(count_of(text, "</svg>") == 1);
    CHECK(text.rfind("<?xml", 0) == 0);
    CHECK_THROWS_AS(write_svg(out, records, "no_such_column"), ParameterError);
}

TEST_CASE("format names and unwritable paths") {
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("svg-scatter") == OutputFormat::Svg);
    CHECK_THROWS_AS(parse_format("xlsx"), ParameterError);
    CHECK_THROWS_AS(emit({synthetic(0)}, OutputFormat::Csv, "/nonexistent-dir/x/out.csv"), IoError);

    const auto path = std::filesystem::temp_directory_path() / "mdim_emit_test.csv";
    emit({synthetic(0)}, OutputFormat::Csv, path.string());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv_text({synthetic(0)}));
    std::filesystem::remove(path);
}

TEST_CASE("single-instance json documents") {
    const auto r = compute_regime(1000, 10.0);
    const auto j = to_json(r);
    CHECK(j["t_star"] == 2);
    CHECK(j.contains("alpha"));
    const auto b = to_json(closed_form_bounds(r, 3));
    CHECK(b.contains("khuller_lb"));
    const auto cert = to_json(certify_md_lower_bound(named::complete(4)), true);
    CHECK(cert["lower_bound"] == 3);
    CHECK(cert["per_vertex_entropy"].size() == 4);
}

TEST_CASE("lemma report json carries only lemma fields") {
    LemmaReport rep;
    rep.raw.shell_total = 7;
    rep.flags.k23 = true;
    const auto j = to_json(rep);
    CHECK(j["raw"]["shell_total"] == 7);
    CHECK(j["flags"]["k23"] == true);
    CHECK_FALSE(j["raw"].contains("n"));
    CHECK_FALSE(j["raw"].contains("seed"));
}
