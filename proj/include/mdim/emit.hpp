#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdim/entropy.hpp"
#include "mdim/exact.hpp"
#include "mdim/harness.hpp"
#include "mdim/separator.hpp"
#include "mdim/theory.hpp"

namespace mdim {

/// Column names of the trial CSV, in TrialRecord field order.
const std::vector<std::string>& csv_columns();

/// RFC 4180 style CSV, LF line endings, header first. Missing optional
/// values are empty cells. Doubles use shortest round-trip formatting.
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_csv(std::istream& in);

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries);

nlohmann::json to_json(const TrialRecord& rec);
nlohmann::json to_json(const CellSummary& s);
nlohmann::json to_json(const RegimeParams& r);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const EntropyCertificate& cert, bool verbose = false);
nlohmann::json to_json(const SigmaEstimate& s);
nlohmann::json to_json(const SeparatorCertificate& cert);
nlohmann::json to_json(const ExactResult& res);
nlohmann::json to_json(const LemmaReport& rep);
nlohmann::json to_json(const LemmaWindows& w);

/// One JSON array of records (UTF-8, two-space indent).
void write_json(std::ostream& out, const std::vector<TrialRecord>& records);

/// SVG 1.1 scatter of gamma against `series` (a numeric CSV column), one
/// <circle> per record carrying both values.
void write_svg(std::ostream& out, const std::vector<TrialRecord>& records,
               const std::string& series = "entropic_lb");

enum class OutputFormat { Csv, Json, Svg };
OutputFormat parse_format(const std::string& name);

/// Writes records to `path` in `format`; throws IoError if the file cannot
/// be written.
void emit(const std::vector<TrialRecord>& records, OutputFormat format, const std::string& path);

}  // namespace mdim
