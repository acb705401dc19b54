#pragma once

/// \file report.hpp
/// CSV and JSON renderings of sweep statistics and of single-function
/// analyses.
///
/// CSV: ',' separator, '.' decimal point, LF line endings, one header line.
/// Rationals render at a fixed number of places (default 3) rounding half to
/// even; standard errors are doubles rendered with 6 places.
///
/// JSON schema "bfforms.report" version 1. Every rational is an object
/// {"num": int, "den": int, "decimal": string}.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bfforms/analysis.hpp"
#include "bfforms/sweep.hpp"

namespace bfforms {

inline constexpr int kReportSchemaVersion = 1;

using Cell = std::variant<std::string, std::int64_t, Rational, double>;

struct ReportTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

std::string render_cell(const Cell& cell, unsigned precision);
std::string to_csv(const ReportTable& table, unsigned precision = 3);
/// Splits CSV produced by to_csv (quoted fields supported) into rows.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

nlohmann::json rational_json(const Rational& r, unsigned precision = 3);

/// Form rows x criterion columns, eta of the chosen variant.
ReportTable rei_table(const SweepData& data, ReiVariant variant);
ReportTable rei_stderr_table(const SweepData& data);
/// Label rows x criterion columns of specific weights.
ReportTable weights_table(const SweepData& data);
ReportTable weights_stderr_table(const SweepData& data);
/// Long format (criterion, label, count, weight, percent) for plotting.
ReportTable figure_weights_table(const SweepData& data);
ReportTable loss_table(const SweepData& data);
ReportTable records_table(const SweepData& data);
/// Observed values next to reference values for the same n, with
/// differences. Empty body when no reference exists for n.
ReportTable reference_table(const SweepData& data);

nlohmann::json report_json(const SweepData& data, unsigned precision = 3);

/// File name -> content for every report file of a sweep.
std::map<std::string, std::string> render_reports(const SweepData& data, unsigned precision = 3);
void write_reports(const std::filesystem::path& dir, const SweepData& data, unsigned precision = 3);

enum class OutputFormat { Text, Json, Csv };
std::optional<OutputFormat> parse_output_format(const std::string& text);

/// Minimized forms, cost vectors and labels of one function, for the given
/// criterion or all five.
std::string render_analysis(const TruthTable& tt, std::optional<Criterion> criterion, OutputFormat format,
                            const MinimizerOptions& options = MinimizerOptions::from_environment());

}  // namespace bfforms
