#pragma once

#include <string>

#include "fssrank/pipeline.hpp"

// Report emission. The text format mirrors the per-UDA ranking tables and
// the cross-UDA summary table; csv carries the same rows machine-readably;
// json is the full versioned export. Rendering never recomputes: every
// printed number is a formatting of a RunReport field, so identical reports
// render to identical bytes.

namespace fssrank {

enum class ReportFormat : unsigned char { text, csv, json };

// Accepts "text", "csv", "json"; throws UnsupportedFormatError otherwise.
ReportFormat report_format_from_string(const std::string& name);

std::string render_report(const RunReport& report, ReportFormat format);

// Round-trips of the json export (used by the report/chart subcommands).
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& json_text);

std::string render_ranks_compare(const RanksCompareInput& input, const UdaDivergence& divergence,
                                 ReportFormat format);

}  // namespace fssrank
