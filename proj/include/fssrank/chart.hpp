#pragma once

#include <string>

#include "fssrank/pipeline.hpp"

namespace fssrank {

// One bar per UDA with its R' value (percent), y axis in %, values labeled
// above the bars. Returns the SVG document; the *_file variant also writes a
// companion CSV of (uda_id, r_prime) next to the chart.
std::string render_r_prime_chart_svg(const RunReport& report);

// Writes `svg_path` and a companion CSV at `svg_path` with its extension
// replaced by ".csv" (appended when there is no extension). Throws IoError.
void emit_chart(const RunReport& report, const std::string& svg_path);

std::string chart_companion_csv(const RunReport& report);
std::string chart_csv_path_for(const std::string& svg_path);

}  // namespace fssrank
