#include "fssrank/chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

// Smallest of 1/2/5 * 10^k not below `value`, for a tidy axis maximum.
double nice_axis_max(double value) {
    if (!(value > 0.0)) return 1.0;
    const double exponent = std::floor(std::log10(value));
    const double base = std::pow(10.0, exponent);
    for (double step : {1.0, 2.0, 5.0, 10.0}) {
        if (value <= step * base + 1e-12) return step * base;
    }
    return 10.0 * base;
}

}  // namespace

std::string render_r_prime_chart_svg(const RunReport& report) {
    if (report.udas.empty()) {
        throw InvalidConfigError("chart needs a report with at least one UDA");
    }

    const double width = 720.0;
    const double height = 420.0;
    const double margin_left = 64.0;
    const double margin_right = 24.0;
    const double margin_top = 48.0;
    const double margin_bottom = 96.0;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;

    double max_value = 0.0;
    for (const auto& uda : report.udas) {
        max_value = std::max(max_value, uda.divergence.rprime.r_prime);
    }
    const double axis_max = nice_axis_max(max_value);

    const std::size_t n = report.udas.size();
    const double slot = plot_w / static_cast<double>(n);
    const double bar_w = slot * 0.6;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << width / 2.0 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">R' per UDA (%)</text>\n";

    // Axes and horizontal gridlines at 5 ticks.
    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        const double frac = static_cast<double>(i) / n_ticks;
        const double y = margin_top + plot_h * (1.0 - frac);
        const double tick_value = axis_max * frac;
        svg << "  <line x1=\"" << margin_left << "\" y1=\"" << y << "\" x2=\""
            << margin_left + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "  <text x=\"" << margin_left - 8.0 << "\" y=\"" << y + 4.0
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_fixed(tick_value, 1) << "</text>\n";
    }
    svg << "  <line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\"" << margin_left
        << "\" y2=\"" << margin_top + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_h << "\" x2=\""
        << margin_left + plot_w << "\" y2=\"" << margin_top + plot_h
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < n; ++i) {
        const auto& uda = report.udas[i];
        const double value = uda.divergence.rprime.r_prime;
        const double bar_h = axis_max > 0.0 ? plot_h * value / axis_max : 0.0;
        const double x = margin_left + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
        const double y = margin_top + plot_h - bar_h;
        svg << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w
            << "\" height=\"" << bar_h << "\" fill=\"#4878a8\"/>\n";
        svg << "  <text x=\"" << x + bar_w / 2.0 << "\" y=\"" << y - 6.0
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_fixed(value, 2) << "</text>\n";
        // Slanted category labels keep long UDA ids readable.
        const double lx = x + bar_w / 2.0;
        const double ly = margin_top + plot_h + 16.0;
        svg << "  <text x=\"" << lx << "\" y=\"" << ly
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
            << "transform=\"rotate(-35 " << lx << " " << ly << ")\">" << uda.uda_id
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string chart_companion_csv(const RunReport& report) {
    std::ostringstream out;
    out << "uda_id,r_prime\n";
    for (const auto& uda : report.udas) {
        out << uda.uda_id << ',' << format_fixed(uda.divergence.rprime.r_prime, 2) << '\n';
    }
    return out.str();
}

std::string chart_csv_path_for(const std::string& svg_path) {
    const std::size_t dot = svg_path.find_last_of('.');
    const std::size_t slash = svg_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return svg_path + ".csv";
    }
    return svg_path.substr(0, dot) + ".csv";
}

void emit_chart(const RunReport& report, const std::string& svg_path) {
    const std::string svg = render_r_prime_chart_svg(report);
    const std::string csv = chart_companion_csv(report);

    std::ofstream svg_out(svg_path, std::ios::binary);
    if (!svg_out) throw IoError("cannot open '" + svg_path + "' for writing");
    svg_out << svg;
    svg_out.close();
    if (!svg_out) throw IoError("failed writing '" + svg_path + "'");

    const std::string csv_path = chart_csv_path_for(svg_path);
    std::ofstream csv_out(csv_path, std::ios::binary);
    if (!csv_out) throw IoError("cannot open '" + csv_path + "' for writing");
    csv_out << csv;
    csv_out.close();
    if (!csv_out) throw IoError("failed writing '" + csv_path + "'");
}

}  // namespace fssrank
