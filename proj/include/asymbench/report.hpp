#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asymbench/aggregates.hpp"

namespace asymbench::report {

// Lossless renderings of a report list.
std::string render_md(const std::vector<agg::AggregateReport>& reports);
std::string render_csv(const std::vector<agg::AggregateReport>& reports);
std::string render_json(const std::vector<agg::AggregateReport>& reports);
std::vector<agg::AggregateReport> parse_report_json(std::string_view text);

// Grouped bar chart: one group per method, one bar per metric. Fixed 800x500
// viewport, numeric axis ticks, legend.
std::string render_svg_bars(const std::vector<agg::AggregateReport>& reports,
                            const std::vector<std::string>& metrics, const std::string& title);

struct ProfileSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (tau, fraction)
};

// Line chart; each polyline has one anchor point at the left edge at height
// 1.0 plus one point per grid tau.
std::string render_svg_profile(const std::vector<ProfileSeries>& series, const std::string& title);

// Dispatch on "md" | "csv" | "json" | "svg".
std::string render(const std::vector<agg::AggregateReport>& reports, const std::string& format);

}  // namespace asymbench::report
