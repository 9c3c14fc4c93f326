#include "asymbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "asymbench/errors.hpp"
#include "asymbench/numio.hpp"

namespace asymbench::report {

namespace {

using ordered_json = nlohmann::ordered_json;

// Column order: metric names in first-appearance order across reports.
std::vector<std::string> metric_columns(const std::vector<agg::AggregateReport>& reports) {
    std::vector<std::string> cols;
    for (const auto& rep : reports)
        for (const auto& [name, value] : rep.metrics)
            if (std::find(cols.begin(), cols.end(), name) == cols.end()) cols.push_back(name);
    return cols;
}

bool any_interval(const std::vector<agg::AggregateReport>& reports, const std::string& name) {
    for (const auto& rep : reports)
        if (rep.intervals.count(name)) return true;
    return false;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char* kPalette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                          "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
constexpr int kPaletteSize = 8;

constexpr double kWidth = 800, kHeight = 500, kMargin = 10;

struct PlotArea {
    double x0, y0, x1, y1;  // y0 = top edge, y1 = bottom edge
    double x(double t) const { return x0 + t * (x1 - x0); }  // t in [0,1]
    double y(double t) const { return y1 - t * (y1 - y0); }
};

std::string svg_open(const std::string& title) {
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
                      "viewBox=\"0 0 800 500\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"" + fixed2(kMargin + 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" + title +
           "</text>\n";
    return svg;
}

void draw_axes(std::string& svg, const PlotArea& p) {
    svg += "<line x1=\"" + fixed2(p.x0) + "\" y1=\"" + fixed2(p.y1) + "\" x2=\"" + fixed2(p.x1) +
           "\" y2=\"" + fixed2(p.y1) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fixed2(p.x0) + "\" y1=\"" + fixed2(p.y0) + "\" x2=\"" + fixed2(p.x0) +
           "\" y2=\"" + fixed2(p.y1) + "\" stroke=\"black\"/>\n";
}

void draw_y_ticks(std::string& svg, const PlotArea& p, double lo, double hi, int count) {
    for (int i = 0; i <= count; ++i) {
        const double frac = static_cast<double>(i) / count;
        const double value = lo + frac * (hi - lo);
        const double y = p.y(frac);
        svg += "<line x1=\"" + fixed2(p.x0 - 4) + "\" y1=\"" + fixed2(y) + "\" x2=\"" +
               fixed2(p.x0) + "\" y2=\"" + fixed2(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fixed2(p.x0 - 7) + "\" y=\"" + fixed2(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(value) + "</text>\n";
    }
}

void draw_legend(std::string& svg, const std::vector<std::string>& names, double x, double y) {
    for (size_t i = 0; i < names.size(); ++i) {
        const double row_y = y + 16.0 * static_cast<double>(i);
        svg += "<rect x=\"" + fixed2(x) + "\" y=\"" + fixed2(row_y) +
               "\" width=\"10\" height=\"10\" fill=\"" +
               kPalette[i % kPaletteSize] + "\"/>\n";
        svg += "<text x=\"" + fixed2(x + 14) + "\" y=\"" + fixed2(row_y + 9) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + names[i] + "</text>\n";
    }
}

}  // namespace

std::string render_csv(const std::vector<agg::AggregateReport>& reports) {
    if (reports.empty()) throw DomainError("render: empty report list");
    const auto cols = metric_columns(reports);
    std::string out = "method";
    for (const auto& col : cols) {
        out += "," + col;
        if (any_interval(reports, col))
            out += "," + col + "_low," + col + "_high," + col + "_level";
    }
    out += "\n";
    for (const auto& rep : reports) {
        out += rep.method;
        for (const auto& col : cols) {
            const double* v = rep.find(col);
            out += ",";
            if (v) out += numio::format_double(*v);
            if (any_interval(reports, col)) {
                auto it = rep.intervals.find(col);
                if (it != rep.intervals.end())
                    out += "," + numio::format_double(it->second.low) + "," +
                           numio::format_double(it->second.high) + "," +
                           numio::format_double(it->second.level);
                else
                    out += ",,,";
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_md(const std::vector<agg::AggregateReport>& reports) {
    if (reports.empty()) throw DomainError("render: empty report list");
    const auto cols = metric_columns(reports);
    std::string out = "| method |";
    for (const auto& col : cols) out += " " + col + " |";
    out += "\n|---|";
    for (size_t i = 0; i < cols.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& rep : reports) {
        out += "| " + rep.method + " |";
        for (const auto& col : cols) {
            const double* v = rep.find(col);
            out += " ";
            if (v) {
                out += numio::format_double(*v);
                auto it = rep.intervals.find(col);
                if (it != rep.intervals.end())
                    out += " [" + numio::format_double(it->second.low) + ", " +
                           numio::format_double(it->second.high) + "]";
            }
            out += " |";
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const std::vector<agg::AggregateReport>& reports) {
    if (reports.empty()) throw DomainError("render: empty report list");
    ordered_json doc = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json j;
        j["method"] = rep.method;
        j["metrics"] = ordered_json::object();
        for (const auto& [name, value] : rep.metrics) j["metrics"][name] = value;
        if (!rep.intervals.empty()) {
            j["intervals"] = ordered_json::object();
            for (const auto& [name, iv] : rep.intervals) {
                j["intervals"][name] = {{"low", iv.low}, {"high", iv.high}, {"level", iv.level}};
            }
        }
        doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::vector<agg::AggregateReport> parse_report_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    std::vector<agg::AggregateReport> out;
    try {
        for (const auto& j : doc) {
            agg::AggregateReport rep;
            rep.method = j.at("method").get<std::string>();
            for (const auto& [name, value] : j.at("metrics").items())
                rep.metrics.emplace_back(name, value.get<double>());
            if (j.contains("intervals"))
                for (const auto& [name, iv] : j.at("intervals").items())
                    rep.intervals[name] = {iv.at("low").get<double>(), iv.at("high").get<double>(),
                                           iv.at("level").get<double>()};
            out.push_back(std::move(rep));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    return out;
}

std::string render_svg_bars(const std::vector<agg::AggregateReport>& reports,
                            const std::vector<std::string>& metrics, const std::string& title) {
    if (reports.empty()) throw DomainError("render: empty report list");
    if (metrics.empty()) throw DomainError("render_svg_bars: no metrics selected");
    const PlotArea p{kMargin + 50, kMargin + 30, kWidth - kMargin, kHeight - kMargin - 30};

    double lo = 0, hi = 0;
    for (const auto& rep : reports)
        for (const auto& m : metrics)
            if (const double* v = rep.find(m)) {
                lo = std::min(lo, *v);
                hi = std::max(hi, *v);
            }
    if (hi == lo) hi = lo + 1;

    std::string svg = svg_open(title);
    draw_axes(svg, p);
    draw_y_ticks(svg, p, lo, hi, 5);

    auto y_of = [&](double v) { return p.y((v - lo) / (hi - lo)); };
    const double group_w = (p.x1 - p.x0) / static_cast<double>(reports.size());
    const double bar_w = group_w * 0.8 / static_cast<double>(metrics.size());
    for (size_t r = 0; r < reports.size(); ++r) {
        const double group_x = p.x0 + group_w * static_cast<double>(r) + group_w * 0.1;
        for (size_t m = 0; m < metrics.size(); ++m) {
            const double* v = reports[r].find(metrics[m]);
            if (!v) continue;
            const double y_val = y_of(*v);
            const double y_zero = y_of(0.0);
            svg += "<rect x=\"" + fixed2(group_x + bar_w * static_cast<double>(m)) + "\" y=\"" +
                   fixed2(std::min(y_val, y_zero)) + "\" width=\"" + fixed2(bar_w) +
                   "\" height=\"" + fixed2(std::abs(y_zero - y_val)) + "\" fill=\"" +
                   kPalette[m % kPaletteSize] + "\"/>\n";
        }
        svg += "<text x=\"" + fixed2(group_x + group_w * 0.4) + "\" y=\"" + fixed2(p.y1 + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               reports[r].method + "</text>\n";
    }
    draw_legend(svg, metrics, p.x1 - 120, p.y0 + 6);
    svg += "</svg>\n";
    return svg;
}

std::string render_svg_profile(const std::vector<ProfileSeries>& series, const std::string& title) {
    if (series.empty()) throw DomainError("render_svg_profile: no series");
    for (const auto& s : series)
        if (s.points.empty()) throw DomainError("render_svg_profile: empty series " + s.name);

    double tau_lo = series[0].points.front().first, tau_hi = tau_lo;
    for (const auto& s : series)
        for (const auto& [tau, frac] : s.points) {
            tau_lo = std::min(tau_lo, tau);
            tau_hi = std::max(tau_hi, tau);
        }
    if (tau_hi == tau_lo) tau_hi = tau_lo + 1;

    const PlotArea p{kMargin + 50, kMargin + 30, kWidth - kMargin, kHeight - kMargin - 30};
    std::string svg = svg_open(title);
    draw_axes(svg, p);
    draw_y_ticks(svg, p, 0.0, 1.0, 4);
    for (int i = 0; i <= 5; ++i) {
        const double frac = i / 5.0;
        const double x = p.x(frac);
        svg += "<line x1=\"" + fixed2(x) + "\" y1=\"" + fixed2(p.y1) + "\" x2=\"" + fixed2(x) +
               "\" y2=\"" + fixed2(p.y1 + 4) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(p.y1 + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(tau_lo + frac * (tau_hi - tau_lo)) + "</text>\n";
    }

    std::vector<std::string> names;
    for (size_t s = 0; s < series.size(); ++s) {
        names.push_back(series[s].name);
        // Anchor at the left edge at full height, then one vertex per grid tau.
        std::string pts = fixed2(p.x0) + "," + fixed2(p.y(1.0));
        for (const auto& [tau, frac] : series[s].points)
            pts += " " + fixed2(p.x((tau - tau_lo) / (tau_hi - tau_lo))) + "," + fixed2(p.y(frac));
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
               kPalette[s % kPaletteSize] + "\" stroke-width=\"1.5\"/>\n";
    }
    draw_legend(svg, names, p.x1 - 120, p.y0 + 6);
    svg += "</svg>\n";
    return svg;
}

std::string render(const std::vector<agg::AggregateReport>& reports, const std::string& format) {
    if (format == "md") return render_md(reports);
    if (format == "csv") return render_csv(reports);
    if (format == "json") return render_json(reports);
    if (format == "svg") {
        std::vector<std::string> metrics;
        for (const auto& rep : reports)
            for (const auto& [name, value] : rep.metrics)
                if (std::find(metrics.begin(), metrics.end(), name) == metrics.end())
                    metrics.push_back(name);
        return render_svg_bars(reports, metrics, "aggregate metrics");
    }
    throw DomainError("unsupported format '" + format + "'");
}

}  // namespace asymbench::report
