#include <doctest.h>

#include <string>
#include <vector>

#include "asymbench/aggregates.hpp"
#include "asymbench/errors.hpp"
#include "asymbench/report.hpp"

using namespace asymbench;

namespace {

std::vector<agg::AggregateReport> sample_reports() {
    agg::AggregateReport a;
    a.method = "JEDI";
    a.metrics = {{"mean", 1.5}, {"iqm", 0.5}};
    a.intervals["iqm"] = {0.4, 0.6, 0.95};
    agg::AggregateReport b;
    b.method = "IRIS";
    b.metrics = {{"mean", 1.0}, {"median", 0.25}};
    return {a, b};
}

size_t count_of(const std::string& text, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_CASE("csv rendering keeps metric columns in first-appearance order") {
    auto text = report::render_csv(sample_reports());
    CHECK(text.substr(0, text.find('\n')) ==
          "method,mean,iqm,iqm_low,iqm_high,iqm_level,median");
    CHECK(text.find("JEDI,1.5,0.5,0.4,0.6,0.95,") != std::string::npos);
    // the method without an interval leaves those cells empty
    CHECK(text.find("IRIS,1,,,,,0.25") != std::string::npos);
}

TEST_CASE("markdown rendering appends intervals in brackets") {
    auto text = report::render_md(sample_reports());
    CHECK(text.find("| method |") == 0);
    CHECK(text.find("| JEDI |") != std::string::npos);
    CHECK(text.find("0.5 [0.4, 0.6]") != std::string::npos);
    CHECK(text.find("|---|") != std::string::npos);
}

TEST_CASE("json rendering round trips") {
    auto reports = sample_reports();
    auto text = report::render_json(reports);
    auto back = report::parse_report_json(text);
    REQUIRE(back.size() == reports.size());
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].method == reports[i].method);
        REQUIRE(back[i].metrics.size() == reports[i].metrics.size());
        for (size_t m = 0; m < back[i].metrics.size(); ++m) {
            CHECK(back[i].metrics[m].first == reports[i].metrics[m].first);
            CHECK(back[i].metrics[m].second == reports[i].metrics[m].second);
        }
        REQUIRE(back[i].intervals.size() == reports[i].intervals.size());
        for (const auto& [name, iv] : reports[i].intervals) {
            CHECK(back[i].intervals.at(name).low == iv.low);
            CHECK(back[i].intervals.at(name).high == iv.high);
            CHECK(back[i].intervals.at(name).level == iv.level);
        }
    }
}

TEST_CASE("report json parser rejects malformed documents") {
    CHECK_THROWS_AS(report::parse_report_json("[{]"), ParseError);
    CHECK_THROWS_AS(report::parse_report_json("[{\"metrics\": {}}]"), ParseError);
    CHECK_THROWS_AS(report::parse_report_json("[{\"method\": \"X\"}]"), ParseError);
}

TEST_CASE("render dispatches on the format name") {
    auto reports = sample_reports();
    CHECK(report::render(reports, "md") == report::render_md(reports));
    CHECK(report::render(reports, "csv") == report::render_csv(reports));
    CHECK(report::render(reports, "json") == report::render_json(reports));
    CHECK(report::render(reports, "svg").find("<svg") == 0);
    CHECK_THROWS_AS(report::render(reports, "pdf"), DomainError);
    CHECK_THROWS_AS(report::render({}, "md"), DomainError);
    CHECK_THROWS_AS(report::render({}, "csv"), DomainError);
    CHECK_THROWS_AS(report::render({}, "json"), DomainError);
}

TEST_CASE("bar chart contains a bar per present metric and a fixed viewport") {
    auto reports = sample_reports();
    auto svg = report::render_svg_bars(reports, {"mean", "iqm", "median"}, "title text");
    CHECK(svg.find("width=\"800\" height=\"500\"") != std::string::npos);
    CHECK(svg.find("title text") != std::string::npos);
    // background rect + 4 bars (JEDI lacks median, IRIS lacks iqm) + 3 legend swatches
    CHECK(count_of(svg, "<rect ") == 1u + 4u + 3u);
    CHECK(count_of(svg, "#4c72b0") == 2u + 1u);  // mean bars twice, legend once
    CHECK(svg.find("JEDI") != std::string::npos);
    CHECK(svg.find("IRIS") != std::string::npos);
    // 6 y-axis tick labels
    CHECK(count_of(svg, "text-anchor=\"end\"") == 6u);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    // deterministic output
    CHECK(report::render_svg_bars(reports, {"mean", "iqm", "median"}, "title text") == svg);
    CHECK_THROWS_AS(report::render_svg_bars(reports, {}, "t"), DomainError);
    CHECK_THROWS_AS(report::render_svg_bars({}, {"mean"}, "t"), DomainError);
}

TEST_CASE("profile chart anchors every polyline at full height on the left edge") {
    report::ProfileSeries s1{"A", {{0.0, 1.0}, {1.0, 0.5}, {2.0, 0.25}, {4.0, 0.0}}};
    report::ProfileSeries s2{"B", {{0.0, 0.9}, {1.0, 0.4}, {2.0, 0.2}, {4.0, 0.0}}};
    auto svg = report::render_svg_profile({s1, s2}, "profiles");
    CHECK(count_of(svg, "<polyline") == 2u);

    // each polyline has 1 anchor + 4 grid vertices
    size_t pos = 0;
    std::string first_pair;
    while ((pos = svg.find("points=\"", pos)) != std::string::npos) {
        pos += 8;
        const size_t end = svg.find('"', pos);
        const std::string pts = svg.substr(pos, end - pos);
        CHECK(count_of(pts, ",") == 5u);
        const std::string anchor = pts.substr(0, pts.find(' '));
        if (first_pair.empty())
            first_pair = anchor;
        else
            CHECK(anchor == first_pair);  // shared anchor across series
        pos = end;
    }
    CHECK(first_pair == "60.00,40.00");  // left edge of the plot area at height 1.0

    CHECK_THROWS_AS(report::render_svg_profile({}, "t"), DomainError);
    report::ProfileSeries empty{"E", {}};
    CHECK_THROWS_AS(report::render_svg_profile({empty}, "t"), DomainError);
}
