#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "asymbench/analysis.hpp"
#include "asymbench/embedded.hpp"
#include "asymbench/errors.hpp"
#include "asymbench/normalization.hpp"
#include "asymbench/partition.hpp"

using namespace asymbench;

namespace {

const std::vector<std::string> kPixel{"IRIS", "DIAMOND"};
const std::vector<std::string> kOthers{"TWM", "DreamerV3", "STORM"};

part::PartitionMap reference_partition() {
    return part::derive_partition(
        norm::per_game_mean(embedded::reference().averaged, embedded::kAveragedMethod));
}

analysis::HnsByGameMethod full_grid() {
    std::vector<std::string> methods = kPixel;
    methods.insert(methods.end(), kOthers.begin(), kOthers.end());
    return analysis::hns_grid(embedded::reference().full, methods);
}

}  // namespace

TEST_CASE("hns_grid lays out per-game means by method") {
    auto grid = analysis::hns_grid(embedded::reference().full, {"JEDI", "DIAMOND"});
    REQUIRE(grid.size() == 26u);
    for (const auto& [game, row] : grid) CHECK(row.size() == 2u);
    CHECK(grid.at("Breakout").at("JEDI") == doctest::Approx(5.34375).epsilon(1e-12));
    CHECK(grid.at("Pong").at("DIAMOND") == doctest::Approx(1.1643).epsilon(1e-3));
    CHECK_THROWS_AS(analysis::hns_grid(embedded::reference().full, {"Nope"}), DomainError);
}

TEST_CASE("visual bottleneck flags games where every pixel method doubles the best non-pixel") {
    auto flagged = analysis::visual_bottleneck(full_grid(), kPixel, kOthers, 2.0);
    CHECK(flagged == std::vector<std::string>{"Assault", "Breakout"});
    CHECK(std::find(flagged.begin(), flagged.end(), "Pong") == flagged.end());
}

TEST_CASE("visual bottleneck agrees with the published per-game values") {
    const auto& published = embedded::reference().bottleneck_hns;
    analysis::HnsByGameMethod grid;
    for (const auto& [game, row] : published) grid[game] = row;
    auto flagged = analysis::visual_bottleneck(grid, kPixel, kOthers, 2.0);
    CHECK(flagged == std::vector<std::string>{"Assault", "Breakout"});
    // the margin is wide: the weakest pixel method still doubles the best rest
    CHECK(published.at("Breakout").at("IRIS") == doctest::Approx(2.85).epsilon(1e-6));
    CHECK(published.at("Assault").at("IRIS") == doctest::Approx(2.51).epsilon(1e-6));
}

TEST_CASE("visual bottleneck demands every pixel method clear the bar") {
    analysis::HnsByGameMethod grid;
    grid["G"]["P1"] = 10.0;
    grid["G"]["P2"] = 1.0;  // P2 fails the bar
    grid["G"]["O"] = 1.0;
    CHECK(analysis::visual_bottleneck(grid, {"P1", "P2"}, {"O"}, 2.0).empty());
    CHECK(analysis::visual_bottleneck(grid, {"P1"}, {"O"}, 2.0) ==
          std::vector<std::string>{"G"});
}

TEST_CASE("raising the ratio can only drop flagged games") {
    auto grid = full_grid();
    std::vector<std::string> prev = analysis::visual_bottleneck(grid, kPixel, kOthers, 1.0);
    for (double ratio : {1.5, 2.0, 3.0, 5.0, 50.0}) {
        auto cur = analysis::visual_bottleneck(grid, kPixel, kOthers, ratio);
        for (const auto& g : cur) CHECK(std::find(prev.begin(), prev.end(), g) != prev.end());
        prev = cur;
    }
    CHECK(analysis::visual_bottleneck(grid, kPixel, kOthers, 1e9).empty());
}

TEST_CASE("visual bottleneck validates its inputs") {
    auto grid = full_grid();
    CHECK_THROWS_AS(analysis::visual_bottleneck(grid, {}, kOthers, 2.0), DomainError);
    CHECK_THROWS_AS(analysis::visual_bottleneck(grid, kPixel, {}, 2.0), DomainError);
    CHECK_THROWS_AS(analysis::visual_bottleneck(grid, {"Nope"}, kOthers, 2.0), DomainError);
    CHECK_THROWS_AS(analysis::visual_bottleneck(grid, kPixel, kOthers, 0.0), DomainError);
}

TEST_CASE("subset comparison by partition reproduces the reference asymmetry") {
    auto partition = reference_partition();
    auto by_game = norm::per_game_mean(embedded::reference().full, "DIAMOND");
    auto groups =
        analysis::subset_comparison(by_game, analysis::Grouping::ByPartition, &partition);
    REQUIRE(groups.size() == 2u);
    const auto& ao = groups[0].name == "AO" ? groups[0] : groups[1];
    const auto& ho = groups[0].name == "AO" ? groups[1] : groups[0];
    CHECK(ao.count == 13);
    CHECK(ho.count == 13);
    CHECK(ao.mean == doctest::Approx(2.791307).epsilon(1e-5));
    CHECK(ho.mean == doctest::Approx(0.126833).epsilon(1e-5));
}

TEST_CASE("subset comparison by shooter flag") {
    auto by_game = norm::per_game_mean(embedded::reference().full, "JEDI");
    auto groups = analysis::subset_comparison(by_game, analysis::Grouping::ByShooter, nullptr,
                                              &embedded::reference().full.meta);
    REQUIRE(groups.size() == 2u);
    int total = 0;
    for (const auto& g : groups) total += g.count;
    CHECK(total == 26);
    for (const auto& g : groups) {
        if (g.name == "shooter") CHECK(g.count == 9);
        if (g.name == "non-shooter") CHECK(g.count == 17);
    }
}

TEST_CASE("subset comparison by action-set size") {
    auto by_game = norm::per_game_mean(embedded::reference().full, "JEDI");
    const auto& meta = embedded::reference().full.meta;
    auto groups = analysis::subset_comparison(by_game, analysis::Grouping::ByActionSplit, nullptr,
                                              &meta, 10);
    REQUIRE(groups.size() == 2u);
    int small = 0;
    for (const auto& [game, m] : meta)
        if (m.num_actions <= 10) ++small;
    for (const auto& g : groups) {
        if (g.name.find(">") != std::string::npos)
            CHECK(g.count == 26 - small);
        else
            CHECK(g.count == small);
    }
}

TEST_CASE("group means recombine to the overall mean") {
    auto partition = reference_partition();
    const auto& meta = embedded::reference().full.meta;
    for (const char* method : {"JEDI", "DIAMOND", "IRIS"}) {
        auto by_game = norm::per_game_mean(embedded::reference().full, method);
        double overall = 0;
        for (const auto& [g, v] : by_game) overall += v;
        overall /= static_cast<double>(by_game.size());
        for (auto grouping : {analysis::Grouping::ByPartition, analysis::Grouping::ByShooter,
                              analysis::Grouping::ByActionSplit}) {
            auto groups = analysis::subset_comparison(by_game, grouping, &partition, &meta);
            double weighted = 0;
            int n = 0;
            for (const auto& g : groups) {
                weighted += g.mean * g.count;
                n += g.count;
            }
            CHECK(n == 26);
            CHECK(weighted / n == doctest::Approx(overall).epsilon(1e-12));
        }
    }
}

TEST_CASE("grouping on identical values yields identical means") {
    std::map<std::string, double> flat;
    for (const auto& g : embedded::game_order()) flat[g] = 0.8;
    auto partition = reference_partition();
    auto groups = analysis::subset_comparison(flat, analysis::Grouping::ByPartition, &partition);
    for (const auto& g : groups) CHECK(g.mean == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("subset comparison needs the matching auxiliary input") {
    std::map<std::string, double> by_game{{"Boxing", 1.0}};
    CHECK_THROWS_AS(analysis::subset_comparison(by_game, analysis::Grouping::ByPartition, nullptr),
                    DomainError);
    CHECK_THROWS_AS(
        analysis::subset_comparison(by_game, analysis::Grouping::ByShooter, nullptr, nullptr),
        DomainError);
}

TEST_CASE("asymmetry ratio on the reference methods") {
    auto partition = reference_partition();
    auto ratio = [&](const char* m) {
        return analysis::asymmetry_ratio(norm::per_game_mean(embedded::reference().full, m),
                                         partition);
    };
    CHECK(ratio("DIAMOND") == doctest::Approx(22.0077).epsilon(1e-4));
    CHECK(ratio("JEDI") == doctest::Approx(8.1589).epsilon(1e-4));
    CHECK(ratio("IRIS") == doctest::Approx(11.9184).epsilon(1e-4));
    CHECK(ratio("JEDI") < ratio("IRIS"));
    CHECK(ratio("IRIS") < ratio("DIAMOND"));
}

TEST_CASE("asymmetry ratio is scale invariant and 1 on balanced data") {
    part::PartitionMap p;
    p.labels = {{"A", part::Label::AgentOptimal}, {"B", part::Label::HumanOptimal}};
    std::map<std::string, double> hns{{"A", 0.7}, {"B", 0.7}};
    CHECK(analysis::asymmetry_ratio(hns, p) == doctest::Approx(1.0).epsilon(1e-12));

    auto partition = reference_partition();
    auto by_game = norm::per_game_mean(embedded::reference().full, "JEDI");
    double base = analysis::asymmetry_ratio(by_game, partition);
    std::map<std::string, double> scaled;
    for (const auto& [g, v] : by_game) scaled[g] = 37.0 * v;
    CHECK(analysis::asymmetry_ratio(scaled, partition) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("asymmetry ratio refuses a non-positive denominator") {
    part::PartitionMap p;
    p.labels = {{"A", part::Label::AgentOptimal}, {"B", part::Label::HumanOptimal}};
    std::map<std::string, double> hns{{"A", 0.7}, {"B", -0.1}};
    CHECK_THROWS_AS(analysis::asymmetry_ratio(hns, p), DomainError);
}
