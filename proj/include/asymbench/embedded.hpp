#pragma once

#include <map>
#include <string>
#include <vector>

#include "asymbench/core_data.hpp"

namespace asymbench::embedded {

inline constexpr int kNumGames = 26;
inline constexpr int kNumFullMethods = 9;  // Random, Human + 7 agents
inline constexpr int kNumSeedMethods = 6;
inline constexpr int kNumSeeds = 5;
inline constexpr int kNumBottleneckGames = 2;
inline constexpr int kNumBottleneckMethods = 6;

namespace detail {

struct GameMetaRow {
    const char* name;
    double random_score;
    double human_score;
    int num_actions;
    bool shooter;
};

extern const GameMetaRow kGameMeta[kNumGames];
extern const char* const kFullMethods[kNumFullMethods];
extern const double kFullScores[kNumFullMethods][kNumGames];
extern const char* const kSeedMethods[kNumSeedMethods];
extern const double kSeedHns[kNumSeedMethods][kNumGames * kNumSeeds];
extern const double kAveragedRaw[kNumGames];
extern const double kPartitionRefHns[kNumGames];
extern const char* const kBottleneckGames[kNumBottleneckGames];
extern const char* const kBottleneckMethods[kNumBottleneckMethods];
extern const double kBottleneckHns[kNumBottleneckGames][kNumBottleneckMethods];

}  // namespace detail

// Name of the four-baseline averaged agent in the `averaged` table.
inline constexpr const char* kAveragedMethod = "Averaged";

struct Reference {
    // Mean raw scores, 26 games x 9 methods, unseeded records.
    core::ScoreTable full;
    // Per-seed HNS, 6 methods x 26 games x 5 seeds.
    core::ScoreTable seeds;
    // Mean raw scores of the averaged four-baseline agent, one record per game.
    core::ScoreTable averaged;
    // Published per-game HNS of the averaged agent, rounded as printed.
    std::map<std::string, double> averaged_hns_rounded;
    // Published HNS on the visually bottlenecked tasks: game -> method -> HNS.
    std::map<std::string, std::map<std::string, double>> bottleneck_hns;
};

// Built once on first use; immutable afterwards.
const Reference& reference();

std::vector<std::string> game_order();         // canonical 26-game ordering
std::vector<std::string> method_order();       // all 9 columns
std::vector<std::string> agent_order();        // the 7 agent methods
std::vector<std::string> seed_method_order();  // the 6 methods with per-seed data

}  // namespace asymbench::embedded
