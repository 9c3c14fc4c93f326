#pragma once

#include <map>
#include <string>
#include <vector>

#include "asymbench/core_data.hpp"
#include "asymbench/partition.hpp"

namespace asymbench::analysis {

// game -> method -> per-game mean HNS
using HnsByGameMethod = std::map<std::string, std::map<std::string, double>>;

// Builds the grid above from a raw or HNS table for the given methods.
HnsByGameMethod hns_grid(const core::ScoreTable& table, const std::vector<std::string>& methods);

// Games where min over pixel_methods of HNS > ratio * max over other_methods.
// Every pixel method must individually clear the bar. ratio 2 encodes
// "outperforms by more than 100%". Returns games sorted by name.
std::vector<std::string> visual_bottleneck(const HnsByGameMethod& hns,
                                           const std::vector<std::string>& pixel_methods,
                                           const std::vector<std::string>& other_methods,
                                           double ratio = 2.0);

enum class Grouping { ByPartition, ByShooter, ByActionSplit };

struct GroupMean {
    std::string name;
    double mean = 0;
    int count = 0;
};

// Arithmetic mean HNS per group. ByPartition needs `partition`; ByShooter and
// ByActionSplit need `meta`. Action split: num_actions > threshold vs <=.
std::vector<GroupMean> subset_comparison(const std::map<std::string, double>& hns_by_game,
                                         Grouping grouping,
                                         const part::PartitionMap* partition = nullptr,
                                         const std::map<std::string, core::GameMeta>* meta = nullptr,
                                         int action_threshold = 10);

// mu(AgentOptimal) / mu(HumanOptimal) over per-game HNS means.
double asymmetry_ratio(const std::map<std::string, double>& hns_by_game,
                       const part::PartitionMap& partition);

}  // namespace asymbench::analysis
