#pragma once

#include <map>
#include <string>
#include <vector>

#include "asymbench/core_data.hpp"

namespace asymbench::part {

enum class Label { AgentOptimal, HumanOptimal };

inline constexpr double kDefaultThreshold = 0.75;

struct PartitionMap {
    std::map<std::string, Label> labels;
    double threshold = kDefaultThreshold;
    std::vector<std::string> reference_methods;
};

// The four baselines whose averaged HNS defines the reference split.
const std::vector<std::string>& default_reference_methods();

// Per-game arithmetic mean of the given methods' HNS (per-game means first
// when the table is seed-level).
std::map<std::string, double> averaged_reference(const core::ScoreTable& table,
                                                 const std::vector<std::string>& methods);

// AgentOptimal iff reference HNS > threshold, strict, on unrounded values;
// ties go HumanOptimal.
PartitionMap derive_partition(const std::map<std::string, double>& reference_hns,
                              double threshold = kDefaultThreshold);

struct FeatureSummary {
    int agent_count = 0;
    int human_count = 0;
    double agent_mean_actions = 0;
    double human_mean_actions = 0;
    int agent_shooters = 0;
    int human_shooters = 0;
};

FeatureSummary feature_summary(const PartitionMap& partition,
                               const std::map<std::string, core::GameMeta>& meta);

// {"threshold": x, "labels": {"Boxing": "AO", ...}}
std::string to_json(const PartitionMap& partition);

const char* label_name(Label label);  // "AO" / "HO"

}  // namespace asymbench::part
