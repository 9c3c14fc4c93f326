#pragma once

#include <map>
#include <string>
#include <vector>

#include "asymbench/core_data.hpp"

namespace asymbench::norm {

// (raw - random) / (human - random). Unclipped: may be negative or exceed 1;
// clipping belongs to specific aggregates, not to normalization.
double hns(double raw, double random_score, double human_score);

// One HnsRecord per ScoreRecord, same keys. Refuses already-normalized tables.
std::vector<core::HnsRecord> hns_table(const core::ScoreTable& table);

// Arithmetic mean over seeds per game for one method; unseeded records pass
// through unchanged.
std::map<std::string, double> per_game_mean(const std::vector<core::HnsRecord>& records,
                                            const std::string& method);

// Convenience: normalizes first unless the table already holds HNS values.
std::map<std::string, double> per_game_mean(const core::ScoreTable& table,
                                            const std::string& method);

}  // namespace asymbench::norm
