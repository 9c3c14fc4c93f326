#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asymbench/core_data.hpp"
#include "asymbench/partition.hpp"

namespace asymbench::agg {

double mean(std::span<const double> values);

// Middle element; mean of the two middle elements for even counts.
double median(std::span<const double> values);

// Mean after discarding the lowest and highest floor(0.25 n) entries.
double iqm(std::span<const double> values);

// Mean of 1 - clip(value, 0, 1). Blind to progress beyond 1.
double optimality_gap(std::span<const double> values);

// Population standard deviation (divisor n). The reference variance table is
// reproduced by this convention; divisor n-1 misrounds it.
double std_dev(std::span<const double> values);

// 2ab/(a+b); both arguments must be positive (a zero collapses it to 0).
double harmonic_mean(double a, double b);

// Harmonic mean of the per-subset arithmetic means of per-game HNS.
double sym_hns(const std::map<std::string, double>& hns_by_game,
               const part::PartitionMap& partition);

// Games at or above human parity (HNS >= 1). Inclusive: the reference counts
// include a game whose agent score exactly ties the human score.
int superhuman_count(const std::map<std::string, double>& hns_by_game);

// Fraction of values strictly greater than each tau; grid must be ascending.
std::vector<std::pair<double, double>> performance_profile(std::span<const double> values,
                                                           std::span<const double> tau_grid);

// Named aggregate over a flat value list: mean, median, iqm, optgap, stddev.
double compute_metric(const std::string& metric, std::span<const double> values);

struct BootstrapResult {
    double point = 0;
    double low = 0;
    double high = 0;
};

// Resamples seeds with replacement independently within each game stratum and
// recomputes the metric on the flattened resample; percentile interval at the
// given level. Resample r draws from a substream keyed (master_seed, r), so
// the result is byte-identical for any thread count.
BootstrapResult stratified_bootstrap(const std::map<std::string, std::vector<double>>& runs_by_game,
                                     const std::string& metric, int resamples, double level,
                                     uint64_t master_seed, int threads = 1);

// Seed-level values of one method pulled out of an HNS table.
std::map<std::string, std::vector<double>> runs_by_game(const core::ScoreTable& hns_table,
                                                        const std::string& method);

struct AggregateReport {
    struct Interval {
        double low = 0;
        double high = 0;
        double level = 0;
    };
    std::string method;
    std::vector<std::pair<std::string, double>> metrics;  // insertion order kept for rendering
    std::map<std::string, Interval> intervals;

    const double* find(const std::string& name) const;
};

}  // namespace asymbench::agg
