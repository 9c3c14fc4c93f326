#include "asymbench/aggregates.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "asymbench/errors.hpp"
#include "asymbench/normalization.hpp"
#include "asymbench/rng.hpp"

namespace asymbench::agg {

namespace {

void require_nonempty(std::span<const double> values, const char* what) {
    if (values.empty()) throw DomainError(std::string(what) + ": empty input");
}

// Type-7 quantile (linear interpolation) on an already-sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
    const size_t i = static_cast<size_t>(h);
    if (i + 1 >= sorted.size()) return sorted.back();
    return sorted[i] + (h - static_cast<double>(i)) * (sorted[i + 1] - sorted[i]);
}

}  // namespace

double mean(std::span<const double> values) {
    require_nonempty(values, "mean");
    double sum = 0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double median(std::span<const double> values) {
    require_nonempty(values, "median");
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    const size_t n = s.size();
    return n % 2 ? s[n / 2] : (s[n / 2 - 1] + s[n / 2]) / 2.0;
}

double iqm(std::span<const double> values) {
    require_nonempty(values, "iqm");
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    const size_t trim = s.size() / 4;
    double sum = 0;
    for (size_t i = trim; i < s.size() - trim; ++i) sum += s[i];
    return sum / static_cast<double>(s.size() - 2 * trim);
}

double optimality_gap(std::span<const double> values) {
    require_nonempty(values, "optimality_gap");
    double sum = 0;
    for (double v : values) sum += 1.0 - std::clamp(v, 0.0, 1.0);
    return sum / static_cast<double>(values.size());
}

double std_dev(std::span<const double> values) {
    if (values.size() < 2) throw DomainError("std_dev: need at least 2 values");
    const double mu = mean(values);
    double sum = 0;
    for (double v : values) sum += (v - mu) * (v - mu);
    return std::sqrt(sum / static_cast<double>(values.size()));
}

double harmonic_mean(double a, double b) {
    if (a <= 0 || b <= 0)
        throw DomainError("harmonic_mean: inputs must be positive (a non-positive value "
                          "collapses the harmonic mean)");
    return 2.0 * a * b / (a + b);
}

double sym_hns(const std::map<std::string, double>& hns_by_game,
               const part::PartitionMap& partition) {
    double agent_sum = 0, human_sum = 0;
    int agent_n = 0, human_n = 0;
    for (const auto& [game, value] : hns_by_game) {
        auto it = partition.labels.find(game);
        if (it == partition.labels.end()) throw DomainError("no partition label for game " + game);
        if (it->second == part::Label::AgentOptimal) {
            agent_sum += value;
            agent_n++;
        } else {
            human_sum += value;
            human_n++;
        }
    }
    if (agent_n == 0 || human_n == 0)
        throw DomainError("sym_hns: both partition subsets must be nonempty");
    const double agent_mean = agent_sum / agent_n;
    const double human_mean = human_sum / human_n;
    if (agent_mean <= 0 || human_mean <= 0)
        throw DomainError("sym_hns: subset mean is not positive");
    return harmonic_mean(agent_mean, human_mean);
}

int superhuman_count(const std::map<std::string, double>& hns_by_game) {
    if (hns_by_game.empty()) throw DomainError("superhuman_count: empty input");
    int count = 0;
    for (const auto& [game, value] : hns_by_game)
        if (value >= 1.0) count++;
    return count;
}

std::vector<std::pair<double, double>> performance_profile(std::span<const double> values,
                                                           std::span<const double> tau_grid) {
    require_nonempty(values, "performance_profile");
    for (size_t i = 1; i < tau_grid.size(); ++i)
        if (tau_grid[i] < tau_grid[i - 1])
            throw DomainError("performance_profile: tau grid must be sorted ascending");
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const auto above = s.end() - std::upper_bound(s.begin(), s.end(), tau);
        out.emplace_back(tau, static_cast<double>(above) / static_cast<double>(s.size()));
    }
    return out;
}

double compute_metric(const std::string& metric, std::span<const double> values) {
    if (metric == "mean") return mean(values);
    if (metric == "median") return median(values);
    if (metric == "iqm") return iqm(values);
    if (metric == "optgap") return optimality_gap(values);
    if (metric == "stddev") return std_dev(values);
    throw DomainError("unknown metric '" + metric + "'");
}

BootstrapResult stratified_bootstrap(const std::map<std::string, std::vector<double>>& runs_by_game,
                                     const std::string& metric, int resamples, double level,
                                     uint64_t master_seed, int threads) {
    if (runs_by_game.empty()) throw DomainError("stratified_bootstrap: empty table");
    for (const auto& [game, runs] : runs_by_game)
        if (runs.empty()) throw DomainError("stratified_bootstrap: game " + game + " has no runs");
    if (resamples < 1) throw DomainError("stratified_bootstrap: resamples must be >= 1");
    if (!(level > 0 && level < 1)) throw DomainError("stratified_bootstrap: level must be in (0,1)");

    std::vector<double> flat;
    for (const auto& [game, runs] : runs_by_game) flat.insert(flat.end(), runs.begin(), runs.end());

    BootstrapResult out;
    out.point = compute_metric(metric, flat);  // also rejects unknown metrics up front

    std::vector<double> stats(static_cast<size_t>(resamples));
    auto worker = [&](int begin, int end) {
        std::vector<double> sample;
        sample.reserve(flat.size());
        for (int r = begin; r < end; ++r) {
            auto eng = rng::substream(master_seed, static_cast<uint64_t>(r));
            sample.clear();
            for (const auto& [game, runs] : runs_by_game)
                for (size_t i = 0; i < runs.size(); ++i)
                    sample.push_back(runs[eng.below(runs.size())]);
            stats[static_cast<size_t>(r)] = compute_metric(metric, sample);
        }
    };

    if (threads <= 1) {
        worker(0, resamples);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (resamples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(resamples, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(stats.begin(), stats.end());
    out.low = quantile_sorted(stats, (1.0 - level) / 2.0);
    out.high = quantile_sorted(stats, 1.0 - (1.0 - level) / 2.0);
    return out;
}

std::map<std::string, std::vector<double>> runs_by_game(const core::ScoreTable& hns_table,
                                                        const std::string& method) {
    std::map<std::string, std::vector<double>> out;
    if (hns_table.is_hns) {
        for (const auto& r : hns_table.records)
            if (r.method == method) out[r.game].push_back(r.score);
    } else {
        for (const auto& r : norm::hns_table(hns_table))
            if (r.method == method) out[r.game].push_back(r.hns);
    }
    if (out.empty()) throw DomainError("unknown method " + method);
    return out;
}

const double* AggregateReport::find(const std::string& name) const {
    for (const auto& [key, value] : metrics)
        if (key == name) return &value;
    return nullptr;
}

}  // namespace asymbench::agg
