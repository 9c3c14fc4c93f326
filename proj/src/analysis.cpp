#include "asymbench/analysis.hpp"

#include <algorithm>
#include <limits>

#include "asymbench/errors.hpp"
#include "asymbench/normalization.hpp"

namespace asymbench::analysis {

HnsByGameMethod hns_grid(const core::ScoreTable& table, const std::vector<std::string>& methods) {
    HnsByGameMethod grid;
    for (const auto& method : methods)
        for (const auto& [game, value] : norm::per_game_mean(table, method))
            grid[game][method] = value;
    return grid;
}

std::vector<std::string> visual_bottleneck(const HnsByGameMethod& hns,
                                           const std::vector<std::string>& pixel_methods,
                                           const std::vector<std::string>& other_methods,
                                           double ratio) {
    if (pixel_methods.empty() || other_methods.empty())
        throw DomainError("visual_bottleneck: both method lists must be nonempty");
    if (!(ratio > 0)) throw DomainError("visual_bottleneck: ratio must be positive");
    std::vector<std::string> flagged;
    for (const auto& [game, by_method] : hns) {
        auto lookup = [&](const std::string& method) {
            auto it = by_method.find(method);
            if (it == by_method.end())
                throw DomainError("unknown method " + method + " for game " + game);
            return it->second;
        };
        double pixel_min = std::numeric_limits<double>::infinity();
        for (const auto& m : pixel_methods) pixel_min = std::min(pixel_min, lookup(m));
        double other_max = -std::numeric_limits<double>::infinity();
        for (const auto& m : other_methods) other_max = std::max(other_max, lookup(m));
        if (pixel_min > ratio * other_max) flagged.push_back(game);
    }
    std::sort(flagged.begin(), flagged.end());
    return flagged;
}

std::vector<GroupMean> subset_comparison(const std::map<std::string, double>& hns_by_game,
                                         Grouping grouping, const part::PartitionMap* partition,
                                         const std::map<std::string, core::GameMeta>* meta,
                                         int action_threshold) {
    if (grouping == Grouping::ByPartition && partition == nullptr)
        throw DomainError("subset_comparison: partition grouping needs a PartitionMap");
    if (grouping != Grouping::ByPartition && meta == nullptr)
        throw DomainError("subset_comparison: feature grouping needs game meta");

    auto group_of = [&](const std::string& game) -> std::string {
        switch (grouping) {
            case Grouping::ByPartition: {
                auto it = partition->labels.find(game);
                if (it == partition->labels.end())
                    throw DomainError("no partition label for game " + game);
                return part::label_name(it->second);
            }
            case Grouping::ByShooter: {
                auto it = meta->find(game);
                if (it == meta->end()) throw DomainError("no meta entry for game " + game);
                return it->second.shooter ? "shooter" : "non-shooter";
            }
            case Grouping::ByActionSplit: {
                auto it = meta->find(game);
                if (it == meta->end()) throw DomainError("no meta entry for game " + game);
                const std::string t = std::to_string(action_threshold);
                return it->second.num_actions > action_threshold ? "actions>" + t
                                                                 : "actions<=" + t;
            }
        }
        throw DomainError("unreachable grouping");
    };

    std::map<std::string, std::pair<double, int>> acc;  // group -> (sum, count)
    for (const auto& [game, value] : hns_by_game) {
        auto& slot = acc[group_of(game)];
        slot.first += value;
        slot.second++;
    }
    std::vector<GroupMean> out;
    for (const auto& [name, slot] : acc)
        out.push_back({name, slot.first / slot.second, slot.second});
    return out;
}

double asymmetry_ratio(const std::map<std::string, double>& hns_by_game,
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
        throw DomainError("asymmetry_ratio: both partition subsets must be nonempty");
    const double human_mean = human_sum / human_n;
    if (human_mean <= 0)
        throw DomainError("asymmetry_ratio: HumanOptimal subset mean is not positive");
    return (agent_sum / agent_n) / human_mean;
}

}  // namespace asymbench::analysis
