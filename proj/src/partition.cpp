#include "asymbench/partition.hpp"

#include <cmath>

#include <json.hpp>

#include "asymbench/errors.hpp"
#include "asymbench/normalization.hpp"

namespace asymbench::part {

const std::vector<std::string>& default_reference_methods() {
    static const std::vector<std::string> methods = {"IRIS", "TWM", "DreamerV3", "STORM"};
    return methods;
}

std::map<std::string, double> averaged_reference(const core::ScoreTable& table,
                                                 const std::vector<std::string>& methods) {
    if (methods.empty()) throw DomainError("averaged_reference needs at least one method");
    std::map<std::string, double> sums;
    for (const auto& method : methods) {
        auto per_game = norm::per_game_mean(table, method);  // throws on unknown method
        for (const auto& [game, value] : per_game) sums[game] += value;
    }
    for (auto& [game, sum] : sums) sum /= static_cast<double>(methods.size());
    return sums;
}

PartitionMap derive_partition(const std::map<std::string, double>& reference_hns,
                              double threshold) {
    if (reference_hns.empty()) throw DomainError("cannot partition an empty game set");
    if (!std::isfinite(threshold)) throw DomainError("partition threshold must be finite");
    PartitionMap out;
    out.threshold = threshold;
    for (const auto& [game, value] : reference_hns)
        out.labels[game] = value > threshold ? Label::AgentOptimal : Label::HumanOptimal;
    return out;
}

FeatureSummary feature_summary(const PartitionMap& partition,
                               const std::map<std::string, core::GameMeta>& meta) {
    FeatureSummary s;
    double agent_actions = 0, human_actions = 0;
    for (const auto& [game, label] : partition.labels) {
        auto it = meta.find(game);
        if (it == meta.end()) throw DomainError("no meta entry for game " + game);
        const auto& m = it->second;
        if (label == Label::AgentOptimal) {
            s.agent_count++;
            agent_actions += m.num_actions;
            s.agent_shooters += m.shooter ? 1 : 0;
        } else {
            s.human_count++;
            human_actions += m.num_actions;
            s.human_shooters += m.shooter ? 1 : 0;
        }
    }
    if (s.agent_count > 0) s.agent_mean_actions = agent_actions / s.agent_count;
    if (s.human_count > 0) s.human_mean_actions = human_actions / s.human_count;
    return s;
}

const char* label_name(Label label) {
    return label == Label::AgentOptimal ? "AO" : "HO";
}

std::string to_json(const PartitionMap& partition) {
    nlohmann::ordered_json doc;
    doc["threshold"] = partition.threshold;
    if (!partition.reference_methods.empty())
        doc["reference_methods"] = partition.reference_methods;
    doc["labels"] = nlohmann::ordered_json::object();
    for (const auto& [game, label] : partition.labels) doc["labels"][game] = label_name(label);
    return doc.dump(2) + "\n";
}

}  // namespace asymbench::part
