#include "asymbench/normalization.hpp"

#include "asymbench/errors.hpp"
#include "asymbench/numio.hpp"

namespace asymbench::norm {

double hns(double raw, double random_score, double human_score) {
    if (human_score == random_score)
        throw DomainError("degenerate baseline: human score equals random score (" +
                          numio::format_double(human_score) + ")");
    return (raw - random_score) / (human_score - random_score);
}

std::vector<core::HnsRecord> hns_table(const core::ScoreTable& table) {
    if (table.is_hns)
        throw DomainError("table is already normalized; refusing to normalize twice");
    std::vector<core::HnsRecord> out;
    out.reserve(table.records.size());
    for (const auto& r : table.records) {
        auto it = table.meta.find(r.game);
        if (it == table.meta.end())
            throw DomainError("no meta entry for game " + r.game);
        out.push_back(
            {r.game, r.method, r.seed, hns(r.score, it->second.random_score, it->second.human_score)});
    }
    return out;
}

std::map<std::string, double> per_game_mean(const std::vector<core::HnsRecord>& records,
                                            const std::string& method) {
    std::map<std::string, double> sums;
    std::map<std::string, int> counts;
    for (const auto& r : records) {
        if (r.method != method) continue;
        sums[r.game] += r.hns;
        counts[r.game]++;
    }
    if (sums.empty()) throw DomainError("unknown method " + method);
    for (auto& [game, sum] : sums) sum /= counts[game];
    return sums;
}

std::map<std::string, double> per_game_mean(const core::ScoreTable& table,
                                            const std::string& method) {
    if (table.is_hns) {
        std::vector<core::HnsRecord> recs;
        recs.reserve(table.records.size());
        for (const auto& r : table.records) recs.push_back({r.game, r.method, r.seed, r.score});
        return per_game_mean(recs, method);
    }
    return per_game_mean(hns_table(table), method);
}

}  // namespace asymbench::norm
