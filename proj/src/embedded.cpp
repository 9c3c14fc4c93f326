#include "asymbench/embedded.hpp"

namespace asymbench::embedded {

namespace {

std::map<std::string, core::GameMeta> build_meta() {
    std::map<std::string, core::GameMeta> meta;
    for (const auto& row : detail::kGameMeta) {
        core::GameMeta m;
        m.name = row.name;
        m.random_score = row.random_score;
        m.human_score = row.human_score;
        m.num_actions = row.num_actions;
        m.shooter = row.shooter;
        meta.emplace(m.name, std::move(m));
    }
    return meta;
}

Reference build() {
    Reference ref;
    auto meta = build_meta();

    ref.full.meta = meta;
    for (int m = 0; m < kNumFullMethods; ++m)
        for (int g = 0; g < kNumGames; ++g)
            ref.full.records.push_back({detail::kGameMeta[g].name, detail::kFullMethods[m],
                                        std::nullopt, detail::kFullScores[m][g]});

    ref.seeds.meta = meta;
    ref.seeds.is_hns = true;
    for (int m = 0; m < kNumSeedMethods; ++m)
        for (int g = 0; g < kNumGames; ++g)
            for (int s = 0; s < kNumSeeds; ++s)
                ref.seeds.records.push_back({detail::kGameMeta[g].name, detail::kSeedMethods[m],
                                             s + 1, detail::kSeedHns[m][g * kNumSeeds + s]});

    ref.averaged.meta = meta;
    for (int g = 0; g < kNumGames; ++g)
        ref.averaged.records.push_back(
            {detail::kGameMeta[g].name, kAveragedMethod, std::nullopt, detail::kAveragedRaw[g]});

    for (int g = 0; g < kNumGames; ++g)
        ref.averaged_hns_rounded[detail::kGameMeta[g].name] = detail::kPartitionRefHns[g];

    for (int g = 0; g < kNumBottleneckGames; ++g)
        for (int m = 0; m < kNumBottleneckMethods; ++m)
            ref.bottleneck_hns[detail::kBottleneckGames[g]][detail::kBottleneckMethods[m]] =
                detail::kBottleneckHns[g][m];

    return ref;
}

}  // namespace

const Reference& reference() {
    static const Reference ref = build();
    return ref;
}

std::vector<std::string> game_order() {
    std::vector<std::string> out;
    for (const auto& row : detail::kGameMeta) out.emplace_back(row.name);
    return out;
}

std::vector<std::string> method_order() {
    return {detail::kFullMethods, detail::kFullMethods + kNumFullMethods};
}

std::vector<std::string> agent_order() {
    std::vector<std::string> out;
    for (int m = 2; m < kNumFullMethods; ++m) out.emplace_back(detail::kFullMethods[m]);
    return out;
}

std::vector<std::string> seed_method_order() {
    return {detail::kSeedMethods, detail::kSeedMethods + kNumSeedMethods};
}

}  // namespace asymbench::embedded
