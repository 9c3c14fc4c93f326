#include "asymbench/core_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "asymbench/errors.hpp"
#include "asymbench/numio.hpp"

namespace asymbench::core {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kMetaHeader = "game,random,human,num_actions,shooter";
constexpr std::string_view kRawHeader = "game,method,seed,score";
constexpr std::string_view kHnsHeader = "game,method,seed,hns";

std::string record_key(const ScoreRecord& r) {
    std::string key = r.game + "/" + r.method;
    if (r.seed) key += "/seed " + std::to_string(*r.seed);
    return key;
}

}  // namespace

std::vector<std::string> ScoreTable::games() const {
    std::vector<std::string> out;
    for (const auto& r : records)
        if (std::find(out.begin(), out.end(), r.game) == out.end()) out.push_back(r.game);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> ScoreTable::methods() const {
    std::vector<std::string> out;
    for (const auto& r : records)
        if (std::find(out.begin(), out.end(), r.method) == out.end()) out.push_back(r.method);
    return out;
}

std::map<std::string, GameMeta> parse_meta_csv(std::string_view meta_csv) {
    auto rows = numio::lines(meta_csv);
    if (rows.empty() || rows[0] != kMetaHeader)
        throw ParseError("meta CSV must start with header '" + std::string(kMetaHeader) + "'");
    std::map<std::string, GameMeta> meta;
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        auto fields = numio::split(rows[i], ',');
        if (fields.size() != 5)
            throw ParseError("meta row " + std::to_string(i + 1) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        GameMeta m;
        m.name = std::string(fields[0]);
        try {
            m.random_score = numio::parse_double(fields[1], "random score");
            m.human_score = numio::parse_double(fields[2], "human score");
            m.num_actions = numio::parse_int(fields[3], "num_actions");
        } catch (const ParseError& e) {
            throw ParseError("meta row " + std::to_string(i + 1) + ": " + e.what());
        }
        if (fields[4] == "true")
            m.shooter = true;
        else if (fields[4] == "false")
            m.shooter = false;
        else
            throw ParseError("meta row " + std::to_string(i + 1) + ": shooter must be true or false");
        if (m.name.empty()) throw ParseError("meta row " + std::to_string(i + 1) + ": empty game name");
        if (meta.count(m.name))
            throw ValidationError("duplicate meta entry for game " + m.name);
        meta.emplace(m.name, std::move(m));
    }
    return meta;
}

ScoreTable parse_scores_csv(std::string_view scores_csv, std::string_view meta_csv) {
    ScoreTable table;
    table.meta = parse_meta_csv(meta_csv);

    auto rows = numio::lines(scores_csv);
    if (rows.empty() || (rows[0] != kRawHeader && rows[0] != kHnsHeader))
        throw ParseError("scores CSV must start with header '" + std::string(kRawHeader) +
                         "' or '" + std::string(kHnsHeader) + "'");
    table.is_hns = rows[0] == kHnsHeader;
    const std::string_view value_name = table.is_hns ? "hns" : "score";

    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        auto fields = numio::split(rows[i], ',');
        if (fields.size() != 4)
            throw ParseError("scores row " + std::to_string(i + 1) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        ScoreRecord r;
        r.game = std::string(fields[0]);
        r.method = std::string(fields[1]);
        try {
            if (!fields[2].empty()) r.seed = numio::parse_int(fields[2], "seed");
            r.score = numio::parse_double(fields[3], value_name);
        } catch (const ParseError& e) {
            throw ParseError("scores row " + std::to_string(i + 1) + ": " + e.what());
        }
        if (r.game.empty() || r.method.empty())
            throw ParseError("scores row " + std::to_string(i + 1) + ": empty game or method");
        table.records.push_back(std::move(r));
    }
    return table;
}

ScoreTable parse_scores_json(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    ScoreTable table;
    try {
        if (doc.contains("kind")) {
            const std::string kind = doc.at("kind").get<std::string>();
            if (kind == "hns")
                table.is_hns = true;
            else if (kind != "raw")
                throw ParseError("kind must be 'raw' or 'hns', got '" + kind + "'");
        }
        for (const auto& m : doc.at("meta")) {
            GameMeta meta;
            meta.name = m.at("game").get<std::string>();
            meta.random_score = m.at("random").get<double>();
            meta.human_score = m.at("human").get<double>();
            meta.num_actions = m.at("num_actions").get<int>();
            meta.shooter = m.at("shooter").get<bool>();
            if (table.meta.count(meta.name))
                throw ValidationError("duplicate meta entry for game " + meta.name);
            table.meta.emplace(meta.name, std::move(meta));
        }
        const char* value_name = table.is_hns ? "hns" : "score";
        for (const auto& r : doc.at("records")) {
            ScoreRecord rec;
            rec.game = r.at("game").get<std::string>();
            rec.method = r.at("method").get<std::string>();
            if (r.contains("seed") && !r.at("seed").is_null()) rec.seed = r.at("seed").get<int>();
            rec.score = r.at(value_name).get<double>();
            table.records.push_back(std::move(rec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad table JSON: ") + e.what());
    }
    return table;
}

std::vector<Diagnostic> validate(const ScoreTable& table) {
    std::vector<Diagnostic> out;

    for (const auto& [name, m] : table.meta) {
        if (m.human_score == m.random_score)
            out.push_back({"degenerate-baseline",
                           "game " + name + ": human score equals random score (" +
                               numio::format_double(m.human_score) + ")"});
        if (m.num_actions < 1)
            out.push_back({"invalid-actions", "game " + name + ": num_actions " +
                                                  std::to_string(m.num_actions) + " < 1"});
    }

    std::map<std::string, int> seen;
    // (game, method) -> (seeded record count, unseeded record count)
    std::map<std::pair<std::string, std::string>, std::pair<int, int>> groups;
    for (const auto& r : table.records) {
        if (!table.meta.count(r.game))
            out.push_back({"missing-meta", "record " + record_key(r) + ": no meta entry for game"});
        if (r.seed && *r.seed < 1)
            out.push_back({"invalid-seed",
                           "record " + record_key(r) + ": seed must be a positive integer"});
        if (!std::isfinite(r.score))
            out.push_back({"non-finite-score", "record " + record_key(r) + ": value is not finite"});
        if (++seen[record_key(r)] == 2)
            out.push_back({"duplicate-key", "record " + record_key(r) + " appears more than once"});
        auto& g = groups[{r.game, r.method}];
        (r.seed ? g.first : g.second)++;
    }

    std::map<int, int> count_freq;
    for (const auto& [key, g] : groups) {
        if (g.first > 0 && g.second > 0)
            out.push_back({"mixed-seeding", "group " + key.first + "/" + key.second +
                                                " mixes seeded and unseeded records"});
        if (g.first > 0) count_freq[g.first]++;
    }
    if (count_freq.size() > 1) {
        // Majority seed count wins; deviating groups are the anomaly.
        int mode = 0, best = 0;
        for (const auto& [count, freq] : count_freq)
            if (freq > best || (freq == best && count > mode)) {
                mode = count;
                best = freq;
            }
        for (const auto& [key, g] : groups)
            if (g.first > 0 && g.first != mode)
                out.push_back({"seed-cardinality",
                               "group " + key.first + "/" + key.second + " has " +
                                   std::to_string(g.first) + " seeds, expected " +
                                   std::to_string(mode)});
    }
    return out;
}

CsvExport export_csv(const ScoreTable& table) {
    CsvExport out;
    out.scores = std::string(table.is_hns ? kHnsHeader : kRawHeader) + "\n";
    for (const auto& r : table.records) {
        out.scores += r.game + "," + r.method + ",";
        if (r.seed) out.scores += std::to_string(*r.seed);
        out.scores += "," + numio::format_double(r.score) + "\n";
    }
    out.meta = std::string(kMetaHeader) + "\n";
    for (const auto& [name, m] : table.meta) {
        out.meta += name + "," + numio::format_double(m.random_score) + "," +
                    numio::format_double(m.human_score) + "," + std::to_string(m.num_actions) +
                    "," + (m.shooter ? "true" : "false") + "\n";
    }
    return out;
}

std::string export_json(const ScoreTable& table) {
    ordered_json doc;
    doc["kind"] = table.is_hns ? "hns" : "raw";
    doc["meta"] = ordered_json::array();
    for (const auto& [name, m] : table.meta) {
        ordered_json j;
        j["game"] = name;
        j["random"] = m.random_score;
        j["human"] = m.human_score;
        j["num_actions"] = m.num_actions;
        j["shooter"] = m.shooter;
        doc["meta"].push_back(std::move(j));
    }
    const char* value_name = table.is_hns ? "hns" : "score";
    doc["records"] = ordered_json::array();
    for (const auto& r : table.records) {
        ordered_json j;
        j["game"] = r.game;
        j["method"] = r.method;
        if (r.seed)
            j["seed"] = *r.seed;
        else
            j["seed"] = nullptr;
        j[value_name] = r.score;
        doc["records"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

}  // namespace asymbench::core
