#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asymbench::core {

struct GameMeta {
    std::string name;
    double random_score = 0;
    double human_score = 0;
    int num_actions = 0;
    bool shooter = false;

    friend bool operator==(const GameMeta&, const GameMeta&) = default;
};

// seed empty = a mean-over-seeds record. score holds raw game points, or an
// HNS value when the owning table is flagged normalized.
struct ScoreRecord {
    std::string game;
    std::string method;
    std::optional<int> seed;
    double score = 0;

    friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

struct HnsRecord {
    std::string game;
    std::string method;
    std::optional<int> seed;
    double hns = 0;

    friend bool operator==(const HnsRecord&, const HnsRecord&) = default;
};

// Immutable after construction; all operations on it are pure.
struct ScoreTable {
    std::vector<ScoreRecord> records;
    std::map<std::string, GameMeta> meta;
    bool is_hns = false;  // true when scores are already human-normalized

    friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

    std::vector<std::string> games() const;    // sorted, unique
    std::vector<std::string> methods() const;  // unique, first-appearance order
};

struct Diagnostic {
    std::string rule;
    std::string message;  // names the offending record or meta entry
};

// Scores CSV (header game,method,seed,score or game,method,seed,hns) plus a
// separate meta CSV (header game,random,human,num_actions,shooter). Parsing is
// structural only; semantic checks live in validate() so callers can itemize.
ScoreTable parse_scores_csv(std::string_view scores_csv, std::string_view meta_csv);
std::map<std::string, GameMeta> parse_meta_csv(std::string_view meta_csv);

// Self-contained JSON document: {"kind": "raw"|"hns", "meta": [...], "records": [...]}.
ScoreTable parse_scores_json(std::string_view json_text);

// Empty result iff every invariant holds. Rules: missing-meta, duplicate-key,
// degenerate-baseline, invalid-actions, invalid-seed, non-finite-score,
// mixed-seeding, seed-cardinality.
std::vector<Diagnostic> validate(const ScoreTable& table);

struct CsvExport {
    std::string scores;
    std::string meta;
};

// Round-trips: parse_scores_csv(export_csv(t)...) == t, likewise for JSON.
CsvExport export_csv(const ScoreTable& table);
std::string export_json(const ScoreTable& table);

}  // namespace asymbench::core
