#include "asymbench/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymbench/aggregates.hpp"
#include "asymbench/analysis.hpp"
#include "asymbench/core_data.hpp"
#include "asymbench/embedded.hpp"
#include "asymbench/errors.hpp"
#include "asymbench/normalization.hpp"
#include "asymbench/numio.hpp"
#include "asymbench/partition.hpp"
#include "asymbench/report.hpp"
#include "asymbench/rng.hpp"
#include "asymbench/wm_numerics.hpp"

namespace asymbench::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& content) {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << content;
    if (!f) throw ParseError("write failed on " + path);
}

// scores.csv -> scores_meta.csv
std::string sibling_meta_path(const std::string& scores_path) {
    const fs::path p(scores_path);
    const std::string ext = p.extension().empty() ? ".csv" : p.extension().string();
    return (p.parent_path() / (p.stem().string() + "_meta" + ext)).string();
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    for (const auto& tok : numio::split(csv, ','))
        if (!tok.empty()) items.emplace_back(tok);
    return items;
}

std::vector<double> split_double_list(const std::string& csv, const std::string& flag) {
    std::vector<double> items;
    for (const auto& tok : numio::split(csv, ','))
        items.push_back(numio::parse_double(tok, flag));
    return items;
}

void check_builtin_name(const std::string& name) {
    if (name != "atari100k" && name != "atari100k-paper")
        throw ValidationError("unknown builtin dataset '" + name + "'");
}

struct InputSpec {
    std::string file;
    std::string meta_file;
    std::string builtin_name;
    CLI::Option* builtin_opt = nullptr;
};

void add_input_flags(CLI::App* sub, InputSpec& in, bool with_positional = true) {
    if (with_positional)
        sub->add_option("file", in.file, "scores file (.json self-contained, else CSV with --meta)");
    sub->add_option("--meta", in.meta_file, "meta CSV for CSV scores input");
    in.builtin_opt = sub->add_option("--builtin", in.builtin_name,
                                     "use the embedded reference dataset (optional name)")
                         ->expected(0, 1);
}

struct LoadedInput {
    core::ScoreTable table;
    bool builtin = false;
};

core::ScoreTable load_user_table(const InputSpec& in) {
    const std::string text = read_file(in.file);
    if (fs::path(in.file).extension() == ".json") return core::parse_scores_json(text);
    if (in.meta_file.empty()) throw ValidationError("CSV scores input needs --meta");
    return core::parse_scores_csv(text, read_file(in.meta_file));
}

LoadedInput load_input(const InputSpec& in, std::ostream& err, bool run_validation = true) {
    const bool use_builtin = in.builtin_opt && in.builtin_opt->count() > 0;
    if (use_builtin && !in.file.empty())
        throw ValidationError("give either a scores file or --builtin, not both");
    if (use_builtin) {
        if (!in.builtin_name.empty()) check_builtin_name(in.builtin_name);
        return {embedded::reference().full, true};
    }
    if (in.file.empty()) throw ValidationError("no input: pass a scores file or --builtin");
    LoadedInput li{load_user_table(in), false};
    if (run_validation) {
        const auto diags = core::validate(li.table);
        if (!diags.empty()) {
            for (const auto& d : diags) err << d.rule << ": " << d.message << "\n";
            throw ValidationError("input table failed validation");
        }
    }
    return li;
}

// Flattened run-level HNS for one method. On the builtin dataset the per-seed
// table is used when the method has one; otherwise (and for user tables) the
// values come straight out of the given table, one per record.
std::map<std::string, std::vector<double>> method_runs(const LoadedInput& li,
                                                       const std::string& method) {
    if (li.builtin) {
        const auto seeded = embedded::seed_method_order();
        if (std::find(seeded.begin(), seeded.end(), method) != seeded.end())
            return agg::runs_by_game(embedded::reference().seeds, method);
    }
    return agg::runs_by_game(li.table, method);
}

std::vector<double> flatten(const std::map<std::string, std::vector<double>>& runs) {
    std::vector<double> flat;
    for (const auto& [game, values] : runs) flat.insert(flat.end(), values.begin(), values.end());
    return flat;
}

std::vector<double> map_values(const std::map<std::string, double>& m) {
    std::vector<double> v;
    v.reserve(m.size());
    for (const auto& [key, value] : m) v.push_back(value);
    return v;
}

// Partition used by symhns/asymmetry: the averaged-agent route on the builtin
// dataset; a user table gets its own four-baseline average when all four
// columns are present, else it falls back to the builtin reference labels.
part::PartitionMap resolve_partition(const LoadedInput& li, double threshold) {
    const auto builtin_route = [&] {
        auto ref = norm::per_game_mean(embedded::reference().averaged, embedded::kAveragedMethod);
        auto pm = part::derive_partition(ref, threshold);
        pm.reference_methods = {embedded::kAveragedMethod};
        return pm;
    };
    if (li.builtin) return builtin_route();
    const auto& defaults = part::default_reference_methods();
    const auto methods = li.table.methods();
    const bool has_all = std::all_of(defaults.begin(), defaults.end(), [&](const std::string& m) {
        return std::find(methods.begin(), methods.end(), m) != methods.end();
    });
    if (!has_all) return builtin_route();
    auto pm = part::derive_partition(part::averaged_reference(li.table, defaults), threshold);
    pm.reference_methods = defaults;
    return pm;
}

const std::map<std::string, core::GameMeta>& input_meta(const LoadedInput& li) {
    return li.builtin ? embedded::reference().full.meta : li.table.meta;
}

std::vector<std::string> non_baseline_methods(const core::ScoreTable& table) {
    std::vector<std::string> out;
    for (const auto& m : table.methods())
        if (m != "Random" && m != "Human") out.push_back(m);
    return out;
}

core::ScoreTable to_hns_table(const core::ScoreTable& table) {
    core::ScoreTable h;
    h.is_hns = true;
    h.meta = table.meta;
    for (const auto& rec : norm::hns_table(table))
        h.records.push_back({rec.game, rec.method, rec.seed, rec.hns});
    return h;
}

std::string infer_format(const std::string& explicit_fmt, const std::string& out_path,
                         const std::string& fallback) {
    if (!explicit_fmt.empty()) return explicit_fmt;
    const std::string ext = fs::path(out_path).extension().string();
    if (ext == ".json") return "json";
    if (ext == ".csv") return "csv";
    if (ext == ".svg") return "svg";
    if (ext == ".md") return "md";
    return fallback;
}

agg::AggregateReport build_report(const LoadedInput& li, const std::string& method,
                                  const std::vector<std::string>& metrics, double threshold,
                                  bool per_game_only) {
    const auto per_game = norm::per_game_mean(li.table, method);
    const auto per_game_values = map_values(per_game);
    std::vector<double> run_values;

    agg::AggregateReport rep;
    rep.method = method;
    for (const auto& metric : metrics) {
        double value = 0;
        if (metric == "mean" || metric == "median") {
            value = agg::compute_metric(metric, per_game_values);
        } else if (metric == "iqm" || metric == "optgap" || metric == "stddev") {
            if (per_game_only) {
                value = agg::compute_metric(metric, per_game_values);
            } else {
                if (run_values.empty()) run_values = flatten(method_runs(li, method));
                value = agg::compute_metric(metric, run_values);
            }
        } else if (metric == "symhns") {
            value = agg::sym_hns(per_game, resolve_partition(li, threshold));
        } else if (metric == "superhuman") {
            value = agg::superhuman_count(per_game);
        } else {
            throw DomainError("unknown metric '" + metric + "'");
        }
        rep.metrics.emplace_back(metric, value);
    }
    return rep;
}

std::vector<double> tau_grid(double tau_min, double tau_max, int points) {
    if (points < 2) throw ValidationError("--tau-points must be at least 2");
    if (!(tau_min < tau_max)) throw ValidationError("--tau-min must be below --tau-max");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = tau_min + (tau_max - tau_min) * static_cast<double>(i) / (points - 1);
    return grid;
}

uint64_t fnv1a(uint64_t hash, const void* data, size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"benchmark asymmetry analysis and world-model numerics"};
    app.name("asymbench");
    app.require_subcommand(1);
    int exit_code = 0;

    // validate
    InputSpec val_in;
    auto* val = app.add_subcommand("validate", "check a scores table against the data invariants");
    add_input_flags(val, val_in);
    val->callback([&] {
        const auto li = load_input(val_in, err, /*run_validation=*/false);
        const auto diags = core::validate(li.table);
        if (diags.empty()) {
            out << "ok\n";
            return;
        }
        for (const auto& d : diags) out << d.rule << ": " << d.message << "\n";
        out << diags.size() << " issue(s)\n";
        exit_code = 1;
    });

    // hns
    InputSpec hns_in;
    std::string hns_fmt, hns_out, hns_meta_out;
    auto* hns_cmd = app.add_subcommand("hns", "normalize raw scores to human-normalized scores");
    add_input_flags(hns_cmd, hns_in);
    hns_cmd->add_option("--format", hns_fmt, "csv or json (default json, or from --out extension)");
    hns_cmd->add_option("--out", hns_out, "output path");
    hns_cmd->add_option("--meta-out", hns_meta_out, "meta CSV path for csv output");
    hns_cmd->callback([&] {
        const auto li = load_input(hns_in, err);
        if (li.table.is_hns) throw DomainError("input table is already normalized");
        const auto h = to_hns_table(li.table);
        const std::string fmt = infer_format(hns_fmt, hns_out, "json");
        if (fmt == "json") {
            emit(hns_out, core::export_json(h), out);
        } else if (fmt == "csv") {
            if (hns_out.empty()) throw ValidationError("csv output needs --out");
            const auto files = core::export_csv(h);
            const std::string meta_path =
                hns_meta_out.empty() ? sibling_meta_path(hns_out) : hns_meta_out;
            write_file(hns_out, files.scores);
            write_file(meta_path, files.meta);
            out << "wrote " << hns_out << "\nwrote " << meta_path << "\n";
        } else {
            throw DomainError("unsupported format '" + fmt + "'");
        }
    });

    // partition
    InputSpec part_in;
    double part_threshold = part::kDefaultThreshold;
    std::string part_refs, part_out;
    auto* part_cmd =
        app.add_subcommand("partition", "split games into agent-optimal and human-optimal");
    add_input_flags(part_cmd, part_in);
    part_cmd->add_option("--threshold", part_threshold, "reference HNS cut (default 0.75)");
    part_cmd->add_option("--reference-methods", part_refs,
                         "comma list of methods to average for the reference");
    part_cmd->add_option("--out", part_out, "output path");
    part_cmd->callback([&] {
        const auto li = load_input(part_in, err);
        part::PartitionMap pm;
        if (!part_refs.empty()) {
            const auto methods = split_list(part_refs);
            pm = part::derive_partition(part::averaged_reference(li.table, methods),
                                        part_threshold);
            pm.reference_methods = methods;
        } else {
            pm = resolve_partition(li, part_threshold);
        }
        const auto features = part::feature_summary(pm, input_meta(li));
        int ao = 0, ho = 0;
        for (const auto& [game, label] : pm.labels)
            (label == part::Label::AgentOptimal ? ao : ho)++;
        ordered_json j;
        j["threshold"] = pm.threshold;
        j["reference_methods"] = pm.reference_methods;
        j["agent_optimal"] = ao;
        j["human_optimal"] = ho;
        j["labels"] = ordered_json::object();
        for (const auto& [game, label] : pm.labels) j["labels"][game] = part::label_name(label);
        j["features"] = {{"agent_count", features.agent_count},
                         {"human_count", features.human_count},
                         {"agent_mean_actions", features.agent_mean_actions},
                         {"human_mean_actions", features.human_mean_actions},
                         {"agent_shooters", features.agent_shooters},
                         {"human_shooters", features.human_shooters}};
        emit(part_out, j.dump(2) + "\n", out);
    });

    // aggregate
    InputSpec agg_in;
    std::string agg_method, agg_metrics = "mean,median,iqm,optgap", agg_fmt, agg_out;
    double agg_threshold = part::kDefaultThreshold;
    bool agg_per_game = false;
    auto* agg_cmd = app.add_subcommand("aggregate", "summary metrics for one method");
    add_input_flags(agg_cmd, agg_in);
    agg_cmd->add_option("--method", agg_method, "method name")->required();
    agg_cmd->add_option("--metrics", agg_metrics,
                        "comma list: mean,median,iqm,optgap,stddev,symhns,superhuman");
    agg_cmd->add_option("--threshold", agg_threshold, "partition cut for symhns");
    agg_cmd->add_flag("--per-game", agg_per_game,
                      "force per-game means even when per-seed runs exist");
    agg_cmd->add_option("--format", agg_fmt, "md, csv or json (default json)");
    agg_cmd->add_option("--out", agg_out, "output path");
    agg_cmd->callback([&] {
        const auto li = load_input(agg_in, err);
        const auto metrics = split_list(agg_metrics);
        if (metrics.empty()) throw ValidationError("--metrics list is empty");
        const auto rep = build_report(li, agg_method, metrics, agg_threshold, agg_per_game);
        emit(agg_out, report::render({rep}, infer_format(agg_fmt, agg_out, "json")), out);
    });

    // bootstrap
    InputSpec boot_in;
    std::string boot_method, boot_metric = "iqm", boot_out;
    int boot_resamples = 10000, boot_threads = 1;
    double boot_level = 0.95;
    uint64_t boot_seed = 1;
    auto* boot_cmd =
        app.add_subcommand("bootstrap", "stratified bootstrap confidence interval for a metric");
    add_input_flags(boot_cmd, boot_in);
    boot_cmd->add_option("--method", boot_method, "method name")->required();
    boot_cmd->add_option("--metric", boot_metric, "mean, median, iqm, optgap or stddev");
    boot_cmd->add_option("--resamples", boot_resamples, "bootstrap resamples (default 10000)");
    boot_cmd->add_option("--level", boot_level, "confidence level (default 0.95)");
    boot_cmd->add_option("--seed", boot_seed, "master seed (default 1)");
    boot_cmd->add_option("--threads", boot_threads, "worker threads; the result never depends on it");
    boot_cmd->add_option("--out", boot_out, "output path");
    boot_cmd->callback([&] {
        const auto li = load_input(boot_in, err);
        const auto runs = method_runs(li, boot_method);
        const auto res = agg::stratified_bootstrap(runs, boot_metric, boot_resamples, boot_level,
                                                   boot_seed, boot_threads);
        ordered_json j;
        j["method"] = boot_method;
        j["metric"] = boot_metric;
        j["resamples"] = boot_resamples;
        j["level"] = boot_level;
        j["seed"] = boot_seed;
        j["point"] = res.point;
        j["low"] = res.low;
        j["high"] = res.high;
        emit(boot_out, j.dump(2) + "\n", out);
    });

    // profile
    InputSpec prof_in;
    std::string prof_methods, prof_fmt, prof_out;
    double prof_tau_min = 0.0, prof_tau_max = 8.0;
    int prof_points = 81;
    auto* prof_cmd =
        app.add_subcommand("profile", "fraction of runs above tau across a tau grid");
    add_input_flags(prof_cmd, prof_in);
    prof_cmd->add_option("--methods", prof_methods, "comma list (default: all agent methods)");
    prof_cmd->add_option("--tau-min", prof_tau_min, "grid start (default 0)");
    prof_cmd->add_option("--tau-max", prof_tau_max, "grid end (default 8)");
    prof_cmd->add_option("--tau-points", prof_points, "grid size (default 81)");
    prof_cmd->add_option("--format", prof_fmt, "json, csv or svg (default json)");
    prof_cmd->add_option("--out", prof_out, "output path");
    prof_cmd->callback([&] {
        const auto li = load_input(prof_in, err);
        auto methods = split_list(prof_methods);
        if (methods.empty())
            methods = li.builtin ? embedded::seed_method_order() : non_baseline_methods(li.table);
        const auto grid = tau_grid(prof_tau_min, prof_tau_max, prof_points);
        std::vector<report::ProfileSeries> series;
        for (const auto& m : methods) {
            const auto values = flatten(method_runs(li, m));
            series.push_back({m, agg::performance_profile(values, grid)});
        }
        const std::string fmt = infer_format(prof_fmt, prof_out, "json");
        if (fmt == "json") {
            ordered_json j;
            j["tau"] = grid;
            j["series"] = ordered_json::array();
            for (const auto& s : series) {
                ordered_json row;
                row["method"] = s.name;
                auto& fr = row["fraction"] = ordered_json::array();
                for (const auto& [tau, frac] : s.points) fr.push_back(frac);
                j["series"].push_back(std::move(row));
            }
            emit(prof_out, j.dump(2) + "\n", out);
        } else if (fmt == "csv") {
            std::string text = "method,tau,fraction\n";
            for (const auto& s : series)
                for (const auto& [tau, frac] : s.points)
                    text += s.name + "," + numio::format_double(tau) + "," +
                            numio::format_double(frac) + "\n";
            emit(prof_out, text, out);
        } else if (fmt == "svg") {
            emit(prof_out, report::render_svg_profile(series, "fraction of runs above tau"), out);
        } else {
            throw DomainError("unsupported format '" + fmt + "'");
        }
    });

    // bottleneck
    InputSpec bn_in;
    std::string bn_pixel = "IRIS,DIAMOND", bn_other = "TWM,DreamerV3,STORM", bn_out;
    double bn_ratio = 2.0;
    auto* bn_cmd = app.add_subcommand(
        "bottleneck", "games where every pixel-space method beats all others by a ratio");
    add_input_flags(bn_cmd, bn_in);
    bn_cmd->add_option("--pixel-methods", bn_pixel, "comma list (default IRIS,DIAMOND)");
    bn_cmd->add_option("--other-methods", bn_other, "comma list (default TWM,DreamerV3,STORM)");
    bn_cmd->add_option("--ratio", bn_ratio, "required advantage ratio (default 2)");
    bn_cmd->add_option("--out", bn_out, "output path");
    bn_cmd->callback([&] {
        const auto li = load_input(bn_in, err);
        const auto pixel = split_list(bn_pixel);
        const auto other = split_list(bn_other);
        auto all = pixel;
        for (const auto& m : other)
            if (std::find(all.begin(), all.end(), m) == all.end()) all.push_back(m);
        const auto grid = analysis::hns_grid(li.table, all);
        const auto flagged = analysis::visual_bottleneck(grid, pixel, other, bn_ratio);
        ordered_json j;
        j["ratio"] = bn_ratio;
        j["pixel_methods"] = pixel;
        j["other_methods"] = other;
        j["flagged"] = flagged;
        emit(bn_out, j.dump(2) + "\n", out);
    });

    // asymmetry
    InputSpec asym_in;
    std::string asym_method, asym_grouping = "partition", asym_out;
    double asym_threshold = part::kDefaultThreshold;
    int asym_action_threshold = 10;
    auto* asym_cmd =
        app.add_subcommand("asymmetry", "subset mean comparison for one method");
    add_input_flags(asym_cmd, asym_in);
    asym_cmd->add_option("--method", asym_method, "method name")->required();
    asym_cmd->add_option("--grouping", asym_grouping, "partition, shooter or actions");
    asym_cmd->add_option("--threshold", asym_threshold, "partition cut (default 0.75)");
    asym_cmd->add_option("--action-threshold", asym_action_threshold,
                         "action-count split point (default 10)");
    asym_cmd->add_option("--out", asym_out, "output path");
    asym_cmd->callback([&] {
        const auto li = load_input(asym_in, err);
        const auto per_game = norm::per_game_mean(li.table, asym_method);
        ordered_json j;
        j["method"] = asym_method;
        j["grouping"] = asym_grouping;
        std::vector<analysis::GroupMean> groups;
        if (asym_grouping == "partition") {
            const auto pm = resolve_partition(li, asym_threshold);
            groups = analysis::subset_comparison(per_game, analysis::Grouping::ByPartition, &pm);
            j["ratio"] = analysis::asymmetry_ratio(per_game, pm);
        } else if (asym_grouping == "shooter") {
            groups = analysis::subset_comparison(per_game, analysis::Grouping::ByShooter, nullptr,
                                                 &input_meta(li));
        } else if (asym_grouping == "actions") {
            groups = analysis::subset_comparison(per_game, analysis::Grouping::ByActionSplit,
                                                 nullptr, &input_meta(li), asym_action_threshold);
        } else {
            throw DomainError("unknown grouping '" + asym_grouping + "'");
        }
        j["groups"] = ordered_json::array();
        for (const auto& g : groups)
            j["groups"].push_back({{"name", g.name}, {"mean", g.mean}, {"count", g.count}});
        emit(asym_out, j.dump(2) + "\n", out);
    });

    // report
    InputSpec rep_in;
    std::string rep_out = "report";
    int rep_resamples = 10000, rep_threads = 1;
    double rep_level = 0.95, rep_threshold = part::kDefaultThreshold;
    uint64_t rep_seed = 1;
    auto* rep_cmd = app.add_subcommand("report", "full report with tables and figures");
    add_input_flags(rep_cmd, rep_in);
    rep_cmd->add_option("--out", rep_out, "output directory (default ./report)");
    rep_cmd->add_option("--resamples", rep_resamples, "bootstrap resamples for the iqm interval");
    rep_cmd->add_option("--level", rep_level, "confidence level (default 0.95)");
    rep_cmd->add_option("--threshold", rep_threshold, "partition cut for symhns");
    rep_cmd->add_option("--seed", rep_seed, "master seed (default 1)");
    rep_cmd->add_option("--threads", rep_threads, "worker threads; the result never depends on it");
    rep_cmd->callback([&] {
        const auto li = load_input(rep_in, err);
        const auto methods =
            li.builtin ? embedded::seed_method_order() : non_baseline_methods(li.table);
        const std::vector<std::string> metrics = {"mean",   "median", "iqm",      "optgap",
                                                  "stddev", "symhns", "superhuman"};
        std::vector<agg::AggregateReport> reports;
        for (size_t i = 0; i < methods.size(); ++i) {
            auto rep = build_report(li, methods[i], metrics, rep_threshold, false);
            const auto runs = method_runs(li, methods[i]);
            const auto res = agg::stratified_bootstrap(runs, "iqm", rep_resamples, rep_level,
                                                       rng::substream_seed(rep_seed, i),
                                                       rep_threads);
            rep.intervals["iqm"] = {res.low, res.high, rep_level};
            reports.push_back(std::move(rep));
        }
        const fs::path dir(rep_out);
        const auto emit_report_file = [&](const fs::path& p, const std::string& text) {
            write_file(p.string(), text);
            out << "wrote " << p.string() << "\n";
        };
        emit_report_file(dir / "report.md", report::render_md(reports));
        emit_report_file(dir / "report.csv", report::render_csv(reports));
        emit_report_file(dir / "report.json", report::render_json(reports));
        emit_report_file(dir / "figures" / "aggregates.svg",
                         report::render_svg_bars(reports, {"mean", "median", "iqm"},
                                                 "aggregate scores by method"));
        const auto grid = tau_grid(0.0, 8.0, 81);
        std::vector<report::ProfileSeries> series;
        for (const auto& m : methods) {
            const auto values = flatten(method_runs(li, m));
            series.push_back({m, agg::performance_profile(values, grid)});
        }
        emit_report_file(dir / "figures" / "profile.svg",
                         report::render_svg_profile(series, "fraction of runs above tau"));
    });

    // dataset export
    auto* dataset = app.add_subcommand("dataset", "embedded dataset operations");
    dataset->require_subcommand(1);
    std::string exp_builtin, exp_table = "mean", exp_fmt, exp_out, exp_meta_out;
    auto* exp_cmd = dataset->add_subcommand("export", "write the embedded dataset to files");
    auto* exp_builtin_opt =
        exp_cmd->add_option("--builtin", exp_builtin, "embedded dataset name")->expected(0, 1);
    exp_cmd->add_option("--table", exp_table, "mean, seeds or averaged (default mean)");
    exp_cmd->add_option("--format", exp_fmt, "csv or json (default csv, or from --out extension)");
    exp_cmd->add_option("--out", exp_out, "output path");
    exp_cmd->add_option("--meta-out", exp_meta_out, "meta CSV path for csv output");
    exp_cmd->callback([&] {
        if (exp_builtin_opt->count() == 0)
            throw ValidationError("dataset export needs --builtin");
        if (!exp_builtin.empty()) check_builtin_name(exp_builtin);
        const auto& ref = embedded::reference();
        const core::ScoreTable* table = nullptr;
        if (exp_table == "mean")
            table = &ref.full;
        else if (exp_table == "seeds")
            table = &ref.seeds;
        else if (exp_table == "averaged")
            table = &ref.averaged;
        else
            throw DomainError("unknown table '" + exp_table + "'");
        const std::string fmt = infer_format(exp_fmt, exp_out, "csv");
        if (fmt == "json") {
            emit(exp_out, core::export_json(*table), out);
        } else if (fmt == "csv") {
            if (exp_out.empty()) throw ValidationError("csv output needs --out");
            const auto files = core::export_csv(*table);
            const std::string meta_path =
                exp_meta_out.empty() ? sibling_meta_path(exp_out) : exp_meta_out;
            write_file(exp_out, files.scores);
            write_file(meta_path, files.meta);
            out << "wrote " << exp_out << "\nwrote " << meta_path << "\n";
        } else {
            throw DomainError("unsupported format '" + fmt + "'");
        }
    });

    // wm
    auto* wm_cmd = app.add_subcommand("wm", "world-model numerics");
    wm_cmd->require_subcommand(1);

    double co_sigma = 0, co_sigma_data = 1.0;
    auto* co_cmd = wm_cmd->add_subcommand("coeffs", "preconditioning coefficients at one sigma");
    co_cmd->add_option("--sigma", co_sigma, "noise level")->required();
    co_cmd->add_option("--sigma-data", co_sigma_data, "data scale (default 1)");
    co_cmd->callback([&] {
        if (!(co_sigma > 0)) throw DomainError("--sigma must be positive");
        const auto c = wm::precondition_coeffs(co_sigma, co_sigma_data);
        ordered_json j;
        j["sigma"] = co_sigma;
        j["sigma_data"] = co_sigma_data;
        j["c_skip"] = c.c_skip;
        j["c_out"] = c.c_out;
        j["c_in"] = c.c_in;
        j["c_noise"] = c.c_noise;
        out << j.dump(2) + "\n";
    });

    int sm_draws = 1, sm_steps = 3, sm_threads = 1;
    int sm_channels = 16, sm_height = 8, sm_width = 8;
    double sm_sigma_max = 80.0, sm_sigma_min = 0.002, sm_rho = 7.0, sm_churn = 0.0;
    double sm_mu = 0.0, sm_sigma_data = 1.0, sm_clamp = 3.0;
    uint64_t sm_seed = 1;
    std::string sm_out;
    auto* sm_cmd = wm_cmd->add_subcommand(
        "sample", "reverse-diffusion draws against the analytic Gaussian denoiser");
    sm_cmd->add_option("--draws", sm_draws, "number of draws (default 1)");
    sm_cmd->add_option("--steps", sm_steps, "schedule steps (default 3)");
    sm_cmd->add_option("--sigma-max", sm_sigma_max, "schedule top (default 80)");
    sm_cmd->add_option("--sigma-min", sm_sigma_min, "schedule bottom (default 0.002)");
    sm_cmd->add_option("--rho", sm_rho, "schedule curvature (default 7)");
    sm_cmd->add_option("--churn", sm_churn, "stochastic churn strength (default 0)");
    sm_cmd->add_option("--mu", sm_mu, "target mean (default 0)");
    sm_cmd->add_option("--sigma-data", sm_sigma_data, "target scale (default 1)");
    sm_cmd->add_option("--clamp", sm_clamp, "latent clamp scale (default 3)");
    sm_cmd->add_option("--channels", sm_channels, "latent channels (default 16)");
    sm_cmd->add_option("--height", sm_height, "latent height (default 8)");
    sm_cmd->add_option("--width", sm_width, "latent width (default 8)");
    sm_cmd->add_option("--seed", sm_seed, "master seed (default 1)");
    sm_cmd->add_option("--threads", sm_threads, "worker threads; the result never depends on it");
    sm_cmd->add_option("--out", sm_out, "output path");
    sm_cmd->callback([&] {
        if (sm_draws < 1) throw ValidationError("--draws must be positive");
        if (sm_threads < 1) throw ValidationError("--threads must be positive");
        wm::DiffusionConfig cfg;
        cfg.sigma_data = sm_sigma_data;
        cfg.steps = sm_steps;
        cfg.sigma_min = sm_sigma_min;
        cfg.sigma_max = sm_sigma_max;
        cfg.rho = sm_rho;
        cfg.s_churn = sm_churn;
        cfg.clamp_scale = sm_clamp;
        wm::validate_config(cfg);

        const double mu = sm_mu, sd2 = sm_sigma_data * sm_sigma_data;
        const wm::Denoiser den = [mu, sd2](const wm::Latent& z, double sigma,
                                           const wm::ConditioningContext&) {
            wm::Latent d = z;
            const double w = sd2 / (sd2 + sigma * sigma);
            for (auto& v : d.values) v = w * v + (1.0 - w) * mu;
            return d;
        };

        std::vector<wm::Latent> draws(static_cast<size_t>(sm_draws));
        const auto worker = [&](int begin, int end) {
            for (int d = begin; d < end; ++d) {
                auto eng = rng::substream(sm_seed, static_cast<uint64_t>(d));
                wm::ConditioningContext ctx;
                draws[static_cast<size_t>(d)] = wm::reverse_sample(den, ctx, cfg, eng, sm_channels,
                                                                   sm_height, sm_width);
            }
        };
        const int threads = std::min(sm_threads, sm_draws);
        if (threads == 1) {
            worker(0, sm_draws);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (sm_draws + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const int begin = t * chunk;
                const int end = std::min(sm_draws, begin + chunk);
                if (begin < end) pool.emplace_back(worker, begin, end);
            }
            for (auto& th : pool) th.join();
        }

        double sum = 0;
        size_t count = 0;
        double vmin = draws[0].values[0], vmax = vmin;
        uint64_t hash = 14695981039346656037ull;
        for (const auto& d : draws)
            for (const double v : d.values) {
                sum += v;
                ++count;
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
                hash = fnv1a(hash, &v, sizeof(v));
            }
        const double mean = sum / static_cast<double>(count);
        double ss = 0;
        for (const auto& d : draws)
            for (const double v : d.values) ss += (v - mean) * (v - mean);
        const double variance = ss / static_cast<double>(count);

        ordered_json j;
        j["draws"] = sm_draws;
        j["shape"] = {sm_channels, sm_height, sm_width};
        j["steps"] = sm_steps;
        j["sigma_max"] = sm_sigma_max;
        j["sigma_min"] = sm_sigma_min;
        j["rho"] = sm_rho;
        j["churn"] = sm_churn;
        j["mu"] = sm_mu;
        j["sigma_data"] = sm_sigma_data;
        j["seed"] = sm_seed;
        j["mean"] = mean;
        j["variance"] = variance;
        j["min"] = vmin;
        j["max"] = vmax;
        j["checksum"] = hex64(hash);
        emit(sm_out, j.dump(2) + "\n", out);
    });

    std::string wl_in, wl_out;
    auto* wl_cmd = wm_cmd->add_subcommand("loss", "reward and termination cross-entropy loss");
    wl_cmd->add_option("--in", wl_in, "JSON file with reward_logits, done_logits, rewards, dones")
        ->required();
    wl_cmd->add_option("--out", wl_out, "output path");
    wl_cmd->callback([&] {
        ordered_json doc;
        try {
            doc = ordered_json::parse(read_file(wl_in));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad loss input: ") + e.what());
        }
        std::vector<std::array<double, 3>> reward_logits;
        std::vector<std::array<double, 2>> done_logits;
        std::vector<double> rewards;
        std::vector<int> dones;
        try {
            for (const auto& row : doc.at("reward_logits"))
                reward_logits.push_back({row.at(0).get<double>(), row.at(1).get<double>(),
                                         row.at(2).get<double>()});
            for (const auto& row : doc.at("done_logits"))
                done_logits.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
            rewards = doc.at("rewards").get<std::vector<double>>();
            dones = doc.at("dones").get<std::vector<int>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad loss input: ") + e.what());
        }
        ordered_json j;
        j["loss"] = wm::reward_term_loss(reward_logits, done_logits, rewards, dones);
        emit(wl_out, j.dump(2) + "\n", out);
    });

    std::string rt_rewards, rt_values, rt_terms, rt_out;
    double rt_gamma = 0.985, rt_lambda = 0.95;
    auto* rt_cmd = wm_cmd->add_subcommand("returns", "lambda returns over a reward sequence");
    rt_cmd->add_option("--rewards", rt_rewards, "comma list of rewards")->required();
    rt_cmd->add_option("--values", rt_values, "comma list, one longer than rewards")->required();
    rt_cmd->add_option("--terminations", rt_terms, "comma list of 0/1 flags (default all 0)");
    rt_cmd->add_option("--gamma", rt_gamma, "discount (default 0.985)");
    rt_cmd->add_option("--lambda", rt_lambda, "blend factor (default 0.95)");
    rt_cmd->add_option("--out", rt_out, "output path");
    rt_cmd->callback([&] {
        wm::Trajectory traj;
        traj.rewards = split_double_list(rt_rewards, "--rewards");
        traj.values = split_double_list(rt_values, "--values");
        traj.gamma = rt_gamma;
        traj.lambda = rt_lambda;
        if (rt_terms.empty()) {
            traj.terminations.assign(traj.rewards.size(), 0);
        } else {
            for (const auto& tok : numio::split(rt_terms, ','))
                traj.terminations.push_back(numio::parse_int(tok, "--terminations"));
        }
        ordered_json j;
        j["returns"] = wm::lambda_returns(traj);
        emit(rt_out, j.dump(2) + "\n", out);
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace asymbench::cli
